#include "hopfca/hopf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace hopfca {

void sort_tensor(SparseTensor& t) {
    std::sort(t.begin(), t.end(), [](const TensorEntry& a, const TensorEntry& b) {
        return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
    });
}

static SparseTensor canonicalize(SparseTensor t) {
    sort_tensor(t);
    SparseTensor out;
    for (auto& e : t) {
        if (!out.empty() && out.back().i == e.i && out.back().j == e.j && out.back().k == e.k)
            out.back().c += e.c;
        else
            out.push_back(e);
    }
    std::erase_if(out, [](const TensorEntry& e) { return e.c.is_zero(); });
    return out;
}

HopfPresentation::HopfPresentation(FieldSpec field, std::size_t dim, SparseTensor mul, Vec unit,
                                   SparseTensor comul, Vec counit, Matrix antipode,
                                   std::vector<std::string> basis_names, HopfMetadata metadata)
    : field_(field),
      dim_(dim),
      mul_(canonicalize(std::move(mul))),
      comul_(canonicalize(std::move(comul))),
      unit_(std::move(unit)),
      counit_(std::move(counit)),
      antipode_(std::move(antipode)),
      basis_names_(std::move(basis_names)),
      metadata_(std::move(metadata)) {
    if (dim_ == 0) throw InputError("Hopf presentation must have positive dimension");
    if (unit_.size() != dim_ || counit_.size() != dim_)
        throw InputError("unit/counit length must equal dim");
    if (antipode_.rows() != dim_ || antipode_.cols() != dim_)
        throw InputError("antipode must be dim x dim");
    if (!(antipode_.field() == field_)) throw InputError("antipode field mismatch");
    for (const auto& t : {std::cref(mul_), std::cref(comul_)})
        for (const auto& e : t.get()) {
            if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
                throw InputError("structure tensor index out of range");
            if (!(e.c.field() == field_)) throw InputError("structure tensor field mismatch");
        }
    if (!basis_names_.empty() && basis_names_.size() != dim_)
        throw InputError("basis_names length must equal dim");
    comul_by_i_.resize(dim_);
    for (const auto& e : comul_) comul_by_i_[e.i].push_back(e);
    mul_by_ij_.resize(dim_ * dim_);
    for (const auto& e : mul_) mul_by_ij_[e.i * dim_ + e.j].emplace_back(e.k, e.c);
}

Vec HopfPresentation::multiply(const Vec& x, const Vec& y) const {
    if (x.size() != dim_ || y.size() != dim_) throw InputError("multiply: length mismatch");
    Vec z = zero_vec(field_, dim_);
    for (const auto& e : mul_) {
        if (x[e.i].is_zero() || y[e.j].is_zero()) continue;
        z[e.k] += e.c * x[e.i] * y[e.j];
    }
    return z;
}

Vec HopfPresentation::multiply_basis(std::size_t i, std::size_t j) const {
    Vec z = zero_vec(field_, dim_);
    for (const auto& [k, c] : mul_by_ij_[i * dim_ + j]) z[k] += c;
    return z;
}

Vec HopfPresentation::comultiply(const Vec& x) const {
    if (x.size() != dim_) throw InputError("comultiply: length mismatch");
    Vec out = zero_vec(field_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        if (x[i].is_zero()) continue;
        for (const auto& e : comul_by_i_[i]) out[e.j * dim_ + e.k] += x[i] * e.c;
    }
    return out;
}

const std::vector<TensorEntry>& HopfPresentation::comul_of(std::size_t i) const {
    return comul_by_i_[i];
}

const std::vector<std::pair<std::size_t, Scalar>>& HopfPresentation::mul_of(std::size_t i,
                                                                            std::size_t j) const {
    return mul_by_ij_[i * dim_ + j];
}

Scalar HopfPresentation::counit_apply(const Vec& x) const {
    Scalar s = Scalar::zero(field_);
    for (std::size_t i = 0; i < dim_; ++i) s += counit_[i] * x[i];
    return s;
}

static bool tensor_eq(const SparseTensor& a, const SparseTensor& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].i != b[i].i || a[i].j != b[i].j || a[i].k != b[i].k || !(a[i].c == b[i].c))
            return false;
    return true;
}

bool HopfPresentation::same_tensors(const HopfPresentation& o) const {
    return field_ == o.field_ && dim_ == o.dim_ && unit_ == o.unit_ && counit_ == o.counit_ &&
           antipode_ == o.antipode_ && tensor_eq(mul_, o.mul_) && tensor_eq(comul_, o.comul_);
}

HopfPtr unit_hopf(const FieldSpec& f) {
    Scalar one = Scalar::one(f);
    SparseTensor t{{0, 0, 0, one}};
    HopfMetadata md;
    md.known_group_likes = std::vector<Vec>{{one}};
    md.known_dual_group_likes = std::vector<Vec>{{one}};
    md.origin = "unit";
    auto h = std::make_shared<HopfPresentation>(f, 1, t, Vec{one}, t, Vec{one},
                                                Matrix::identity(f, 1),
                                                std::vector<std::string>{"1"}, md);
    h->mark_verified();
    return h;
}

bool CheckReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string CheckReport::summary() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "pass" : "FAIL") << "  " << c.name;
        if (!c.pass && !c.detail.empty()) os << "  (" << c.detail << ")";
        os << "\n";
    }
    return os.str();
}

// mul(x, e_k) with x dense
static Vec mul_vec_basis(const HopfPresentation& h, const Vec& x, std::size_t k) {
    Vec z = zero_vec(h.field(), h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (const auto& [m, c] : h.mul_of(a, k)) z[m] += x[a] * c;
    }
    return z;
}

static Vec mul_basis_vec(const HopfPresentation& h, std::size_t k, const Vec& x) {
    Vec z = zero_vec(h.field(), h.dim());
    for (std::size_t a = 0; a < h.dim(); ++a) {
        if (x[a].is_zero()) continue;
        for (const auto& [m, c] : h.mul_of(k, a)) z[m] += x[a] * c;
    }
    return z;
}

CheckReport verify_hopf(const HopfPresentation& h) {
    const std::size_t n = h.dim();
    const FieldSpec& f = h.field();
    CheckReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    // associativity: (e_i e_j) e_k == e_i (e_j e_k)
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Vec w = h.multiply_basis(i, j);
                for (std::size_t k = 0; k < n && ok; ++k) {
                    Vec lhs = mul_vec_basis(h, w, k);
                    Vec rhs = mul_basis_vec(h, i, h.multiply_basis(j, k));
                    if (lhs != rhs) {
                        ok = false;
                        where = "(" + std::to_string(i) + "," + std::to_string(j) + "," +
                                std::to_string(k) + ")";
                    }
                }
            }
        add("associativity", ok, where);
    }

    // unit: eta e_i == e_i == e_i eta
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Vec ei = zero_vec(f, n);
            ei[i] = Scalar::one(f);
            if (h.multiply(h.unit(), ei) != ei || h.multiply(ei, h.unit()) != ei) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("unit", ok, where);
    }

    // coassociativity on basis elements, accumulated sparsely
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            std::map<std::array<std::size_t, 3>, Scalar> lhs, rhs;
            for (const auto& e : h.comul_of(i)) {
                for (const auto& e2 : h.comul_of(e.j)) {
                    auto key = std::array<std::size_t, 3>{e2.j, e2.k, e.k};
                    auto it = lhs.try_emplace(key, Scalar::zero(f)).first;
                    it->second += e.c * e2.c;
                }
                for (const auto& e2 : h.comul_of(e.k)) {
                    auto key = std::array<std::size_t, 3>{e.j, e2.j, e2.k};
                    auto it = rhs.try_emplace(key, Scalar::zero(f)).first;
                    it->second += e.c * e2.c;
                }
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
            std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
            if (lhs != rhs) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("coassociativity", ok, where);
    }

    // counit: (eps (x) id) Delta == id == (id (x) eps) Delta
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Vec left = zero_vec(f, n), right = zero_vec(f, n);
            for (const auto& e : h.comul_of(i)) {
                left[e.k] += e.c * h.counit()[e.j];
                right[e.j] += e.c * h.counit()[e.k];
            }
            Vec ei = zero_vec(f, n);
            ei[i] = Scalar::one(f);
            if (left != ei || right != ei) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("counit", ok, where);
    }

    // Delta(xy) == Delta(x) Delta(y) in A (x) A
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                Vec lhs = h.comultiply(h.multiply_basis(i, j));
                Vec rhs = zero_vec(f, n * n);
                for (const auto& ei : h.comul_of(i))
                    for (const auto& ej : h.comul_of(j)) {
                        Scalar c = ei.c * ej.c;
                        for (const auto& [k1, m1] : h.mul_of(ei.j, ej.j))
                            for (const auto& [k2, m2] : h.mul_of(ei.k, ej.k))
                                rhs[k1 * n + k2] += c * m1 * m2;
                    }
                if (lhs != rhs) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        add("bialgebra-mul-comul", ok, where);
    }

    // eps(xy) == eps(x) eps(y)
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j)
                if (!(h.counit_apply(h.multiply_basis(i, j)) == h.counit()[i] * h.counit()[j])) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
        add("bialgebra-counit-mul", ok, where);
    }

    add("bialgebra-comul-unit", h.comultiply(h.unit()) == kron(h.unit(), h.unit()));
    add("counit-unit", h.counit_apply(h.unit()).is_one());

    // mul (S (x) id) Delta == eta eps == mul (id (x) S) Delta
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            Vec left = zero_vec(f, n), right = zero_vec(f, n);
            for (const auto& e : h.comul_of(i)) {
                Vec sj = h.antipode().col(e.j);
                left = hopfca::add(left, scale(e.c, mul_vec_basis(h, sj, e.k)));
                Vec sk = h.antipode().col(e.k);
                right = hopfca::add(right, scale(e.c, mul_basis_vec(h, e.j, sk)));
            }
            Vec expect = scale(h.counit()[i], h.unit());
            if (left != expect || right != expect) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("antipode", ok, where);
    }

    // commutativity
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i)
            for (std::size_t j = i + 1; j < n && ok; ++j)
                if (h.multiply_basis(i, j) != h.multiply_basis(j, i)) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
        add("commutativity", ok, where);
    }

    // cocommutativity
    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < n && ok; ++i) {
            SparseTensor swapped;
            for (const auto& e : h.comul_of(i)) swapped.push_back({e.i, e.k, e.j, e.c});
            swapped = canonicalize(std::move(swapped));
            if (!tensor_eq(swapped, h.comul_of(i))) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("cocommutativity", ok, where);
    }

    return rep;
}

void require_verified(const HopfPtr& h) {
    if (!h) throw InputError("null Hopf presentation");
    if (h->verified()) return;
    CheckReport rep = verify_hopf(*h);
    if (!rep.all_pass()) throw MathError("Hopf axiom failure:\n" + rep.summary());
    h->mark_verified();
}

CheckReport verify_morphism(const HopfMorphism& fm) {
    const HopfPresentation& a = *fm.source;
    const HopfPresentation& b = *fm.target;
    if (fm.matrix.rows() != b.dim() || fm.matrix.cols() != a.dim())
        throw InputError("morphism matrix shape mismatch");
    if (!(a.field() == b.field())) throw InputError("morphism field mismatch");
    const std::size_t na = a.dim(), nb = b.dim();
    CheckReport rep;
    auto add = [&rep](const std::string& name, bool pass, const std::string& detail = "") {
        rep.checks.push_back({name, pass, detail});
    };

    add("unit", fm.matrix * a.unit() == b.unit());

    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < na && ok; ++i) {
            Scalar s = Scalar::zero(a.field());
            for (std::size_t r = 0; r < nb; ++r) s += b.counit()[r] * fm.matrix.at(r, i);
            if (!(s == a.counit()[i])) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("counit", ok, where);
    }

    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < na && ok; ++i)
            for (std::size_t j = 0; j < na && ok; ++j) {
                Vec lhs = fm.matrix * a.multiply_basis(i, j);
                Vec rhs = b.multiply(fm.matrix.col(i), fm.matrix.col(j));
                if (lhs != rhs) {
                    ok = false;
                    where = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                }
            }
        add("multiplication", ok, where);
    }

    {
        bool ok = true;
        std::string where;
        for (std::size_t i = 0; i < na && ok; ++i) {
            Vec lhs = b.comultiply(fm.matrix.col(i));
            Vec rhs = zero_vec(a.field(), nb * nb);
            for (const auto& e : a.comul_of(i)) {
                Vec fj = fm.matrix.col(e.j), fk = fm.matrix.col(e.k);
                for (std::size_t r = 0; r < nb; ++r) {
                    if (fj[r].is_zero()) continue;
                    for (std::size_t s = 0; s < nb; ++s)
                        if (!fk[s].is_zero()) rhs[r * nb + s] += e.c * fj[r] * fk[s];
                }
            }
            if (lhs != rhs) {
                ok = false;
                where = std::to_string(i);
            }
        }
        add("comultiplication", ok, where);
    }

    add("antipode", b.antipode() * fm.matrix == fm.matrix * a.antipode());
    return rep;
}

void require_verified(const HopfMorphism& f) {
    require_verified(f.source);
    require_verified(f.target);
    CheckReport rep = verify_morphism(f);
    if (!rep.all_pass()) throw MathError("not a Hopf morphism:\n" + rep.summary());
}

HopfMorphism identity_morphism(const HopfPtr& h) {
    return {h, h, Matrix::identity(h->field(), h->dim())};
}

HopfMorphism trivial_morphism(const HopfPtr& source, const HopfPtr& target) {
    Matrix m(source->field(), target->dim(), source->dim());
    for (std::size_t r = 0; r < target->dim(); ++r)
        for (std::size_t c = 0; c < source->dim(); ++c)
            m.at(r, c) = target->unit()[r] * source->counit()[c];
    return {source, target, m};
}

HopfMorphism antipode_morphism(const HopfPtr& h) { return {h, h, h->antipode()}; }

bool is_trivial_morphism(const HopfMorphism& f) {
    return f.matrix == trivial_morphism(f.source, f.target).matrix;
}

static void require_same_presentation(const HopfPtr& a, const HopfPtr& b, const char* what) {
    if (a == b) return;
    if (!a->same_tensors(*b)) throw InputError(std::string("presentation mismatch in ") + what);
}

HopfPtr dual(const HopfPtr& h) {
    SparseTensor mul, comul;
    for (const auto& e : h->comul()) mul.push_back({e.j, e.k, e.i, e.c});
    for (const auto& e : h->mul()) comul.push_back({e.k, e.i, e.j, e.c});
    std::vector<std::string> names;
    if (!h->basis_names().empty())
        for (const auto& nm : h->basis_names()) names.push_back("d_" + nm);
    HopfMetadata md;
    md.known_group_likes = h->metadata().known_dual_group_likes;
    md.known_dual_group_likes = h->metadata().known_group_likes;
    md.origin = h->metadata().origin.empty() ? "" : "dual(" + h->metadata().origin + ")";
    auto d = std::make_shared<HopfPresentation>(h->field(), h->dim(), std::move(mul), h->counit(),
                                                std::move(comul), h->unit(),
                                                h->antipode().transpose(), std::move(names), md);
    if (h->verified()) d->mark_verified();
    return d;
}

HopfPtr tensor(const HopfPtr& a, const HopfPtr& b) {
    if (!(a->field() == b->field())) throw InputError("tensor: field mismatch");
    const std::size_t nb = b->dim();
    SparseTensor mul, comul;
    for (const auto& ea : a->mul())
        for (const auto& eb : b->mul())
            mul.push_back({ea.i * nb + eb.i, ea.j * nb + eb.j, ea.k * nb + eb.k, ea.c * eb.c});
    for (const auto& ea : a->comul())
        for (const auto& eb : b->comul())
            comul.push_back({ea.i * nb + eb.i, ea.j * nb + eb.j, ea.k * nb + eb.k, ea.c * eb.c});
    std::vector<std::string> names;
    if (!a->basis_names().empty() && !b->basis_names().empty())
        for (const auto& x : a->basis_names())
            for (const auto& y : b->basis_names()) names.push_back(x + "*" + y);
    HopfMetadata md;
    auto combine = [&](const std::optional<std::vector<Vec>>& la,
                       const std::optional<std::vector<Vec>>& lb) -> std::optional<std::vector<Vec>> {
        if (!la || !lb) return std::nullopt;
        std::vector<Vec> out;
        for (const auto& x : *la)
            for (const auto& y : *lb) out.push_back(kron(x, y));
        return out;
    };
    md.known_group_likes = combine(a->metadata().known_group_likes, b->metadata().known_group_likes);
    md.known_dual_group_likes =
        combine(a->metadata().known_dual_group_likes, b->metadata().known_dual_group_likes);
    if (!a->metadata().origin.empty() && !b->metadata().origin.empty())
        md.origin = "tensor(" + a->metadata().origin + "," + b->metadata().origin + ")";
    auto t = std::make_shared<HopfPresentation>(
        a->field(), a->dim() * nb, std::move(mul), kron(a->unit(), b->unit()), std::move(comul),
        kron(a->counit(), b->counit()), a->antipode().kron_with(b->antipode()), std::move(names),
        md);
    if (a->verified() && b->verified()) t->mark_verified();
    return t;
}

HopfMorphism convolution(const HopfMorphism& f, const HopfMorphism& g) {
    require_same_presentation(f.source, g.source, "convolution");
    require_same_presentation(f.target, g.target, "convolution");
    const HopfPresentation& a = *f.source;
    const HopfPresentation& b = *f.target;
    Matrix m(a.field(), b.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Vec col = zero_vec(a.field(), b.dim());
        for (const auto& e : a.comul_of(i)) {
            Vec prod = b.multiply(f.matrix.col(e.j), g.matrix.col(e.k));
            col = add(col, scale(e.c, prod));
        }
        for (std::size_t r = 0; r < b.dim(); ++r) m.at(r, i) = col[r];
    }
    return {f.source, f.target, m};
}

HopfMorphism compose(const HopfMorphism& f, const HopfMorphism& g) {
    require_same_presentation(g.target, f.source, "compose");
    return {g.source, f.target, f.matrix * g.matrix};
}

HopfMorphism int_power(const HopfPtr& h, long long n) {
    require_verified(h);
    if (n < 0) return compose(int_power(h, -n), antipode_morphism(h));
    HopfMorphism result = trivial_morphism(h, h);
    HopfMorphism base = identity_morphism(h);
    unsigned long long m = static_cast<unsigned long long>(n);
    while (m) {
        if (m & 1) result = convolution(result, base);
        m >>= 1;
        if (m) base = convolution(base, base);
    }
    return result;
}

static bool is_group_like(const HopfPresentation& h, const Vec& v) {
    return h.comultiply(v) == kron(v, v);
}

std::vector<Vec> group_likes(const HopfPtr& h, std::uint64_t budget) {
    require_verified(h);
    const std::size_t n = h->dim();
    const FieldSpec& f = h->field();
    if (h->metadata().known_group_likes) {
        std::vector<Vec> out = *h->metadata().known_group_likes;
        for (const auto& v : out) {
            if (is_zero_vec(v) || !is_group_like(*h, v))
                throw MathError("known_group_likes metadata contains a non-group-like vector");
            if (!h->counit_apply(v).is_one())
                throw MathError("group-like with counit != 1");
        }
        std::sort(out.begin(), out.end(), vec_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
    if (!f.is_prime_field())
        throw CapError("group_likes: rational field without known_group_likes metadata");
    // budget check: p^n candidates
    long double count = 1;
    for (std::size_t i = 0; i < n; ++i) {
        count *= static_cast<long double>(f.p);
        if (count > static_cast<long double>(budget))
            throw CapError("group_likes: enumeration budget exceeded");
    }
    std::vector<Vec> out;
    std::vector<std::uint64_t> digits(n, 0);
    Vec v = zero_vec(f, n);
    while (true) {
        // counit filter (forced by the counit axiom for group-likes)
        bool nonzero = !is_zero_vec(v);
        if (nonzero && h->counit_apply(v).is_one() && is_group_like(*h, v)) out.push_back(v);
        // odometer, least significant coordinate last => lexicographic order
        std::size_t pos = n;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < f.p) {
                v[pos] = Scalar::of(f, static_cast<long long>(digits[pos]));
                break;
            }
            digits[pos] = 0;
            v[pos] = Scalar::zero(f);
            if (pos == 0) return out;
        }
    }
}

IntegralResult integral(const HopfPtr& h) {
    require_verified(h);
    const std::size_t n = h->dim();
    const FieldSpec& f = h->field();
    // rows (j,k): sum_i sigma_i mul_ijk - eps_j sigma_k = 0
    Matrix sys(f, n * n, n);
    for (const auto& e : h->mul()) sys.at(e.j * n + e.k, e.i) += e.c;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) sys.at(j * n + k, k) -= h->counit()[j];
    IntegralResult res;
    res.integral_space = kernel_basis(sys);
    for (std::size_t r = 0; r < res.integral_space.dim(); ++r) {
        Vec v = res.integral_space.basis.row(r);
        Scalar e = h->counit_apply(v);
        if (!e.is_zero()) {
            res.normalized_integral = scale(e.inverse(), v);
            res.semisimple = true;
            break;
        }
    }
    return res;
}

IntegralResult cointegral(const HopfPtr& h) { return integral(dual(h)); }

std::string to_string(TrivialityClass c) {
    switch (c) {
        case TrivialityClass::GroupHopf: return "group_hopf";
        case TrivialityClass::FunctionHopf: return "function_hopf";
        case TrivialityClass::Nontrivial: return "nontrivial";
        default: return "unknown";
    }
}

TrivialityClass classify_triviality(const HopfPtr& h, std::uint64_t budget) {
    try {
        std::size_t ge = group_likes(h, budget).size();
        std::size_t ged = group_likes(dual(h), budget).size();
        if (ge == h->dim()) return TrivialityClass::GroupHopf;
        if (ged == h->dim()) return TrivialityClass::FunctionHopf;
        return TrivialityClass::Nontrivial;
    } catch (const CapError&) {
        return TrivialityClass::Unknown;
    }
}

HopfPtr transport_structure(const HopfPtr& h, const Matrix& p) {
    const std::size_t n = h->dim();
    const FieldSpec& f = h->field();
    if (p.rows() != n || p.cols() != n) throw InputError("transport: matrix shape mismatch");
    if (!invertible(p)) throw MathError("transport: singular matrix");
    Matrix pinv = inverse(p);
    SparseTensor mul, comul;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Vec w = pinv * h->multiply(p.col(i), p.col(j));
            for (std::size_t k = 0; k < n; ++k)
                if (!w[k].is_zero()) mul.push_back({i, j, k, w[k]});
        }
        Vec d = h->comultiply(p.col(i)); // in old coordinates, n^2
        // apply pinv (x) pinv
        for (std::size_t rj = 0; rj < n; ++rj)
            for (std::size_t rk = 0; rk < n; ++rk) {
                Scalar s = Scalar::zero(f);
                for (std::size_t a = 0; a < n; ++a) {
                    if (pinv.at(rj, a).is_zero()) continue;
                    for (std::size_t b = 0; b < n; ++b)
                        if (!d[a * n + b].is_zero())
                            s += pinv.at(rj, a) * pinv.at(rk, b) * d[a * n + b];
                }
                if (!s.is_zero()) comul.push_back({i, rj, rk, s});
            }
    }
    Vec unit = pinv * h->unit();
    Vec counit = zero_vec(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) counit[i] += h->counit()[j] * p.at(j, i);
    Matrix anti = pinv * h->antipode() * p;
    HopfMetadata md;
    if (h->metadata().known_group_likes) {
        std::vector<Vec> gl;
        for (const auto& v : *h->metadata().known_group_likes) gl.push_back(pinv * v);
        md.known_group_likes = gl;
    }
    if (h->metadata().known_dual_group_likes) {
        Matrix pt = p.transpose();
        std::vector<Vec> gl;
        for (const auto& v : *h->metadata().known_dual_group_likes) gl.push_back(pt * v);
        md.known_dual_group_likes = gl;
    }
    auto t = std::make_shared<HopfPresentation>(f, n, std::move(mul), std::move(unit),
                                                std::move(comul), std::move(counit), anti,
                                                h->basis_names(), md);
    if (h->verified()) t->mark_verified();
    return t;
}

} // namespace hopfca
