#include "hopfca/constructors.hpp"

#include <algorithm>
#include <sstream>

namespace hopfca {

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::size_t> orders)
    : cyclic_orders(std::move(orders)) {
    for (auto d : cyclic_orders) {
        if (d < 1) throw InputError("cyclic order must be >= 1");
        size_ *= d;
    }
}

std::vector<std::size_t> FiniteAbelianGroup::tuple_of(std::size_t index) const {
    std::vector<std::size_t> t(cyclic_orders.size(), 0);
    for (std::size_t i = cyclic_orders.size(); i-- > 0;) {
        t[i] = index % cyclic_orders[i];
        index /= cyclic_orders[i];
    }
    return t;
}

std::size_t FiniteAbelianGroup::index_of(const std::vector<std::size_t>& tuple) const {
    if (tuple.size() != cyclic_orders.size()) throw InputError("tuple arity mismatch");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] >= cyclic_orders[i]) throw InputError("tuple entry out of range");
        idx = idx * cyclic_orders[i] + tuple[i];
    }
    return idx;
}

std::size_t FiniteAbelianGroup::add(std::size_t a, std::size_t b) const {
    auto ta = tuple_of(a), tb = tuple_of(b);
    for (std::size_t i = 0; i < ta.size(); ++i) ta[i] = (ta[i] + tb[i]) % cyclic_orders[i];
    return index_of(ta);
}

std::size_t FiniteAbelianGroup::neg(std::size_t a) const {
    auto t = tuple_of(a);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = (cyclic_orders[i] - t[i]) % cyclic_orders[i];
    return index_of(t);
}

std::size_t FiniteAbelianGroup::generator(std::size_t i) const {
    std::vector<std::size_t> t(cyclic_orders.size(), 0);
    if (cyclic_orders[i] > 1) t[i] = 1;
    return index_of(t);
}

std::size_t FiniteAbelianGroup::element_order(std::size_t a) const {
    std::size_t ord = 1, x = a;
    while (x != zero()) {
        x = add(x, a);
        ++ord;
    }
    return ord;
}

std::string FiniteAbelianGroup::element_name(std::size_t index) const {
    auto t = tuple_of(index);
    std::ostringstream os;
    os << "g";
    for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "_" : "") << t[i];
    return os.str();
}

GroupHom::GroupHom(FiniteAbelianGroup src, FiniteAbelianGroup tgt, std::vector<std::size_t> imgs)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (images.size() != source.factors()) throw InputError("hom: one image per generator");
    for (std::size_t i = 0; i < images.size(); ++i) {
        // order of the image must divide the generator's order
        std::size_t x = target.zero();
        for (std::size_t s = 0; s < source.cyclic_orders[i]; ++s) x = target.add(x, images[i]);
        if (x != target.zero()) throw InputError("hom: image order does not divide generator order");
    }
}

std::size_t GroupHom::apply(std::size_t a) const {
    auto t = source.tuple_of(a);
    std::size_t out = target.zero();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::size_t s = 0; s < t[i]; ++s) out = target.add(out, images[i]);
    return out;
}

GroupHom compose(const GroupHom& f, const GroupHom& g) {
    if (!(g.target == f.source)) throw InputError("hom composition mismatch");
    std::vector<std::size_t> imgs;
    for (std::size_t i = 0; i < g.source.factors(); ++i) imgs.push_back(f.apply(g.images[i]));
    return {g.source, f.target, imgs};
}

GroupHom identity_hom(const FiniteAbelianGroup& g) {
    std::vector<std::size_t> imgs;
    for (std::size_t i = 0; i < g.factors(); ++i) imgs.push_back(g.generator(i));
    return {g, g, imgs};
}

std::vector<GroupHom> all_homs(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target) {
    std::vector<GroupHom> out;
    const std::size_t nf = source.factors();
    std::vector<std::size_t> choice(nf, 0);
    while (true) {
        bool valid = true;
        for (std::size_t i = 0; i < nf && valid; ++i) {
            std::size_t x = target.zero();
            for (std::size_t s = 0; s < source.cyclic_orders[i]; ++s) x = target.add(x, choice[i]);
            valid = x == target.zero();
        }
        if (valid) out.emplace_back(source, target, choice);
        std::size_t pos = nf;
        bool done = nf == 0;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < target.size()) break;
            choice[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

/// Characters G -> field^x, as value vectors on group elements; complete for
/// prime fields (roots of unity enumerated in F_p^x) and over Q (roots are +-1).
static std::vector<Vec> characters(const FieldSpec& f, const FiniteAbelianGroup& g) {
    std::vector<std::vector<Scalar>> roots_per_gen;
    for (std::size_t i = 0; i < g.factors(); ++i) {
        const std::size_t d = g.cyclic_orders[i];
        std::vector<Scalar> roots;
        if (f.is_prime_field()) {
            for (std::uint64_t x = 1; x < f.p; ++x) {
                Scalar s = Scalar::of(f, static_cast<long long>(x));
                Scalar pw = Scalar::one(f);
                for (std::size_t e = 0; e < d; ++e) pw *= s;
                if (pw.is_one()) roots.push_back(s);
            }
        } else {
            roots.push_back(Scalar::one(f));
            if (d % 2 == 0) roots.push_back(-Scalar::one(f));
        }
        roots_per_gen.push_back(std::move(roots));
    }
    std::vector<Vec> out;
    std::vector<std::size_t> choice(g.factors(), 0);
    while (true) {
        Vec chi = zero_vec(f, g.size());
        for (std::size_t el = 0; el < g.size(); ++el) {
            auto t = g.tuple_of(el);
            Scalar v = Scalar::one(f);
            for (std::size_t i = 0; i < t.size(); ++i) {
                Scalar r = roots_per_gen[i][choice[i]];
                for (std::size_t s = 0; s < t[i]; ++s) v *= r;
            }
            chi[el] = v;
        }
        out.push_back(std::move(chi));
        std::size_t pos = g.factors();
        bool done = g.factors() == 0;
        while (pos > 0) {
            --pos;
            if (++choice[pos] < roots_per_gen[pos].size()) break;
            choice[pos] = 0;
            if (pos == 0) done = true;
        }
        if (done) break;
    }
    return out;
}

static std::string orders_tag(const FiniteAbelianGroup& g) {
    std::ostringstream os;
    for (std::size_t i = 0; i < g.factors(); ++i) os << (i ? "," : "") << g.cyclic_orders[i];
    std::string s = os.str();
    return s.empty() ? "1" : s;
}

HopfPtr group_hopf(const FieldSpec& field, const FiniteAbelianGroup& g) {
    const std::size_t n = g.size();
    Scalar one = Scalar::one(field);
    SparseTensor mul, comul;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mul.push_back({i, j, g.add(i, j), one});
        comul.push_back({i, i, i, one});
    }
    Vec unit = zero_vec(field, n);
    unit[g.zero()] = one;
    Vec counit(n, one);
    Matrix anti(field, n, n);
    for (std::size_t i = 0; i < n; ++i) anti.at(g.neg(i), i) = one;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(g.element_name(i));
    HopfMetadata md;
    std::vector<Vec> gls;
    for (std::size_t i = 0; i < n; ++i) {
        Vec v = zero_vec(field, n);
        v[i] = one;
        gls.push_back(std::move(v));
    }
    md.known_group_likes = std::move(gls);
    if (!field.is_prime_field() || field.p <= 1'000'000)
        md.known_dual_group_likes = characters(field, g);
    md.origin = "group:" + orders_tag(g);
    auto h = std::make_shared<HopfPresentation>(field, n, std::move(mul), std::move(unit),
                                                std::move(comul), std::move(counit), anti,
                                                std::move(names), md);
    h->mark_verified();
    return h;
}

HopfPtr function_hopf(const FieldSpec& field, const FiniteAbelianGroup& g) {
    auto d = dual(group_hopf(field, g));
    // re-tag: delta-functional basis names and function origin
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.size(); ++i) names.push_back("d" + g.element_name(i));
    HopfMetadata md = d->metadata();
    md.origin = "function:" + orders_tag(g);
    auto h = std::make_shared<HopfPresentation>(d->field(), d->dim(), d->mul(), d->unit(),
                                                d->comul(), d->counit(), d->antipode(),
                                                std::move(names), md);
    h->mark_verified();
    return h;
}

HopfPtr d_pair(const HopfPtr& h) {
    require_verified(h);
    return tensor(h, dual(h));
}

HopfPtr appendix_d1() {
    const FieldSpec f = FieldSpec::prime(3);
    const Scalar one = Scalar::one(f), two = Scalar::of(f, 2);
    // basis indices: a=0, b1=1, b2=2, c1=3, c2=4
    SparseTensor mul;
    auto m = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        mul.push_back({i, j, k, c});
        if (i != j) mul.push_back({j, i, k, c});
    };
    // direct sum algebra F3 + F9 + F9, with b2*b2 = omega^2 b1 = 2 b1
    m(0, 0, 0, one);
    m(1, 1, 1, one);
    m(1, 2, 2, one);
    m(2, 2, 1, two);
    m(3, 3, 3, one);
    m(3, 4, 4, one);
    m(4, 4, 3, two);
    SparseTensor comul;
    auto d = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        comul.push_back({i, j, k, c});
    };
    auto dsym = [&](std::size_t i, std::size_t j, std::size_t k, const Scalar& c) {
        d(i, j, k, c);
        d(i, k, j, c);
    };
    // Delta(a)
    d(0, 0, 0, one);
    d(0, 1, 1, two);
    d(0, 2, 2, two);
    d(0, 3, 3, two);
    d(0, 4, 4, two);
    // Delta(b1)
    dsym(1, 0, 1, one);
    dsym(1, 1, 3, two);
    dsym(1, 2, 4, one);
    d(1, 3, 3, two);
    d(1, 4, 4, one);
    // Delta(b2)
    dsym(2, 0, 2, one);
    dsym(2, 1, 4, one);
    dsym(2, 2, 3, one);
    dsym(2, 3, 4, two);
    // Delta(c1)
    dsym(3, 0, 3, one);
    d(3, 1, 1, two);
    d(3, 2, 2, one);
    dsym(3, 1, 3, two);
    dsym(3, 2, 4, two);
    // Delta(c2)
    dsym(4, 0, 4, one);
    dsym(4, 1, 2, one);
    dsym(4, 1, 4, one);
    dsym(4, 2, 3, two);
    Vec unit{one, one, Scalar::zero(f), one, Scalar::zero(f)};
    Vec counit{one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
    Matrix anti(f, 5, 5);
    anti.at(0, 0) = one;
    anti.at(1, 1) = one;
    anti.at(2, 2) = two; // -1
    anti.at(3, 3) = one;
    anti.at(4, 4) = two;
    HopfMetadata md;
    md.origin = "appendix_d1";
    return std::make_shared<HopfPresentation>(f, 5, std::move(mul), std::move(unit),
                                              std::move(comul), std::move(counit), anti,
                                              std::vector<std::string>{"a", "b1", "b2", "c1", "c2"},
                                              md);
}

Matrix d1_d2_swap() {
    const FieldSpec f = FieldSpec::prime(3);
    Matrix p(f, 5, 5);
    p.at(0, 0) = Scalar::one(f);
    p.at(2, 1) = Scalar::one(f);
    p.at(1, 2) = Scalar::one(f);
    p.at(4, 3) = Scalar::one(f);
    p.at(3, 4) = Scalar::one(f);
    return p;
}

HopfPtr appendix_d2() {
    auto d1 = appendix_d1();
    require_verified(d1);
    auto d2 = transport_structure(d1, d1_d2_swap());
    auto& md = const_cast<HopfPresentation&>(*d2).metadata();
    md.origin = "appendix_d2";
    return d2;
}

static FiniteAbelianGroup group_from_metadata(const HopfPtr& h, const char* what) {
    const std::string& origin = h->metadata().origin;
    if (origin.rfind("group:", 0) != 0)
        throw InputError(std::string(what) + ": presentation does not carry group-Hopf metadata");
    return parse_group(origin.substr(6));
}

HopfMorphism group_hom_to_morphism(const GroupHom& phi, const FieldSpec& field) {
    auto src = group_hopf(field, phi.source);
    auto tgt = group_hopf(field, phi.target);
    Matrix m(field, tgt->dim(), src->dim());
    for (std::size_t g = 0; g < phi.source.size(); ++g)
        m.at(phi.apply(g), g) = Scalar::one(field);
    return {src, tgt, m};
}

GroupHom lift_to_group_hom(const HopfMorphism& f) {
    require_verified(f);
    FiniteAbelianGroup gs = group_from_metadata(f.source, "lift_to_group_hom");
    FiniteAbelianGroup gt = group_from_metadata(f.target, "lift_to_group_hom");
    std::vector<std::size_t> image_of(gs.size());
    for (std::size_t g = 0; g < gs.size(); ++g) {
        Vec col = f.matrix.col(g);
        std::size_t hits = 0, where = 0;
        for (std::size_t h = 0; h < col.size(); ++h) {
            if (col[h].is_zero()) continue;
            if (!col[h].is_one()) throw MathError("lift: column is not a basis vector");
            ++hits;
            where = h;
        }
        if (hits != 1) throw MathError("lift: column is not a single basis element");
        image_of[g] = where;
    }
    // homomorphism property
    for (std::size_t a = 0; a < gs.size(); ++a)
        for (std::size_t b = 0; b < gs.size(); ++b)
            if (image_of[gs.add(a, b)] != gt.add(image_of[a], image_of[b]))
                throw MathError("lift: image map is not a group homomorphism");
    std::vector<std::size_t> imgs;
    for (std::size_t i = 0; i < gs.factors(); ++i) imgs.push_back(image_of[gs.generator(i)]);
    return {gs, gt, imgs};
}

FiniteAbelianGroup parse_group(const std::string& spec) {
    std::vector<std::size_t> orders;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(item, &pos);
        } catch (const std::exception&) {
            throw InputError("bad cyclic order: " + item);
        }
        if (pos != item.size() || v == 0) throw InputError("bad cyclic order: " + item);
        orders.push_back(v);
    }
    if (orders.empty()) throw InputError("empty group specification");
    return FiniteAbelianGroup(orders);
}

} // namespace hopfca
