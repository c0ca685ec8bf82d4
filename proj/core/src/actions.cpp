#include "hopfca/actions.hpp"

#include <algorithm>

#include "hopfca/errors.hpp"

namespace hopfca {

namespace {

Vec basis_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
    Vec v = zero_vec(f, n);
    v[i] = Scalar::one(f);
    return v;
}

/// Total order on matrices via entrywise Scalar::cmp, for canonical output.
bool matrix_less(const Matrix& a, const Matrix& b) {
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            int s = a.at(r, c).cmp(b.at(r, c));
            if (s != 0) return s < 0;
        }
    return false;
}

} // namespace

ActionSpec canonical_action(const HopfPtr& h, std::uint64_t p) {
    if (!is_prime_u64(p)) throw InputError("action modulus must be prime");
    require_verified(h);
    HopfMorphism pmap = int_power(h, static_cast<long long>(p));
    if (!is_trivial_morphism(pmap))
        throw MathError("no F_" + std::to_string(p) + "-action: [" + std::to_string(p) +
                        "] != eta o eps");
    ActionSpec spec;
    spec.base = h;
    spec.prime = p;
    for (std::uint64_t n = 0; n < p; ++n)
        spec.table.push_back(int_power(h, static_cast<long long>(n)));
    CheckReport rep = verify_action(spec);
    if (!rep.all_pass()) throw MathError("canonical action fails ring laws: " + rep.summary());
    return spec;
}

CheckReport verify_action(const ActionSpec& spec) {
    CheckReport rep;
    const std::uint64_t p = spec.prime;
    auto fail_at = [](std::uint64_t m, std::uint64_t n) {
        return "(" + std::to_string(m) + "," + std::to_string(n) + ")";
    };
    bool shape_ok = spec.base && is_prime_u64(p) && spec.table.size() == p;
    if (shape_ok)
        for (const HopfMorphism& f : spec.table)
            shape_ok = shape_ok && f.source.get() == spec.base.get() &&
                       f.target.get() == spec.base.get();
    rep.checks.push_back({"table-shape", shape_ok, shape_ok ? "" : "missing or mismatched entries"});
    if (!shape_ok) return rep;

    bool zero_ok = is_trivial_morphism(spec.table[0]);
    rep.checks.push_back({"alpha(0) = eta o eps", zero_ok, ""});
    bool one_ok = p < 2 || spec.table[1].matrix == identity_morphism(spec.base).matrix;
    rep.checks.push_back({"alpha(1) = id", one_ok, ""});

    Check additive{"additive: alpha(m) * alpha(n) = alpha(m+n)", true, ""};
    for (std::uint64_t m = 0; m < p && additive.pass; ++m)
        for (std::uint64_t n = 0; n < p; ++n)
            if (convolution(spec.table[m], spec.table[n]).matrix !=
                spec.table[(m + n) % p].matrix) {
                additive.pass = false;
                additive.detail = fail_at(m, n);
                break;
            }
    rep.checks.push_back(additive);

    Check multiplicative{"multiplicative: alpha(m) o alpha(n) = alpha(mn)", true, ""};
    for (std::uint64_t m = 0; m < p && multiplicative.pass; ++m)
        for (std::uint64_t n = 0; n < p; ++n)
            if (compose(spec.table[m], spec.table[n]).matrix !=
                spec.table[(m * n) % p].matrix) {
                multiplicative.pass = false;
                multiplicative.detail = fail_at(m, n);
                break;
            }
    rep.checks.push_back(multiplicative);
    return rep;
}

namespace {

struct Word {
    Vec value;                   // product of the generators, in order
    std::vector<std::size_t> letters; // indices into the generator list
};

struct ClosureResult {
    std::vector<Word> words; // value vectors are linearly independent
    Subspace span;
};

/// Unital subalgebra generated by the given basis vectors, together with a
/// spanning set of generator words found breadth-first.
ClosureResult generated_subalgebra(const HopfPresentation& h, const std::vector<std::size_t>& gens) {
    const FieldSpec& f = h.field();
    const std::size_t n = h.dim();
    ClosureResult out;
    out.span = Subspace::zero(f, n);
    auto try_add = [&](Word w) {
        Subspace grown = out.span.sum(Subspace::from_spanning(f, n, {w.value}));
        if (grown.dim() > out.span.dim()) {
            out.span = std::move(grown);
            out.words.push_back(std::move(w));
        }
    };
    try_add({h.unit(), {}});
    for (std::size_t idx = 0; idx < out.words.size() && out.span.dim() < n; ++idx)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            Word w;
            w.value = h.multiply(out.words[idx].value, basis_vec(f, n, gens[j]));
            w.letters = out.words[idx].letters;
            w.letters.push_back(j);
            try_add(std::move(w));
        }
    return out;
}

} // namespace

EndRingReport enumerate_end_ring(const HopfPtr& h, std::uint64_t budget) {
    require_verified(h);
    const FieldSpec& f = h->field();
    if (!f.is_prime_field()) throw InputError("enumerate_end_ring requires a prime field");
    const std::size_t n = h->dim();
    const std::uint64_t p = f.p;

    // greedy minimal algebra generating set: repeatedly add the basis vector
    // whose inclusion grows the generated subalgebra the most
    std::vector<std::size_t> gens;
    ClosureResult closure = generated_subalgebra(*h, gens);
    while (closure.span.dim() < n) {
        std::size_t best = n;
        std::size_t best_dim = closure.span.dim();
        ClosureResult best_closure;
        for (std::size_t i = 0; i < n; ++i) {
            if (closure.span.contains(basis_vec(f, n, i))) continue;
            std::vector<std::size_t> cand = gens;
            cand.push_back(i);
            ClosureResult c = generated_subalgebra(*h, cand);
            if (c.span.dim() > best_dim) {
                best = i;
                best_dim = c.span.dim();
                best_closure = std::move(c);
            }
        }
        if (best == n) throw MathError("generating-set search stalled");
        gens.push_back(best);
        closure = std::move(best_closure);
    }

    // budget check: p^(n * g) candidate assignments
    std::uint64_t candidates = 1;
    for (std::size_t i = 0; i < n * gens.size(); ++i) {
        if (candidates > budget / p) throw CapError("enumerate_end_ring: p^(dim*generators) exceeds budget");
        candidates *= p;
    }

    // change of basis from word values to the standard basis
    Matrix w_cols(f, n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < n; ++r) w_cols.at(r, j) = closure.words[j].value[r];
    Matrix w_inv = inverse(w_cols);

    EndRingReport rep;
    const std::size_t g = gens.size();
    std::vector<Vec> images(g, zero_vec(f, n));
    std::vector<std::uint64_t> digits(n * g, 0);
    bool done = false;
    while (!done) {
        for (std::size_t j = 0; j < g; ++j)
            for (std::size_t r = 0; r < n; ++r)
                images[j][r] = Scalar::of(f, static_cast<long long>(digits[j * n + r]));
        // candidate endomorphism: word values map to products of the images
        Matrix img_cols(f, n, n);
        for (std::size_t j = 0; j < n; ++j) {
            Vec v = h->unit();
            for (std::size_t l : closure.words[j].letters) v = h->multiply(v, images[l]);
            for (std::size_t r = 0; r < n; ++r) img_cols.at(r, j) = v[r];
        }
        HopfMorphism cand{h, h, img_cols * w_inv};
        // cheap counit filter before the full morphism check
        bool eps_ok = true;
        for (std::size_t j = 0; j < n && eps_ok; ++j)
            eps_ok = h->counit_apply(cand.matrix.col(j)) == h->counit()[j];
        if (eps_ok && verify_morphism(cand).all_pass()) rep.elements.push_back(std::move(cand));

        done = true;
        for (std::size_t d = 0; d < digits.size(); ++d) {
            if (++digits[d] < p) {
                done = false;
                break;
            }
            digits[d] = 0;
        }
    }

    std::sort(rep.elements.begin(), rep.elements.end(),
              [](const HopfMorphism& a, const HopfMorphism& b) { return matrix_less(a.matrix, b.matrix); });
    rep.elements.erase(std::unique(rep.elements.begin(), rep.elements.end(),
                                   [](const HopfMorphism& a, const HopfMorphism& b) {
                                       return a.matrix == b.matrix;
                                   }),
                       rep.elements.end());
    rep.generators = gens;

    const std::size_t m = rep.elements.size();
    auto index_of = [&](const Matrix& mat) {
        for (std::size_t i = 0; i < m; ++i)
            if (rep.elements[i].matrix == mat) return i;
        throw MathError("End ring not closed under the requested operation");
    };
    rep.zero_index = index_of(trivial_morphism(h, h).matrix);
    rep.one_index = index_of(identity_morphism(h).matrix);
    rep.add_table.assign(m, std::vector<std::size_t>(m, 0));
    rep.mul_table.assign(m, std::vector<std::size_t>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            rep.add_table[i][j] = index_of(convolution(rep.elements[i], rep.elements[j]).matrix);
            rep.mul_table[i][j] = index_of(compose(rep.elements[i], rep.elements[j]).matrix);
        }

    // field detection: commutative multiplication with every nonzero element invertible
    bool field_like = m > 1;
    for (std::size_t i = 0; i < m && field_like; ++i)
        for (std::size_t j = 0; j < m && field_like; ++j)
            field_like = rep.mul_table[i][j] == rep.mul_table[j][i];
    for (std::size_t i = 0; i < m && field_like; ++i) {
        if (i == rep.zero_index) continue;
        bool has_inverse = false;
        for (std::size_t j = 0; j < m && !has_inverse; ++j)
            has_inverse = rep.mul_table[i][j] == rep.one_index;
        field_like = has_inverse;
    }
    if (field_like) rep.ring_id = "F_" + std::to_string(m);
    return rep;
}

HopfPtr exp_object(const ActionSpec& spec, std::size_t n) {
    return biproduct(spec.base, n).power;
}

HopfMorphism exp_morphism(const ActionSpec& spec, const IntMat& m) {
    const std::uint64_t p = spec.prime;
    Biproduct target_power = biproduct(spec.base, m.rows);
    Biproduct source_power = biproduct(spec.base, m.cols);
    return morphism_from_int_matrix(target_power, source_power, m,
                                    [&](long long v) -> HopfMorphism {
                                        long long r = v % static_cast<long long>(p);
                                        if (r < 0) r += static_cast<long long>(p);
                                        return spec.table[static_cast<std::size_t>(r)];
                                    });
}

HopfChainComplex apply_exp_to_chain(const ActionSpec& spec, const FpChainComplex& c) {
    c.validate();
    if (c.field.p != spec.prime) throw InputError("chain modulus differs from the action's prime");
    HopfChainComplex out;
    for (std::size_t q = 0; q < c.dims.size(); ++q) out.objects.push_back(exp_object(spec, c.dims[q]));
    for (std::size_t q = 1; q < c.dims.size(); ++q) {
        const Matrix& d = c.boundary[q - 1];
        IntMat m(d.rows(), d.cols());
        for (std::size_t r = 0; r < d.rows(); ++r)
            for (std::size_t col = 0; col < d.cols(); ++col)
                m.at(r, col) = static_cast<long long>(d.at(r, col).residue());
        HopfMorphism f = exp_morphism(spec, m);
        f = HopfMorphism{out.objects[q], out.objects[q - 1], f.matrix};
        out.boundaries.push_back(std::move(f));
    }
    out.validate();
    return out;
}

} // namespace hopfca
