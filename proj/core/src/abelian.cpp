#include "hopfca/abelian.hpp"

#include <map>

namespace hopfca {

SubHopf sub_presentation(const HopfPtr& ambient, const Subspace& s) {
    require_verified(ambient);
    const std::size_t n = ambient->dim(), r = s.dim();
    const FieldSpec& f = ambient->field();
    if (s.ambient != n) throw InputError("sub_presentation: ambient mismatch");

    auto coords = [&](const Vec& v) {
        auto c = s.coordinates(v);
        if (!c) throw MathError("sub_presentation: subspace not closed");
        return *c;
    };

    Vec unit = coords(ambient->unit());
    SparseTensor mul;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            Vec w = coords(ambient->multiply(s.basis.row(i), s.basis.row(j)));
            for (std::size_t k = 0; k < r; ++k)
                if (!w[k].is_zero()) mul.push_back({i, j, k, w[k]});
        }
    // Delta must land in S (x) S; with an rref basis the coefficient of
    // B_r (x) B_s is the value at (pivot_r, pivot_s), verified by reconstruction.
    SparseTensor comul;
    for (std::size_t i = 0; i < r; ++i) {
        Vec d = ambient->comultiply(s.basis.row(i));
        Vec recon = zero_vec(f, n * n);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = 0; b < r; ++b) {
                Scalar c = d[s.pivots[a] * n + s.pivots[b]];
                if (c.is_zero()) continue;
                comul.push_back({i, a, b, c});
                for (std::size_t x = 0; x < n; ++x) {
                    if (s.basis.at(a, x).is_zero()) continue;
                    for (std::size_t y = 0; y < n; ++y)
                        if (!s.basis.at(b, y).is_zero())
                            recon[x * n + y] += c * s.basis.at(a, x) * s.basis.at(b, y);
                }
            }
        if (recon != d) throw MathError("sub_presentation: comultiplication does not restrict");
    }
    Vec counit = zero_vec(f, r);
    for (std::size_t i = 0; i < r; ++i) counit[i] = ambient->counit_apply(s.basis.row(i));
    Matrix anti(f, r, r);
    for (std::size_t i = 0; i < r; ++i) {
        Vec w = coords(ambient->antipode() * s.basis.row(i));
        for (std::size_t k = 0; k < r; ++k) anti.at(k, i) = w[k];
    }
    auto restricted = std::make_shared<HopfPresentation>(f, r, std::move(mul), std::move(unit),
                                                         std::move(comul), std::move(counit), anti);
    restricted->mark_verified();
    Matrix incl = s.basis.transpose();
    return {ambient, s, restricted, HopfMorphism{restricted, ambient, incl}};
}

QuotientHopf quotient_presentation(const HopfPtr& ambient, const Subspace& ideal) {
    require_verified(ambient);
    const std::size_t n = ambient->dim();
    const FieldSpec& f = ambient->field();
    if (ideal.ambient != n) throw InputError("quotient_presentation: ambient mismatch");

    // well-definedness: the ideal must be a Hopf ideal
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
        Vec v = ideal.basis.row(r);
        if (!ambient->counit_apply(v).is_zero())
            throw MathError("quotient: counit does not vanish on ideal");
        if (!ideal.contains(ambient->antipode() * v))
            throw MathError("quotient: ideal not antipode-stable");
        for (std::size_t i = 0; i < n; ++i) {
            Vec ei = zero_vec(f, n);
            ei[i] = Scalar::one(f);
            if (!ideal.contains(ambient->multiply(ei, v)))
                throw MathError("quotient: ideal not multiplicatively absorbing");
        }
    }
    QuotientMaps qm = quotient_with_section(ideal);
    const std::size_t m = qm.projection.rows();
    // (pi (x) pi) Delta must kill the ideal
    auto project_tensor = [&](const Vec& d) {
        Vec out = zero_vec(f, m * m);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                const Scalar& c = d[a * n + b];
                if (c.is_zero()) continue;
                for (std::size_t x = 0; x < m; ++x) {
                    if (qm.projection.at(x, a).is_zero()) continue;
                    for (std::size_t y = 0; y < m; ++y)
                        if (!qm.projection.at(y, b).is_zero())
                            out[x * m + y] += c * qm.projection.at(x, a) * qm.projection.at(y, b);
                }
            }
        return out;
    };
    for (std::size_t r = 0; r < ideal.dim(); ++r)
        if (!is_zero_vec(project_tensor(ambient->comultiply(ideal.basis.row(r)))))
            throw MathError("quotient: ideal is not a coideal");

    SparseTensor mul, comul;
    for (std::size_t i = 0; i < m; ++i) {
        Vec si = qm.section.col(i);
        for (std::size_t j = 0; j < m; ++j) {
            Vec w = qm.projection * ambient->multiply(si, qm.section.col(j));
            for (std::size_t k = 0; k < m; ++k)
                if (!w[k].is_zero()) mul.push_back({i, j, k, w[k]});
        }
        Vec d = project_tensor(ambient->comultiply(si));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b)
                if (!d[a * m + b].is_zero()) comul.push_back({i, a, b, d[a * m + b]});
    }
    Vec unit = qm.projection * ambient->unit();
    Vec counit = zero_vec(f, m);
    for (std::size_t i = 0; i < m; ++i) counit[i] = ambient->counit_apply(qm.section.col(i));
    Matrix anti = qm.projection * ambient->antipode() * qm.section;
    auto quotient = std::make_shared<HopfPresentation>(f, m, std::move(mul), std::move(unit),
                                                       std::move(comul), std::move(counit), anti);
    HopfMorphism proj{ambient, quotient, qm.projection};
    CheckReport rep = verify_morphism(proj);
    if (!rep.all_pass())
        throw MathError("quotient: projection is not a Hopf morphism:\n" + rep.summary());
    quotient->mark_verified();
    return {ambient, ideal, quotient, proj, qm.section};
}

Biproduct biproduct(const HopfPtr& h, std::size_t n) {
    require_verified(h);
    const FieldSpec& f = h->field();
    const std::size_t d = h->dim();
    // cap check on the total dimension d^n
    if (d > 1) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) {
            if (total > dimension_cap() / d)
                throw CapError("biproduct: tensor power dimension exceeds cap " +
                               std::to_string(dimension_cap()));
            total *= d;
        }
        if (total > dimension_cap())
            throw CapError("biproduct: tensor power dimension exceeds cap " +
                           std::to_string(dimension_cap()));
    }
    Biproduct bp;
    bp.power = unit_hopf(f);
    for (std::size_t i = 0; i < n; ++i) bp.power = tensor(bp.power, h);
    // basis index of a multi-index (t_0 .. t_{n-1}) is sum t_l d^(n-1-l):
    // plain lexicographic, first slot most significant
    const std::size_t total = bp.power->dim();
    auto digit = [&](std::size_t idx, std::size_t slot) {
        std::size_t st = 1;
        for (std::size_t q = slot + 1; q < n; ++q) st *= d;
        return (idx / st) % d;
    };
    for (std::size_t slot = 0; slot < n; ++slot) {
        // iota_slot: e_i -> unit (x) ... (x) e_i (x) ... (x) unit
        Matrix inj(f, total, d);
        for (std::size_t idx = 0; idx < total; ++idx) {
            Scalar c = Scalar::one(f);
            std::size_t i = 0;
            for (std::size_t l = 0; l < n && !c.is_zero(); ++l) {
                std::size_t t = digit(idx, l);
                if (l == slot)
                    i = t;
                else
                    c *= h->unit()[t];
            }
            if (!c.is_zero()) inj.at(idx, i) = c;
        }
        bp.injections.push_back({h, bp.power, inj});
        // pi_slot: counit off-slot
        Matrix proj(f, d, total);
        for (std::size_t idx = 0; idx < total; ++idx) {
            Scalar c = Scalar::one(f);
            std::size_t target = 0;
            for (std::size_t l = 0; l < n && !c.is_zero(); ++l) {
                std::size_t t = digit(idx, l);
                if (l == slot)
                    target = t;
                else
                    c *= h->counit()[t];
            }
            if (!c.is_zero()) proj.at(target, idx) += c;
        }
        bp.projections.push_back({bp.power, h, proj});
    }
    return bp;
}

HopfMorphism morphism_from_int_matrix(const Biproduct& target_power, const Biproduct& source_power,
                                      const IntMat& m,
                                      const std::function<HopfMorphism(long long)>& entry_map) {
    if (m.rows != target_power.injections.size() || m.cols != source_power.projections.size())
        throw InputError("morphism_from_int_matrix: shape mismatch");
    HopfMorphism acc = trivial_morphism(source_power.power, target_power.power);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) {
            if (m.at(i, j) == 0) continue; // [0] is the convolution unit
            HopfMorphism term = compose(target_power.injections[i],
                                        compose(entry_map(m.at(i, j)), source_power.projections[j]));
            acc = convolution(acc, term);
        }
    return acc;
}

HopfMorphism matrix_to_morphism(const HopfPtr& h, const IntMat& m) {
    require_verified(h);
    Biproduct tgt = biproduct(h, m.rows);
    Biproduct src = biproduct(h, m.cols);
    std::map<long long, HopfMorphism> cache;
    auto entry = [&](long long v) -> HopfMorphism {
        auto it = cache.find(v);
        if (it == cache.end()) it = cache.emplace(v, int_power(h, v)).first;
        return it->second;
    };
    return morphism_from_int_matrix(tgt, src, m, entry);
}

SubHopf hopf_kernel(const HopfMorphism& f) {
    require_verified(f);
    const HopfPresentation& a = *f.source;
    const HopfPresentation& b = *f.target;
    const std::size_t na = a.dim(), nb = b.dim();
    const FieldSpec& fld = a.field();
    // (id (x) f)(Delta x) = x (x) eta_B, rows indexed by (j in A, l in B)
    Matrix sys(fld, na * nb, na);
    for (std::size_t i = 0; i < na; ++i)
        for (const auto& e : a.comul_of(i))
            for (std::size_t l = 0; l < nb; ++l) {
                const Scalar& flk = f.matrix.at(l, e.k);
                if (!flk.is_zero()) sys.at(e.j * nb + l, i) += e.c * flk;
            }
    for (std::size_t j = 0; j < na; ++j)
        for (std::size_t l = 0; l < nb; ++l) sys.at(j * nb + l, j) -= b.unit()[l];
    Subspace k = kernel_basis(sys);
    return sub_presentation(f.source, k);
}

QuotientHopf hopf_cokernel(const HopfMorphism& f) {
    require_verified(f);
    const HopfPresentation& a = *f.source;
    const HopfPresentation& b = *f.target;
    const std::size_t na = a.dim(), nb = b.dim();
    const FieldSpec& fld = a.field();
    // augmentation ideal of A: kernel of the counit covector
    Matrix eps(fld, 1, na);
    for (std::size_t i = 0; i < na; ++i) eps.at(0, i) = a.counit()[i];
    Subspace aug = kernel_basis(eps);
    std::vector<Vec> gens;
    for (std::size_t r = 0; r < aug.dim(); ++r) {
        Vec fa = f.matrix * aug.basis.row(r);
        for (std::size_t i = 0; i < nb; ++i) {
            Vec ei = zero_vec(fld, nb);
            ei[i] = Scalar::one(fld);
            gens.push_back(b.multiply(ei, fa));
        }
    }
    Subspace ideal = Subspace::from_spanning(fld, nb, gens);
    return quotient_presentation(f.target, ideal);
}

SubHopf hopf_image(const HopfMorphism& f) {
    QuotientHopf q = hopf_cokernel(f);
    SubHopf im = hopf_kernel(q.projection);
    if (!im.subspace.contains(image_basis(f.matrix)))
        throw MathError("image: linear image not contained in Hopf image");
    return im;
}

HopfMorphism factor_through_kernel(const HopfMorphism& g, const SubHopf& ker) {
    require_verified(g);
    const std::size_t src = g.matrix.cols();
    Matrix m(g.matrix.field(), ker.subspace.dim(), src);
    for (std::size_t c = 0; c < src; ++c) {
        auto coords = ker.subspace.coordinates(g.matrix.col(c));
        if (!coords) throw MathError("factor_through_kernel: image not contained in kernel");
        for (std::size_t r = 0; r < ker.subspace.dim(); ++r) m.at(r, c) = (*coords)[r];
    }
    HopfMorphism gbar{g.source, ker.restricted, m};
    if (!(compose(ker.inclusion, gbar).matrix == g.matrix))
        throw MathError("factor_through_kernel: factorization check failed");
    return gbar;
}

HopfMorphism descend_through_cokernel(const HopfMorphism& f, const QuotientHopf& q) {
    require_verified(f);
    for (std::size_t r = 0; r < q.ideal.dim(); ++r)
        if (!is_zero_vec(f.matrix * q.ideal.basis.row(r)))
            throw MathError("descend_through_cokernel: morphism does not vanish on ideal");
    HopfMorphism fbar{q.quotient, f.target, f.matrix * q.section};
    if (!(compose(fbar, q.projection).matrix == f.matrix))
        throw MathError("descend_through_cokernel: factorization check failed");
    return fbar;
}

bool is_exact_at(const HopfMorphism& f, const HopfMorphism& g) {
    if (!is_trivial_morphism(compose(g, f))) return false;
    return hopf_image(f).subspace == hopf_kernel(g).subspace;
}

} // namespace hopfca
