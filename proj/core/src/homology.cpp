#include "hopfca/homology.hpp"

#include <algorithm>

#include "hopfca/errors.hpp"

namespace hopfca {

void CWComplexData::validate() const {
    if (cells.empty()) throw InputError("CW complex needs at least one dimension");
    if (boundary.size() + 1 != cells.size() && !(cells.size() == 1 && boundary.empty()))
        throw InputError("CW complex: need one incidence matrix per positive dimension");
    for (std::size_t q = 1; q < cells.size(); ++q) {
        const IntMat& m = boundary[q - 1];
        if (m.rows != cells[q - 1] || m.cols != cells[q])
            throw InputError("CW complex: incidence matrix " + std::to_string(q) + " has wrong shape");
    }
    for (std::size_t q = 2; q < cells.size(); ++q)
        if (!(boundary[q - 2] * boundary[q - 1]).is_zero())
            throw InputError("CW complex: M M != 0 at dimension " + std::to_string(q));
}

CWComplexData builtin_space(const std::string& name) {
    CWComplexData kw;
    kw.name = name;
    if (name == "pt") {
        kw.cells = {1};
    } else if (name == "S1" || name == "RP1") {
        kw.cells = {1, 1};
        kw.boundary = {IntMat(1, 1)};
    } else if (name == "S1-big") {
        // two-vertex circle: e0 from v0 to v1, e1 from v1 to v0
        kw.cells = {2, 2};
        IntMat m1(2, 2);
        m1.at(0, 0) = -1; m1.at(1, 0) = 1;
        m1.at(0, 1) = 1;  m1.at(1, 1) = -1;
        kw.boundary = {m1};
    } else if (name == "S2") {
        kw.cells = {1, 0, 1};
        kw.boundary = {IntMat(1, 0), IntMat(0, 1)};
    } else if (name == "S2-big") {
        // boundary of the tetrahedron: vertices 0..3, edges in lex order,
        // faces in lex order
        kw.cells = {4, 6, 4};
        const std::size_t edges[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        const std::size_t faces[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
        IntMat m1(4, 6);
        for (std::size_t j = 0; j < 6; ++j) {
            m1.at(edges[j][0], j) = -1;
            m1.at(edges[j][1], j) = 1;
        }
        auto edge_index = [&](std::size_t a, std::size_t b) {
            for (std::size_t j = 0; j < 6; ++j)
                if (edges[j][0] == a && edges[j][1] == b) return j;
            throw MathError("tetrahedron edge lookup failed");
        };
        IntMat m2(6, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            std::size_t a = faces[j][0], b = faces[j][1], c = faces[j][2];
            m2.at(edge_index(b, c), j) += 1;
            m2.at(edge_index(a, c), j) += -1;
            m2.at(edge_index(a, b), j) += 1;
        }
        kw.boundary = {m1, m2};
    } else if (name == "RP2") {
        kw.cells = {1, 1, 1};
        IntMat m2(1, 1);
        m2.at(0, 0) = 2;
        kw.boundary = {IntMat(1, 1), m2};
    } else if (name == "T2") {
        kw.cells = {1, 2, 1};
        kw.boundary = {IntMat(1, 2), IntMat(2, 1)};
    } else if (name == "D2") {
        // disk as one cell per dimension; the boundary circle is the subcomplex
        kw.cells = {1, 1, 1};
        IntMat m2(1, 1);
        m2.at(0, 0) = 1;
        kw.boundary = {IntMat(1, 1), m2};
    } else {
        throw InputError("unknown builtin space: " + name);
    }
    kw.validate();
    return kw;
}

namespace {

SubcomplexSpec padded(const CWComplexData& kw, const SubcomplexSpec& sub) {
    if (sub.size() > kw.cells.size()) throw InputError("subcomplex has more dimensions than the complex");
    SubcomplexSpec s = sub;
    s.resize(kw.cells.size());
    return s;
}

std::vector<std::size_t> complement(std::size_t n, const std::vector<std::size_t>& kept) {
    std::vector<bool> in(n, false);
    for (std::size_t i : kept) in[i] = true;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!in[i]) out.push_back(i);
    return out;
}

/// n x idx.size() selection matrix with a 1 at (idx[j], j).
IntMat selection(std::size_t n, const std::vector<std::size_t>& idx) {
    IntMat m(n, idx.size());
    for (std::size_t j = 0; j < idx.size(); ++j) m.at(idx[j], j) = 1;
    return m;
}

IntMat transpose(const IntMat& m) {
    IntMat t(m.cols, m.rows);
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) t.at(c, r) = m.at(r, c);
    return t;
}

IntMat restrict_matrix(const IntMat& m, const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) {
    IntMat out(rows.size(), cols.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) out.at(r, c) = m.at(rows[r], cols[c]);
    return out;
}

std::size_t pow_sz(std::uint64_t base, std::size_t e) {
    std::size_t out = 1;
    for (std::size_t i = 0; i < e; ++i) out *= base;
    return out;
}

} // namespace

void validate_subcomplex(const CWComplexData& kw, const SubcomplexSpec& sub) {
    kw.validate();
    SubcomplexSpec s = padded(kw, sub);
    for (std::size_t q = 0; q < s.size(); ++q) {
        std::size_t prev = 0;
        for (std::size_t t = 0; t < s[q].size(); ++t) {
            if (s[q][t] >= kw.cells[q]) throw InputError("subcomplex cell index out of range");
            if (t > 0 && s[q][t] <= prev) throw InputError("subcomplex cell indices must be strictly increasing");
            prev = s[q][t];
        }
    }
    for (std::size_t q = 1; q < s.size(); ++q) {
        std::vector<bool> kept(kw.cells[q - 1], false);
        for (std::size_t i : s[q - 1]) kept[i] = true;
        for (std::size_t j : s[q])
            for (std::size_t r = 0; r < kw.cells[q - 1]; ++r)
                if (kw.boundary[q - 1].at(r, j) != 0 && !kept[r])
                    throw InputError("not a subcomplex: boundary of a kept cell leaves the subcomplex");
    }
}

CWComplexData sub_cw(const CWComplexData& kw, const SubcomplexSpec& sub) {
    validate_subcomplex(kw, sub);
    SubcomplexSpec s = padded(kw, sub);
    CWComplexData out;
    out.name = kw.name + "-sub";
    for (std::size_t q = 0; q < s.size(); ++q) out.cells.push_back(s[q].size());
    for (std::size_t q = 1; q < s.size(); ++q)
        out.boundary.push_back(restrict_matrix(kw.boundary[q - 1], s[q - 1], s[q]));
    out.validate();
    return out;
}

CWComplexData relative_cw(const CWComplexData& kw, const SubcomplexSpec& sub) {
    validate_subcomplex(kw, sub);
    SubcomplexSpec s = padded(kw, sub);
    CWComplexData out;
    out.name = kw.name + "-rel";
    std::vector<std::vector<std::size_t>> rel;
    for (std::size_t q = 0; q < s.size(); ++q) rel.push_back(complement(kw.cells[q], s[q]));
    for (std::size_t q = 0; q < rel.size(); ++q) out.cells.push_back(rel[q].size());
    for (std::size_t q = 1; q < rel.size(); ++q)
        out.boundary.push_back(restrict_matrix(kw.boundary[q - 1], rel[q - 1], rel[q]));
    out.validate();
    return out;
}

HopfChainComplex cellular_chain(const CWComplexData& kw, const HopfPtr& h) {
    kw.validate();
    require_verified(h);
    HopfChainComplex c;
    for (std::size_t q = 0; q < kw.cells.size(); ++q) c.objects.push_back(biproduct(h, kw.cells[q]).power);
    for (std::size_t q = 1; q < kw.cells.size(); ++q) {
        HopfMorphism d = matrix_to_morphism(h, kw.boundary[q - 1]);
        c.boundaries.push_back({c.objects[q], c.objects[q - 1], d.matrix});
    }
    c.validate();
    return c;
}

FpChainComplex cw_to_fp_chain(const CWComplexData& kw, std::uint64_t p) {
    kw.validate();
    FpChainComplex c;
    c.field = FieldSpec::prime(p);
    c.dims = kw.cells;
    for (const IntMat& m : kw.boundary) c.boundary.push_back(m.over(c.field));
    c.validate();
    return c;
}

HomologyCert homology_at(const HopfChainComplex& c, long long q) {
    HomologyCert cert;
    cert.degree = q;
    cert.chain_object = c.object_at(q);
    cert.cycles = hopf_kernel(c.boundary_at(q));
    cert.factored = factor_through_kernel(c.boundary_at(q + 1), cert.cycles);
    cert.coker = hopf_cokernel(cert.factored);
    return cert;
}

DegreeSummary summarize(std::size_t degree, const HopfPtr& h) {
    DegreeSummary s;
    s.degree = degree;
    s.algebra = h;
    s.dim = h->dim();
    try {
        s.ge = group_likes(h).size();
    } catch (const CapError&) {
    }
    try {
        s.ge_dual = group_likes(dual(h)).size();
    } catch (const CapError&) {
    }
    s.semisimple = integral(h).semisimple;
    s.cosemisimple = cointegral(h).semisimple;
    s.cls = classify_triviality(h);
    return s;
}

HomologyResult homology_all(const HopfChainComplex& c) {
    HomologyResult out;
    for (std::size_t q = 0; q < c.objects.size(); ++q)
        out.degrees.push_back(summarize(q, homology_at(c, static_cast<long long>(q)).homology()));
    return out;
}

HomologyResult homology_all(const CWComplexData& kw, const HopfPtr& h,
                            const std::optional<SubcomplexSpec>& sub) {
    CWComplexData data = sub ? relative_cw(kw, *sub) : kw;
    return homology_all(cellular_chain(data, h));
}

HopfMorphism induced_on_homology(const HopfMorphism& f, const HomologyCert& src,
                                 const HomologyCert& tgt) {
    HopfMorphism u = compose(f, src.cycles.inclusion);
    HopfMorphism v = factor_through_kernel(u, tgt.cycles);
    HopfMorphism w = compose(tgt.coker.projection, v);
    return descend_through_cokernel(w, src.coker);
}

namespace {

/// Everything verify_les and the connecting morphism need, built once.
struct PairData {
    CWComplexData K, Kp, Rel;
    SubcomplexSpec kept, removed;
    HopfChainComplex cK, cKp, cRel;
    std::vector<HomologyCert> hK, hKp, hRel;         // degree 0..top
    std::vector<HopfMorphism> iota, pi_sub, sigma, pi_rel; // per degree: C(K')->C(K), C(K)->C(K'),
                                                           // C(rel)->C(K), C(K)->C(rel)
    std::size_t top = 0;
};

PairData build_pair(const CWComplexData& kw, const SubcomplexSpec& sub, const HopfPtr& h) {
    PairData pd;
    pd.K = kw;
    pd.kept = padded(kw, sub);
    pd.Kp = sub_cw(kw, sub);
    pd.Rel = relative_cw(kw, sub);
    for (std::size_t q = 0; q < kw.cells.size(); ++q)
        pd.removed.push_back(complement(kw.cells[q], pd.kept[q]));
    pd.cK = cellular_chain(kw, h);
    pd.cKp = cellular_chain(pd.Kp, h);
    pd.cRel = cellular_chain(pd.Rel, h);
    pd.top = kw.top_dim();
    for (std::size_t q = 0; q <= pd.top; ++q) {
        pd.hK.push_back(homology_at(pd.cK, q));
        pd.hKp.push_back(homology_at(pd.cKp, q));
        pd.hRel.push_back(homology_at(pd.cRel, q));
        IntMat inc = selection(kw.cells[q], pd.kept[q]);
        IntMat sec = selection(kw.cells[q], pd.removed[q]);
        HopfMorphism i = matrix_to_morphism(h, inc);
        HopfMorphism p = matrix_to_morphism(h, transpose(inc));
        HopfMorphism s = matrix_to_morphism(h, sec);
        HopfMorphism pr = matrix_to_morphism(h, transpose(sec));
        pd.iota.push_back({pd.cKp.objects[q], pd.cK.objects[q], i.matrix});
        pd.pi_sub.push_back({pd.cK.objects[q], pd.cKp.objects[q], p.matrix});
        pd.sigma.push_back({pd.cRel.objects[q], pd.cK.objects[q], s.matrix});
        pd.pi_rel.push_back({pd.cK.objects[q], pd.cRel.objects[q], pr.matrix});
    }
    return pd;
}

/// H_{q+1}(K, K') -> H_q(K') from the splitting: pi_{K'} o d^K o sigma,
/// restricted to relative cycles and descended to homology.
HopfMorphism pair_connecting(const PairData& pd, long long q) {
    auto homology_of = [&](const std::vector<HomologyCert>& certs, long long deg) {
        if (deg >= 0 && static_cast<std::size_t>(deg) <= pd.top) return certs[deg].homology();
        return unit_hopf(pd.cK.objects.front()->field());
    };
    if (q < 0 || static_cast<std::size_t>(q) >= pd.top)
        return trivial_morphism(homology_of(pd.hRel, q + 1), homology_of(pd.hKp, q));
    const HomologyCert& rel = pd.hRel[q + 1];
    const HomologyCert& sb = pd.hKp[q];
    HopfMorphism delta = compose(pd.pi_sub[q], compose(pd.cK.boundaries[q], pd.sigma[q + 1]));
    HopfMorphism u = compose(delta, rel.cycles.inclusion);
    HopfMorphism v = factor_through_kernel(u, sb.cycles);
    HopfMorphism w = compose(sb.coker.projection, v);
    return descend_through_cokernel(w, rel.coker);
}

} // namespace

HopfMorphism connecting_morphism(const CWComplexData& kw, const SubcomplexSpec& sub,
                                 const HopfPtr& h, long long q) {
    PairData pd = build_pair(kw, sub, h);
    return pair_connecting(pd, q);
}

bool LesReport::all_exact() const {
    return std::all_of(spots.begin(), spots.end(), [](const LesSpot& s) { return s.exact; });
}

LesReport verify_les(const CWComplexData& kw, const SubcomplexSpec& sub, const HopfPtr& h) {
    PairData pd = build_pair(kw, sub, h);
    LesReport rep;
    // ... -> H_q(K') -> H_q(K) -> H_q(K,K') -> H_{q-1}(K') -> ...
    HopfMorphism prev = pair_connecting(pd, static_cast<long long>(pd.top)); // from H_{top+1}(rel) = k
    for (long long q = static_cast<long long>(pd.top); q >= 0; --q) {
        const std::string deg = std::to_string(q);
        HopfMorphism i = induced_on_homology(pd.iota[q], pd.hKp[q], pd.hK[q]);
        HopfMorphism j = induced_on_homology(pd.pi_rel[q], pd.hK[q], pd.hRel[q]);
        HopfMorphism delta = pair_connecting(pd, q - 1);
        rep.spots.push_back({"H_" + deg + "(K')", is_exact_at(prev, i)});
        rep.spots.push_back({"H_" + deg + "(K)", is_exact_at(i, j)});
        rep.spots.push_back({"H_" + deg + "(K,K')", is_exact_at(j, delta)});
        prev = delta;
    }
    return rep;
}

std::vector<std::size_t> classical_homology_fp(const CWComplexData& kw, std::uint64_t p) {
    return fp_homology_dims(cw_to_fp_chain(kw, p));
}

CheckReport compare_with_group_functor(const CWComplexData& kw, std::uint64_t p,
                                       const FieldSpec& field) {
    if (field.is_prime_field() && field.p == p)
        throw InputError("compare_with_group_functor: the field characteristic must differ from p");
    std::vector<std::size_t> classical = classical_homology_fp(kw, p);
    HopfPtr coeff = group_hopf(field, FiniteAbelianGroup({static_cast<std::size_t>(p)}));
    HomologyResult hopf_side = homology_all(kw, coeff);
    CheckReport rep;
    for (std::size_t q = 0; q < classical.size(); ++q) {
        std::size_t expect = pow_sz(p, classical[q]);
        const DegreeSummary& s = hopf_side.degrees[q];
        bool dim_ok = s.dim == expect;
        bool ge_ok = s.ge.has_value() && *s.ge == expect;
        rep.checks.push_back({"degree " + std::to_string(q) + ": dim = p^classical", dim_ok,
                              dim_ok ? "" : std::to_string(s.dim) + " != " + std::to_string(expect)});
        rep.checks.push_back({"degree " + std::to_string(q) + ": |GE| = p^classical", ge_ok,
                              ge_ok ? "" : "group-like count mismatch"});
    }
    return rep;
}

FpChainComplex periodicized_chain(const CWComplexData& kw, std::uint64_t p, std::size_t shift) {
    FpChainComplex base = cw_to_fp_chain(kw, p);
    auto dim_at = [&](long long q) -> std::size_t {
        return (q >= 0 && static_cast<std::size_t>(q) < base.dims.size()) ? base.dims[q] : 0;
    };
    FpChainComplex out;
    out.field = base.field;
    const std::size_t newtop = base.top() + shift;
    for (std::size_t q = 0; q <= newtop; ++q)
        out.dims.push_back(dim_at(q) + dim_at(static_cast<long long>(q) - static_cast<long long>(shift)));
    for (std::size_t q = 1; q <= newtop; ++q) {
        Matrix m(out.field, out.dims[q - 1], out.dims[q]);
        Matrix d1 = base.d(q);
        for (std::size_t r = 0; r < d1.rows(); ++r)
            for (std::size_t c = 0; c < d1.cols(); ++c) m.at(r, c) = d1.at(r, c);
        long long qs = static_cast<long long>(q) - static_cast<long long>(shift);
        if (qs >= 1) {
            Matrix d2 = base.d(static_cast<std::size_t>(qs));
            std::size_t ro = dim_at(static_cast<long long>(q) - 1);
            std::size_t co = dim_at(static_cast<long long>(q));
            for (std::size_t r = 0; r < d2.rows(); ++r)
                for (std::size_t c = 0; c < d2.cols(); ++c) m.at(ro + r, co + c) = d2.at(r, c);
        }
        out.boundary.push_back(std::move(m));
    }
    out.validate();
    return out;
}

CheckReport certify_relative_model(const CWComplexData& kw, const SubcomplexSpec& sub,
                                   const HopfPtr& h) {
    PairData pd = build_pair(kw, sub, h);
    CheckReport rep;
    for (std::size_t q = 0; q <= pd.top; ++q) {
        QuotientHopf coker = hopf_cokernel(pd.iota[q]);
        // the deletion projection descends to an isomorphism from the
        // categorical cokernel onto the deletion model
        HopfMorphism cmp = descend_through_cokernel(pd.pi_rel[q], coker);
        bool ok = invertible(cmp.matrix) && verify_morphism(cmp).all_pass();
        rep.checks.push_back({"degree " + std::to_string(q) + ": cokernel = deletion model", ok, ""});
    }
    return rep;
}

ExpComparison exp_compare_at(const ActionSpec& spec, const FpChainComplex& c, std::size_t q) {
    c.validate();
    if (q >= c.dims.size()) throw InputError("exp_compare_at: degree out of range");
    FpHomologyData fph = fp_homology_at(c, q);
    HopfChainComplex e = apply_exp_to_chain(spec, c);
    HomologyCert cert = homology_at(e, static_cast<long long>(q));
    IntMat reps(fph.representatives.rows(), fph.representatives.cols());
    for (std::size_t r = 0; r < reps.rows; ++r)
        for (std::size_t col = 0; col < reps.cols; ++col)
            reps.at(r, col) = static_cast<long long>(fph.representatives.at(r, col).residue());
    HopfMorphism phi = exp_morphism(spec, reps);
    phi = HopfMorphism{phi.source, cert.chain_object, phi.matrix};
    HopfMorphism u = factor_through_kernel(phi, cert.cycles);
    ExpComparison out;
    out.comparison = compose(cert.coker.projection, u);
    out.invertible = invertible(out.comparison.matrix) && verify_morphism(out.comparison).all_pass();
    return out;
}

} // namespace hopfca
