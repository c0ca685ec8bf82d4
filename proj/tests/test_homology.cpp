#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hopfca/homology.hpp"
#include "hopfca/constructors.hpp"

using namespace hopfca;

namespace {

HopfPtr kz2_f3() { return group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({2})); }

std::vector<std::size_t> dims_of(const HomologyResult& r) {
    std::vector<std::size_t> out;
    for (const DegreeSummary& s : r.degrees) out.push_back(s.dim);
    return out;
}

} // namespace

TEST_CASE("builtin spaces validate and have the documented cell counts") {
    for (const char* name : {"pt", "S1", "S1-big", "S2", "S2-big", "RP1", "RP2", "T2", "D2"})
        CHECK_NOTHROW(builtin_space(name));
    CHECK(builtin_space("pt").cells == std::vector<std::size_t>{1});
    CHECK(builtin_space("S2").cells == std::vector<std::size_t>{1, 0, 1});
    CHECK(builtin_space("S2-big").cells == std::vector<std::size_t>{4, 6, 4});
    CHECK(builtin_space("RP2").boundary[1].at(0, 0) == 2);
    CHECK(builtin_space("D2").boundary[1].at(0, 0) == 1);
    CHECK_THROWS_AS(builtin_space("klein"), InputError);
    // tetrahedron: d d = 0 over Z
    CWComplexData t = builtin_space("S2-big");
    CHECK((t.boundary[0] * t.boundary[1]).is_zero());
}

TEST_CASE("classical mod-p homology oracle") {
    CHECK(classical_homology_fp(builtin_space("pt"), 2) == std::vector<std::size_t>{1});
    CHECK(classical_homology_fp(builtin_space("S1"), 5) == std::vector<std::size_t>{1, 1});
    CHECK(classical_homology_fp(builtin_space("S2"), 3) == std::vector<std::size_t>{1, 0, 1});
    CHECK(classical_homology_fp(builtin_space("S2-big"), 3) == std::vector<std::size_t>{1, 0, 1});
    CHECK(classical_homology_fp(builtin_space("RP2"), 2) == std::vector<std::size_t>{1, 1, 1});
    CHECK(classical_homology_fp(builtin_space("RP2"), 3) == std::vector<std::size_t>{1, 0, 0});
    CHECK(classical_homology_fp(builtin_space("T2"), 2) == std::vector<std::size_t>{1, 2, 1});
}

TEST_CASE("cellular chains compose to the trivial morphism") {
    HopfPtr h = kz2_f3();
    for (const char* name : {"S1", "S2", "RP2", "T2", "D2", "S2-big"}) {
        HopfChainComplex c = cellular_chain(builtin_space(name), h);
        CHECK_NOTHROW(c.validate());
    }
    // (RP2, kZ/2): d_2 = [2] = trivial since g^2 = e
    HopfChainComplex rp2 = cellular_chain(builtin_space("RP2"), h);
    CHECK(is_trivial_morphism(rp2.boundaries[1]));
}

TEST_CASE("homology of the point is the coefficient algebra in degree 0") {
    for (const HopfPtr& h : {kz2_f3(), appendix_d1()}) {
        HomologyResult r = homology_all(builtin_space("pt"), h);
        REQUIRE(r.degrees.size() == 1);
        CHECK(r.degrees[0].algebra->same_tensors(*h));
    }
}

TEST_CASE("homology dims: documented fixture values") {
    HopfPtr h = kz2_f3();
    CHECK(dims_of(homology_all(builtin_space("RP2"), h)) == std::vector<std::size_t>{2, 2, 2});
    CHECK(dims_of(homology_all(builtin_space("T2"), h)) == std::vector<std::size_t>{2, 4, 2});
    CHECK(dims_of(homology_all(builtin_space("S2"), h)) == std::vector<std::size_t>{2, 1, 2});
    HopfPtr d1 = appendix_d1();
    CHECK(dims_of(homology_all(builtin_space("RP2"), d1)) == std::vector<std::size_t>{5, 1, 1});
    CHECK(dims_of(homology_all(builtin_space("S1"), d1)) == std::vector<std::size_t>{5, 5});
}

TEST_CASE("oracle coherence: dim H_q(K; kZ/p) = p^(classical dim)") {
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
        FieldSpec field = FieldSpec::prime(p == 3 ? 2 : 3);
        HopfPtr coeff = group_hopf(field, FiniteAbelianGroup({static_cast<std::size_t>(p)}));
        for (const char* name : {"pt", "S1", "S2", "RP2", "T2"}) {
            CWComplexData kw = builtin_space(name);
            std::vector<std::size_t> classical = classical_homology_fp(kw, p);
            HomologyResult hopf = homology_all(kw, coeff);
            for (std::size_t q = 0; q < classical.size(); ++q) {
                std::size_t expect = 1;
                for (std::size_t i = 0; i < classical[q]; ++i) expect *= p;
                CHECK(hopf.degrees[q].dim == expect);
            }
        }
    }
}

TEST_CASE("compare_with_group_functor on the documented pairs") {
    CHECK(compare_with_group_functor(builtin_space("RP2"), 2, FieldSpec::prime(3)).all_pass());
    CHECK(compare_with_group_functor(builtin_space("S2"), 3, FieldSpec::prime(2)).all_pass());
    CHECK(compare_with_group_functor(builtin_space("T2"), 2, FieldSpec::prime(3)).all_pass());
    CHECK(compare_with_group_functor(builtin_space("S1"), 5, FieldSpec::prime(3)).all_pass());
    CHECK_THROWS_AS(compare_with_group_functor(builtin_space("pt"), 3, FieldSpec::prime(3)),
                    InputError);
}

TEST_CASE("subcomplex validation and the relative model") {
    CWComplexData rp2 = builtin_space("RP2");
    SubcomplexSpec rp1 = {{0}, {0}};
    CHECK_NOTHROW(validate_subcomplex(rp2, rp1));
    CWComplexData sub = sub_cw(rp2, rp1);
    CHECK(sub.cells == std::vector<std::size_t>{1, 1, 0});
    CWComplexData rel = relative_cw(rp2, rp1);
    CHECK(rel.cells == std::vector<std::size_t>{0, 0, 1});
    // keeping only the 2-cell is not a subcomplex
    CHECK_THROWS_AS(validate_subcomplex(rp2, SubcomplexSpec{{}, {}, {0}}), InputError);
    // empty and full subcomplexes
    CHECK(relative_cw(rp2, SubcomplexSpec{}).cells == rp2.cells);
    CHECK(relative_cw(rp2, SubcomplexSpec{{0}, {0}, {0}}).cells ==
          std::vector<std::size_t>{0, 0, 0});
}

TEST_CASE("relative homology of (RP2, RP1) with kZ/2 coefficients") {
    HopfPtr h = kz2_f3();
    HomologyResult r = homology_all(builtin_space("RP2"), h, SubcomplexSpec{{0}, {0}});
    CHECK(dims_of(r) == std::vector<std::size_t>{1, 1, 2});
    CHECK(r.degrees[2].algebra->dim() == 2); // H_2(RP2, RP1) = kZ/2
}

TEST_CASE("deletion model certified against the categorical cokernel") {
    CHECK(certify_relative_model(builtin_space("RP2"), {{0}, {0}}, kz2_f3()).all_pass());
    CHECK(certify_relative_model(builtin_space("D2"), {{0}, {0}}, appendix_d1()).all_pass());
}

TEST_CASE("connecting morphism of (D2, S1) is an isomorphism in degree 1") {
    for (const HopfPtr& h : {kz2_f3(), appendix_d1()}) {
        HopfMorphism delta = connecting_morphism(builtin_space("D2"), {{0}, {0}}, h, 1);
        CHECK(delta.source->dim() == h->dim()); // H_2(D2, S1) = A
        CHECK(delta.target->dim() == h->dim()); // H_1(S1) = A
        CHECK(invertible(delta.matrix));
        CHECK(verify_morphism(delta).all_pass());
    }
}

TEST_CASE("connecting morphism of (RP2, RP1) with kZ/2 is trivial") {
    HopfMorphism delta = connecting_morphism(builtin_space("RP2"), {{0}, {0}}, kz2_f3(), 1);
    CHECK(is_trivial_morphism(delta)); // induced by [2] = 0 on kZ/2
}

TEST_CASE("long exact sequences of the fixture pairs") {
    for (const HopfPtr& h : {kz2_f3(), appendix_d1()}) {
        CHECK(verify_les(builtin_space("RP2"), {}, h).all_exact());
        CHECK(verify_les(builtin_space("RP2"), {{0}, {0}}, h).all_exact());
        CHECK(verify_les(builtin_space("D2"), {{0}, {0}}, h).all_exact());
    }
}

TEST_CASE("CW independence: minimal vs tetrahedral sphere") {
    HopfPtr h = kz2_f3();
    HomologyResult small = homology_all(builtin_space("S2"), h);
    HomologyResult big = homology_all(builtin_space("S2-big"), h);
    REQUIRE(small.degrees.size() == big.degrees.size());
    for (std::size_t q = 0; q < small.degrees.size(); ++q) {
        const DegreeSummary &a = small.degrees[q], &b = big.degrees[q];
        CHECK(a.dim == b.dim);
        CHECK(a.ge == b.ge);
        CHECK(a.ge_dual == b.ge_dual);
        CHECK(a.semisimple == b.semisimple);
        CHECK(a.cosemisimple == b.cosemisimple);
        CHECK(a.cls == b.cls);
    }
}

TEST_CASE("homotopy smoke: one-vertex vs two-vertex circle") {
    HopfPtr h = kz2_f3();
    HomologyResult a = homology_all(builtin_space("S1"), h);
    HomologyResult b = homology_all(builtin_space("S1-big"), h);
    REQUIRE(a.degrees.size() == b.degrees.size());
    for (std::size_t q = 0; q < a.degrees.size(); ++q) {
        CHECK(a.degrees[q].dim == b.degrees[q].dim);
        CHECK(a.degrees[q].ge == b.degrees[q].ge);
        CHECK(a.degrees[q].cls == b.degrees[q].cls);
    }
}

TEST_CASE("periodicized point chain is extraordinary") {
    FpChainComplex c = periodicized_chain(builtin_space("pt"), 5, 2);
    CHECK(c.dims == std::vector<std::size_t>{1, 0, 1});
    CHECK(fp_homology_dims(c) == std::vector<std::size_t>{1, 0, 1});
    // exp by the D1 action: coefficient D1 appears in degree 2
    ActionSpec spec = canonical_action(appendix_d1(), 5);
    HopfChainComplex e = apply_exp_to_chain(spec, c);
    HomologyResult r = homology_all(e);
    CHECK(dims_of(r) == std::vector<std::size_t>{5, 1, 5});
    CHECK(homology_at(e, 2).homology()->same_tensors(*e.objects[2]));
}

TEST_CASE("exp comparison morphism is an isomorphism degreewise (exactness witness)") {
    ActionSpec spec = canonical_action(appendix_d1(), 5);
    for (const char* name : {"RP2", "S1"}) {
        FpChainComplex c = cw_to_fp_chain(builtin_space(name), 5);
        std::vector<std::size_t> classical = fp_homology_dims(c);
        HopfChainComplex e = apply_exp_to_chain(spec, c);
        for (std::size_t q = 0; q < c.dims.size(); ++q) {
            ExpComparison cmp = exp_compare_at(spec, c, q);
            CHECK(cmp.invertible);
            std::size_t expect = 1;
            for (std::size_t i = 0; i < classical[q]; ++i) expect *= 5;
            CHECK(homology_at(e, static_cast<long long>(q)).homology()->dim() == expect);
        }
    }
}

TEST_CASE("out-of-range degrees give the unit object") {
    HopfChainComplex c = cellular_chain(builtin_space("S1"), kz2_f3());
    CHECK(homology_at(c, -1).homology()->dim() == 1);
    CHECK(homology_at(c, 5).homology()->dim() == 1);
}
