#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>

#include "hopfca/constructors.hpp"

using namespace hopfca;

TEST_CASE("mixed-radix group indexing, addition, orders") {
    FiniteAbelianGroup g({2, 4});
    CHECK(g.size() == 8);
    CHECK(g.index_of({1, 3}) == 7);
    CHECK(g.tuple_of(6) == std::vector<std::size_t>{1, 2});
    CHECK(g.add(g.index_of({1, 3}), g.index_of({1, 2})) == g.index_of({0, 1}));
    CHECK(g.neg(g.index_of({1, 1})) == g.index_of({1, 3}));
    CHECK(g.element_order(g.index_of({0, 1})) == 4);
    CHECK(g.element_order(g.index_of({1, 2})) == 2);
    CHECK(g.element_order(g.zero()) == 1);
    CHECK(parse_group("2,4") == g);
    CHECK_THROWS_AS(parse_group("2,x"), InputError);
}

TEST_CASE("all_homs counts match elementary group theory") {
    FiniteAbelianGroup z2({2}), z4({4}), z22({2, 2});
    CHECK(all_homs(z2, z4).size() == 2);  // images of the generator: elements of order dividing 2
    CHECK(all_homs(z4, z2).size() == 2);
    CHECK(all_homs(z22, z2).size() == 4);
    CHECK(all_homs(z4, z4).size() == 4);
    CHECK(all_homs(z22, z4).size() == 4);
    // composition sanity on every composable pair
    for (const GroupHom& f : all_homs(z2, z4))
        for (const GroupHom& g : all_homs(z4, z22)) {
            GroupHom gf = compose(g, f);
            for (std::size_t a = 0; a < z2.size(); ++a) CHECK(gf.apply(a) == g.apply(f.apply(a)));
        }
}

TEST_CASE("group Hopf algebra tensors come from the group table") {
    FieldSpec f = FieldSpec::prime(7);
    FiniteAbelianGroup g({3});
    HopfPtr h = group_hopf(f, g);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
            Vec prod = h->multiply_basis(a, b);
            Vec expect = zero_vec(f, 3);
            expect[g.add(a, b)] = Scalar::one(f);
            CHECK(prod == expect);
        }
    // Delta(g) = g (x) g
    for (std::size_t a = 0; a < 3; ++a) {
        REQUIRE(h->comul_of(a).size() == 1);
        CHECK(h->comul_of(a)[0].j == a);
        CHECK(h->comul_of(a)[0].k == a);
    }
    CHECK(h->metadata().origin == "group:3");
}

namespace {

// Independent model of D1's algebra: F_3 + F_9 + F_9 with F_9 = F_3[w]/(w^2+1),
// w realized as the 2x2 matrix [[0,-1],[1,0]]. Basis order (a, b1, b2, c1, c2)
// with (b1, b2) = (1, w) in the first F_9 and (c1, c2) = (1, w) in the second.
struct ModelElt {
    // each summand as coordinates over its own basis
    std::array<long long, 1> s0{};
    std::array<long long, 2> s1{}, s2{};
};

ModelElt model_basis(std::size_t i) {
    ModelElt e;
    if (i == 0) e.s0 = {1};
    else if (i == 1) e.s1 = {1, 0};
    else if (i == 2) e.s1 = {0, 1};
    else if (i == 3) e.s2 = {1, 0};
    else e.s2 = {0, 1};
    return e;
}

std::array<long long, 2> f9_mul(const std::array<long long, 2>& x, const std::array<long long, 2>& y) {
    // (x0 + x1 w)(y0 + y1 w) with w^2 = -1
    return {(x[0] * y[0] - x[1] * y[1]) % 3, (x[0] * y[1] + x[1] * y[0]) % 3};
}

ModelElt model_mul(const ModelElt& x, const ModelElt& y) {
    ModelElt r;
    r.s0 = {(x.s0[0] * y.s0[0]) % 3};
    r.s1 = f9_mul(x.s1, y.s1);
    r.s2 = f9_mul(x.s2, y.s2);
    return r;
}

Vec model_to_vec(const FieldSpec& f, const ModelElt& e) {
    return {Scalar::of(f, e.s0[0]), Scalar::of(f, e.s1[0]), Scalar::of(f, e.s1[1]),
            Scalar::of(f, e.s2[0]), Scalar::of(f, e.s2[1])};
}

} // namespace

TEST_CASE("D1 multiplication agrees with the direct-sum matrix model") {
    HopfPtr d1 = appendix_d1();
    const FieldSpec& f = d1->field();
    REQUIRE(d1->dim() == 5);
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j)
            CHECK(d1->multiply_basis(i, j) ==
                  model_to_vec(f, model_mul(model_basis(i), model_basis(j))));
    // the unit is the sum of the three summand units: a + b1 + c1
    ModelElt one;
    one.s0 = {1};
    one.s1 = {1, 0};
    one.s2 = {1, 0};
    CHECK(d1->unit() == model_to_vec(f, one));
    // and the model unit really is neutral
    for (std::size_t i = 0; i < 5; ++i) {
        Vec v = zero_vec(f, 5);
        v[i] = Scalar::one(f);
        CHECK(d1->multiply(model_to_vec(f, one), v) == v);
    }
}

TEST_CASE("D1 structure facts") {
    HopfPtr d1 = appendix_d1();
    const FieldSpec& f = d1->field();
    CHECK(f == FieldSpec::prime(3));
    CHECK(verify_hopf(*d1).all_pass());
    // unit = a + b1 + c1, counit = dual of a
    Vec unit_expect = {Scalar::of(f, 1), Scalar::of(f, 1), Scalar::of(f, 0), Scalar::of(f, 1),
                       Scalar::of(f, 0)};
    CHECK(d1->unit() == unit_expect);
    Vec counit_expect = {Scalar::of(f, 1), Scalar::of(f, 0), Scalar::of(f, 0), Scalar::of(f, 0),
                         Scalar::of(f, 0)};
    CHECK(d1->counit() == counit_expect);
    // antipode is diag(1, 1, -1, 1, -1)
    Matrix s_expect(f, 5, 5);
    long long diag[5] = {1, 1, -1, 1, -1};
    for (int i = 0; i < 5; ++i) s_expect.at(i, i) = Scalar::of(f, diag[i]);
    CHECK(d1->antipode() == s_expect);
    // spot-check comultiplication coefficients: Delta(a) has a(x)a with 1 and
    // b1(x)b1 with 2; Delta(b1) has b1(x)c1 with 2 and b2(x)c2 with 1
    auto comul_coeff = [&](std::size_t i, std::size_t j, std::size_t k) {
        for (const TensorEntry& e : d1->comul_of(i))
            if (e.j == j && e.k == k) return e.c;
        return Scalar::zero(f);
    };
    CHECK(comul_coeff(0, 0, 0) == Scalar::of(f, 1));
    CHECK(comul_coeff(0, 1, 1) == Scalar::of(f, 2));
    CHECK(comul_coeff(1, 1, 3) == Scalar::of(f, 2));
    CHECK(comul_coeff(1, 2, 4) == Scalar::of(f, 1));
    CHECK(comul_coeff(4, 1, 2) == Scalar::of(f, 1));
    CHECK(comul_coeff(4, 2, 3) == Scalar::of(f, 2));
    // integral sigma = a, cointegral = -delta_a + delta_b1 + delta_c1
    IntegralResult in = integral(d1);
    REQUIRE(in.normalized_integral.has_value());
    Vec sigma = {Scalar::of(f, 1), Scalar::of(f, 0), Scalar::of(f, 0), Scalar::of(f, 0),
                 Scalar::of(f, 0)};
    CHECK(*in.normalized_integral == sigma);
    IntegralResult co = cointegral(d1);
    REQUIRE(co.normalized_integral.has_value());
    Vec cosigma = {Scalar::of(f, -1), Scalar::of(f, 1), Scalar::of(f, 0), Scalar::of(f, 1),
                   Scalar::of(f, 0)};
    CHECK(*co.normalized_integral == cosigma);
    // GE(D1) = {eta}, GE(D1 dual) = {eps}
    CHECK(group_likes(d1).size() == 1);
    CHECK(group_likes(d1)[0] == d1->unit());
    CHECK(group_likes(dual(d1)).size() == 1);
    CHECK(classify_triviality(d1) == TrivialityClass::Nontrivial);
}

TEST_CASE("D2 is transported, isomorphic, and not equal to D1") {
    HopfPtr d1 = appendix_d1();
    HopfPtr d2 = appendix_d2();
    CHECK(verify_hopf(*d2).all_pass());
    CHECK_FALSE(d2->same_tensors(*d1));
    Matrix p = d1_d2_swap();
    HopfMorphism iso{d2, d1, p};
    CHECK(verify_morphism(iso).all_pass());
    CHECK(invertible(p));
    // same invariants
    CHECK(group_likes(d2).size() == 1);
    CHECK(integral(d2).semisimple);
    CHECK(cointegral(d2).semisimple);
    CHECK(classify_triviality(d2) == TrivialityClass::Nontrivial);
}

TEST_CASE("D-pair of kZ/5 over F_3: dim 25, 5 group-likes on both sides, bisemisimple") {
    HopfPtr h = group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({5}));
    HopfPtr d = d_pair(h);
    CHECK(d->dim() == 25);
    CHECK(group_likes(d).size() == 5);
    CHECK(group_likes(dual(d)).size() == 5);
    CHECK(integral(d).semisimple);
    CHECK(cointegral(d).semisimple);
    CHECK(classify_triviality(d) == TrivialityClass::Nontrivial);
}

TEST_CASE("D-pair metadata agrees with enumeration at a checkable size") {
    HopfPtr h = group_hopf(FieldSpec::prime(3), FiniteAbelianGroup({2}));
    HopfPtr d = d_pair(h); // dim 4
    auto fast = group_likes(d);
    HopfPtr stripped = std::make_shared<const HopfPresentation>(
        d->field(), d->dim(), d->mul(), d->unit(), d->comul(), d->counit(), d->antipode());
    CHECK(fast == group_likes(stripped));
}

TEST_CASE("group homs lift back from their Hopf morphisms") {
    std::vector<FiniteAbelianGroup> groups = {FiniteAbelianGroup({2}), FiniteAbelianGroup({4}),
                                              FiniteAbelianGroup({2, 2})};
    for (auto field : {FieldSpec::prime(3), FieldSpec::prime(5)})
        for (const auto& src : groups)
            for (const auto& tgt : groups)
                for (const GroupHom& phi : all_homs(src, tgt)) {
                    HopfMorphism f = group_hom_to_morphism(phi, field);
                    CHECK(verify_morphism(f).all_pass());
                    CHECK(lift_to_group_hom(f) == phi);
                }
}

TEST_CASE("functor respects composition") {
    FieldSpec field = FieldSpec::prime(3);
    FiniteAbelianGroup z4({4}), z22({2, 2});
    for (const GroupHom& phi : all_homs(z4, z22))
        for (const GroupHom& psi : all_homs(z22, z4)) {
            HopfMorphism lhs = group_hom_to_morphism(compose(psi, phi), field);
            HopfMorphism rhs =
                compose(group_hom_to_morphism(psi, field), group_hom_to_morphism(phi, field));
            CHECK(lhs.matrix == rhs.matrix);
        }
}

TEST_CASE("lift rejects morphisms that are not induced by group maps") {
    HopfPtr d1 = appendix_d1();
    CHECK_THROWS(lift_to_group_hom(identity_morphism(d1)));
}
