#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hopfca/linalg.hpp"

using namespace hopfca;

namespace {

Matrix random_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t r, std::size_t c) {
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(f.p) - 1);
    Matrix m(f, r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar::of(f, dist(rng));
    return m;
}

} // namespace

TEST_CASE("prime scalars: field laws and canonical residues") {
    FieldSpec f = FieldSpec::prime(7);
    Scalar a = Scalar::of(f, 12); // 5 mod 7
    CHECK(a.residue() == 5);
    CHECK(Scalar::of(f, -1).residue() == 6);
    CHECK((a * a.inverse()).is_one());
    CHECK((a - a).is_zero());
    CHECK(Scalar::of(f, 3) + Scalar::of(f, 5) == Scalar::of(f, 1));
    CHECK_THROWS_AS(Scalar::zero(f).inverse(), MathError);
}

TEST_CASE("prime field spec rejects composite moduli") {
    CHECK_THROWS_AS(FieldSpec::prime(6), InputError);
    CHECK_THROWS_AS(FieldSpec::prime(1), InputError);
    CHECK(is_prime_u64(2147483647)); // 2^31 - 1
    CHECK_FALSE(is_prime_u64(2147483647ULL * 3ULL));
}

TEST_CASE("rational scalars stay in lowest terms with positive denominator") {
    Scalar h = Scalar::fraction(BigInt(2), BigInt(-4));
    CHECK(h.num() == -1);
    CHECK(h.den() == 2);
    Scalar s = Scalar::fraction(BigInt(1), BigInt(3)) + Scalar::fraction(BigInt(1), BigInt(6));
    CHECK(s == Scalar::fraction(BigInt(1), BigInt(2)));
    CHECK(s.str() == "1/2");
    // exactness at a scale where floating point would have drifted long ago
    FieldSpec q = FieldSpec::rational();
    Scalar acc = Scalar::zero(q);
    for (int i = 1; i <= 30; ++i) acc += Scalar::fraction(BigInt(1), BigInt(i));
    Scalar back = acc;
    for (int i = 1; i <= 30; ++i) back -= Scalar::fraction(BigInt(1), BigInt(i));
    CHECK(back.is_zero());
}

TEST_CASE("rref produces canonical pivots") {
    FieldSpec f = FieldSpec::prime(5);
    Matrix m(f, 3, 4);
    // rows: (1,2,0,1), (2,4,1,0), (3,6,1,1)  -> rank 2
    long long rows[3][4] = {{1, 2, 0, 1}, {2, 4, 1, 0}, {3, 6, 1, 1}};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 4; ++c) m.at(r, c) = Scalar::of(f, rows[r][c]);
    RrefResult rr = rref(m);
    CHECK(rr.pivots == std::vector<std::size_t>{0, 2});
    CHECK(rr.reduced.rows() == 2);
    CHECK(rr.reduced.at(0, 0).is_one());
    CHECK(rr.reduced.at(0, 2).is_zero());
    CHECK(rr.reduced.at(1, 2).is_one());
}

TEST_CASE("rank-nullity and solve on random matrices") {
    std::mt19937 rng(20240817);
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) {
        FieldSpec f = FieldSpec::prime(p);
        for (int trial = 0; trial < 20; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m = random_matrix(rng, f, r, c);
            Subspace ker = kernel_basis(m);
            Subspace img = image_basis(m);
            CHECK(ker.dim() + img.dim() == c);
            // every kernel vector really dies
            for (std::size_t i = 0; i < ker.dim(); ++i) CHECK(is_zero_vec(m * ker.basis.row(i)));
            // m x = m v is always consistent and solved exactly
            Vec v(c, Scalar::zero(f));
            for (auto& s : v) s = Scalar::of(f, static_cast<long long>(rng() % p));
            Vec b = m * v;
            auto x = solve(m, b);
            REQUIRE(x.has_value());
            CHECK(m * *x == b);
        }
    }
}

TEST_CASE("solve reports inconsistent systems") {
    FieldSpec f = FieldSpec::prime(3);
    Matrix m(f, 2, 1);
    m.at(0, 0) = Scalar::of(f, 1);
    m.at(1, 0) = Scalar::of(f, 1);
    Vec b = {Scalar::of(f, 1), Scalar::of(f, 2)};
    CHECK_FALSE(solve(m, b).has_value());
}

TEST_CASE("inverse over Q and over F_p") {
    std::mt19937 rng(7);
    FieldSpec q = FieldSpec::rational();
    Matrix m(q, 2, 2);
    m.at(0, 0) = Scalar::fraction(BigInt(1), BigInt(2));
    m.at(0, 1) = Scalar::of(q, 1);
    m.at(1, 0) = Scalar::of(q, 3);
    m.at(1, 1) = Scalar::fraction(BigInt(1), BigInt(5));
    REQUIRE(invertible(m));
    CHECK(m * inverse(m) == Matrix::identity(q, 2));

    FieldSpec f = FieldSpec::prime(11);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix a = random_matrix(rng, f, 4, 4);
        if (!invertible(a)) continue;
        CHECK(a * inverse(a) == Matrix::identity(f, 4));
        CHECK(inverse(a) * a == Matrix::identity(f, 4));
    }
}

TEST_CASE("subspace membership, coordinates, sum and intersection") {
    FieldSpec f = FieldSpec::prime(5);
    Vec e1 = {Scalar::of(f, 1), Scalar::zero(f), Scalar::zero(f)};
    Vec v = {Scalar::of(f, 1), Scalar::of(f, 2), Scalar::zero(f)};
    Subspace s = Subspace::from_spanning(f, 3, {e1, v});
    CHECK(s.dim() == 2);
    Vec w = {Scalar::of(f, 3), Scalar::of(f, 4), Scalar::zero(f)};
    CHECK(s.contains(w));
    auto coords = s.coordinates(w);
    REQUIRE(coords.has_value());
    // reconstruct from the rref basis
    Vec rec = zero_vec(f, 3);
    for (std::size_t i = 0; i < s.dim(); ++i) rec = add(rec, scale((*coords)[i], s.basis.row(i)));
    CHECK(rec == w);

    Vec e3 = {Scalar::zero(f), Scalar::zero(f), Scalar::of(f, 1)};
    Subspace t = Subspace::from_spanning(f, 3, {v, e3});
    CHECK(s.sum(t).dim() == 3);
    Subspace meet = s.intersect(t);
    CHECK(meet.dim() == 1);
    CHECK(meet.contains(v));
}

TEST_CASE("quotient projection and section are mutually inverse on the quotient") {
    std::mt19937 rng(99);
    FieldSpec f = FieldSpec::prime(7);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m = random_matrix(rng, f, 3, 6);
        Subspace s = Subspace::from_spanning(
            f, 6, {m.row(0), m.row(1), m.row(2)});
        QuotientMaps qm = quotient_with_section(s);
        std::size_t qdim = 6 - s.dim();
        CHECK(qm.projection.rows() == qdim);
        CHECK(qm.projection * qm.section == Matrix::identity(f, qdim));
        // the projection kills exactly s
        for (std::size_t i = 0; i < s.dim(); ++i)
            CHECK(is_zero_vec(qm.projection * s.basis.row(i)));
        CHECK(kernel_basis(qm.projection) == s);
    }
}

TEST_CASE("integer matrices reduce into any field") {
    IntMat m(2, 2);
    m.at(0, 0) = 5;
    m.at(0, 1) = -1;
    m.at(1, 1) = 7;
    FieldSpec f = FieldSpec::prime(5);
    Matrix r = m.over(f);
    CHECK(r.at(0, 0).is_zero());
    CHECK(r.at(0, 1) == Scalar::of(f, 4));
    CHECK(r.at(1, 1) == Scalar::of(f, 2));
    CHECK((IntMat::identity(2) * m) == m);
}

TEST_CASE("kron is first-factor major") {
    FieldSpec f = FieldSpec::prime(7);
    Vec a = {Scalar::of(f, 1), Scalar::of(f, 2)};
    Vec b = {Scalar::of(f, 3), Scalar::of(f, 4)};
    Vec k = kron(a, b);
    REQUIRE(k.size() == 4);
    CHECK(k[0] == Scalar::of(f, 3));
    CHECK(k[1] == Scalar::of(f, 4));
    CHECK(k[2] == Scalar::of(f, 6));
    CHECK(k[3] == Scalar::of(f, 8));
}
