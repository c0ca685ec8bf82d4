#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopfca/errors.hpp"

namespace hopfca {

using BigInt = boost::multiprecision::cpp_int;

/// Deterministic primality test for the allowed modulus range (p < 2^31).
bool is_prime_u64(std::uint64_t n);

/// Ground field: a prime field F_p or the rationals Q.
struct FieldSpec {
    enum class Kind { Prime, Rational };

    Kind kind = Kind::Rational;
    std::uint64_t p = 0; // modulus, prime kind only

    static FieldSpec prime(std::uint64_t p);
    static FieldSpec rational();

    bool is_prime_field() const { return kind == Kind::Prime; }
    bool operator==(const FieldSpec&) const = default;
    std::string str() const;
};

/// Exact field element. Prime residues live in [0, p); rationals are kept in
/// lowest terms with positive denominator.
class Scalar {
public:
    Scalar() = default; // rational zero

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar of(const FieldSpec& f, long long v);
    static Scalar of_big(const FieldSpec& f, const BigInt& v);
    static Scalar fraction(const BigInt& num, const BigInt& den);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /// Total order used only for canonical sorting of outputs.
    int cmp(const Scalar& o) const;

    std::uint64_t residue() const { return r_; }
    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    std::string str() const;

private:
    FieldSpec field_;
    std::uint64_t r_ = 0;    // prime kind
    BigInt num_{0}, den_{1}; // rational kind

    void normalize();
    void require_same(const Scalar& o) const;
};

} // namespace hopfca
