#include "hopfca/field.hpp"

#include <cstdlib>

namespace hopfca {

std::size_t& cap_storage() {
    static std::size_t cap = [] {
        if (const char* env = std::getenv("HOPF_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        }
        return std::size_t{200};
    }();
    return cap;
}

std::size_t dimension_cap() { return cap_storage(); }
void set_dimension_cap(std::size_t cap) { cap_storage() = cap; }

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw InputError("prime modulus must be < 2^31");
    if (!is_prime_u64(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    FieldSpec f;
    f.kind = Kind::Prime;
    f.p = p;
    return f;
}

FieldSpec FieldSpec::rational() {
    FieldSpec f;
    f.kind = Kind::Rational;
    f.p = 0;
    return f;
}

std::string FieldSpec::str() const {
    return is_prime_field() ? "F_" + std::to_string(p) : "Q";
}

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    return s;
}

Scalar Scalar::one(const FieldSpec& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field())
        s.r_ = 1 % f.p;
    else
        s.num_ = 1;
    return s;
}

Scalar Scalar::of(const FieldSpec& f, long long v) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field()) {
        long long m = v % static_cast<long long>(f.p);
        if (m < 0) m += static_cast<long long>(f.p);
        s.r_ = static_cast<std::uint64_t>(m);
    } else {
        s.num_ = v;
    }
    return s;
}

Scalar Scalar::of_big(const FieldSpec& f, const BigInt& v) {
    Scalar s;
    s.field_ = f;
    if (f.is_prime_field()) {
        BigInt m = v % f.p;
        if (m < 0) m += f.p;
        s.r_ = m.convert_to<std::uint64_t>();
    } else {
        s.num_ = v;
    }
    return s;
}

Scalar Scalar::fraction(const BigInt& num, const BigInt& den) {
    if (den == 0) throw InputError("zero denominator");
    Scalar s;
    s.field_ = FieldSpec::rational();
    s.num_ = num;
    s.den_ = den;
    s.normalize();
    return s;
}

void Scalar::normalize() {
    if (field_.is_prime_field()) return;
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

void Scalar::require_same(const Scalar& o) const {
    if (!(field_ == o.field_)) throw InputError("scalar field mismatch");
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? r_ == 0 : num_ == 0;
}

bool Scalar::is_one() const {
    if (field_.is_prime_field()) return r_ == 1 % field_.p;
    return num_ == 1 && den_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
    require_same(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field()) {
        s.r_ = (r_ + o.r_) % field_.p;
    } else {
        s.num_ = num_ * o.den_ + o.num_ * den_;
        s.den_ = den_ * o.den_;
        s.normalize();
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    require_same(o);
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field()) {
        s.r_ = (r_ * o.r_) % field_.p; // p < 2^31, no overflow
    } else {
        s.num_ = num_ * o.num_;
        s.den_ = den_ * o.den_;
        s.normalize();
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field()) {
        s.r_ = r_ == 0 ? 0 : field_.p - r_;
    } else {
        s.num_ = -num_;
        s.den_ = den_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw MathError("division by zero");
    Scalar s;
    s.field_ = field_;
    if (field_.is_prime_field()) {
        // extended Euclid
        std::int64_t a = static_cast<std::int64_t>(r_), m = static_cast<std::int64_t>(field_.p);
        std::int64_t x0 = 0, x1 = 1, b = m;
        while (a > 1) {
            std::int64_t q = a / b;
            std::int64_t t = b;
            b = a - q * b;
            a = t;
            t = x0;
            x0 = x1 - q * x0;
            x1 = t;
        }
        if (x1 < 0) x1 += m;
        s.r_ = static_cast<std::uint64_t>(x1);
    } else {
        s.num_ = den_;
        s.den_ = num_;
        s.normalize();
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(field_ == o.field_)) return false;
    if (field_.is_prime_field()) return r_ == o.r_;
    return num_ == o.num_ && den_ == o.den_;
}

int Scalar::cmp(const Scalar& o) const {
    require_same(o);
    if (field_.is_prime_field()) return r_ < o.r_ ? -1 : (r_ > o.r_ ? 1 : 0);
    BigInt l = num_ * o.den_, r = o.num_ * den_;
    return l < r ? -1 : (l > r ? 1 : 0);
}

std::string Scalar::str() const {
    if (field_.is_prime_field()) return std::to_string(r_);
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
}

} // namespace hopfca
