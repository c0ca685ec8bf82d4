#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hopfca {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input data (bad JSON, dimension mismatch, non-prime modulus).
struct InputError : Error {
    using Error::Error;
};

/// A mathematical assertion failed: axiom violation, closure failure,
/// inconsistent system, missing action. Never the result of resource limits.
struct MathError : Error {
    using Error::Error;
};

/// A configured resource cap was exceeded (dimension cap, enumeration budget).
struct CapError : Error {
    using Error::Error;
};

/// Dimension cap for tensor-power constructions. Defaults to 200,
/// overridable via the HOPF_CAP environment variable or set_dimension_cap.
std::size_t dimension_cap();
void set_dimension_cap(std::size_t cap);

} // namespace hopfca
