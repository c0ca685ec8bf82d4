#pragma once

#include "hopfca/hopf.hpp"

namespace hopfca {

/// A bounded chain complex of finite-dimensional F_p vector spaces,
/// C_0 .. C_top with boundary d_q : C_q -> C_{q-1}.
struct FpChainComplex {
    FieldSpec field; // prime
    std::vector<std::size_t> dims;
    std::vector<Matrix> boundary; // boundary[q-1] = d_q, shape dims[q-1] x dims[q]

    std::size_t top() const { return dims.empty() ? 0 : dims.size() - 1; }
    /// d_q for any q; zero-shaped matrix outside [1, top].
    Matrix d(std::size_t q) const;
    /// Shape and d(q-1) d(q) = 0 checks; throws InputError on failure.
    void validate() const;
};

/// A bounded chain complex in the category of bicommutative Hopf algebras.
struct HopfChainComplex {
    std::vector<HopfPtr> objects;          // C_0 .. C_top
    std::vector<HopfMorphism> boundaries;  // boundaries[q-1] = d_q : C_q -> C_{q-1}

    std::size_t top() const { return objects.empty() ? 0 : objects.size() - 1; }
    /// C_q, or the unit Hopf algebra (zero object) outside [0, top].
    HopfPtr object_at(long long q) const;
    /// d_q, the trivial morphism at the ends.
    HopfMorphism boundary_at(long long q) const;
    /// d d = trivial and endpoint matching; throws MathError on failure.
    void validate() const;
};

struct FpHomologyData {
    std::size_t dim = 0;    // dim H_q
    Subspace cycles;        // Z_q = ker d_q
    Subspace boundaries;    // B_q = im d_{q+1}
    Matrix representatives; // dims[q] x dim, columns are representative cycles
};

/// Homology of an F_p chain complex at degree q, with representative cycles.
FpHomologyData fp_homology_at(const FpChainComplex& c, std::size_t q);
/// dim H_q for q = 0 .. top.
std::vector<std::size_t> fp_homology_dims(const FpChainComplex& c);

} // namespace hopfca
