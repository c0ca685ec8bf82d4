#pragma once

#include <cstdint>
#include <optional>

#include "hopfca/abelian.hpp"
#include "hopfca/chains.hpp"

namespace hopfca {

/// A ring action of F_p on a bicommutative Hopf algebra A: the (unique, if it
/// exists) ring homomorphism F_p -> End(A), stored as the table
/// alpha(0) .. alpha(p-1).
struct ActionSpec {
    HopfPtr base;
    std::uint64_t prime = 0;
    std::vector<HopfMorphism> table;
};

/// The canonical F_p-action alpha(n) = [n]; throws MathError when no ring
/// homomorphism F_p -> End(A) exists (i.e. [p] != eta o eps).
ActionSpec canonical_action(const HopfPtr& h, std::uint64_t p);

/// Check all p^2 additive and p^2 multiplicative ring-homomorphism laws as
/// exact tensor identities.
CheckReport verify_action(const ActionSpec& spec);

struct EndRingReport {
    std::vector<HopfMorphism> elements;
    std::vector<std::vector<std::size_t>> add_table; // convolution
    std::vector<std::vector<std::size_t>> mul_table; // composition
    std::optional<std::string> ring_id;              // "F_q" when a finite field
    std::size_t zero_index = 0;                      // eta o eps
    std::size_t one_index = 0;                       // id
    std::vector<std::size_t> generators;             // greedy algebra generating set
};

/// Enumerate all Hopf endomorphisms of h over a prime field by choosing images
/// of a greedy minimal algebra generating set; throws CapError when the
/// candidate count p^(dim * generators) exceeds the budget.
EndRingReport enumerate_end_ring(const HopfPtr& h, std::uint64_t budget = 1'000'000);

/// (A, alpha)^(F_p^n) = A^(x)n.
HopfPtr exp_object(const ActionSpec& spec, std::size_t n);
/// The exponential functor on an r x c matrix over F_p: the convolution over
/// (i, j) of iota_i o alpha(m_ij) o pi_j, a morphism A^(x)c -> A^(x)r.
HopfMorphism exp_morphism(const ActionSpec& spec, const IntMat& m);

/// Apply the exponential functor degreewise to an F_p chain complex; asserts
/// the image is again a chain complex (d d = trivial).
HopfChainComplex apply_exp_to_chain(const ActionSpec& spec, const FpChainComplex& c);

} // namespace hopfca
