#pragma once

#include <functional>

#include "hopfca/hopf.hpp"

namespace hopfca {

/// A sub Hopf algebra: a subspace closed under mul, comul, antipode and
/// containing the unit, with its restricted presentation and inclusion.
struct SubHopf {
    HopfPtr ambient;
    Subspace subspace;
    HopfPtr restricted;
    HopfMorphism inclusion; // restricted -> ambient
};

/// A quotient Hopf algebra by a Hopf ideal, with projection and a linear
/// (non-Hopf) section.
struct QuotientHopf {
    HopfPtr ambient;
    Subspace ideal;
    HopfPtr quotient;
    HopfMorphism projection; // ambient -> quotient
    Matrix section;          // quotient -> ambient, projection * section = id
};

/// Restrict the ambient structure to a subspace; throws MathError when the
/// subspace is not closed.
SubHopf sub_presentation(const HopfPtr& ambient, const Subspace& s);
/// Quotient the ambient by a Hopf ideal; throws MathError when the ideal is
/// not a Hopf ideal.
QuotientHopf quotient_presentation(const HopfPtr& ambient, const Subspace& ideal);

struct Biproduct {
    HopfPtr power;
    std::vector<HopfMorphism> injections;  // iota_j : h -> h^(x)n
    std::vector<HopfMorphism> projections; // pi_i : h^(x)n -> h
};

/// n-fold tensor power with biproduct injections/projections; enforces the
/// dimension cap.
Biproduct biproduct(const HopfPtr& h, std::size_t n);

/// The additive functor on matrices: an integer r x c matrix becomes a Hopf
/// morphism h^(x)c -> h^(x)r via convolution of iota_i [m_ij] pi_j.
HopfMorphism matrix_to_morphism(const HopfPtr& h, const IntMat& m);

/// Shared machinery for matrix_to_morphism and the exponential functor:
/// entry_map supplies the endomorphism used for entry value v.
HopfMorphism morphism_from_int_matrix(const Biproduct& target_power, const Biproduct& source_power,
                                      const IntMat& m,
                                      const std::function<HopfMorphism(long long)>& entry_map);

SubHopf hopf_kernel(const HopfMorphism& f);
QuotientHopf hopf_cokernel(const HopfMorphism& f);
/// Abelian-category image: kernel of the cokernel projection.
SubHopf hopf_image(const HopfMorphism& f);

/// Factor g through a kernel inclusion: returns gbar with inclusion o gbar = g.
HopfMorphism factor_through_kernel(const HopfMorphism& g, const SubHopf& ker);
/// Descend f through a cokernel projection: returns fbar with fbar o projection = f.
HopfMorphism descend_through_cokernel(const HopfMorphism& f, const QuotientHopf& q);

/// Is the pair (f: X->Y, g: Y->Z) exact at Y?
bool is_exact_at(const HopfMorphism& f, const HopfMorphism& g);

} // namespace hopfca
