#pragma once

#include "hopfca/hopf.hpp"

namespace hopfca {

/// Finite abelian group given as a direct sum of cyclic factors Z/d_i.
/// Elements are indexed by mixed-radix tuples, first factor most significant.
struct FiniteAbelianGroup {
    std::vector<std::size_t> cyclic_orders;

    explicit FiniteAbelianGroup(std::vector<std::size_t> orders);

    std::size_t size() const { return size_; }
    std::size_t factors() const { return cyclic_orders.size(); }

    std::vector<std::size_t> tuple_of(std::size_t index) const;
    std::size_t index_of(const std::vector<std::size_t>& tuple) const;

    std::size_t add(std::size_t a, std::size_t b) const;
    std::size_t neg(std::size_t a) const;
    std::size_t zero() const { return 0; }
    /// Index of the i-th generator (the element with 1 in slot i).
    std::size_t generator(std::size_t i) const;
    /// Order of the element with the given index.
    std::size_t element_order(std::size_t a) const;

    std::string element_name(std::size_t index) const;
    bool operator==(const FiniteAbelianGroup&) const = default;

private:
    std::size_t size_ = 1;
};

struct GroupHom {
    FiniteAbelianGroup source, target;
    std::vector<std::size_t> images; // target element per source generator

    GroupHom(FiniteAbelianGroup src, FiniteAbelianGroup tgt, std::vector<std::size_t> imgs);

    std::size_t apply(std::size_t a) const;
    bool operator==(const GroupHom&) const = default;
};

GroupHom compose(const GroupHom& f, const GroupHom& g);
GroupHom identity_hom(const FiniteAbelianGroup& g);
/// All group homomorphisms source -> target, in a deterministic order.
std::vector<GroupHom> all_homs(const FiniteAbelianGroup& source, const FiniteAbelianGroup& target);

/// Group Hopf algebra kG: basis = group elements, Delta(g) = g (x) g.
HopfPtr group_hopf(const FieldSpec& field, const FiniteAbelianGroup& g);
/// Function Hopf algebra k^G: delta functionals, the dual of kG tensor-for-tensor.
HopfPtr function_hopf(const FieldSpec& field, const FiniteAbelianGroup& g);
/// D(A) = A (x) A^dual.
HopfPtr d_pair(const HopfPtr& h);

/// The dimension-5 bisemisimple nontrivial Hopf algebra over F_3 with
/// underlying algebra F_3 + F_9 + F_9, basis (a, b1, b2, c1, c2).
HopfPtr appendix_d1();
/// The same structure transported along the b1<->b2, c1<->c2 swap.
HopfPtr appendix_d2();
/// The swap matrix carrying appendix_d2 onto appendix_d1.
Matrix d1_d2_swap();

HopfMorphism group_hom_to_morphism(const GroupHom& phi, const FieldSpec& field);
/// Read a group homomorphism back off a Hopf morphism between group Hopf
/// algebras; throws MathError when some basis element is not mapped to a
/// single basis element (i.e. the morphism is not induced by a group map).
GroupHom lift_to_group_hom(const HopfMorphism& f);

/// Parse "2,4"-style cyclic order lists.
FiniteAbelianGroup parse_group(const std::string& spec);

} // namespace hopfca
