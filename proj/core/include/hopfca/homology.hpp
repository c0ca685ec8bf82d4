#pragma once

#include <optional>
#include <string>

#include "hopfca/actions.hpp"
#include "hopfca/chains.hpp"
#include "hopfca/constructors.hpp"

namespace hopfca {

/// A finite CW complex given by cell counts per dimension and integer
/// incidence matrices M_q of shape n_{q-1} x n_q.
struct CWComplexData {
    std::vector<std::size_t> cells; // n_0 .. n_d
    std::vector<IntMat> boundary;   // boundary[q-1] = M_q
    std::string name;

    std::size_t top_dim() const { return cells.empty() ? 0 : cells.size() - 1; }
    /// Shape and M M = 0 checks; throws InputError on failure.
    void validate() const;
};

/// pt, S1, S2, S2-big (tetrahedron), RP1, RP2, T2, D2; throws InputError on
/// unknown names.
CWComplexData builtin_space(const std::string& name);

/// Kept cell indices per dimension, naming a subcomplex.
using SubcomplexSpec = std::vector<std::vector<std::size_t>>;

/// Throws InputError unless sub names a subcomplex of kw (indices valid,
/// boundaries of kept cells supported on kept cells).
void validate_subcomplex(const CWComplexData& kw, const SubcomplexSpec& sub);
/// The subcomplex K' itself, as CW data.
CWComplexData sub_cw(const CWComplexData& kw, const SubcomplexSpec& sub);
/// The relative model K/K': kw with the subcomplex cells deleted.
CWComplexData relative_cw(const CWComplexData& kw, const SubcomplexSpec& sub);

/// C_q = h^(x)n_q with boundaries through the additive matrix functor.
HopfChainComplex cellular_chain(const CWComplexData& kw, const HopfPtr& h);
/// The same complex with F_p coefficients.
FpChainComplex cw_to_fp_chain(const CWComplexData& kw, std::uint64_t p);

/// Homology at one degree, with the certificates needed to build induced and
/// connecting morphisms.
struct HomologyCert {
    long long degree = 0;
    HopfPtr chain_object;  // C_q
    SubHopf cycles;        // hopf_kernel(d_q)
    HopfMorphism factored; // d_{q+1} factored through the cycles
    QuotientHopf coker;    // quotient of the cycles by the boundary ideal

    const HopfPtr& homology() const { return coker.quotient; }
};

/// H_q of a Hopf chain complex; out-of-range degrees give the unit Hopf
/// algebra (the zero object).
HomologyCert homology_at(const HopfChainComplex& c, long long q);

struct DegreeSummary {
    std::size_t degree = 0;
    HopfPtr algebra;
    std::size_t dim = 0;
    std::optional<std::size_t> ge, ge_dual; // unset when enumeration is infeasible
    bool semisimple = false, cosemisimple = false;
    TrivialityClass cls = TrivialityClass::Unknown;
};

struct HomologyResult {
    std::vector<DegreeSummary> degrees;
};

DegreeSummary summarize(std::size_t degree, const HopfPtr& h);
HomologyResult homology_all(const HopfChainComplex& c);
HomologyResult homology_all(const CWComplexData& kw, const HopfPtr& h,
                            const std::optional<SubcomplexSpec>& sub = std::nullopt);

/// Induce H(f) from a degreewise morphism f : C_q -> C'_q commuting with the
/// boundaries, between certified homology presentations.
HopfMorphism induced_on_homology(const HopfMorphism& f, const HomologyCert& src,
                                 const HomologyCert& tgt);

/// The connecting morphism H_{q+1}(K, K') -> H_q(K') of the pair, built from
/// the biproduct splitting C(K) = C(K') (x) C(K, K').
HopfMorphism connecting_morphism(const CWComplexData& kw, const SubcomplexSpec& sub,
                                 const HopfPtr& h, long long q);

struct LesSpot {
    std::string description;
    bool exact = false;
};

struct LesReport {
    std::vector<LesSpot> spots;
    bool all_exact() const;
};

/// Assemble the long exact sequence of the pair and run the exactness check
/// at every spot.
LesReport verify_les(const CWComplexData& kw, const SubcomplexSpec& sub, const HopfPtr& h);

/// Classical cellular homology dimensions over F_p.
std::vector<std::size_t> classical_homology_fp(const CWComplexData& kw, std::uint64_t p);

/// Check H_q(kw; k Z/p) against the group Hopf algebra of the classical
/// homology: dim = p^{d_q} and |GE| = p^{d_q} per degree.
CheckReport compare_with_group_functor(const CWComplexData& kw, std::uint64_t p,
                                       const FieldSpec& field);

/// The extraordinary fixture: degree-q space C_q + C_{q-shift} with
/// block-diagonal boundary.
FpChainComplex periodicized_chain(const CWComplexData& kw, std::uint64_t p, std::size_t shift = 2);

/// On-demand certificate that the deletion model of the relative chain agrees
/// degreewise with the categorical cokernel of the inclusion.
CheckReport certify_relative_model(const CWComplexData& kw, const SubcomplexSpec& sub,
                                   const HopfPtr& h);

struct ExpComparison {
    HopfMorphism comparison; // (A, alpha)^{H_q(C)} -> H_q((A, alpha)^C)
    bool invertible = false;
};

/// The canonical comparison morphism witnessing exactness of the exponential
/// functor, built from representative-cycle matrices.
ExpComparison exp_compare_at(const ActionSpec& spec, const FpChainComplex& c, std::size_t q);

} // namespace hopfca
