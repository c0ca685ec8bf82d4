#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfca/linalg.hpp"

namespace hopfca {

struct TensorEntry {
    std::size_t i = 0, j = 0, k = 0;
    Scalar c;
};

/// Coordinate-list structure tensor, kept sorted by (i, j, k).
using SparseTensor = std::vector<TensorEntry>;

void sort_tensor(SparseTensor& t);

struct HopfMetadata {
    std::optional<std::vector<Vec>> known_group_likes;
    std::optional<std::vector<Vec>> known_dual_group_likes;
    std::string origin;
};

class HopfPresentation;
using HopfPtr = std::shared_ptr<const HopfPresentation>;

/// A finite-dimensional Hopf algebra given by structure-constant tensors on a
/// chosen basis: mul[i][j][k] with e_i e_j = sum_k mul_ijk e_k, comul[i][j][k]
/// with Delta(e_i) = sum mul_ijk e_j (x) e_k, the unit vector, the counit
/// covector and the antipode matrix.
class HopfPresentation {
public:
    HopfPresentation(FieldSpec field, std::size_t dim, SparseTensor mul, Vec unit,
                     SparseTensor comul, Vec counit, Matrix antipode,
                     std::vector<std::string> basis_names = {}, HopfMetadata metadata = {});

    const FieldSpec& field() const { return field_; }
    std::size_t dim() const { return dim_; }
    const SparseTensor& mul() const { return mul_; }
    const Vec& unit() const { return unit_; }
    const SparseTensor& comul() const { return comul_; }
    const Vec& counit() const { return counit_; }
    const Matrix& antipode() const { return antipode_; }
    const std::vector<std::string>& basis_names() const { return basis_names_; }
    const HopfMetadata& metadata() const { return metadata_; }
    HopfMetadata& metadata() { return metadata_; }

    /// Product of two coefficient vectors.
    Vec multiply(const Vec& x, const Vec& y) const;
    /// Product of two basis elements, as a dense vector.
    Vec multiply_basis(std::size_t i, std::size_t j) const;
    /// Delta applied to a vector; result indexed by j * dim + k.
    Vec comultiply(const Vec& x) const;
    /// Entries (j, k, c) of Delta(e_i).
    const std::vector<TensorEntry>& comul_of(std::size_t i) const;
    /// Entries (k, c) of e_i e_j.
    const std::vector<std::pair<std::size_t, Scalar>>& mul_of(std::size_t i, std::size_t j) const;
    Scalar counit_apply(const Vec& x) const;

    bool verified() const { return verified_; }
    void mark_verified() const { verified_ = true; }

    /// Structural equality of all tensors (same basis convention).
    bool same_tensors(const HopfPresentation& o) const;

private:
    FieldSpec field_;
    std::size_t dim_;
    SparseTensor mul_, comul_;
    Vec unit_, counit_;
    Matrix antipode_;
    std::vector<std::string> basis_names_;
    HopfMetadata metadata_;
    mutable bool verified_ = false;

    // indexed views
    std::vector<std::vector<TensorEntry>> comul_by_i_;
    std::vector<std::vector<std::pair<std::size_t, Scalar>>> mul_by_ij_;
};

/// The one-dimensional Hopf algebra k (unit and zero object of the category).
HopfPtr unit_hopf(const FieldSpec& f);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // first failing basis index, when failing
};

struct CheckReport {
    std::vector<Check> checks;
    bool all_pass() const;
    std::string summary() const;
};

/// The eleven Hopf axiom checks, evaluated exactly on basis elements.
CheckReport verify_hopf(const HopfPresentation& h);
/// Run verify_hopf unless the verified flag is already set; throw MathError on failure.
void require_verified(const HopfPtr& h);

struct HopfMorphism {
    HopfPtr source, target;
    Matrix matrix; // target.dim x source.dim

    Vec apply(const Vec& v) const { return matrix * v; }
};

CheckReport verify_morphism(const HopfMorphism& f);
void require_verified(const HopfMorphism& f);

HopfMorphism identity_morphism(const HopfPtr& h);
/// eta o eps: the trivial morphism (zero of the convolution group).
HopfMorphism trivial_morphism(const HopfPtr& source, const HopfPtr& target);
HopfMorphism antipode_morphism(const HopfPtr& h);
bool is_trivial_morphism(const HopfMorphism& f);

HopfPtr dual(const HopfPtr& h);
HopfPtr tensor(const HopfPtr& a, const HopfPtr& b);

/// Convolution mul_B o (f (x) g) o Delta_A, computed column by column.
HopfMorphism convolution(const HopfMorphism& f, const HopfMorphism& g);
HopfMorphism compose(const HopfMorphism& f, const HopfMorphism& g);

/// The map [n]: image of n under the ring map Z -> End(h).
HopfMorphism int_power(const HopfPtr& h, long long n);

/// All nonzero v with Delta(v) = v (x) v, sorted lexicographically.
/// Uses known_group_likes metadata when present, else exhaustive enumeration.
std::vector<Vec> group_likes(const HopfPtr& h, std::uint64_t budget = 10'000'000);

struct IntegralResult {
    Subspace integral_space;
    std::optional<Vec> normalized_integral;
    bool semisimple = false;
};

IntegralResult integral(const HopfPtr& h);
IntegralResult cointegral(const HopfPtr& h);

enum class TrivialityClass { GroupHopf, FunctionHopf, Nontrivial, Unknown };
std::string to_string(TrivialityClass c);

TrivialityClass classify_triviality(const HopfPtr& h, std::uint64_t budget = 10'000'000);

/// Conjugate all structure tensors by an invertible matrix p; p then defines a
/// Hopf isomorphism from the new presentation to h.
HopfPtr transport_structure(const HopfPtr& h, const Matrix& p);

} // namespace hopfca
