#include "hopfca/chains.hpp"

#include "hopfca/errors.hpp"

namespace hopfca {

Matrix FpChainComplex::d(std::size_t q) const {
    if (q >= 1 && q <= top() && q - 1 < boundary.size()) return boundary[q - 1];
    std::size_t r = (q >= 1 && q - 1 < dims.size()) ? dims[q - 1] : 0;
    std::size_t c = q < dims.size() ? dims[q] : 0;
    return Matrix(field, r, c);
}

void FpChainComplex::validate() const {
    if (field.kind != FieldSpec::Kind::Prime) throw InputError("FpChainComplex requires a prime field");
    if (boundary.size() + 1 != dims.size() && !(dims.size() <= 1 && boundary.empty()))
        throw InputError("FpChainComplex: need one boundary matrix per positive degree");
    for (std::size_t q = 1; q < dims.size(); ++q) {
        const Matrix& m = boundary[q - 1];
        if (m.rows() != dims[q - 1] || m.cols() != dims[q])
            throw InputError("FpChainComplex: boundary " + std::to_string(q) + " has wrong shape");
    }
    for (std::size_t q = 2; q < dims.size(); ++q)
        if (!(boundary[q - 2] * boundary[q - 1]).is_zero())
            throw InputError("FpChainComplex: d d != 0 at degree " + std::to_string(q));
}

HopfPtr HopfChainComplex::object_at(long long q) const {
    if (q >= 0 && static_cast<std::size_t>(q) < objects.size()) return objects[q];
    if (objects.empty()) throw InputError("empty chain complex");
    return unit_hopf(objects.front()->field());
}

HopfMorphism HopfChainComplex::boundary_at(long long q) const {
    if (q >= 1 && static_cast<std::size_t>(q) <= top()) return boundaries[q - 1];
    return trivial_morphism(object_at(q), object_at(q - 1));
}

void HopfChainComplex::validate() const {
    if (objects.empty()) throw InputError("empty chain complex");
    if (boundaries.size() + 1 != objects.size() && !(objects.size() == 1 && boundaries.empty()))
        throw MathError("HopfChainComplex: need one boundary per positive degree");
    for (std::size_t q = 1; q < objects.size(); ++q) {
        const HopfMorphism& d = boundaries[q - 1];
        if (d.source.get() != objects[q].get() || d.target.get() != objects[q - 1].get())
            throw MathError("HopfChainComplex: boundary endpoints do not match objects");
    }
    for (std::size_t q = 2; q < objects.size(); ++q)
        if (!is_trivial_morphism(compose(boundaries[q - 2], boundaries[q - 1])))
            throw MathError("HopfChainComplex: d d != trivial at degree " + std::to_string(q));
}

FpHomologyData fp_homology_at(const FpChainComplex& c, std::size_t q) {
    FpHomologyData out;
    if (q >= c.dims.size()) {
        out.cycles = Subspace::zero(c.field, 0);
        out.boundaries = Subspace::zero(c.field, 0);
        out.representatives = Matrix(c.field, 0, 0);
        return out;
    }
    out.cycles = kernel_basis(c.d(q));
    out.boundaries = image_basis(c.d(q + 1));
    // express boundaries in cycle coordinates and quotient there
    std::vector<Vec> bz;
    for (std::size_t r = 0; r < out.boundaries.dim(); ++r) {
        auto coords = out.cycles.coordinates(out.boundaries.basis.row(r));
        if (!coords) throw MathError("boundary not contained in cycles");
        bz.push_back(*coords);
    }
    Subspace bsub = Subspace::from_spanning(c.field, out.cycles.dim(), bz);
    QuotientMaps qm = quotient_with_section(bsub);
    out.dim = out.cycles.dim() - bsub.dim();
    // representative for quotient basis vector j: section into cycle coords, then into the ambient
    out.representatives = out.cycles.basis.transpose() * qm.section;
    return out;
}

std::vector<std::size_t> fp_homology_dims(const FpChainComplex& c) {
    std::vector<std::size_t> out;
    for (std::size_t q = 0; q < c.dims.size(); ++q) out.push_back(fp_homology_at(c, q).dim);
    return out;
}

} // namespace hopfca
