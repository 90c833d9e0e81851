#pragma once

#include "tccert/chain.hpp"
#include "tccert/ring.hpp"

#include <map>
#include <memory>
#include <vector>

namespace tccert {

/// Ordered simplicial complex: facets with strictly increasing vertex
/// indices, full face lattice derived and sorted lexicographically per
/// dimension. The global vertex order fixes the Alexander-Whitney product.
class SimplicialComplex {
public:
    SimplicialComplex(int n_vertices, std::vector<std::vector<int>> facets);

    int n_vertices() const { return n_vertices_; }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }

    const std::vector<std::vector<int>>& faces(int dim) const;
    std::size_t face_count(int dim) const;
    /// Index of an ordered vertex list in the degree-(len-1) face list;
    /// -1 if absent.
    long long face_index(const std::vector<int>& verts) const;

private:
    int n_vertices_;
    std::vector<std::vector<std::vector<int>>> faces_;           // per dimension, lex sorted
    std::vector<std::map<std::vector<int>, std::size_t>> index_; // per dimension
};

/// Cochain with coefficients indexed by the k-simplices of a fixed complex.
struct Cochain {
    int degree;
    FieldSpec field;
    std::vector<Scalar> coeffs;
};

/// Standard simplicial boundary with alternating signs.
ChainComplexData to_chain_complex(const SimplicialComplex& sc);

/// Alexander-Whitney product: (a ∪ b)(σ) = a(front p-face) · b(back q-face).
Cochain cup(const SimplicialComplex& sc, const Cochain& a, const Cochain& b);

/// Coboundary of a cochain (transpose boundary convention).
Cochain coboundary(const SimplicialComplex& sc, const Cochain& a);

/// Cohomology ring via cupping representatives and projecting.
std::shared_ptr<const GradedAlgebra> cohomology_ring(const SimplicialComplex& sc,
                                                     const FieldSpec& f);

/// Bundled triangulations: point, circle, torus, rp2, genus2, sphere.
SimplicialComplex bundled_triangulation(const std::string& name);

}  // namespace tccert
