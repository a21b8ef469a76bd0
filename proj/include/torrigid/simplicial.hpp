#pragma once

#include "torrigid/graph.hpp"
#include "torrigid/index_set.hpp"
#include "torrigid/matrix.hpp"
#include "torrigid/monomial_ideal.hpp"
#include "torrigid/numeric.hpp"

#include <string>
#include <vector>

namespace torrigid {

/// Abstract simplicial complex on {0, ..., n-1}, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They differ in reduced cohomology: the void complex is acyclic
/// while the irrelevant complex has H^{-1} = Q.
class SimplicialComplex {
public:
    SimplicialComplex() = default;
    /// Facets are reduced to the inclusion-maximal ones. An empty list gives
    /// the void complex.
    SimplicialComplex(int vertices, std::vector<IndexSet> facets);

    static SimplicialComplex void_complex(int vertices) { return {vertices, {}}; }
    static SimplicialComplex irrelevant(int vertices) { return {vertices, {IndexSet{}}}; }
    static SimplicialComplex simplex(int vertices) { return {vertices, {IndexSet::range(vertices)}}; }

    int vertex_count() const { return vertices_; }
    const std::vector<IndexSet>& facets() const { return facets_; }
    bool is_void() const { return facets_.empty(); }
    int dimension() const; ///< -1 for the irrelevant complex, -2 for the void complex

    bool contains(IndexSet face) const;
    /// Faces with exactly k vertices, sorted.
    std::vector<IndexSet> faces_of_size(int k) const;
    std::vector<IndexSet> all_faces() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;
    std::string to_string(int offset = 1) const;

private:
    int vertices_ = 0;
    std::vector<IndexSet> facets_;
};

/// Coboundary delta: C^k -> C^{k+1}, where C^k has a basis indexed by the
/// faces with k+1 vertices. Rows are indexed by `target`, columns by `source`.
IntMatrix coboundary(const std::vector<IndexSet>& source, const std::vector<IndexSet>& target);

/// dim of reduced cohomology H^k(K; Q) for k >= -1 (zero for other k).
std::size_t reduced_cohomology_dimension(const SimplicialComplex& k, int degree);

/// Dimensions of reduced H^k for k = -1, ..., dim K (index k + 1).
std::vector<std::size_t> reduced_cohomology_dimensions(const SimplicialComplex& k);

/// Cocycle representatives of a basis of reduced H^k.
///
/// Representatives are taken from the reduced echelon basis of ker delta^k;
/// a kernel vector is kept when it is not in the span of the coboundaries and
/// the vectors kept before it. Coordinates are over `faces`.
struct CohomologyBasis {
    int degree = 0;
    std::vector<IndexSet> faces;          ///< faces with degree + 1 vertices
    std::vector<RatVector> representatives;
    RatMatrix coboundaries;               ///< columns span im delta^{k-1}

    std::size_t dimension() const { return representatives.size(); }
    /// Coordinates of the class of a cocycle given over `faces`.
    RatVector coordinates(const RatVector& cocycle) const;
};

CohomologyBasis reduced_cohomology(const SimplicialComplex& k, int degree);

/// F is a face iff the complement of F is not a face of K.
SimplicialComplex alexander_dual(const SimplicialComplex& k);
/// Faces are the cliques of the graph.
SimplicialComplex clique_complex(const Graph& g);
/// Faces are the supports of squarefree monomials outside the ideal.
SimplicialComplex stanley_reisner_complex(const SquarefreeMonomialIdeal& ideal);

} // namespace torrigid
