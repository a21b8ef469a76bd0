#pragma once

// Fine-graded local cohomology H^i_B(S)_p of a polynomial ring S at a
// squarefree monomial ideal B, computed through the simplicial complexes
// T_I with I = negative(p):
//
//     H^i_B(S)_p = reduced H^{i-2}(T_I; Q).
//
// A Cech-complex computation on the generators of B is provided as an
// independent check.

#include "torrigid/monomial_ideal.hpp"
#include "torrigid/simplicial.hpp"
#include "torrigid/toric.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace torrigid::localcoh {

/// {i : p_i <= -1}
IndexSet negative(const IntVector& p);

/// Complex on the generators of B: J is a face iff some i in I divides no
/// generator indexed by J. I = {} gives the void complex.
SimplicialComplex t_complex(const SquarefreeMonomialIdeal& b, IndexSet i);

struct GradedPiece {
    IntVector p;
    int i = 0;
    IndexSet negative;
    SimplicialComplex complex; ///< T_I
    std::shared_ptr<const CohomologyBasis> basis;

    std::size_t dimension() const { return basis ? basis->dimension() : 0; }
};

/// Local cohomology of S at a fixed ideal with the cohomology bases cached by
/// (negative(p), i). Safe to share between threads.
class LocalCohomology {
public:
    explicit LocalCohomology(SquarefreeMonomialIdeal b);

    const SquarefreeMonomialIdeal& ideal() const { return ideal_; }
    int variables() const { return ideal_.variables(); }

    GradedPiece piece(int i, const IntVector& p) const;
    std::size_t dimension(int i, const IntVector& p) const { return piece(i, p).dimension(); }
    /// dim H^i_B(S)_p for i = 0, ..., m.
    std::vector<std::size_t> dimensions(const IntVector& p) const;

    /// Matrix of multiplication by x_j: H^i_p -> H^i_{p+e_j}
    /// (rows: target basis, columns: source basis).
    RatMatrix mult(int i, const IntVector& p, int j) const;
    /// Multiplication by x^c, the composite of single steps taken in
    /// increasing variable order.
    RatMatrix mult_monomial(int i, const IntVector& p, const IntVector& c) const;

private:
    std::shared_ptr<const CohomologyBasis> basis(int i, IndexSet negative) const;
    RatMatrix restriction(int i, IndexSet from, IndexSet to) const;
    void check_degree(int i, const IntVector& p) const;

    SquarefreeMonomialIdeal ideal_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<std::uint64_t, int>, std::shared_ptr<const CohomologyBasis>> bases_;
    mutable std::map<std::tuple<std::uint64_t, std::uint64_t, int>, RatMatrix> restrictions_;
};

/// Uncached single evaluations.
GradedPiece local_coh_piece(const SquarefreeMonomialIdeal& b, int i, const IntVector& p);
RatMatrix mult_map(const SquarefreeMonomialIdeal& b, int i, const IntVector& p, int j);

/// dim H^i_B(S)_p for i = 0, ..., m from the T_I complexes without bases.
std::vector<std::size_t> local_coh_dims(const SquarefreeMonomialIdeal& b, const IntVector& p);

/// Cohomology of the degree-p strand of the Cech complex on the generators.
std::size_t cech_piece(const SquarefreeMonomialIdeal& b, int i, const IntVector& p);
/// cech_piece for i = 0, ..., m.
std::vector<std::size_t> cech_dims(const SquarefreeMonomialIdeal& b, const IntVector& p);

/// Intersection of (x_i, x_j) over the non-edges {i, j} of the ray graph.
/// A complete graph gives the unit ideal (empty intersection).
SquarefreeMonomialIdeal codim2_ideal(const toric::Fan& fan);

/// components(Gamma restricted to negative(p)) - 1, and 0 when negative(p) is empty.
std::size_t h2_via_graph(const toric::Fan& fan, const IntVector& p);

} // namespace torrigid::localcoh
