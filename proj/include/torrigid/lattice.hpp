#pragma once

// Exact integer and rational linear algebra: normal forms, kernels,
// Fourier-Motzkin elimination, integer feasibility, lattice-point
// enumeration and Hilbert bases of rational cones.

#include "torrigid/matrix.hpp"
#include "torrigid/numeric.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace torrigid::lattice {

// ---------------------------------------------------------------------------
// Rational linear algebra
// ---------------------------------------------------------------------------

struct RowEchelon {
    RatMatrix reduced;              ///< reduced row echelon form
    std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

RowEchelon row_reduce(RatMatrix m);

std::size_t rank(const RatMatrix& m);
std::size_t rank(const IntMatrix& m);

/// Rank of a small integer matrix given row-major. Uses fraction-free
/// elimination in machine words and falls back to GMP on overflow.
std::size_t rank_small(std::vector<std::int64_t> entries, std::size_t rows, std::size_t cols);

/// Basis of the right null space {x : m x = 0}, one vector per free column
/// of the reduced echelon form.
std::vector<RatVector> nullspace(const RatMatrix& m);

/// Some solution of m x = b (free variables set to zero), if one exists.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

// ---------------------------------------------------------------------------
// Integer normal forms
// ---------------------------------------------------------------------------

/// U * M * V = D with U, V unimodular and D diagonal with d1 | d2 | ...
struct SmithDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    std::vector<Integer> invariant_factors() const; ///< nonzero diagonal entries
    std::size_t rank() const { return invariant_factors().size(); }
};

SmithDecomposition smith_normal_form(const IntMatrix& m);

/// M * W = H with W unimodular and H in column Hermite normal form: the first
/// `rank` columns are in echelon form with positive pivots, entries left of
/// a pivot reduced into [0, pivot), remaining columns zero.
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix W;
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_rows;
};

HermiteDecomposition column_hermite_form(const IntMatrix& m);

/// Row Hermite normal form with zero rows dropped; generates the same row lattice.
IntMatrix row_hermite_form(const IntMatrix& m);

/// Lattice basis of {a in Z^cols : m a = 0}, canonicalised to row Hermite form.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

/// Whether v lies in the Z-span of the rows of `generators`.
bool in_row_lattice(const IntMatrix& generators, const IntVector& v);

/// Determinant of a square integer matrix.
Integer determinant(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Affine systems and polyhedra
// ---------------------------------------------------------------------------

struct AffineRow {
    IntVector coeffs;
    Integer rhs;
};

/// Equalities <a,u> = c and weak inequalities <a,u> >= c over u in Z^n.
struct AffineSystem {
    std::size_t variables = 0;
    std::vector<AffineRow> equalities;
    std::vector<AffineRow> inequalities;

    void add_equality(IntVector a, Integer c) { equalities.push_back({std::move(a), std::move(c)}); }
    void add_at_least(IntVector a, Integer c) { inequalities.push_back({std::move(a), std::move(c)}); }
    void add_at_most(IntVector a, const Integer& c);

    bool satisfied_by(const IntVector& u) const;
    void check_dimensions() const;
};

struct Witness {
    IntVector point;
};
struct Infeasible {
    enum class Reason { RationalRelaxationEmpty, LatticeObstruction, ExhaustiveEnumeration };
    Reason reason;
};
struct BoundExceeded {
    long bound;
};

using Feasibility = std::variant<Witness, Infeasible, BoundExceeded>;

/// Decide whether the system has an integer solution.
///
/// Equalities are parametrised by a Hermite lattice section u = u0 + K t.
/// The rational relaxation in t is decided by Fourier-Motzkin; bounded
/// coordinates are enumerated exactly, unbounded ones are searched in
/// [-search_bound, search_bound] and an empty search yields BoundExceeded.
Feasibility integer_feasible(const AffineSystem& system, long search_bound);

/// All integer solutions in lexicographic order. Throws UnsupportedError if
/// the solution polyhedron is unbounded.
std::vector<IntVector> lattice_points(const AffineSystem& system);

/// Rational feasibility of the system (no integrality).
bool rational_feasible(const AffineSystem& system);

/// Whether x lies in the cone generated by `generators` (over Q).
bool in_cone(const std::vector<IntVector>& generators, const IntVector& x);

/// Whether the cone contains no line, i.e. some u is positive on every generator.
bool is_pointed(const std::vector<IntVector>& generators, std::size_t ambient_dim);

/// Minimal generating set of the monoid cone(generators) ∩ Z^n, in
/// lexicographic order. Throws UnsupportedError for non-pointed cones.
std::vector<IntVector> hilbert_basis(const std::vector<IntVector>& generators, std::size_t ambient_dim);

} // namespace torrigid::lattice
