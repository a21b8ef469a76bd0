#pragma once

// Fans and cones in a lattice N = Z^n and their combinatorial invariants:
// faces, smoothness, class group and Cox grading, irrelevant ideal,
// Q-Gorenstein and Fano detection, weighted projective spaces and the
// ray-adjacency graphs used by the local cohomology computations.

#include "torrigid/codimension.hpp"
#include "torrigid/graph.hpp"
#include "torrigid/index_set.hpp"
#include "torrigid/matrix.hpp"
#include "torrigid/monomial_ideal.hpp"
#include "torrigid/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torrigid::toric {

/// A pointed rational polyhedral cone given by its primitive ray generators.
///
/// Construction normalises rays to primitive vectors (recording a warning),
/// rejects duplicate rays, non-pointed cones and generators that are not
/// extremal rays.
class Cone {
public:
    Cone(std::size_t ambient_rank, std::vector<IntVector> rays);
    static Cone from_longs(const std::vector<std::vector<long>>& rays);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    std::size_t dimension() const { return dimension_; }
    bool is_full_dimensional() const { return dimension_ == ambient_rank_; }
    IndexSet all() const { return IndexSet::range(ray_count()); }

    /// m x n matrix whose rows are the rays.
    IntMatrix ray_matrix() const;
    std::vector<IntVector> rays_of(IndexSet subset) const;

    const std::vector<std::string>& warnings() const { return warnings_; }

private:
    struct Unchecked {};
    Cone(std::size_t ambient_rank, std::vector<IntVector> rays, Unchecked);
    friend class Fan;

    std::size_t ambient_rank_ = 0;
    std::vector<IntVector> rays_;
    std::size_t dimension_ = 0;
    std::vector<std::string> warnings_;
};

/// Dimension of the linear span of the given rays.
std::size_t span_dimension(const std::vector<IntVector>& rays, std::size_t ambient_rank);

/// Whether `subset` is a face: some rational u vanishes on it and is
/// positive on every other ray.
bool is_face(const Cone& cone, IndexSet subset);

/// All faces (including the empty face and the cone), sorted by dimension
/// and then lexicographically.
std::vector<IndexSet> faces(const Cone& cone);
std::vector<IndexSet> faces_of_dimension(const Cone& cone, std::size_t dim);

bool rays_simplicial(const std::vector<IntVector>& rays);
/// Rays form part of a lattice basis.
bool rays_smooth(const std::vector<IntVector>& rays);

bool is_simplicial(const Cone& cone);
bool is_smooth(const Cone& cone);

Codimension singular_codim(const Cone& cone);
Codimension simplicial_codim(const Cone& cone);

/// Raw fan description as read from a file (0-based ray indices).
struct RawFan {
    std::vector<std::vector<long>> rays;
    std::vector<std::vector<int>> max_cones;
    std::string name;
};

/// A fan given by rays and maximal cones (as ray-index sets).
///
/// Pairwise intersections of cones are not verified; the maximal cones are
/// trusted as given beyond per-cone validity.
class Fan {
public:
    Fan(std::size_t ambient_rank, std::vector<IntVector> rays, std::vector<IndexSet> max_cones, std::string name = {});

    static Fan of_cone(const Cone& cone);
    /// All faces of the cone except the cone itself.
    static Fan proper_faces(const Cone& cone);
    /// The subfan of smooth faces of the cone.
    static Fan smooth_faces(const Cone& cone);

    std::size_t ambient_rank() const { return ambient_rank_; }
    const std::vector<IntVector>& rays() const { return rays_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    const std::vector<IndexSet>& max_cones() const { return max_cones_; }
    const std::string& name() const { return name_; }

    Cone cone(IndexSet rays) const;
    /// Every cone of the fan (faces of maximal cones), sorted by dimension then lexicographically.
    const std::vector<IndexSet>& cones() const { return cones_; }
    std::size_t cone_dimension(IndexSet c) const;
    IntMatrix ray_matrix() const;

    /// A single maximal cone containing every ray.
    bool is_affine() const { return max_cones_.size() == 1 && max_cones_.front() == IndexSet::range(ray_count()); }

    std::vector<std::string> warnings;

private:
    std::vector<IntVector> rays_of_indices(IndexSet subset) const;

    std::size_t ambient_rank_ = 0;
    std::vector<IntVector> rays_;
    std::vector<IndexSet> max_cones_;
    std::vector<IndexSet> cones_;
    std::string name_;
};

Fan validate_fan(const RawFan& raw);

Codimension singular_codim(const Fan& fan);
Codimension simplicial_codim(const Fan& fan);

/// Class group data of the Cox ring.
struct CoxData {
    std::size_t m = 0;
    std::size_t n = 0;
    std::size_t r = 0;
    IntMatrix grading;     ///< r x m matrix A; column j is the free degree of x_j
    IntMatrix ray_matrix;  ///< m x n, rows are the rays
    std::vector<Integer> torsion; ///< invariant factors > 1

    IntVector column_degree(std::size_t j) const { return grading.col(j); }

    /// Whether p is the fine degree of a character, p = (<u, v_j>)_j. This is
    /// exactly Cl-degree zero, torsion included.
    bool is_degree_zero(const IntVector& p) const;
    bool same_class(const IntVector& a, const IntVector& b) const;
};

CoxData class_group(const Fan& fan);
CoxData class_group(const Cone& cone);

/// B(Σ): generated by prod_{i not in σ} x_i over the cones σ.
SquarefreeMonomialIdeal irrelevant_ideal(const Fan& fan);

struct QGorensteinCertificate {
    IntVector u0; ///< primitive covector
    Integer g;    ///< common value <u0, v_i>
};

std::optional<QGorensteinCertificate> q_gorenstein(const Cone& cone);
bool gorenstein(const Cone& cone);

bool is_complete(const Fan& fan);

/// Complete, and every maximal cone is the cone over a facet of conv(rays)
/// whose vertices are exactly its rays.
bool is_fano(const Fan& fan);

/// Graph on the rays with an edge when two rays lie in a common cone.
Graph graph_gamma(const Fan& fan);
/// Graph on the rays with an edge when two rays span a 2-dimensional face.
Graph graph_gamma_f(const Cone& cone);

// --- weighted projective spaces -------------------------------------------

struct WeightSystem {
    std::vector<Integer> weights; ///< q_0, ..., q_n, all positive

    std::size_t dimension() const { return weights.size() - 1; }
    static WeightSystem from_longs(const std::vector<long>& q);
    std::string to_string() const;
};

/// No n of the n+1 weights share a common factor.
bool wps_well_formed(const WeightSystem& q);
/// Isomorphic well formed weight system.
WeightSystem wps_normalize(const WeightSystem& q);
/// J' = intersection over primes p | lcm(q) of (x_i : p does not divide q_i).
SquarefreeMonomialIdeal wps_singular_ideal(const WeightSystem& q);
/// No n-1 of the weights share a prime factor.
bool wps_rigidity_condition(const WeightSystem& q);
/// A set of n-1 weight indices sharing a prime factor, if one exists.
std::optional<IndexSet> wps_rigidity_counterexample(const WeightSystem& q);

} // namespace torrigid::toric
