#pragma once

// Sufficient criteria for rigidity (T^1 = 0) of toric varieties, each
// returned as a certificate listing the hypotheses that were checked.

#include "torrigid/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torrigid::rigidity {

enum class Verdict { Rigid, DerPartVanishes, ConditionNotSatisfied, Inconclusive };
enum class Status { Satisfied, Failed, Unknown };

std::string to_string(Verdict v);
std::string to_string(Status s);

struct Hypothesis {
    std::string name;
    Status status = Status::Unknown;
    std::string detail;
};

struct RigidityCertificate {
    std::string criterion;
    Verdict verdict = Verdict::Inconclusive;
    std::string reason;
    std::vector<Hypothesis> hypotheses;
    std::optional<long> search_bound;

    /// Counterexample data for ConditionNotSatisfied.
    std::optional<int> ray;              ///< ray i with <u, v_i> = -1
    std::optional<IndexSet> subset;      ///< J (rays) or a set of weight indices
    std::optional<IntVector> witness;    ///< u

    bool all_satisfied() const;
};

/// Which graph the connectivity test runs on.
enum class GammaGraph {
    Faces,        ///< Gamma^f: rays spanning 2-dimensional faces
    SmoothSubfan, ///< Gamma of the subfan of smooth faces (stricter hypothesis, finer graph)
};

/// For every ray i and every J not containing i whose induced graph is
/// disconnected, decides whether some u has <u, v_i> = -1, <u, v_j> <= -1 on J
/// and <u, v_j> >= 0 elsewhere. Requires singular_codim >= 3.
RigidityCertificate der_vanishing_gamma(const toric::Cone& cone, long search_bound,
                                        GammaGraph graph = GammaGraph::Faces);

RigidityCertificate qgorenstein_rigidity(const toric::Cone& cone);
RigidityCertificate quotient_rigidity(const toric::Cone& cone);
RigidityCertificate fano_rigidity(const toric::Fan& fan);
RigidityCertificate wps_rigidity(const toric::WeightSystem& q);

/// Closed half-space {x : <normal, x> >= offset}.
struct Halfspace {
    RatVector normal;
    Rational offset;
};

struct HalfspaceConnectivity {
    bool connected = true;
    /// Components of the induced graph as indices into the input vertex list.
    std::vector<std::vector<std::size_t>> components;
};

/// Induced subgraph of the edge graph of conv(points) on the vertices in the
/// half-space other than points[v]; points[v] must be a vertex on the
/// bounding hyperplane. Dimension at most 3.
HalfspaceConnectivity polytope_halfspace_connectivity(const std::vector<IntVector>& points, std::size_t v,
                                                      const Halfspace& h);

} // namespace torrigid::rigidity
