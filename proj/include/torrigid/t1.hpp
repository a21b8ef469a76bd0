#pragma once

// The tangent space T^1 of an affine toric variety X = Spec S_0, assembled
// from graded local cohomology of the Cox ring S:
//
//     0 -> Der_{S_0}(S, H^2_B(S))_0 -> T^1_X -> Hom(Q, H^3_B(S))_0 -> 0
//
// when codim Sing X >= 3, and T^1_X = Der_{S_0}(S, H^2_B(S))_0 when X is
// simplicial. B is the irrelevant ideal of the subfan of smooth faces.

#include "torrigid/localcoh.hpp"
#include "torrigid/rigidity.hpp"
#include "torrigid/toric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torrigid::t1 {

/// Presentation  ⊕_j S(-deg x_j) --(a_ij x_j)--> S^r --> Q --> 0.
struct QPresentation {
    std::size_t r = 0;
    std::size_t m = 0;
    IntMatrix a; ///< entry (i, j) stands for a_ij * x_j

    IntVector column_degree(std::size_t j) const { return a.col(j); }
    /// "(x1, -x2, x3, -x4)", one parenthesised row per line.
    std::string to_string() const;
};

QPresentation q_presentation(const toric::CoxData& cox);

enum class Completeness {
    Guaranteed, ///< every contributing degree is accounted for
    Bounded,    ///< sum over the search window only (a lower bound)
};

std::string to_string(Completeness c);

struct Contribution {
    std::string part;  ///< "der" or "homq"
    IntVector degree;  ///< fine degree p = (<u, v_j>)_j
    std::size_t dimension = 0;
};

struct PartResult {
    std::size_t dimension = 0;
    Completeness completeness = Completeness::Bounded;
    long bound = 0;
    std::string method;
    std::vector<Contribution> contributions;
};

/// 2 * max |ray coordinate|, or the value of TORRIGID_BOUND when set.
long default_bound(const toric::Cone& cone);

/// Hom(Q, H^3_B(S))_0 summed over p = (<u, v_j>) with u in [-bound, bound]^n.
PartResult hom_q_h3(const toric::Cone& cone, long bound);

enum class DerMode { SufficientVanishing, Exact };

/// Der_{S_0}(S, H^2_B(S))_0. SufficientVanishing returns 0 backed by the
/// connectivity certificate and throws UnsupportedError when that criterion
/// does not certify vanishing. Exact sums kernel dimensions over
/// u in [-bound, bound]^n.
PartResult der_part(const toric::Cone& cone, DerMode mode, long bound);

/// The connectivity certificate as a Der-part result, if it certifies vanishing.
std::optional<PartResult> der_part_vanishing(const toric::Cone& cone, long bound);

enum class T1Mode { Simplicial, CodimGe3, Unsupported };

std::string to_string(T1Mode m);

struct T1Report {
    T1Mode mode = T1Mode::Unsupported;
    std::optional<PartResult> der;
    std::optional<PartResult> homq;
    std::optional<std::size_t> total;
    Completeness completeness = Completeness::Bounded;
    long bound = 0;
    std::vector<rigidity::Hypothesis> hypotheses;
    std::vector<std::string> warnings;
};

T1Report t1_affine(const toric::Cone& cone, std::optional<long> bound = std::nullopt);

struct PolygonReport {
    std::size_t vertices = 0;
    std::size_t dimension = 0;       ///< m - 3
    bool minor_condition = false;    ///< all r x r minors of A nonzero
    T1Report lifted;                 ///< t1_affine on the cone over the polygon
    std::vector<rigidity::Hypothesis> hypotheses;
};

/// Cone over a lattice polygon at height one. The edges must be primitive
/// (isolated Gorenstein singularity).
toric::Cone polygon_cone(const std::vector<IntVector>& vertices);
PolygonReport t1_polygon(const std::vector<IntVector>& vertices);

// --- Calabi-Yau hypersurfaces ------------------------------------------------

struct Term {
    Rational coefficient;
    IntVector exponent;
};

struct CoxPolynomial {
    std::vector<Term> terms;

    std::size_t variables() const { return terms.empty() ? 0 : terms.front().exponent.size(); }
    /// Partial derivative with respect to x_i.
    CoxPolynomial derivative(std::size_t i) const;
};

struct CYReport {
    std::optional<std::size_t> dimension;
    std::size_t monomials = 0; ///< monomials of anticanonical degree
    std::size_t rank = 0;      ///< rank of the Jacobian ideal in that degree
    std::vector<rigidity::Hypothesis> hypotheses;
    std::string failure;       ///< first failed hypothesis, if any
};

/// dim (S / J_f)_beta with beta = sum of the toric divisors, after checking
/// the hypotheses under which it equals T^1 of the hypersurface.
CYReport cy_t1(const toric::Fan& fan, const CoxPolynomial& f);

/// The linear algebra alone: #monomials of degree beta minus the rank of
/// the span of x^b * df/dx_i of that degree. Requires a complete fan.
CYReport jacobian_piece(const toric::Fan& fan, const CoxPolynomial& f);

} // namespace torrigid::t1
