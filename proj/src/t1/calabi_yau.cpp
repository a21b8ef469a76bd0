#include "torrigid/lattice.hpp"
#include "torrigid/t1.hpp"

#include <algorithm>
#include <map>

namespace torrigid::t1 {

using rigidity::Hypothesis;
using rigidity::Status;
using toric::Fan;

CoxPolynomial CoxPolynomial::derivative(std::size_t i) const
{
    CoxPolynomial d;
    for (const auto& t : terms) {
        if (i >= t.exponent.size())
            throw InputError("variable index out of range");
        if (t.exponent[i] == 0)
            continue;
        Term u = t;
        u.coefficient *= Rational(t.exponent[i]);
        u.exponent[i] -= 1;
        d.terms.push_back(std::move(u));
    }
    return d;
}

namespace {

/// Exponents e + V u >= 0 over all u; finite for complete fans.
std::vector<IntVector> monomials_of_degree(const IntMatrix& v, const IntVector& e)
{
    lattice::AffineSystem sys;
    sys.variables = v.cols();
    for (std::size_t k = 0; k < v.rows(); ++k)
        sys.add_at_least(v.row(k), -e[k]);
    std::vector<IntVector> out;
    for (const auto& u : lattice::lattice_points(sys)) {
        IntVector a = v * u;
        for (std::size_t k = 0; k < a.size(); ++k)
            a[k] += e[k];
        out.push_back(std::move(a));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Status status_of(bool ok)
{
    return ok ? Status::Satisfied : Status::Failed;
}

} // namespace

CYReport jacobian_piece(const Fan& fan, const CoxPolynomial& f)
{
    const auto cox = toric::class_group(fan);
    const std::size_t m = cox.m;
    CYReport rep;

    const auto monomials = monomials_of_degree(cox.ray_matrix, IntVector(m, Integer(1)));
    std::map<IntVector, std::size_t> column;
    for (std::size_t k = 0; k < monomials.size(); ++k)
        column.emplace(monomials[k], k);

    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < m; ++i) {
        CoxPolynomial d = f.derivative(i);
        if (d.terms.empty())
            continue;
        IntVector ei(m, Integer(0));
        ei[i] = 1;
        for (const auto& b : monomials_of_degree(cox.ray_matrix, ei)) {
            RatVector row(monomials.size());
            for (const auto& t : d.terms) {
                IntVector a = t.exponent;
                for (std::size_t k = 0; k < m; ++k)
                    a[k] += b[k];
                auto it = column.find(a);
                if (it == column.end())
                    throw InputError("polynomial is not homogeneous of anticanonical degree");
                row[it->second] += t.coefficient;
            }
            rows.push_back(std::move(row));
        }
    }
    RatMatrix mat(rows.size(), monomials.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < monomials.size(); ++c)
            mat(r, c) = rows[r][c];
    rep.monomials = monomials.size();
    rep.rank = lattice::rank(mat);
    rep.dimension = rep.monomials - rep.rank;
    return rep;
}

CYReport cy_t1(const Fan& fan, const CoxPolynomial& f)
{
    CYReport rep;
    const std::size_t m = fan.ray_count();
    const std::size_t n = fan.ambient_rank();
    auto add = [&](std::string name, bool ok, std::string detail) {
        rep.hypotheses.push_back({std::move(name), status_of(ok), std::move(detail)});
        if (!ok && rep.failure.empty())
            rep.failure = rep.hypotheses.back().name;
    };

    if (f.terms.empty())
        throw InputError("polynomial has no terms");
    for (const auto& t : f.terms) {
        if (t.exponent.size() != m)
            throw InputError("exponent " + torrigid::to_string(t.exponent) + " has length " +
                             std::to_string(t.exponent.size()) + ", expected " + std::to_string(m));
        for (const auto& x : t.exponent)
            if (x < 0)
                throw InputError("negative exponent in " + torrigid::to_string(t.exponent));
        if (t.coefficient == 0)
            throw InputError("zero coefficient");
    }

    const auto simp = toric::simplicial_codim(fan);
    add("simplicial", simp.is_infinite(), "non-simplicial locus codimension " + simp.to_string());
    const bool complete = toric::is_complete(fan);
    add("complete", complete, "");
    const bool fano = complete && toric::is_fano(fan);
    add("Fano", fano, "");

    std::string not_cartier;
    for (IndexSet s : fan.max_cones()) {
        auto rays = fan.cone(s).rays();
        auto u = lattice::solve(to_rational(IntMatrix::from_rows(rays, n)), RatVector(rays.size(), Rational(1)));
        bool integral = u.has_value();
        if (u)
            for (const auto& x : *u)
                integral = integral && x.get_den() == 1;
        if (!integral) {
            not_cartier = s.to_string(1);
            break;
        }
    }
    add("Gorenstein (anticanonical divisor Cartier)", not_cartier.empty(),
        not_cartier.empty() ? "integral u_sigma on every maximal cone" : "fails on cone " + not_cartier);
    add("dim Y >= 4", n >= 4,
        "dim Y = " + std::to_string(n) + "; surfaces are excluded because h^2(O_X) != 0 for K3 surfaces");
    const auto sing = toric::singular_codim(fan);
    add("codim Sing Y >= 4", sing.at_least(4),
        "singular locus codimension " + sing.to_string() +
            "; used as a sufficient stand-in for codim(X meet Sing Y) >= 3 in X");

    std::string off_degree;
    if (complete) {
        const auto cox = toric::class_group(fan);
        for (const auto& t : f.terms) {
            IntVector diff = t.exponent;
            for (auto& x : diff)
                x -= 1;
            if (!cox.is_degree_zero(diff)) {
                off_degree = torrigid::to_string(t.exponent);
                break;
            }
        }
    }
    add("deg f = beta", complete && off_degree.empty(),
        off_degree.empty() ? "all terms of anticanonical degree" : "exponent " + off_degree + " has another degree");

    if (!rep.failure.empty())
        return rep;
    CYReport piece = jacobian_piece(fan, f);
    rep.dimension = piece.dimension;
    rep.monomials = piece.monomials;
    rep.rank = piece.rank;
    return rep;
}

} // namespace torrigid::t1
