#include "torrigid/lattice.hpp"

#include <algorithm>
#include <map>

namespace torrigid::lattice {

namespace detail {
std::optional<std::pair<IntVector, std::vector<IntVector>>> integer_solutions(const IntMatrix& m, const IntVector& b);
}

void AffineSystem::add_at_most(IntVector a, const Integer& c)
{
    for (auto& x : a)
        x = -x;
    inequalities.push_back({std::move(a), -c});
}

bool AffineSystem::satisfied_by(const IntVector& u) const
{
    for (const auto& row : equalities)
        if (dot(row.coeffs, u) != row.rhs)
            return false;
    for (const auto& row : inequalities)
        if (dot(row.coeffs, u) < row.rhs)
            return false;
    return true;
}

void AffineSystem::check_dimensions() const
{
    for (const auto* rows : {&equalities, &inequalities})
        for (const auto& row : *rows)
            if (row.coeffs.size() != variables)
                throw InputError("affine system: constraint has " + std::to_string(row.coeffs.size()) +
                                 " coefficients, expected " + std::to_string(variables));
}

namespace {

/// Fourier-Motzkin system of constraints a.t >= b with primitive integer a.
class FmSystem {
public:
    explicit FmSystem(std::size_t variables) : n_(variables) {}

    std::size_t variables() const { return n_; }
    bool contradictory() const { return contradictory_; }

    void add(IntVector a, Rational b)
    {
        Integer g = content(a);
        if (g == 0) {
            if (b > 0)
                contradictory_ = true;
            return;
        }
        if (g != 1) {
            for (auto& x : a)
                x /= g;
            b /= g;
        }
        auto [it, inserted] = rows_.emplace(std::move(a), b);
        if (!inserted && it->second < b)
            it->second = b;
    }

    FmSystem eliminate(std::size_t k) const
    {
        FmSystem out(n_);
        out.contradictory_ = contradictory_;
        std::vector<const std::pair<const IntVector, Rational>*> pos, neg;
        for (const auto& row : rows_) {
            int s = sgn(row.first[k]);
            if (s > 0)
                pos.push_back(&row);
            else if (s < 0)
                neg.push_back(&row);
            else
                out.add(row.first, row.second);
        }
        for (const auto* p : pos)
            for (const auto* q : neg) {
                Integer fp = -q->first[k];
                Integer fq = p->first[k];
                IntVector a(n_);
                for (std::size_t j = 0; j < n_; ++j)
                    a[j] = fp * p->first[j] + fq * q->first[j];
                out.add(std::move(a), fp * p->second + fq * q->second);
            }
        return out;
    }

    FmSystem substitute(std::size_t k, const Integer& value) const
    {
        FmSystem out(n_);
        out.contradictory_ = contradictory_;
        for (const auto& [a, b] : rows_) {
            IntVector c = a;
            Rational rhs = b - Rational(a[k] * value);
            c[k] = 0;
            out.add(std::move(c), rhs);
        }
        return out;
    }

    /// Eliminate every variable except `keep` (cheapest pair count first).
    FmSystem project_onto(std::size_t keep) const
    {
        FmSystem cur = *this;
        std::vector<bool> done(n_, false);
        done[keep] = true;
        for (std::size_t step = 0; step + 1 < n_ && !cur.contradictory_; ++step) {
            std::size_t best = n_;
            std::size_t best_cost = 0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (done[j])
                    continue;
                std::size_t p = 0, q = 0;
                for (const auto& row : cur.rows_) {
                    int s = sgn(row.first[j]);
                    p += s > 0;
                    q += s < 0;
                }
                if (best == n_ || p * q < best_cost) {
                    best = j;
                    best_cost = p * q;
                }
            }
            done[best] = true;
            cur = cur.eliminate(best);
        }
        return cur;
    }

    bool feasible() const
    {
        if (n_ == 0)
            return !contradictory_;
        FmSystem p = project_onto(0).eliminate(0);
        return !p.contradictory_;
    }

    struct Interval {
        bool empty = false;
        std::optional<Rational> lower;
        std::optional<Rational> upper;
    };

    Interval bounds(std::size_t k) const
    {
        FmSystem p = project_onto(k);
        Interval iv;
        if (p.contradictory_) {
            iv.empty = true;
            return iv;
        }
        for (const auto& [a, b] : p.rows_) {
            Rational v = b / Rational(a[k]);
            if (a[k] > 0) {
                if (!iv.lower || *iv.lower < v)
                    iv.lower = v;
            } else if (!iv.upper || v < *iv.upper) {
                iv.upper = v;
            }
        }
        if (iv.lower && iv.upper && *iv.upper < *iv.lower)
            iv.empty = true;
        return iv;
    }

private:
    std::size_t n_;
    std::map<IntVector, Rational> rows_;
    bool contradictory_ = false;
};

/// Problem in the free lattice coordinates t, with the map back to u.
struct Parametrized {
    IntVector base;              // u0
    std::vector<IntVector> dirs; // columns of K
    FmSystem system{0};

    IntVector lift(const IntVector& t) const
    {
        IntVector u = base;
        for (std::size_t k = 0; k < dirs.size(); ++k)
            for (std::size_t i = 0; i < u.size(); ++i)
                u[i] += t[k] * dirs[k][i];
        return u;
    }
};

std::optional<Parametrized> parametrize(const AffineSystem& sys)
{
    sys.check_dimensions();
    const std::size_t n = sys.variables;
    Parametrized p;
    if (sys.equalities.empty()) {
        p.base = IntVector(n);
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            p.dirs.push_back(std::move(e));
        }
    } else {
        IntMatrix e(sys.equalities.size(), n);
        IntVector rhs(sys.equalities.size());
        for (std::size_t r = 0; r < sys.equalities.size(); ++r) {
            for (std::size_t j = 0; j < n; ++j)
                e(r, j) = sys.equalities[r].coeffs[j];
            rhs[r] = sys.equalities[r].rhs;
        }
        auto sol = detail::integer_solutions(e, rhs);
        if (!sol)
            return std::nullopt;
        p.base = std::move(sol->first);
        p.dirs = std::move(sol->second);
    }
    p.system = FmSystem(p.dirs.size());
    for (const auto& row : sys.inequalities) {
        IntVector a(p.dirs.size());
        for (std::size_t k = 0; k < p.dirs.size(); ++k)
            a[k] = dot(row.coeffs, p.dirs[k]);
        p.system.add(std::move(a), Rational(row.rhs - dot(row.coeffs, p.base)));
    }
    return p;
}

/// Depth-first enumeration of integer points, fixing coordinates in order
/// and recomputing exact projections at every level.
class Enumerator {
public:
    Enumerator(std::optional<long> box, bool stop_at_first) : box_(box), stop_at_first_(stop_at_first) {}

    bool truncated() const { return truncated_; }
    const std::vector<IntVector>& points() const { return points_; }

    void run(const FmSystem& sys)
    {
        IntVector t(sys.variables());
        recurse(sys, 0, t);
    }

private:
    bool recurse(const FmSystem& sys, std::size_t depth, IntVector& t)
    {
        if (sys.contradictory())
            return false;
        if (depth == sys.variables()) {
            points_.push_back(t);
            return stop_at_first_;
        }
        auto iv = sys.bounds(depth);
        if (iv.empty)
            return false;
        Integer lo, hi;
        bool has_lo = iv.lower.has_value(), has_hi = iv.upper.has_value();
        if (has_lo)
            lo = ceil(*iv.lower);
        if (has_hi)
            hi = floor(*iv.upper);
        if (!has_lo || !has_hi) {
            if (!box_)
                throw UnsupportedError("lattice point enumeration: polyhedron is unbounded");
            truncated_ = true;
            if (!has_lo)
                lo = -*box_;
            if (!has_hi)
                hi = *box_;
        }
        if (hi < lo)
            return false;
        for (const Integer& v : search_order(lo, hi)) {
            t[depth] = v;
            if (recurse(sys.substitute(depth, v), depth + 1, t))
                return true;
        }
        t[depth] = 0;
        return false;
    }

    /// Values of [lo, hi] ordered by distance from 0, negative first on ties.
    static std::vector<Integer> search_order(const Integer& lo, const Integer& hi)
    {
        std::vector<Integer> out;
        Integer start = lo > 0 ? lo : (hi < 0 ? hi : Integer(0));
        out.push_back(start);
        Integer down = start - 1, up = start + 1;
        while (down >= lo || up <= hi) {
            if (down >= lo) {
                out.push_back(down);
                --down;
            }
            if (up <= hi) {
                out.push_back(up);
                ++up;
            }
        }
        return out;
    }

    std::optional<long> box_;
    bool stop_at_first_;
    bool truncated_ = false;
    std::vector<IntVector> points_;
};

} // namespace

Feasibility integer_feasible(const AffineSystem& system, long search_bound)
{
    if (search_bound < 1)
        throw InputError("integer_feasible: search bound must be positive");
    auto param = parametrize(system);
    if (!param)
        return Infeasible{Infeasible::Reason::LatticeObstruction};
    if (!param->system.feasible())
        return Infeasible{Infeasible::Reason::RationalRelaxationEmpty};
    Enumerator e(search_bound, true);
    e.run(param->system);
    if (!e.points().empty()) {
        IntVector u = param->lift(e.points().front());
        if (!system.satisfied_by(u))
            throw Error("integer_feasible: witness failed re-evaluation");
        return Witness{std::move(u)};
    }
    if (e.truncated())
        return BoundExceeded{search_bound};
    return Infeasible{Infeasible::Reason::ExhaustiveEnumeration};
}

std::vector<IntVector> lattice_points(const AffineSystem& system)
{
    auto param = parametrize(system);
    if (!param || !param->system.feasible())
        return {};
    Enumerator e(std::nullopt, false);
    e.run(param->system);
    std::vector<IntVector> out;
    out.reserve(e.points().size());
    for (const auto& t : e.points())
        out.push_back(param->lift(t));
    std::sort(out.begin(), out.end());
    return out;
}

bool rational_feasible(const AffineSystem& system)
{
    system.check_dimensions();
    const std::size_t n = system.variables;
    RatVector base(n);
    std::vector<IntVector> dirs;
    if (system.equalities.empty()) {
        for (std::size_t i = 0; i < n; ++i) {
            IntVector e(n);
            e[i] = 1;
            dirs.push_back(std::move(e));
        }
    } else {
        RatMatrix e(system.equalities.size(), n);
        RatVector rhs(system.equalities.size());
        for (std::size_t r = 0; r < system.equalities.size(); ++r) {
            for (std::size_t j = 0; j < n; ++j)
                e(r, j) = system.equalities[r].coeffs[j];
            rhs[r] = system.equalities[r].rhs;
        }
        auto x = solve(e, rhs);
        if (!x)
            return false;
        base = std::move(*x);
        for (const auto& v : nullspace(e))
            dirs.push_back(clear_denominators(v));
    }
    FmSystem fm(dirs.size());
    for (const auto& row : system.inequalities) {
        IntVector a(dirs.size());
        for (std::size_t k = 0; k < dirs.size(); ++k)
            a[k] = dot(row.coeffs, dirs[k]);
        fm.add(std::move(a), Rational(row.rhs) - dot(base, row.coeffs));
    }
    return fm.feasible();
}

bool in_cone(const std::vector<IntVector>& generators, const IntVector& x)
{
    // Caratheodory: x lies in the cone iff it lies in the cone over some
    // basis of span(generators) chosen among the generators.
    const std::size_t n = x.size();
    if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; }))
        return true;
    if (generators.empty())
        return false;
    const std::size_t d = rank(to_rational(matrix_from_rows(generators)));
    const std::size_t g = generators.size();
    std::vector<std::size_t> idx(d);
    for (std::size_t i = 0; i < d; ++i)
        idx[i] = i;
    for (;;) {
        RatMatrix m(n, d);
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t r = 0; r < n; ++r)
                m(r, c) = generators[idx[c]][r];
        if (rank(m) == d) {
            auto lambda = solve(m, to_rational(x));
            if (!lambda)
                return false; // x outside the span
            if (std::all_of(lambda->begin(), lambda->end(), [](const Rational& l) { return l >= 0; }))
                return true;
        }
        // next combination
        std::size_t i = d;
        while (i > 0 && idx[i - 1] == g - d + i - 1)
            --i;
        if (i == 0)
            return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < d; ++j)
            idx[j] = idx[j - 1] + 1;
    }
}

bool is_pointed(const std::vector<IntVector>& generators, std::size_t ambient_dim)
{
    AffineSystem sys;
    sys.variables = ambient_dim;
    for (const auto& g : generators) {
        if (std::all_of(g.begin(), g.end(), [](const Integer& v) { return v == 0; }))
            continue;
        sys.add_at_least(g, 1);
    }
    return rational_feasible(sys);
}

} // namespace torrigid::lattice
