#include "torrigid/toric.hpp"

#include <sstream>

namespace torrigid::toric {

namespace {

std::vector<Integer> prime_factors(Integer x)
{
    std::vector<Integer> out;
    for (Integer p = 2; p * p <= x; ++p) {
        if (x % p != 0)
            continue;
        out.push_back(p);
        while (x % p == 0)
            x /= p;
    }
    if (x > 1)
        out.push_back(x);
    return out;
}

Integer gcd_except(const std::vector<Integer>& w, std::size_t skip)
{
    Integer g = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (i != skip)
            g = gcd(g, w[i]);
    return g;
}

Integer lcm_of(const std::vector<Integer>& w)
{
    Integer l = 1;
    for (const auto& x : w)
        l = lcm(l, x);
    return l;
}

} // namespace

WeightSystem WeightSystem::from_longs(const std::vector<long>& q)
{
    if (q.size() < 2)
        throw InputError("weighted projective space needs at least two weights");
    WeightSystem w;
    for (long x : q) {
        if (x <= 0)
            throw InputError("weights must be positive");
        w.weights.emplace_back(x);
    }
    return w;
}

std::string WeightSystem::to_string() const
{
    std::ostringstream os;
    os << "P(";
    for (std::size_t i = 0; i < weights.size(); ++i)
        os << (i ? "," : "") << weights[i];
    os << ')';
    return os.str();
}

bool wps_well_formed(const WeightSystem& q)
{
    for (std::size_t i = 0; i < q.weights.size(); ++i)
        if (gcd_except(q.weights, i) != 1)
            return false;
    return true;
}

WeightSystem wps_normalize(const WeightSystem& q)
{
    WeightSystem w = q;
    Integer g = 0;
    for (const auto& x : w.weights)
        g = gcd(g, x);
    for (auto& x : w.weights)
        x /= g;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < w.weights.size(); ++i) {
            Integer d = gcd_except(w.weights, i);
            if (d == 1)
                continue;
            for (std::size_t j = 0; j < w.weights.size(); ++j)
                if (j != i)
                    w.weights[j] /= d;
            changed = true;
        }
    }
    return w;
}

SquarefreeMonomialIdeal wps_singular_ideal(const WeightSystem& q)
{
    const int vars = static_cast<int>(q.weights.size());
    auto ideal = SquarefreeMonomialIdeal::unit(vars);
    for (const auto& p : prime_factors(lcm_of(q.weights))) {
        IndexSet support;
        for (int i = 0; i < vars; ++i)
            if (q.weights[i] % p != 0)
                support.insert(i);
        ideal = intersect(ideal, prime_ideal(vars, support));
    }
    return ideal;
}

std::optional<IndexSet> wps_rigidity_counterexample(const WeightSystem& q)
{
    const int n = static_cast<int>(q.dimension());
    for (const auto& p : prime_factors(lcm_of(q.weights))) {
        std::vector<int> divisible;
        for (int i = 0; i <= n; ++i)
            if (q.weights[i] % p == 0)
                divisible.push_back(i);
        if (static_cast<int>(divisible.size()) >= n - 1) {
            IndexSet s;
            for (int k = 0; k < n - 1; ++k)
                s.insert(divisible[k]);
            return s;
        }
    }
    return std::nullopt;
}

bool wps_rigidity_condition(const WeightSystem& q)
{
    return !wps_rigidity_counterexample(q).has_value();
}

} // namespace torrigid::toric
