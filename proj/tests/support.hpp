#pragma once

// Shared fixtures and random generators for the test binaries.

#include "torrigid/lattice.hpp"
#include "torrigid/monomial_ideal.hpp"
#include "torrigid/toric.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace support {

using namespace torrigid;

inline std::string data_path(const std::string& rel) { return std::string(TORRIGID_DATA_DIR) + "/" + rel; }

inline IntVector iv(std::initializer_list<long> xs) { return IntVector(xs.begin(), xs.end()); }

inline long uniform(std::mt19937_64& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

/// num / den in lowest terms (the two-argument mpq constructor does not reduce).
inline Rational frac(long num, long den)
{
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline toric::Cone cone_of(std::vector<std::vector<long>> rays) { return toric::Cone::from_longs(rays); }

inline toric::Fan projective_space(int n)
{
    std::vector<IntVector> rays;
    for (int i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        rays.push_back(e);
    }
    rays.push_back(IntVector(n, -1));
    return toric::Fan(n, rays, subsets_of_size(IndexSet::range(n + 1), n), "P" + std::to_string(n));
}

/// Random squarefree monomial ideal in 1..max_vars variables with 1..max_gens
/// non-constant generators before minimalisation.
inline SquarefreeMonomialIdeal random_ideal(std::mt19937_64& rng, int max_vars = 6, int max_gens = 6)
{
    int m = static_cast<int>(uniform(rng, 1, max_vars));
    int s = static_cast<int>(uniform(rng, 1, max_gens));
    std::vector<IndexSet> gens;
    for (int k = 0; k < s; ++k) {
        std::uint64_t bits = 0;
        while (bits == 0)
            bits = static_cast<std::uint64_t>(uniform(rng, 1, (1L << m) - 1));
        gens.push_back(IndexSet::from_bits(bits));
    }
    return SquarefreeMonomialIdeal(m, gens);
}

/// Every vector in [lo, hi]^m, lexicographically.
inline std::vector<IntVector> box(int m, long lo, long hi)
{
    std::vector<IntVector> out;
    IntVector p(m, lo);
    for (;;) {
        out.push_back(p);
        int k = m - 1;
        while (k >= 0 && p[k] == hi) {
            p[k] = lo;
            --k;
        }
        if (k < 0)
            break;
        p[k] += 1;
    }
    return out;
}

/// Points not in the cone spanned by the others.
inline std::vector<IntVector> extremal(const std::vector<IntVector>& points)
{
    std::vector<IntVector> out;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<IntVector> others;
        for (std::size_t j = 0; j < points.size(); ++j)
            if (j != i)
                others.push_back(points[j]);
        if (others.empty() || !lattice::in_cone(others, points[i]))
            out.push_back(points[i]);
    }
    return out;
}

/// Full-dimensional cone over a random lattice polytope at height one in
/// dimension `dim` (rays have dim coordinates, the last one equal to 1).
inline toric::Cone random_height_one_cone(std::mt19937_64& rng, std::size_t dim, long radius, int points)
{
    for (;;) {
        std::vector<IntVector> pts;
        for (int k = 0; k < points; ++k) {
            IntVector p;
            for (std::size_t c = 0; c + 1 < dim; ++c)
                p.push_back(uniform(rng, -radius, radius));
            p.push_back(1);
            if (std::find(pts.begin(), pts.end(), p) == pts.end())
                pts.push_back(p);
        }
        auto rays = extremal(pts);
        if (rays.size() < dim || toric::span_dimension(rays, dim) != dim)
            continue;
        return toric::Cone(dim, rays);
    }
}

/// Complete 2-dimensional fan on random primitive rays sorted by angle.
inline toric::Fan random_complete_surface_fan(std::mt19937_64& rng, int rays_wanted)
{
    for (;;) {
        std::vector<std::pair<long, long>> rays;
        for (int k = 0; k < rays_wanted; ++k) {
            long x = uniform(rng, -3, 3), y = uniform(rng, -3, 3);
            if ((x == 0 && y == 0) || std::gcd(x, y) != 1)
                continue;
            if (std::find(rays.begin(), rays.end(), std::make_pair(x, y)) == rays.end())
                rays.push_back({x, y});
        }
        if (rays.size() < 3)
            continue;
        auto half = [](std::pair<long, long> v) { return v.second > 0 || (v.second == 0 && v.first > 0) ? 0 : 1; };
        std::sort(rays.begin(), rays.end(), [&](auto a, auto b) {
            if (half(a) != half(b))
                return half(a) < half(b);
            return a.first * b.second - a.second * b.first > 0;
        });
        bool ok = true;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            auto a = rays[k], b = rays[(k + 1) % rays.size()];
            ok = ok && a.first * b.second - a.second * b.first > 0; // turn strictly less than pi
        }
        if (!ok)
            continue;
        std::vector<IntVector> vs;
        std::vector<IndexSet> cones;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            vs.push_back(iv({rays[k].first, rays[k].second}));
            cones.push_back(IndexSet{static_cast<int>(k), static_cast<int>((k + 1) % rays.size())});
        }
        return toric::Fan(2, vs, cones);
    }
}

/// Random subfan of the proper faces of a random cone: a random selection
/// of faces together with any rays left uncovered.
inline toric::Fan random_subfan(std::mt19937_64& rng, std::size_t dim, int points)
{
    toric::Cone cone = random_height_one_cone(rng, dim, 2, points);
    auto fs = toric::faces(cone);
    std::vector<IndexSet> chosen;
    for (IndexSet f : fs)
        if (f.size() >= 2 && f != cone.all() && uniform(rng, 0, 2) == 0)
            chosen.push_back(f);
    IndexSet covered;
    for (IndexSet c : chosen)
        covered = covered | c;
    for (int r = 0; r < cone.ray_count(); ++r)
        if (!covered.contains(r))
            chosen.push_back(IndexSet{r});
    return toric::Fan(dim, cone.rays(), chosen);
}

/// Small fan corpus: random subfans in dimensions 3 and 4, complete surface
/// fans and a few projective spaces.
inline std::vector<toric::Fan> random_fan_corpus(std::mt19937_64& rng, int count)
{
    std::vector<toric::Fan> out;
    out.push_back(projective_space(2));
    out.push_back(projective_space(3));
    for (int k = 0; static_cast<int>(out.size()) < count; ++k) {
        switch (k % 3) {
        case 0: out.push_back(random_subfan(rng, 3, 7)); break;
        case 1: out.push_back(random_subfan(rng, 4, 7)); break;
        default: out.push_back(random_complete_surface_fan(rng, 7)); break;
        }
    }
    return out;
}

} // namespace support
