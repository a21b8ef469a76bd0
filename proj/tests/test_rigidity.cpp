#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "torrigid/cli.hpp"
#include "torrigid/rigidity.hpp"
#include "torrigid/t1.hpp"

#include <set>

using namespace torrigid;
using namespace torrigid::rigidity;
using support::cone_of;
using support::frac;
using support::iv;
using support::uniform;

namespace {

toric::Fan load_fan(const std::string& name)
{
    auto text = cli::read_file(support::data_path("fans/" + name + ".json"));
    return toric::validate_fan(cli::parse_fan(text, name));
}

const Hypothesis* find_hypothesis(const RigidityCertificate& c, const std::string& name)
{
    for (const auto& h : c.hypotheses)
        if (h.name == name)
            return &h;
    return nullptr;
}

// Random simplicial full-dimensional cone with primitive generators in [-3, 3]^3.
toric::Cone random_simplicial_cone(std::mt19937_64& rng)
{
    for (;;) {
        std::vector<IntVector> rays;
        while (rays.size() < 3) {
            IntVector v = iv({uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)});
            if (content(v) == 1)
                rays.push_back(v);
        }
        if (toric::span_dimension(rays, 3) == 3)
            return toric::Cone(3, rays);
    }
}

} // namespace

TEST_CASE("named cones")
{
    auto quotient = cone_of({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}});
    CHECK(qgorenstein_rigidity(quotient).verdict == Verdict::Rigid);
    CHECK(quotient_rigidity(quotient).verdict == Verdict::Rigid);

    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    auto qs = qgorenstein_rigidity(square);
    CHECK(qs.verdict == Verdict::ConditionNotSatisfied);
    CHECK(quotient_rigidity(square).verdict == Verdict::ConditionNotSatisfied);
    int failed = 0;
    for (const auto& h : qs.hypotheses)
        failed += h.status == Status::Failed;
    CHECK(failed == 1);
    CHECK(!qs.reason.empty());

    auto a2 = cone_of({{1, 0}, {1, 3}});
    CHECK(qgorenstein_rigidity(a2).verdict == Verdict::ConditionNotSatisfied);
    CHECK(quotient_rigidity(a2).verdict == Verdict::ConditionNotSatisfied);

    auto smooth = cone_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(quotient_rigidity(smooth).verdict == Verdict::Rigid);
}

TEST_CASE("lower-dimensional cones are rejected")
{
    auto flat = cone_of({{1, 0, 0}, {0, 1, 0}});
    CHECK_THROWS_AS(qgorenstein_rigidity(flat), InputError);
    CHECK_THROWS_AS(der_vanishing_gamma(flat, 3), InputError);
}

TEST_CASE("connectivity criterion on named cones")
{
    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    auto c = der_vanishing_gamma(square, 3);
    CHECK(c.criterion == "gamma");
    CHECK(c.verdict == Verdict::DerPartVanishes);
    CHECK(c.search_bound == 3);

    auto hexagon = t1::polygon_cone({iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, 0}), iv({-1, -1}), iv({0, -1})});
    CHECK(der_vanishing_gamma(hexagon, 3).verdict == Verdict::DerPartVanishes);
    CHECK(der_vanishing_gamma(hexagon, 3, GammaGraph::SmoothSubfan).verdict == Verdict::DerPartVanishes);

    auto a1 = cone_of({{1, 0}, {1, 2}});
    auto ca = der_vanishing_gamma(a1, 3);
    CHECK(ca.verdict == Verdict::Inconclusive);
    CHECK(ca.reason.rfind("codim", 0) == 0);

    CHECK_THROWS_AS(der_vanishing_gamma(square, 0), InputError);
}

TEST_CASE("Q-Gorenstein cones never fail the connectivity test")
{
    std::mt19937_64 rng(404);
    int checked = 0;
    for (int k = 0; k < 40; ++k) {
        auto cone = support::random_height_one_cone(rng, 3, 2, 6);
        if (!toric::singular_codim(cone).at_least(3))
            continue;
        ++checked;
        REQUIRE(toric::q_gorenstein(cone));
        auto c = der_vanishing_gamma(cone, 4);
        CHECK(c.verdict != Verdict::ConditionNotSatisfied);
    }
    CHECK(checked > 5);
}

TEST_CASE("connectivity verdict implies an exact zero Der part")
{
    std::mt19937_64 rng(505);
    int certified = 0;
    for (int k = 0; k < 40; ++k) {
        auto cone = support::random_height_one_cone(rng, 3, 2, 6);
        if (!toric::singular_codim(cone).at_least(3) || cone.ray_count() > 8)
            continue;
        auto c = der_vanishing_gamma(cone, 4);
        if (c.verdict != Verdict::DerPartVanishes)
            continue;
        ++certified;
        auto exact = t1::der_part(cone, t1::DerMode::Exact, 4);
        CHECK(exact.dimension == 0);
    }
    CHECK(certified > 5);
}

TEST_CASE("rigid certificates agree with T1 on random cones")
{
    // Isolated three-dimensional quotient singularities are rigid; every
    // Rigid verdict must come with T^1 = 0.
    std::mt19937_64 rng(606);
    int rigid = 0;
    for (int k = 0; k < 60; ++k) {
        auto cone = random_simplicial_cone(rng);
        if (toric::is_smooth(cone) || !toric::singular_codim(cone).at_least(3))
            continue;
        auto qu = quotient_rigidity(cone);
        auto qg = qgorenstein_rigidity(cone);
        REQUIRE(qu.verdict == Verdict::Rigid);
        CHECK(qg.verdict == qu.verdict);
        ++rigid;
        auto t = t1::t1_affine(cone);
        REQUIRE(t.total);
        CHECK(*t.total == 0);
    }
    for (int k = 0; k < 30; ++k) {
        auto cone = support::random_height_one_cone(rng, 3, 2, 5);
        if (cone.ray_count() > 8)
            continue;
        bool any = qgorenstein_rigidity(cone).verdict == Verdict::Rigid ||
                   quotient_rigidity(cone).verdict == Verdict::Rigid;
        if (!any)
            continue;
        ++rigid;
        auto t = t1::t1_affine(cone);
        REQUIRE(t.total);
        CHECK(*t.total == 0);
    }
    CHECK(rigid > 10);
}

TEST_CASE("Fano criterion")
{
    CHECK(fano_rigidity(support::projective_space(2)).verdict == Verdict::Rigid);
    CHECK(fano_rigidity(support::projective_space(3)).verdict == Verdict::Rigid);
    CHECK(fano_rigidity(load_fan("p1113")).verdict == Verdict::Rigid);

    auto f2 = fano_rigidity(load_fan("f2"));
    CHECK(f2.verdict == Verdict::ConditionNotSatisfied);
    const Hypothesis* fano = find_hypothesis(f2, "Fano");
    REQUIRE(fano);
    CHECK(fano->status == Status::Failed);

    // Surfaces are singular in codimension 2 as soon as a cone is singular.
    toric::Fan singular(2, {iv({1, 0}), iv({0, 1}), iv({-1, -2})},
                        {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{0, 2}});
    CHECK(fano_rigidity(singular).verdict == Verdict::ConditionNotSatisfied);

    toric::Fan partial(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {IndexSet{0, 1}, IndexSet{1, 2}});
    auto c = fano_rigidity(partial);
    CHECK(c.verdict == Verdict::ConditionNotSatisfied);
    CHECK(c.reason == "completeness");
}

TEST_CASE("weighted projective spaces")
{
    CHECK(wps_rigidity(toric::WeightSystem::from_longs({1, 1, 1, 1})).verdict == Verdict::Rigid);
    CHECK(wps_rigidity(toric::WeightSystem::from_longs({1, 1, 2, 3})).verdict == Verdict::Rigid);

    auto bad = wps_rigidity(toric::WeightSystem::from_longs({1, 1, 2, 2}));
    CHECK(bad.verdict == Verdict::ConditionNotSatisfied);
    REQUIRE(bad.subset);
    CHECK(*bad.subset == IndexSet{2, 3});

    // (2, 2, 2, 3) is not well formed; it normalises to (1, 1, 1, 3).
    auto norm = wps_rigidity(toric::WeightSystem::from_longs({2, 2, 2, 3}));
    CHECK(norm.verdict == Verdict::Rigid);
    CHECK(norm.hypotheses.front().detail.find("normalised") != std::string::npos);
}

TEST_CASE("wps criterion matches the fan criterion")
{
    CHECK(wps_rigidity(toric::WeightSystem::from_longs({1, 1, 1, 3})).verdict ==
          fano_rigidity(load_fan("p1113")).verdict);
    CHECK(wps_rigidity(toric::WeightSystem::from_longs({1, 1, 1, 1, 2})).verdict ==
          fano_rigidity(load_fan("p11112")).verdict);
}

TEST_CASE("half-space connectivity examples")
{
    std::vector<IntVector> square = {iv({0, 0}), iv({1, 0}), iv({1, 1}), iv({0, 1})};
    auto r = polytope_halfspace_connectivity(square, 0, {{Rational(1), Rational(0)}, Rational(0)});
    CHECK(r.connected);
    REQUIRE(r.components.size() == 1);
    CHECK(std::set<std::size_t>(r.components[0].begin(), r.components[0].end()) == std::set<std::size_t>{1, 2, 3});

    auto diag = polytope_halfspace_connectivity(square, 0, {{Rational(1), Rational(-1)}, Rational(0)});
    CHECK(diag.connected);
    REQUIRE(diag.components.size() == 1);
    CHECK(std::set<std::size_t>(diag.components[0].begin(), diag.components[0].end()) ==
          std::set<std::size_t>{1, 2});

    std::vector<IntVector> triangle = {iv({0, 0}), iv({2, 0}), iv({0, 2})};
    auto t = polytope_halfspace_connectivity(triangle, 1, {{Rational(1), Rational(0)}, Rational(2)});
    CHECK(t.connected);
    CHECK(t.components.empty());

    std::vector<IntVector> cube;
    for (const auto& p : support::box(3, 0, 1))
        cube.push_back(p);
    auto c = polytope_halfspace_connectivity(cube, 0, {{Rational(1), Rational(-1), Rational(0)}, Rational(0)});
    CHECK(c.connected);
    REQUIRE(c.components.size() == 1);
    CHECK(c.components[0].size() == 5);
}

TEST_CASE("half-space connectivity through every cube vertex")
{
    std::vector<IntVector> cube = support::box(3, 0, 1);
    for (std::size_t v = 0; v < cube.size(); ++v)
        for (const auto& n : support::box(3, -1, 1)) {
            if (n == IntVector(3, 0))
                continue;
            RatVector normal(n.begin(), n.end());
            auto r = polytope_halfspace_connectivity(cube, v, {normal, dot(normal, cube[v])});
            CHECK(r.connected);
        }
}

TEST_CASE("half-space components cover the vertices in the half-space")
{
    std::mt19937_64 rng(77);
    for (int k = 0; k < 100; ++k) {
        std::vector<IntVector> pts;
        for (int j = 0; j < 7; ++j) {
            IntVector p = iv({uniform(rng, -3, 3), uniform(rng, -3, 3)});
            if (std::find(pts.begin(), pts.end(), p) == pts.end())
                pts.push_back(p);
        }
        std::vector<IntVector> lifted;
        for (auto p : pts) {
            p.push_back(1);
            lifted.push_back(p);
        }
        auto ext = support::extremal(lifted);
        if (ext.size() < 3)
            continue;
        std::set<std::size_t> vertices;
        for (auto e : ext) {
            e.pop_back();
            vertices.insert(std::find(pts.begin(), pts.end(), e) - pts.begin());
        }
        std::size_t v = *vertices.begin();
        RatVector normal = {frac(uniform(rng, -3, 3), 1), frac(uniform(rng, 1, 3), uniform(rng, 1, 2))};
        Rational offset = dot(normal, pts[v]);
        auto r = polytope_halfspace_connectivity(pts, v, {normal, offset});

        std::set<std::size_t> expected;
        for (std::size_t i : vertices)
            if (i != v && dot(normal, pts[i]) >= offset)
                expected.insert(i);
        std::set<std::size_t> got;
        for (const auto& comp : r.components)
            got.insert(comp.begin(), comp.end());
        CHECK(got == expected);
        CHECK(r.connected);
        CHECK(r.components.size() <= 1);
    }
}

TEST_CASE("half-space connectivity input errors")
{
    std::vector<IntVector> square = {iv({0, 0}), iv({2, 0}), iv({2, 2}), iv({0, 2}), iv({1, 1})};
    Halfspace x0{{Rational(1), Rational(0)}, Rational(0)};
    CHECK_THROWS_AS(polytope_halfspace_connectivity(square, 1, x0), InputError);
    Halfspace through_center{{Rational(1), Rational(0)}, Rational(1)};
    CHECK_THROWS_AS(polytope_halfspace_connectivity(square, 4, through_center), InputError);
    CHECK_THROWS_AS(polytope_halfspace_connectivity(square, 9, x0), InputError);
    CHECK_THROWS_AS(polytope_halfspace_connectivity(square, 0, {{Rational(0), Rational(0)}, Rational(0)}),
                    InputError);
    std::vector<IntVector> simplex4 = {iv({0, 0, 0, 0}), iv({1, 0, 0, 0}), iv({0, 1, 0, 0}), iv({0, 0, 1, 0}),
                                       iv({0, 0, 0, 1})};
    CHECK_THROWS_AS(polytope_halfspace_connectivity(simplex4, 0, {RatVector(4, Rational(1)), Rational(0)}),
                    UnsupportedError);
}
