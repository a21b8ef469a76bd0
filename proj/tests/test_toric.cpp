#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"

#include "torrigid/lattice.hpp"

#include <set>

using namespace torrigid;
using namespace torrigid::toric;
using support::cone_of;
using support::iv;
using support::uniform;

namespace {

long cross(const IntVector& a, const IntVector& b, const IntVector& c)
{
    // (b - a) x (c - a) for the first two coordinates.
    return to_long((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

// Faces of the cone over a convex polygon at height one: the empty face,
// the rays, the hull edges and the cone itself.
std::set<IndexSet> polygon_cone_faces(const Cone& cone)
{
    const auto& r = cone.rays();
    const int m = cone.ray_count();
    std::set<IndexSet> out = {IndexSet{}, cone.all()};
    for (int a = 0; a < m; ++a) {
        out.insert(IndexSet{a});
        for (int b = a + 1; b < m; ++b) {
            int pos = 0, neg = 0;
            for (int c = 0; c < m; ++c) {
                if (c == a || c == b)
                    continue;
                long s = cross(r[a], r[b], r[c]);
                pos += s > 0;
                neg += s < 0;
            }
            if (pos == 0 || neg == 0)
                out.insert(IndexSet{a, b});
        }
    }
    return out;
}

Integer abs_det(const std::vector<IntVector>& rows) { return abs(lattice::determinant(IntMatrix::from_rows(rows))); }

} // namespace

TEST_CASE("faces of the square cone")
{
    auto cone = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    auto fs = faces(cone);
    CHECK(fs.size() == 10);
    CHECK(faces_of_dimension(cone, 2) ==
          std::vector<IndexSet>{IndexSet{0, 1}, IndexSet{0, 3}, IndexSet{1, 2}, IndexSet{2, 3}});
    CHECK(faces_of_dimension(cone, 0) == std::vector<IndexSet>{IndexSet{}});
    CHECK(faces_of_dimension(cone, 3) == std::vector<IndexSet>{cone.all()});
    CHECK_FALSE(is_face(cone, IndexSet{0, 2}));
}

TEST_CASE("faces of random polygon cones match the hull edges")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        auto cone = support::random_height_one_cone(rng, 3, 3, 8);
        auto fs = faces(cone);
        CHECK(std::set<IndexSet>(fs.begin(), fs.end()) == polygon_cone_faces(cone));
        for (IndexSet f : fs)
            CHECK(is_face(cone, f));
    }
}

TEST_CASE("face numbers of random 3-polytope cones satisfy Euler's relation")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto cone = support::random_height_one_cone(rng, 4, 2, 9);
        long f0 = faces_of_dimension(cone, 1).size();
        long f1 = faces_of_dimension(cone, 2).size();
        long f2 = faces_of_dimension(cone, 3).size();
        CHECK(f0 - f1 + f2 == 2);
        // Each 2-dimensional face of the cone is an edge: two rays.
        for (IndexSet e : faces_of_dimension(cone, 2))
            CHECK(e.size() == 2);
    }
}

TEST_CASE("cone validation")
{
    CHECK_THROWS_AS(cone_of({{1, 0}, {-1, 0}}), InputError);          // not pointed
    CHECK_THROWS_AS(cone_of({{1, 0}, {1, 1}, {1, 2}}), InputError);   // (1,1) not extremal
    CHECK_THROWS_AS(cone_of({{1, 0}, {1, 0}}), InputError);           // duplicate
    CHECK_THROWS_AS(cone_of({{0, 0}, {1, 0}}), InputError);           // zero ray
    auto c = cone_of({{2, 0}, {0, 1}});
    CHECK(c.rays().front() == iv({1, 0}));
    CHECK(c.warnings().size() == 1);
}

TEST_CASE("smooth and simplicial loci")
{
    for (long n = 2; n <= 5; ++n) {
        auto a = cone_of({{1, 0}, {1, n}});
        CHECK(is_simplicial(a));
        CHECK_FALSE(is_smooth(a));
        CHECK(singular_codim(a) == Codimension(2));
        CHECK(simplicial_codim(a).is_infinite());
    }
    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    CHECK(singular_codim(square) == Codimension(3));
    CHECK(simplicial_codim(square) == Codimension(3));
    auto q = cone_of({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}});
    CHECK(singular_codim(q) == Codimension(3));
    CHECK(is_smooth(cone_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})));
    CHECK(singular_codim(cone_of({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).is_infinite());
}

TEST_CASE("smoothness of full rank simplices is unimodularity")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<IntVector> rays;
        for (int k = 0; k < 3; ++k)
            rays.push_back(primitive(iv({uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, -3, 3)})));
        if (abs_det(rays) == 0)
            continue;
        CHECK(rays_smooth(rays) == (abs_det(rays) == 1));
        CHECK(rays_simplicial(rays));
    }
}

TEST_CASE("class groups")
{
    auto p2 = support::projective_space(2);
    auto cox = class_group(p2);
    CHECK(cox.r == 1);
    CHECK(cox.torsion.empty());
    CHECK(abs(cox.grading(0, 0)) == 1);
    CHECK(cox.grading(0, 0) == cox.grading(0, 1));
    CHECK(cox.grading(0, 1) == cox.grading(0, 2));

    Fan f2(2, {iv({1, 0}), iv({0, 1}), iv({-1, 2}), iv({0, -1})},
           {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
    auto c2 = class_group(f2);
    CHECK(c2.r == 2);
    CHECK(c2.torsion.empty());

    auto q = class_group(cone_of({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}));
    CHECK(q.r == 0);
    CHECK(q.torsion == std::vector<Integer>{3});

    for (long n = 2; n <= 6; ++n)
        CHECK(class_group(cone_of({{1, 0}, {1, n}})).torsion == std::vector<Integer>{n});

    auto sq = class_group(cone_of({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}));
    CHECK(sq.r == 1);
    CHECK(sq.torsion == std::vector<Integer>{2});
}

TEST_CASE("class group of simplicial cones has order |det|")
{
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<IntVector> rays;
        for (int k = 0; k < 3; ++k)
            rays.push_back(primitive(iv({uniform(rng, -3, 3), uniform(rng, -3, 3), uniform(rng, 1, 3)})));
        Integer d = abs_det(rays);
        if (d == 0)
            continue;
        auto cox = class_group(Cone(3, rays));
        Integer order = 1;
        for (const auto& t : cox.torsion)
            order *= t;
        CHECK(order == d);
    }
}

TEST_CASE("Cox grading annihilates characters")
{
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 30; ++trial) {
        auto fan = support::random_complete_surface_fan(rng, 6);
        auto cox = class_group(fan);
        CHECK(cox.r == static_cast<std::size_t>(fan.ray_count()) - 2);
        CHECK((cox.grading * cox.ray_matrix).is_zero());
        for (int k = 0; k < 10; ++k) {
            IntVector u = iv({uniform(rng, -5, 5), uniform(rng, -5, 5)});
            IntVector p = cox.ray_matrix * u;
            CHECK(cox.is_degree_zero(p));
            IntVector shifted = p;
            shifted[0] += 1;
            CHECK_FALSE(cox.is_degree_zero(shifted));
            IntVector e0(p.size(), 0);
            e0[0] = 1;
            CHECK(cox.same_class(shifted, e0));
        }
    }
}

TEST_CASE("torsion classes are detected")
{
    // 1/3(1,1,1): x1 has a nonzero torsion class, x1^3 has class zero.
    auto cox = class_group(cone_of({{1, 0, 1}, {0, 1, 1}, {-1, -1, 1}}));
    CHECK_FALSE(cox.is_degree_zero(iv({1, 0, 0})));
    CHECK(cox.is_degree_zero(iv({3, 0, 0})));
    CHECK(cox.is_degree_zero(iv({1, 1, 1})));
    CHECK(cox.same_class(iv({1, 0, 0}), iv({0, 1, 0})));
}

TEST_CASE("irrelevant ideals")
{
    CHECK(irrelevant_ideal(support::projective_space(2)).to_string() == "(x1, x2, x3)");
    Fan f2(2, {iv({1, 0}), iv({0, 1}), iv({-1, 2}), iv({0, -1})},
           {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
    CHECK(irrelevant_ideal(f2).to_string() == "(x1x2, x1x4, x2x3, x3x4)");
    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    CHECK(irrelevant_ideal(Fan::smooth_faces(square)).to_string() == "(x1x2, x1x4, x2x3, x3x4)");
    CHECK(irrelevant_ideal(Fan::of_cone(square)).is_unit());
}

TEST_CASE("Q-Gorenstein detection")
{
    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    auto c = q_gorenstein(square);
    REQUIRE(c.has_value());
    CHECK(c->u0 == iv({0, 0, 1}));
    CHECK(c->g == 1);

    auto half = cone_of({{1, 0, 0}, {0, 1, 0}, {1, 1, 2}});
    auto h = q_gorenstein(half);
    REQUIRE(h.has_value());
    CHECK(h->g == 2);
    CHECK_FALSE(gorenstein(half));

    auto bent = cone_of({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 2}});
    CHECK_FALSE(q_gorenstein(bent).has_value());
}

TEST_CASE("completeness and the Fano property on named fans")
{
    for (int n = 1; n <= 4; ++n) {
        auto pn = support::projective_space(n);
        CHECK(is_complete(pn));
        CHECK(is_fano(pn));
    }
    Fan f2(2, {iv({1, 0}), iv({0, 1}), iv({-1, 2}), iv({0, -1})},
           {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{2, 3}, IndexSet{3, 0}});
    CHECK(is_complete(f2));
    CHECK_FALSE(is_fano(f2));

    Fan p1113(3, {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -3})},
              subsets_of_size(IndexSet::range(4), 3));
    CHECK(is_complete(p1113));
    CHECK(is_fano(p1113));

    auto p2 = support::projective_space(2);
    Fan partial(2, p2.rays(), {IndexSet{0, 1}, IndexSet{1, 2}});
    CHECK_FALSE(is_complete(partial));
    CHECK_FALSE(is_complete(Fan::of_cone(cone_of({{1, 0}, {0, 1}}))));
}

TEST_CASE("Fano surface fans are the convex ray polygons")
{
    std::mt19937_64 rng(16);
    int fano = 0;
    for (int trial = 0; trial < 80; ++trial) {
        auto fan = support::random_complete_surface_fan(rng, 6);
        CHECK(is_complete(fan));
        // Fano iff every ray is a strictly convex corner of the ray polygon.
        const auto& r = fan.rays();
        const std::size_t m = r.size();
        bool convex = true;
        for (std::size_t k = 0; k < m; ++k)
            convex = convex && cross(r[k], r[(k + 1) % m], r[(k + 2) % m]) > 0;
        CHECK(is_fano(fan) == convex);
        fano += convex;
    }
    CHECK(fano > 0);
}

TEST_CASE("ray graphs")
{
    auto g = graph_gamma(support::projective_space(2));
    CHECK(g.edges().size() == 3);
    auto square = cone_of({{0, 0, 1}, {1, 0, 1}, {1, 1, 1}, {0, 1, 1}});
    auto gf = graph_gamma_f(square);
    CHECK(gf.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(graph_gamma(Fan::proper_faces(square)).edges() == gf.edges());
    CHECK(gf.components(IndexSet{0, 2}).size() == 2);
    CHECK(gf.induced_connected(IndexSet{0, 1, 2}));
    CHECK(gf.is_subgraph_of(graph_gamma(Fan::of_cone(square))));
}

TEST_CASE("fan validation")
{
    RawFan raw{{{1, 0}, {0, 1}}, {{0, 2}}, ""};
    CHECK_THROWS_AS(validate_fan(raw), InputError);
    RawFan dup{{{1, 0}, {1, 0}}, {{0}, {1}}, ""};
    CHECK_THROWS_AS(validate_fan(dup), InputError);
    RawFan uncovered{{{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}}, ""};
    CHECK_THROWS_AS(validate_fan(uncovered), InputError);
    RawFan inside{{{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2}}, ""};
    CHECK_THROWS_AS(validate_fan(inside), InputError);
    RawFan ragged{{{1, 0}, {0, 1, 0}}, {{0, 1}}, ""};
    CHECK_THROWS_AS(validate_fan(ragged), InputError);
    RawFan repeated{{{1, 0}, {0, 1}}, {{0, 1}, {0}}, ""};
    auto fan = validate_fan(repeated);
    CHECK(fan.max_cones().size() == 1);
    CHECK_FALSE(fan.warnings.empty());
}

TEST_CASE("weighted projective spaces")
{
    auto q = WeightSystem::from_longs({1, 1, 2, 3});
    CHECK(wps_well_formed(q));
    CHECK(wps_rigidity_condition(q));
    CHECK(wps_singular_ideal(q).to_string() == "(x1, x2, x3x4)");
    CHECK(wps_singular_ideal(q).codimension() == Codimension(3));

    auto bad = WeightSystem::from_longs({1, 1, 2, 2});
    CHECK(wps_well_formed(bad));
    CHECK_FALSE(wps_rigidity_condition(bad));
    CHECK(wps_rigidity_counterexample(bad) == IndexSet{2, 3});
    CHECK(wps_singular_ideal(bad).codimension() == Codimension(2));

    CHECK(wps_normalize(WeightSystem::from_longs({2, 4, 6})).weights == std::vector<Integer>{1, 2, 3});
    CHECK(wps_normalize(WeightSystem::from_longs({2, 2, 2, 1})).weights == std::vector<Integer>{1, 1, 1, 1});
    CHECK_FALSE(wps_well_formed(WeightSystem::from_longs({2, 2, 2, 1})));
    CHECK(wps_rigidity_condition(WeightSystem::from_longs({1, 1, 1, 1})));
    CHECK(WeightSystem::from_longs({1, 2, 3}).to_string() == "P(1,2,3)");
    CHECK_THROWS_AS(WeightSystem::from_longs({1}), InputError);
    CHECK_THROWS_AS(WeightSystem::from_longs({1, 0}), InputError);
}

TEST_CASE("normalised weight systems are well formed")
{
    for (const auto& q : support::box(4, 1, 8)) {
        auto w = wps_normalize(WeightSystem::from_longs(to_long_vector(q)));
        CHECK(wps_well_formed(w));
    }
}
