#include "doctest.h"
#include "helpers.hpp"

#include "vergen/constructions.hpp"
#include "vergen/metric.hpp"

using namespace vergen;
using namespace testing;

TEST_CASE("series partial sums") {
    auto sq = unit_square();
    for (int k = 0; k <= 3; ++k) {
        auto c = series_partial_sum(sq, q("1/2"), k);
        CHECK(c.points.size() == (std::size_t{1} << (2 * (k + 1))));
        for (const auto& p : c.points) CHECK(sq.contains(p));
    }
    auto t = series_partial_sum(triangle(), q("1/2"), 0);
    CHECK(t.points.size() == 3);
    // Sierpinski level k: 3^(k+1) distinct binary digit strings
    CHECK(series_partial_sum(triangle(), q("1/2"), 2).points.size() == 27);
    RunConfig tight;
    tight.point_budget = 10;
    CHECK_THROWS(series_partial_sum(sq, q("1/2"), 3, tight));
}

TEST_CASE("covering nets") {
    auto sq = unit_square();
    auto n1 = covering_net(sq, q("1/2"), 1);
    CHECK(n1.centers.size() == 4);
    CHECK(n1.scale == q("1/2"));
    CHECK(n1.volume_bound == 4);
    auto n2 = covering_net(sq, q("1/2"), 2);
    CHECK(n2.centers.size() == 16);
    auto t = covering_net(triangle(), q("1/3"), 1);
    CHECK(t.centers.size() == 3);
    CHECK(t.scale == q("2/3"));
    auto clamped = covering_net(triangle(), q("1/2"), 1);
    CHECK(clamped.clamped);
    CHECK(clamped.lambda == q("1/3"));
}

TEST_CASE("augmentation") {
    auto seg = poly({{"0", "0"}, {"1", "2"}});
    CHECK(augment_to_vg(seg).zonotope.generators.empty());
    auto t = augment_to_vg(triangle());
    CHECK(t.zonotope.generators.size() == 1);
    CHECK(is_vg(t.sum, q("1/2")).vg);
    auto tilted = poly({{"0", "0", "0"}, {"1", "0", "1"}, {"0", "1", "1"}});
    auto a = augment_to_vg(tilted);
    CHECK(a.zonotope.generators.size() == 1);
    CHECK(a.sum.dim() == 2);
}

TEST_CASE("augmentation of a tetrahedron") {
    auto tet = poly({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}});
    auto a = augment_to_vg(tet);
    CHECK(is_vg(a.sum, q("1/2")).vg);
}

TEST_CASE("densify") {
    auto sq = unit_square();
    CHECK(densify2d(sq, q("1/10")).q == sq);
    auto d = densify2d(triangle(), q("1/4"));
    CHECK(d.verified);
    CHECK(d.hausdorff_sq <= q("1/16"));
    CHECK(is_vg(d.q, q("1/2")).vg);
}

TEST_CASE("symmetric lifts") {
    auto seg = poly({{"0"}, {"1"}});
    CHECK(lift_symmetric(seg) == poly({{"0", "1"}, {"1", "1"}, {"0", "-1"}, {"-1", "-1"}}));
    auto l = lift_symmetric(unit_square());
    CHECK(is_centrally_symmetric(l));
    CHECK(support(l, pt({"0", "0", "1"})).face.vertex_count() == 4);

    auto base = augment_to_vg(triangle()).sum;
    auto d = lift_symmetric_decorated(base, q("1/2"));
    CHECK(d.verified);
    CHECK(d.top_is_translate);
}

TEST_CASE("local radius") {
    CHECK(local_radius_sq(unit_square(), pt({"0", "0"})) == q("1/4"));
    // nearest edge not through the midpoint is x = 0 at distance 1/2
    CHECK(local_radius_sq(unit_square(), pt({"1/2", "0"})) == q("1/16"));
}
