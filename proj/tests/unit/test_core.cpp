#include "doctest.h"
#include "helpers.hpp"

#include "vergen/cone.hpp"
#include "vergen/error.hpp"
#include "vergen/lp.hpp"
#include "vergen/metric.hpp"

using namespace vergen;
using namespace testing;

TEST_CASE("scalar parsing") {
    CHECK(parse_scalar("2/4") == Scalar(1, 2));
    CHECK(format_scalar(parse_scalar("-6/4")) == "-3/2");
    CHECK(format_scalar(parse_scalar("7")) == "7");
    CHECK_THROWS_AS(parse_scalar("1/0"), Error);
    CHECK_THROWS_AS(parse_scalar("1/-2"), Error);
    CHECK_THROWS_AS(parse_scalar("abc"), Error);
    CHECK_THROWS_AS(parse_scalar(""), Error);
}

TEST_CASE("convex hull") {
    SUBCASE("square with interior point") {
        auto p = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}, {"1", "1"}, {"1/2", "1/2"}});
        CHECK(p.vertex_count() == 4);
        CHECK(p.dim() == 2);
        CHECK(p.facets().size() == 4);
    }
    SUBCASE("collinear points") {
        auto p = poly({{"0", "0"}, {"1", "1"}, {"2", "2"}});
        CHECK(p.vertex_count() == 2);
        CHECK(p.dim() == 1);
        CHECK(p.facets().size() == 2);
        CHECK(p.affine_hull().equations().size() == 1);
        CHECK(p.contains(pt({"1/2", "1/2"})));
        CHECK_FALSE(p.contains(pt({"1/2", "0"})));
    }
    SUBCASE("cube") {
        auto c = cube();
        CHECK(c.vertex_count() == 8);
        CHECK(c.facets().size() == 6);
        CHECK(k_skeleton(c, 1).size() == 12);
        CHECK(c.body().volume() == 1);
    }
    SUBCASE("cube with extra points") {
        auto c = poly({{"0", "0", "0"}, {"2", "0", "0"}, {"0", "2", "0"}, {"0", "0", "2"}, {"2", "2", "0"},
                       {"2", "0", "2"}, {"0", "2", "2"}, {"2", "2", "2"}, {"1", "1", "1"}, {"1", "0", "1"},
                       {"1", "1", "0"}, {"2", "1", "1"}, {"1", "0", "0"}});
        CHECK(c.vertex_count() == 8);
        CHECK(c.facets().size() == 6);
        CHECK(c.body().volume() == 8);
    }
    SUBCASE("octahedron") {
        auto o = poly({{"1", "0", "0"}, {"-1", "0", "0"}, {"0", "1", "0"}, {"0", "-1", "0"}, {"0", "0", "1"},
                       {"0", "0", "-1"}});
        CHECK(o.facets().size() == 8);
        CHECK(k_skeleton(o, 1).size() == 12);
        CHECK(o.body().volume() == Scalar(4, 3));
    }
    SUBCASE("point and planar polygon in space") {
        auto p = poly({{"1", "2", "3"}});
        CHECK(p.dim() == 0);
        CHECK(p.faces().size() == 1);
        auto t = poly({{"0", "0", "1"}, {"1", "0", "1"}, {"0", "1", "1"}, {"1/4", "1/4", "1"}});
        CHECK(t.dim() == 2);
        CHECK(t.vertex_count() == 3);
        CHECK(k_skeleton(t, 1).size() == 3);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(convex_hull({}), Error);
        CHECK_THROWS_AS(convex_hull({pt({"0"}), pt({"1", "2"})}), Error);
    }
}

TEST_CASE("h_to_v and v_to_h") {
    auto one = h_to_v({HalfSpace{pt({"1"}), 1}, HalfSpace{pt({"-1"}), 0}}, 1);
    REQUIRE(one);
    CHECK(one->sorted_vertices() == std::vector<Point>{pt({"0"}), pt({"1"})});

    auto c = h_to_v(v_to_h(cube()), 3);
    REQUIRE(c);
    CHECK(*c == cube());
    CHECK(c->vertex_count() == 8);

    CHECK_FALSE(h_to_v({HalfSpace{pt({"1"}), 0}, HalfSpace{pt({"-1"}), -1}}, 1));
    CHECK_THROWS_AS(h_to_v({HalfSpace{pt({"1", "0"}), 1}}, 2), Error);
    CHECK_THROWS_AS(h_to_v({HalfSpace{pt({"1", "0"}), 1}, HalfSpace{pt({"-1", "0"}), 0}, HalfSpace{pt({"0", "-1"}), 0}}, 2), Error);

    auto seg = poly({{"0", "0"}, {"1", "1"}});
    auto back = h_to_v(v_to_h(seg), 2);
    REQUIRE(back);
    CHECK(*back == seg);
}

TEST_CASE("linear programming") {
    auto sq = unit_square().halfspaces();
    auto r = lp_maximize(pt({"1", "0"}), sq);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 1);
    CHECK(r.witness[0] == 1);

    CHECK_FALSE(lp_strictly_feasible(std::vector<HalfSpace>{{pt({"-1"}), 0}, {pt({"1"}), 0}}, 1));
    auto w = lp_feasible(cube().halfspaces(), 3);
    REQUIRE(w);
    CHECK(cube().contains(*w));
    auto s = lp_strictly_feasible(cube().halfspaces(), 3);
    REQUIRE(s);
    CHECK(cube().contains_relint(*s));

    CHECK(lp_maximize(pt({"1"}), std::vector<HalfSpace>{{pt({"-1"}), 0}}).status == LpStatus::Unbounded);
    CHECK(lp_maximize(pt({"1"}), std::vector<HalfSpace>{{pt({"-1"}), -2}, {pt({"1"}), 1}}).status ==
          LpStatus::Infeasible);
}

TEST_CASE("support and normal cones") {
    auto sq = poly({{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}});
    auto s = support(sq, pt({"1", "0"}));
    CHECK(s.value == 1);
    CHECK(s.face.vertex_count() == 2);
    auto d = support(sq, pt({"1", "1"}));
    CHECK(d.value == 2);
    CHECK(d.face.vertices() == std::vector<Point>{pt({"1", "1"})});
    CHECK_THROWS_AS(support(sq, pt({"0", "0"})), Error);

    auto cone = normal_cone(sq, poly({{"1", "1"}}));
    CHECK(cone.generators.size() == 2);
    CHECK(cone.contains(pt({"1", "1"})));
    CHECK(cone.contains_interior(pt({"1", "2"})));
    CHECK_FALSE(cone.contains(pt({"-1", "1"})));
    CHECK(cone.generated_contains(pt({"3", "1"})));

    auto edge = normal_cone(sq, poly({{"1", "1"}, {"1", "-1"}}));
    CHECK(edge.generators.size() == 1);
    CHECK(edge.contains(pt({"2", "0"})));
    CHECK_FALSE(edge.contains(pt({"2", "1"})));
    CHECK_THROWS_AS(normal_cone(sq, poly({{"0", "0"}})), Error);
}

TEST_CASE("central symmetry") {
    CHECK(is_centrally_symmetric(cube()) == pt({"1/2", "1/2", "1/2"}));
    CHECK_FALSE(is_centrally_symmetric(triangle()));
    auto hex = poly({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}, {"1", "1"}, {"-1", "-1"}});
    CHECK(is_centrally_symmetric(hex) == pt({"0", "0"}));
}

TEST_CASE("metrics") {
    auto sq = unit_square();
    CHECK(hausdorff_sq(sq, sq) == 0);
    CHECK(dF_sq(sq, sq) == 0);
    auto shifted = sq.translated(pt({"3", "0"}));
    CHECK(hausdorff_sq(sq, shifted) == 9);
    CHECK(dF_sq(sq, shifted) == 9);

    auto seg = poly({{"0", "0"}, {"1", "0"}});
    auto tri = poly({{"0", "0"}, {"1", "0"}, {"1/2", "1/100"}});
    CHECK(hausdorff_sq(seg, tri) == Scalar(1, 10000));
    CHECK(dF_sq(seg, tri) == Scalar(1, 4) + Scalar(1, 10000));
    CHECK(distance_sq(sq, pt({"2", "2"})) == 2);
    CHECK(distance_sq(sq, pt({"1/2", "3"})) == 4);
}
