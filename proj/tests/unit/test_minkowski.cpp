#include "doctest.h"
#include "helpers.hpp"

#include "vergen/error.hpp"
#include "vergen/minkowski.hpp"

using namespace vergen;
using namespace testing;

TEST_CASE("minkowski sums") {
    auto h = poly({{"0", "0"}, {"1", "0"}});
    auto v = poly({{"0", "0"}, {"0", "1"}});
    CHECK(minkowski_sum(h, v) == unit_square());

    auto t = triangle();
    auto hex = minkowski_sum(t, reflect(t));
    CHECK(hex.vertex_count() == 6);

    auto moved = minkowski_sum(t, poly({{"2", "3"}}));
    CHECK(moved == t.translated(pt({"2", "3"})));
    CHECK_THROWS_AS(minkowski_sum(t, cube()), Error);
}

TEST_CASE("segments and zonotopes") {
    auto wide = add_segment(unit_square(), Segment{pt({"0", "0"}), pt({"2", "0"})});
    CHECK(wide == poly({{"0", "0"}, {"3", "0"}, {"0", "1"}, {"3", "1"}}));
    CHECK(add_segment(triangle(), Segment{pt({"0", "0"}), pt({"1", "1"})}).vertex_count() == 5);
    CHECK(add_segment(triangle(), Segment{pt({"0", "0"}), pt({"1", "0"})}).vertex_count() == 4);
    CHECK(add_segment(triangle(), Segment{pt({"1", "1"}), pt({"1", "1"})}) == triangle().translated(pt({"1", "1"})));

    Zonotope sq{pt({"0", "0"}), {pt({"1", "0"}), pt({"0", "1"})}};
    CHECK(zonotope_to_polytope(sq) == poly({{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}}));
    Zonotope hx{pt({"0", "0"}), {pt({"1", "0"}), pt({"0", "1"}), pt({"1", "1"})}};
    auto hp = zonotope_to_polytope(hx);
    CHECK(hp.vertex_count() == 6);
    CHECK(is_centrally_symmetric(hp) == pt({"0", "0"}));
    CHECK(zonotope_to_polytope(Zonotope{pt({"1", "2"}), {}}).vertex_count() == 1);
}

TEST_CASE("linear images") {
    Matrix neg{pt({"-1", "0"}), pt({"0", "-1"})};
    CHECK(linear_image(triangle(), neg) == poly({{"0", "0"}, {"-1", "0"}, {"0", "-1"}}));
    Matrix rot{pt({"0", "-1"}), pt({"1", "0"})};
    auto sq = poly({{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}});
    CHECK(linear_image(sq, rot) == sq);
    Matrix stretch{pt({"1", "0"}), pt({"0", "2"})};
    CHECK(linear_image(sq, stretch) == poly({{"-1", "-2"}, {"1", "-2"}, {"-1", "2"}, {"1", "2"}}));
    Matrix singular{pt({"1", "1"}), pt({"1", "1"})};
    CHECK_THROWS_AS(linear_image(sq, singular), Error);
}

TEST_CASE("face after a segment sum") {
    auto sq = unit_square();
    auto r = face_after_segment_sum(sq, poly({{"1", "1"}}), pt({"1", "0"}), 1);
    CHECK(r.face == poly({{"2", "1"}}));
    auto e = face_after_segment_sum(sq, poly({{"1", "0"}, {"1", "1"}}), pt({"1", "0"}), 1);
    CHECK(e.face == poly({{"2", "0"}, {"2", "1"}}));
    CHECK_THROWS_AS(face_after_segment_sum(sq, poly({{"0", "0"}, {"0", "1"}}), pt({"1", "0"}), 1), Error);
}

TEST_CASE("support of a sum is the sum of supports") {
    auto p = poly({{"0", "0"}, {"2", "1"}, {"1", "3"}, {"-1", "2"}});
    auto q = poly({{"0", "0"}, {"1", "0"}, {"0", "1"}});
    auto s = minkowski_sum(p, q);
    for (auto u : {pt({"1", "0"}), pt({"1", "1"}), pt({"-2", "1"}), pt({"0", "-1"}), pt({"1", "-1"})}) {
        auto a = support(s, u), b = support(p, u), c = support(q, u);
        CHECK(a.value == b.value + c.value);
        CHECK(a.face == minkowski_sum(b.face, c.face));
    }
}
