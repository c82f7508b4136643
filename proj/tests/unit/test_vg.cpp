#include "doctest.h"
#include "helpers.hpp"

#include "vergen/vg.hpp"

using namespace vergen;
using namespace testing;

namespace {

Polytope octahedron() {
    return poly({{"1", "0", "0"}, {"-1", "0", "0"}, {"0", "1", "0"}, {"0", "-1", "0"}, {"0", "0", "1"},
                 {"0", "0", "-1"}});
}

Polytope tetrahedron() { return poly({{"0", "0", "0"}, {"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}}); }

}  // namespace

TEST_CASE("is_vg basics") {
    CHECK(is_vg(unit_square(), q("1/2")).vg);
    auto t = is_vg(triangle(), q("1/2"));
    CHECK_FALSE(t.vg);
    REQUIRE(t.witness);
    CHECK(is_vg(triangle(), q("1/3")).vg);
    CHECK(is_vg(cube(), q("1/2")).vg);
    CHECK(is_vg(tetrahedron(), q("1/4")).vg);
    CHECK_FALSE(is_vg(octahedron(), q("1/2")).vg);
    CHECK(is_vg(octahedron(), q("1/3")).vg);
}

TEST_CASE("lambda brackets") {
    auto sq = lambda_of(unit_square(), q("1/1024"));
    CHECK(sq.lo == q("1/2"));
    CHECK(sq.hi == q("1/2"));
    auto t = lambda_of(triangle(), q("1/1024"));
    CHECK(t.lo == q("1/3"));
    CHECK(t.hi - t.lo <= q("1/1024"));
    CHECK(t.lo_certified);
    CHECK(t.hi_certified);
}

TEST_CASE("defect") {
    auto d = defect(triangle(), q("1/2"));
    CHECK(d.volume == q("1/8"));
    CHECK(defect(unit_square(), q("1/2")).volume == 0);
}

TEST_CASE("vertex bound") {
    auto c = vertex_bound_check(cube(), q("1/2"));
    CHECK(c.pass);
    CHECK(c.equality);
    CHECK(c.parallelepiped);
    auto hex = poly({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}, {"1", "1"}, {"-1", "-1"}});
    auto h = vertex_bound_check(hex, q("1/2"));
    CHECK(h.pass);
    CHECK_FALSE(h.equality);
}

TEST_CASE("face inheritance") {
    auto c = face_inheritance_check(cube(), q("1/2"));
    CHECK(c.pass);
    CHECK(c.obstructions.empty());
    auto o = face_inheritance_check(octahedron(), q("1/2"));
    CHECK(o.pass);
    CHECK(o.obstructions.size() == 8);
}

TEST_CASE("symmetric criterion") {
    auto o3 = symmetric_boundary_criterion(octahedron(), q("1/3"));
    CHECK(o3.boundary_covered);
    CHECK(o3.agree);
    auto o2 = symmetric_boundary_criterion(octahedron(), q("1/2"));
    CHECK_FALSE(o2.boundary_covered);
    CHECK(o2.agree);
    CHECK(symmetric_boundary_criterion(cube(), q("1/2")).boundary_covered);
}

TEST_CASE("generic pairs") {
    auto sq = poly({{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}});
    auto g = generic_pair(sq, sq);
    CHECK_FALSE(g.generic);
    REQUIRE(g.shared);
    auto diamond = poly({{"1", "0"}, {"-1", "0"}, {"0", "1"}, {"0", "-1"}});
    CHECK(generic_pair(sq, diamond).generic);
    CHECK_FALSE(generic_pair(sq, sq.translated(pt({"1/3", "2/7"}))).generic);
    auto s = generic_sum_check(sq, diamond, q("1/2"));
    CHECK(s.preconditions);
    CHECK(s.sum_vg);
}

TEST_CASE("pvap") {
    auto sq = poly({{"-1", "-1"}, {"1", "-1"}, {"-1", "1"}, {"1", "1"}});
    Matrix neg{pt({"-1", "0"}), pt({"0", "-1"})};
    Matrix rot{pt({"0", "-1"}), pt({"1", "0"})};
    auto a = pvap_check(sq, neg);
    CHECK(a.convex);
    CHECK(a.clause2);
    auto b = pvap_check(triangle(), neg);
    CHECK_FALSE(b.convex);
    CHECK_FALSE(b.clause2);
    auto c = pvap_check(sq, rot);
    CHECK(c.order == 4);
    CHECK(c.convex);
    CHECK(c.clause2);
}

TEST_CASE("skeleton sums and critical dimension") {
    auto cb = cube().translated(pt({"-1/2", "-1/2", "-1/2"}));
    CHECK(skeleton_sum_check(cb, 1, q("1/3")).covered);
    CHECK(skeleton_pair_check(cb, 2, 1, q("1/2")).covered);
    auto mixed = skeleton_pair_check(cb, 1, 2, q("2/3"));
    CHECK_FALSE(mixed.covered);
    CHECK(mixed.witness == pt({"0", "0", "0"}));
    CHECK(skeleton_sum_check(triangle(), 1, q("1/2")).covered);
    CHECK(critical_dimension(unit_square()) == 0);
    CHECK(critical_dimension(cube()) == 0);
    CHECK(critical_dimension(tetrahedron()) == 1);
}

TEST_CASE("segment monotonicity and erosion") {
    auto r = segment_monotonicity_check(triangle(), Segment{pt({"0", "0"}), pt({"1", "2"})}, q("2/5"));
    CHECK(r.pass);
    // a far-away segment only translates P + l; the check recenters it
    auto far = segment_monotonicity_check(triangle(), Segment{pt({"7", "-3"}), pt({"15/2", "-2"})}, q("2/5"));
    CHECK(far.pass);
    CHECK(far.defect_after <= far.defect_before);
    auto tiny = unit_square().scaled(q("1/100"), pt({"0", "0"}));
    auto e = erosion_membership(triangle(), tiny, q("1/2"), pt({"1/3", "1/3"}));
    CHECK(e.in_lhs);
    CHECK(e.in_rhs);
    CHECK_FALSE(erosion_membership(unit_square(), tiny, q("1/2"), pt({"1/2", "1/2"})).in_lhs);
}

TEST_CASE("simplex minimality") {
    auto t = simplex_minimality_scan(triangle(), q("1/1024"));
    CHECK(t.simplex);
    CHECK(t.pass);
    CHECK_FALSE(t.probe_vg);
    auto s = simplex_minimality_scan(unit_square(), q("1/1024"));
    CHECK(s.pass);
}
