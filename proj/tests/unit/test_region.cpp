#include "doctest.h"
#include "helpers.hpp"

#include "vergen/instances.hpp"
#include "vergen/region.hpp"

using namespace vergen;
using namespace testing;

TEST_CASE("region subtraction") {
    auto sq = unit_square();
    CHECK(subtract(Region::of(sq), sq).empty());

    auto big = sq.scaled(2, pt({"0", "0"}));
    auto r = subtract(Region::of(big), sq);
    CHECK(r.volume() == 3);

    auto t = triangle();
    auto corner = t.scaled(q("1/2"), pt({"0", "0"}));
    CHECK(subtract(Region::of(t), corner).volume() == q("3/8"));

    auto line = poly({{"0", "1/2"}, {"1", "1/2"}});
    CHECK(subtract(Region::of(sq), line).volume() == 1);

    auto i = intersect(Region::of(big), sq.translated(pt({"1/2", "1/2"})));
    CHECK(i.volume() == 1);
}

TEST_CASE("covers") {
    auto sq = unit_square();
    CHECK(covers(sq, {sq}).covered);

    std::vector<Polytope> corners;
    for (const auto& v : sq.vertices()) corners.push_back(sq.scaled(q("1/2"), q("1/2") * v));
    CHECK(covers(sq, corners).covered);

    auto t = triangle();
    std::vector<Polytope> tc;
    for (const auto& v : t.vertices()) tc.push_back(t.scaled(q("1/2"), q("1/2") * v));
    auto c = covers(t, tc);
    CHECK_FALSE(c.covered);
    REQUIRE(c.witness);
    CHECK(t.contains_relint(*c.witness));
    for (const auto& p : tc) CHECK_FALSE(p.contains(*c.witness));
    CHECK(c.residual.volume() == q("1/8"));
    auto medial = c.residual.as_convex();
    REQUIRE(medial);
    CHECK(*medial == poly({{"1/2", "0"}, {"0", "1/2"}, {"1/2", "1/2"}}));
}

TEST_CASE("covers in a lower-dimensional hull") {
    auto seg = poly({{"0", "0", "0"}, {"2", "2", "0"}});
    auto a = poly({{"0", "0", "0"}, {"1", "1", "0"}});
    auto b = poly({{"1", "1", "0"}, {"3", "3", "0"}});
    CHECK(covers(seg, {a, b}).covered);
    auto c = covers(seg, {a});
    CHECK_FALSE(c.covered);
    REQUIRE(c.witness);
    CHECK(seg.contains(*c.witness));
    auto box = cube().scaled(4, pt({"-1", "-1", "-1"}));
    CHECK(covers(seg, {box}).covered);
}

TEST_CASE("region invariants on random instances") {
    for (std::uint64_t i = 0; i < 8; ++i) {
        vergen::Random rng(vergen::case_seed(42, i));
        auto p = rng.hull(2, 5);
        auto cut = rng.hull(2, 4);
        auto r = Region::of(p);
        // inclusion-exclusion: vol(R - Q) = vol(R) - vol(R n Q)
        CHECK(subtract(r, cut).volume() == r.volume() - intersect(r, cut).volume());

        // covered <=> residual volume 0 <=> no residual cell; witnesses avoid every piece
        std::vector<Polytope> pieces{cut, p.scaled(q("1/2"), q("1/2") * p.vertices()[0])};
        auto c = covers(p, pieces);
        CHECK(c.covered == (c.residual.volume() == 0));
        CHECK(c.covered == c.residual.empty());
        if (c.witness) {
            CHECK(p.contains_relint(*c.witness));
            for (const auto& k : pieces) CHECK_FALSE(k.contains(*c.witness));
        }
    }
}

TEST_CASE("boundary points of a covered polytope lie in a closed piece") {
    // the square at 1/2: its pieces are the four quarter squares
    auto sq = unit_square();
    std::vector<Polytope> pieces;
    for (const auto& v : sq.vertices()) pieces.push_back(sq.scaled(q("1/2"), q("1/2") * v));
    REQUIRE(covers(sq, pieces).covered);
    for (const auto& x : {pt({"1/2", "0"}), pt({"1", "1/3"}), pt({"0", "0"}), pt({"1/2", "1/2"})}) {
        bool hit = false;
        for (const auto& k : pieces) hit = hit || k.contains(x);
        CHECK(hit);
    }
}
