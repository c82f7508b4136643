// Exercises the shared library through the C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "vergen.h"

#include <string>

namespace {

struct Poly {
    vg_polytope* p = nullptr;
    ~Poly() { vg_polytope_destroy(p); }
};

std::string take(char* s) {
    std::string out = s ? s : "";
    vg_string_free(s);
    return out;
}

bool has(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("round trip through JSON") {
    Poly sq;
    REQUIRE(vg_polytope_from_json(R"({"vertices": [["1","1"],["0","0"],["1","0"],["0","1"],["1/2","1/2"]]})", &sq.p) == VG_OK);
    CHECK(vg_polytope_ambient_dim(sq.p) == 2);
    CHECK(vg_polytope_dim(sq.p) == 2);
    CHECK(vg_polytope_vertex_count(sq.p) == 4);
    char* s = nullptr;
    REQUIRE(vg_polytope_to_json(sq.p, 0, &s) == VG_OK);
    CHECK(take(s) == R"({"dim":2,"vertices":[["0","0"],["0","1"],["1","0"],["1","1"]]})");

    // halfspaces-only input
    Poly h;
    REQUIRE(vg_polytope_from_json(
                R"({"dim":1,"halfspaces":[{"normal":["1"],"offset":"2"},{"normal":["-1"],"offset":"0"}]})", &h.p) == VG_OK);
    REQUIRE(vg_polytope_to_json(h.p, 0, &s) == VG_OK);
    CHECK(take(s) == R"({"dim":1,"vertices":[["0"],["2"]]})");
}

TEST_CASE("errors carry codes and messages") {
    vg_polytope* p = nullptr;
    CHECK(vg_polytope_from_json("{", &p) == VG_ERR_PARSE);
    CHECK(std::string(vg_last_error()).size() > 0);
    CHECK(vg_polytope_from_json(R"({"vertices": [["1/0"]]})", &p) == VG_ERR_PARSE);
    CHECK(vg_polytope_from_json(R"({"vertices": []})", &p) == VG_ERR_EMPTY);
    CHECK(vg_polytope_from_json(R"({"vertices": [["1"],["1","2"]]})", &p) == VG_ERR_DIMENSION_MISMATCH);
    CHECK(vg_polytope_from_json(R"({"dim":1,"halfspaces":[{"normal":["1"],"offset":"0"}]})", &p) == VG_ERR_UNBOUNDED);
    CHECK(p == nullptr);
    CHECK(vg_generate("blob", 2, 1, &p) == VG_ERR_INVALID_ARGUMENT);

    Poly cube4;
    REQUIRE(vg_generate("cube", 4, 1, &cube4.p) == VG_OK);
    char* s = nullptr;
    CHECK(vg_augment(cube4.p, nullptr, &s) == VG_ERR_DIMENSION_CAP);
    CHECK(vg_check_vg(nullptr, "1/2", nullptr, &s) == VG_ERR_INVALID_ARGUMENT);

    vg_config cfg;
    vg_config_default(&cfg);
    cfg.point_budget = 10;
    Poly sq;
    REQUIRE(vg_generate("cube", 2, 1, &sq.p) == VG_OK);
    CHECK(vg_fractal(sq.p, "1/2", 4, 0, &cfg, &s) == VG_ERR_BUDGET);
    CHECK(std::string(vg_status_name(VG_ERR_BUDGET)) == "budget exceeded");
}

TEST_CASE("analyses return verdicts") {
    Poly cube, cross, tri;
    REQUIRE(vg_generate("cube", 3, 1, &cube.p) == VG_OK);
    REQUIRE(vg_generate("cross", 3, 1, &cross.p) == VG_OK);
    REQUIRE(vg_generate("simplex", 2, 1, &tri.p) == VG_OK);
    char* s = nullptr;

    REQUIRE(vg_check_vg(cube.p, "1/2", nullptr, &s) == VG_OK);
    CHECK(has(take(s), R"("verdict":true)"));
    REQUIRE(vg_check_vg(cross.p, "1/2", nullptr, &s) == VG_OK);
    const std::string cr = take(s);
    CHECK(has(cr, R"("verdict":false)"));
    CHECK(has(cr, R"("witness":[)"));

    REQUIRE(vg_defect(tri.p, "1/2", 1, nullptr, &s) == VG_OK);
    const std::string d = take(s);
    CHECK(has(d, R"("volume":"1/8")"));
    CHECK(has(d, "<svg"));

    REQUIRE(vg_lambda(tri.p, nullptr, &s) == VG_OK);
    CHECK(has(take(s), R"("lo":"1/3")"));

    REQUIRE(vg_critical_dimension(cube.p, nullptr, &s) == VG_OK);
    CHECK(has(take(s), R"("critical_dimension":0)"));

    REQUIRE(vg_pvap(tri.p, "[[-1,0],[0,-1]]", nullptr, &s) == VG_OK);
    const std::string pv = take(s);
    CHECK(has(pv, R"("convex":false)"));
    CHECK(has(pv, R"("verdict":true)"));

    Poly sum;
    REQUIRE(vg_minkowski_sum(tri.p, tri.p, &sum.p) == VG_OK);
    CHECK(vg_polytope_vertex_count(sum.p) == 3);
    Poly seg;
    REQUIRE(vg_add_segment(tri.p, R"({"a":["0","0"],"b":["1","1"]})", &seg.p) == VG_OK);
    CHECK(vg_polytope_vertex_count(seg.p) == 5);
    Poly z;
    REQUIRE(vg_zonotope(R"({"dim":2,"center":["0","0"],"generators":[["1","0"],["0","1"]]})", &z.p) == VG_OK);
    CHECK(vg_polytope_vertex_count(z.p) == 4);
    Poly img;
    REQUIRE(vg_linear_image(tri.p, "[[2,0],[0,3]]", &img.p) == VG_OK);
    REQUIRE(vg_distance(tri.p, img.p, "dF", &s) == VG_OK);
    CHECK(has(take(s), R"("squared":"4")"));
    REQUIRE(vg_props("generic", 2, nullptr, &s) == VG_OK);
    CHECK(has(take(s), R"("verdict":true)"));
}
