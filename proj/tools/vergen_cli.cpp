// Command-line front end over the C API.
//
// Exit codes: 0 pass / 1 verdict false / 2 usage, input or budget error.

#include "vergen.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <memory>
#include <sstream>
#include <string>

namespace {

using Json = nlohmann::json;

struct Failure {
    vg_status status;
    std::string message;
};

void check(vg_status s) {
    if (s != VG_OK) throw Failure{s, vg_last_error()};
}

[[noreturn]] void usage_error(const std::string& msg) { throw Failure{VG_ERR_INVALID_ARGUMENT, msg}; }

struct PolytopeDeleter {
    void operator()(vg_polytope* p) const { vg_polytope_destroy(p); }
};
using Handle = std::unique_ptr<vg_polytope, PolytopeDeleter>;

struct Options {
    std::string in = "-";
    std::string out = "-";
    std::string with;
    std::string svg;
    std::uint64_t seed = 1;
    std::string tol = "1/1024";
    std::size_t cell_budget = 1000000;
    std::size_t point_budget = 1000000;
    int retry_budget = 16;
    int threads = 1;

    std::string lambda = "1/2";
    std::string eps = "1/10";
    std::string mu = "1/2";
    std::string matrix;
    std::string a, b;
    std::string shape = "cube";
    std::string suite = "all";
    int dim = 2;
    int depth = 3;
    int k = 1;
    int l = -1;
    std::size_t cases = 10;
    bool halfspaces = false;
    bool decorated = false;
};

std::string read_text(const std::string& path) {
    if (path == "-") return std::string(std::istreambuf_iterator<char>(std::cin), {});
    std::ifstream f(path);
    if (!f) usage_error("cannot open " + path);
    return std::string(std::istreambuf_iterator<char>(f), {});
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path);
    if (!f) usage_error("cannot write " + path);
    f << text;
}

Handle load(const std::string& path) {
    vg_polytope* p = nullptr;
    check(vg_polytope_from_json(read_text(path).c_str(), &p));
    return Handle(p);
}

vg_config make_config(const Options& o) {
    vg_config c;
    vg_config_default(&c);
    c.seed = o.seed;
    c.tol = o.tol.c_str();
    c.cell_budget = o.cell_budget;
    c.point_budget = o.point_budget;
    c.retry_budget = o.retry_budget;
    c.parallelism = o.threads;
    return c;
}

std::string take(char* s) {
    std::string out(s);
    vg_string_free(s);
    return out;
}

// Writes a polytope result; always a pass.
int emit_polytope(const Options& o, Handle p) {
    char* s = nullptr;
    check(vg_polytope_to_json(p.get(), o.halfspaces ? 1 : 0, &s));
    write_text(o.out, take(s) + "\n");
    return 0;
}

// Writes a verdict document, peeling off an "svg" payload into --svg.
int emit_verdict(const Options& o, char* raw) {
    Json j = Json::parse(take(raw));
    if (j.contains("svg")) {
        if (!o.svg.empty()) write_text(o.svg, j["svg"].get<std::string>());
        j.erase("svg");
    }
    write_text(o.out, j.dump() + "\n");
    return j.value("verdict", false) ? 0 : 1;
}

// Accepts a JSON matrix or one of the names neg / rot90 / rot120.
std::string matrix_text(const std::string& m) {
    static const std::map<std::string, std::string> named{
        {"neg", "[[-1,0],[0,-1]]"}, {"rot90", "[[0,-1],[1,0]]"}, {"rot120", "[[0,-1],[1,-1]]"}};
    if (m.empty()) usage_error("--matrix is required");
    const auto it = named.find(m);
    return it != named.end() ? it->second : m;
}

std::string segment_text(const Options& o) {
    if (o.a.empty() || o.b.empty()) usage_error("--a and --b are required");
    auto as_list = [](const std::string& s) {
        Json arr = Json::array();
        std::stringstream ss(s);
        for (std::string part; std::getline(ss, part, ',');) arr.push_back(part);
        return arr;
    };
    return Json{{"a", as_list(o.a)}, {"b", as_list(o.b)}}.dump();
}

Handle load_with(const Options& o) {
    if (o.with.empty()) usage_error("--with is required");
    return load(o.with);
}

int run(const std::string& cmd, const Options& o) {
    const vg_config cfg = make_config(o);
    char* s = nullptr;

    if (cmd == "gen") {
        vg_polytope* p = nullptr;
        check(vg_generate(o.shape.c_str(), o.dim, o.seed, &p));
        return emit_polytope(o, Handle(p));
    }
    if (cmd == "zonotope") {
        vg_polytope* p = nullptr;
        check(vg_zonotope(read_text(o.in).c_str(), &p));
        return emit_polytope(o, Handle(p));
    }
    if (cmd == "props") {
        check(vg_props(o.suite.c_str(), o.cases, &cfg, &s));
        return emit_verdict(o, s);
    }

    const Handle p = load(o.in);
    if (cmd == "sum" || cmd == "add-segment" || cmd == "linear") {
        vg_polytope* r = nullptr;
        if (cmd == "sum") {
            const Handle q = load_with(o);
            check(vg_minkowski_sum(p.get(), q.get(), &r));
        } else if (cmd == "add-segment") {
            check(vg_add_segment(p.get(), segment_text(o).c_str(), &r));
        } else {
            check(vg_linear_image(p.get(), matrix_text(o.matrix).c_str(), &r));
        }
        return emit_polytope(o, Handle(r));
    }

    const char* lam = o.lambda.c_str();
    if (cmd == "check-vg") check(vg_check_vg(p.get(), lam, &cfg, &s));
    else if (cmd == "lambda") check(vg_lambda(p.get(), &cfg, &s));
    else if (cmd == "defect") check(vg_defect(p.get(), lam, o.svg.empty() ? 0 : 1, &cfg, &s));
    else if (cmd == "face-inheritance") check(vg_face_inheritance(p.get(), lam, &cfg, &s));
    else if (cmd == "symmetric") check(vg_symmetric_criterion(p.get(), lam, &cfg, &s));
    else if (cmd == "vertex-bound") check(vg_vertex_bound(p.get(), lam, &cfg, &s));
    else if (cmd == "monotonicity") check(vg_segment_monotonicity(p.get(), segment_text(o).c_str(), lam, &cfg, &s));
    else if (cmd == "pvap") check(vg_pvap(p.get(), matrix_text(o.matrix).c_str(), &cfg, &s));
    else if (cmd == "skeleton") check(vg_skeleton(p.get(), o.k, o.l, o.mu.c_str(), &cfg, &s));
    else if (cmd == "critical-dim") check(vg_critical_dimension(p.get(), &cfg, &s));
    else if (cmd == "simplex-scan") check(vg_simplex_scan(p.get(), &cfg, &s));
    else if (cmd == "augment") check(vg_augment(p.get(), &cfg, &s));
    else if (cmd == "densify") check(vg_densify(p.get(), o.eps.c_str(), &cfg, &s));
    else if (cmd == "lift") check(vg_lift(p.get(), o.decorated ? lam : nullptr, &cfg, &s));
    else if (cmd == "fractal") check(vg_fractal(p.get(), lam, o.depth, o.svg.empty() ? 0 : 1, &cfg, &s));
    else if (cmd == "net") check(vg_net(p.get(), lam, o.k, &cfg, &s));
    else if (cmd == "generic-pair") {
        const Handle q = load_with(o);
        check(vg_generic_pair(p.get(), q.get(), lam, &cfg, &s));
    } else if (cmd == "dF" || cmd == "dH") {
        const Handle q = load_with(o);
        check(vg_distance(p.get(), q.get(), cmd.c_str(), &s));
    } else {
        usage_error("unknown command " + cmd);
    }
    return emit_verdict(o, s);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact analysis of vertex-generated polytopes"};
    app.require_subcommand(1);
    Options o;

    auto io = [&](CLI::App* c) {
        c->add_option("--in", o.in, "input JSON file ('-' for stdin)");
        c->add_option("--out", o.out, "output file ('-' for stdout)");
    };
    auto run_opts = [&](CLI::App* c) {
        c->add_option("--seed", o.seed, "random seed");
        c->add_option("--tol", o.tol, "bracket tolerance (rational)");
        c->add_option("--cell-budget", o.cell_budget, "maximum residual cells")->check(CLI::PositiveNumber);
        c->add_option("--point-budget", o.point_budget, "maximum point-cloud size")->check(CLI::PositiveNumber);
        c->add_option("--retry-budget", o.retry_budget, "maximum refinement attempts")->check(CLI::PositiveNumber);
        c->add_option("--threads", o.threads, "worker threads (VERGEN_THREADS overrides)")->check(CLI::PositiveNumber);
    };
    auto lambda = [&](CLI::App* c) { c->add_option("--lambda", o.lambda, "lambda (rational)"); };
    auto with = [&](CLI::App* c) { c->add_option("--with", o.with, "second polytope JSON file")->required(); };
    auto seg = [&](CLI::App* c) {
        c->add_option("--a", o.a, "segment start, e.g. 0,1/2")->required();
        c->add_option("--b", o.b, "segment end")->required();
    };
    auto svg = [&](CLI::App* c) { c->add_option("--svg", o.svg, "also write an SVG rendering to this file"); };

    std::map<std::string, CLI::App*> cmds;
    auto add = [&](const std::string& name, const std::string& help) {
        CLI::App* c = app.add_subcommand(name, help);
        io(c);
        run_opts(c);
        c->add_flag("--halfspaces", o.halfspaces, "include halfspaces in polytope output");
        cmds[name] = c;
        return c;
    };

    lambda(add("check-vg", "decide P = (1-l)P + l V(P)"));
    add("lambda", "certified bracket for the largest l");
    {
        auto* c = add("defect", "region P minus (1-l)P + l V(P)");
        lambda(c);
        svg(c);
    }
    with(add("sum", "Minkowski sum with --with"));
    seg(add("add-segment", "sum with the segment [a, b]"));
    add("zonotope", "zonotope JSON to polytope");
    add("linear", "image under --matrix")->add_option("--matrix", o.matrix, "row-major JSON or neg|rot90|rot120");
    add("augment", "zonotope Z with P + Z vertex generated");
    add("densify", "nearby planar vertex-generated polytope")->add_option("--eps", o.eps, "Hausdorff tolerance");
    {
        auto* c = add("lift", "symmetric lift conv(P x {1}, -P x {-1})");
        lambda(c);
        c->add_flag("--decorated", o.decorated, "decorate side faces so the lift is lambda-VG");
    }
    {
        auto* c = add("fractal", "partial vertex series point cloud");
        lambda(c);
        c->add_option("--depth", o.depth, "series level k");
        svg(c);
    }
    {
        auto* c = add("net", "covering net certificate");
        lambda(c);
        c->add_option("--k", o.k, "level");
    }
    {
        auto* c = add("generic-pair", "generic-pair test, plus sum check at --lambda");
        with(c);
        lambda(c);
    }
    add("pvap", "convexity of P + V(AP) for a finite-order A")
        ->add_option("--matrix", o.matrix, "row-major JSON or neg|rot90|rot120")
        ->required();
    {
        auto* c = add("skeleton", "skeleton sum coverage");
        c->add_option("--k", o.k, "face dimension");
        c->add_option("--l", o.l, "second face dimension (pairwise form)");
        c->add_option("--mu", o.mu, "weight on the k-skeleton");
    }
    add("critical-dim", "smallest k with 2P = skel_k P + skel_(n-k) P");
    with(add("dF", "squared Hausdorff distance of vertex sets"));
    with(add("dH", "squared Hausdorff distance"));
    {
        auto* c = add("gen", "named or random instance");
        c->add_option("--shape", o.shape, "simplex|cube|cross|zonotope|random-hull");
        c->add_option("--dim", o.dim, "dimension");
    }
    {
        auto* c = add("props", "seeded property suites");
        c->add_option("--suite", o.suite, "all|zonotope|segment|faces|symmetric|generic|series|covering|skeleton|simplex");
        c->add_option("--cases", o.cases, "cases per suite");
    }
    lambda(add("face-inheritance", "which faces are lambda-VG"));
    lambda(add("symmetric", "boundary criterion for symmetric polytopes"));
    lambda(add("vertex-bound", "|V(P)| >= (1/(1-l))^n"));
    {
        auto* c = add("monotonicity", "defect monotonicity under adding [a, b]");
        lambda(c);
        seg(c);
    }
    add("simplex-scan", "simplex minimality of lambda");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string name;
    for (const auto& [n, c] : cmds)
        if (c->parsed()) name = n;

    try {
        return run(name, o);
    } catch (const Failure& f) {
        std::cerr << Json{{"error", f.message}, {"kind", vg_status_name(f.status)}}.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", e.what()}, {"kind", "internal error"}}.dump() << "\n";
        return 2;
    }
}
