// Command-line front end: exact / approx / base / gen / audit.
//
// Exit codes: 0 success, 2 invalid input or usage, 3 capacity exceeded,
// 4 internal invariant violation.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tricount/approx_counter.hpp"
#include "tricount/base_estimator.hpp"
#include "tricount/cut_toolkit.hpp"
#include "tricount/io.hpp"

using namespace tricount;
using ordered_json = nlohmann::ordered_json;

namespace {

unsigned long env_cap(const char* name, unsigned long fallback) {
    const char* v = std::getenv(name);
    if (!v || !*v) return fallback;
    try {
        return std::stoul(v);
    } catch (const std::exception&) {
        throw InvalidInput(std::string(name) + " is not a positive integer: " + v);
    }
}

struct CommonOpts {
    std::string file;
    int threads = 1;
    bool json = false;
};

struct ApproxOpts {
    int k = 4;
    int delta = 6;
    std::string family = "triquad";
    std::string dp_mode = "basic";
    unsigned long max_triangulations = 0;
    unsigned long max_dp_points = 0;
    unsigned long max_cells = 0;
};

CellFamily parse_family(const std::string& s) {
    if (s == "triquad") return CellFamily::TriQuad;
    if (s == "binary-cut") return CellFamily::BinaryCut;
    if (s == "exhaustive") return CellFamily::Exhaustive;
    throw InvalidInput("unknown cell family: " + s);
}

DPConfig make_config(const ApproxOpts& a) {
    DPConfig cfg;
    cfg.k = a.k;
    cfg.delta = a.delta;
    cfg.family = parse_family(a.family);
    if (a.dp_mode == "basic")
        cfg.dp_mode = DPPointMode::BasicOnly;
    else if (a.dp_mode == "additional")
        cfg.dp_mode = DPPointMode::BasicAndAdditional;
    else
        throw InvalidInput("unknown dp-point mode: " + a.dp_mode);
    cfg.caps.max_triangulations = a.max_triangulations
                                      ? a.max_triangulations
                                      : env_cap("TRICOUNT_MAX_TRIANGULATIONS", kDefaultTriangulationCap);
    cfg.caps.max_dp_points = a.max_dp_points ? a.max_dp_points : env_cap("TRICOUNT_MAX_DP_POINTS", 200000);
    cfg.caps.max_cells = a.max_cells ? a.max_cells : env_cap("TRICOUNT_MAX_CELLS", 50000);
    return cfg;
}

void add_approx_opts(CLI::App* cmd, ApproxOpts& a) {
    cmd->add_option("--k", a.k, "max parts per partition step")->capture_default_str();
    cmd->add_option("--delta", a.delta, "base-case point threshold")->capture_default_str();
    cmd->add_option("--family", a.family, "cell family: triquad | binary-cut | exhaustive")
        ->capture_default_str();
    cmd->add_option("--dp-points", a.dp_mode, "DP point mode: basic | additional")
        ->capture_default_str();
    cmd->add_option("--max-triangulations", a.max_triangulations,
                    "cap on enumerated triangulations (default: env TRICOUNT_MAX_TRIANGULATIONS "
                    "or 10000000)");
    cmd->add_option("--max-dp-points", a.max_dp_points,
                    "cap on DP points (default: env TRICOUNT_MAX_DP_POINTS or 200000)");
    cmd->add_option("--max-cells", a.max_cells,
                    "cap on DP cells (default: env TRICOUNT_MAX_CELLS or 50000)");
}

void add_common_opts(CLI::App* cmd, CommonOpts& c, bool with_file = true) {
    if (with_file)
        cmd->add_option("file", c.file, "point file (\"x y\" lines or JSON [[x,y],...])")
            ->required();
    cmd->add_option("--threads", c.threads, "worker cap for parallel stages; results are "
                                            "independent of this value")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    cmd->add_flag("--json", c.json, "emit JSON instead of plain text");
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<WeightedTriangle> faces_of_triangulation(const std::vector<Point>& S,
                                                     const std::vector<Edge>& t) {
    std::set<Edge> es(t.begin(), t.end());
    std::vector<WeightedTriangle> out;
    int n = (int)S.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                if (!es.count({i, j}) || !es.count({j, k}) || !es.count({i, k})) continue;
                if (orient(S[i], S[j], S[k]) == 0) continue;
                bool face = true;
                for (int m = 0; m < n && face; ++m) {
                    if (m == i || m == j || m == k) continue;
                    if (point_in_triangle(RatPoint(S[m]), RatPoint(S[i]), RatPoint(S[j]),
                                          RatPoint(S[k])) != Region::Outside)
                        face = false;
                }
                if (face)
                    out.push_back(WeightedTriangle{
                        {RatPoint(S[i]), RatPoint(S[j]), RatPoint(S[k])}, Rat(1)});
            }
    return out;
}

ordered_json cut_report_json(const CutReport& rep) {
    ordered_json j;
    j["destroyed"] = rat_to_string(rep.destroyed_weight);
    j["inside"] = rat_to_string(rep.inside_weight);
    j["outside"] = rat_to_string(rep.outside_weight);
    j["within_edge_budget"] = rep.within_edge_budget;
    j["destroyed_ok"] = rep.destroyed_ok;
    j["inside_ok"] = rep.inside_ok;
    j["outside_ok"] = rep.outside_ok;
    j["verdict"] = rep.verdict;
    return j;
}

int run(int argc, char** argv) {
    CLI::App app{"Triangulation counting toolkit: exact flip-graph enumeration, cell-partition "
                 "approximation, and per-point base estimates.\n"
                 "Capacity caps may be overridden by the environment variables "
                 "TRICOUNT_MAX_TRIANGULATIONS, TRICOUNT_MAX_DP_POINTS and TRICOUNT_MAX_CELLS; "
                 "explicit flags win over the environment."};
    app.require_subcommand(1);

    CommonOpts c_exact, c_approx, c_base, c_gen, c_audit;
    ApproxOpts a_approx, a_base, a_audit;
    unsigned long exact_cap = 0;
    bool dump_table = false;
    double epsilon = 0.1;
    bool base_use_approx = false;
    std::string gen_kind = "random";
    int gen_n = 10;
    unsigned long gen_seed = 1;

    auto* exact = app.add_subcommand("exact", "exact triangulation count via flip-graph BFS");
    add_common_opts(exact, c_exact);
    exact->add_option("--max-triangulations", exact_cap,
                      "cap on enumerated triangulations (default: env "
                      "TRICOUNT_MAX_TRIANGULATIONS or 10000000)");

    auto* approx = app.add_subcommand("approx", "approximate count via the cell-partition DP");
    add_common_opts(approx, c_approx);
    add_approx_opts(approx, a_approx);
    approx->add_flag("--dump-table", dump_table, "also print the per-cell count table as JSON");

    auto* base = app.add_subcommand("base", "per-point base lambda^(1/n) with a 2^eps bracket");
    add_common_opts(base, c_base);
    base->add_option("--epsilon", epsilon, "bracket half-width in (0, 1/2)")
        ->capture_default_str();
    base->add_flag("--approx", base_use_approx, "estimate from the approximate count instead of "
                                                "the exact one");
    add_approx_opts(base, a_base);

    auto* gen = app.add_subcommand("gen", "deterministic point-set generators");
    gen->add_option("kind", gen_kind, "convex | grid | random")->required();
    gen->add_option("n", gen_n, "number of points")->required();
    gen->add_option("--seed", gen_seed, "generator seed")->capture_default_str();
    add_common_opts(gen, c_gen, /*with_file=*/false);

    auto* audit = app.add_subcommand(
        "audit", "exact-vs-approx ratio audit, per-cell provenance dump, and a rectangle-cut "
                 "spot check on the faces of one exact triangulation");
    add_common_opts(audit, c_audit);
    add_approx_opts(audit, a_audit);

    // Usage problems exit 2; --help and --version exit 0.
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (exact->parsed()) {
        auto t0 = std::chrono::steady_clock::now();
        auto S = load_points(c_exact.file);
        unsigned long cap =
            exact_cap ? exact_cap : env_cap("TRICOUNT_MAX_TRIANGULATIONS", kDefaultTriangulationCap);
        BigInt count = count_triangulations(S, cap);
        if (c_exact.json) {
            ordered_json j;
            j["command"] = "exact";
            j["n"] = S.size();
            j["hull_points"] = hull_point_count(S);
            j["count"] = count.get_str();
            std::cout << j.dump(2) << "\n";
            std::cerr << "wall_ms=" << ms_since(t0) << "\n";
        } else {
            std::cout << count.get_str() << "\n";
            std::cerr << "n=" << S.size() << " wall_ms=" << ms_since(t0) << "\n";
        }
    } else if (approx->parsed()) {
        auto S = load_points(c_approx.file);
        auto res = approx_count(S, make_config(a_approx));
        if (c_approx.json) {
            ordered_json j;
            j["command"] = "approx";
            j["n"] = S.size();
            j["count"] = res.count.get_str();
            j["cells"] = res.stats.cells;
            j["base_cells"] = res.stats.base_cells;
            j["partitions"] = res.stats.partitions;
            j["warnings"] = res.stats.warnings;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << res.count.get_str() << "\n";
            std::cerr << "n=" << S.size() << " cells=" << res.stats.cells
                      << " base_cells=" << res.stats.base_cells
                      << " partitions=" << res.stats.partitions << "\n";
            for (const auto& w : res.stats.warnings) std::cerr << "warning: " << w << "\n";
        }
        if (dump_table) std::cout << count_table_to_json(res.table) << "\n";
    } else if (base->parsed()) {
        auto S = load_points(c_base.file);
        BigInt lambda = base_use_approx
                            ? approx_count(S, make_config(a_base)).count
                            : count_triangulations(
                                  S, env_cap("TRICOUNT_MAX_TRIANGULATIONS", kDefaultTriangulationCap));
        auto est = estimate_base(lambda, S.size(), epsilon);
        ordered_json j;
        j["command"] = "base";
        j["n"] = est.n;
        j["lambda"] = lambda.get_str();
        j["source"] = base_use_approx ? "approx" : "exact";
        j["base"] = est.base;
        j["lower"] = est.lower;
        j["upper"] = est.upper;
        j["epsilon"] = est.epsilon_used;
        std::cout << j.dump(2) << "\n";
    } else if (gen->parsed()) {
        auto S = generate_points(parse_gen_kind(gen_kind), gen_n, gen_seed);
        if (c_gen.json) {
            ordered_json arr = ordered_json::array();
            for (const auto& p : S) arr.push_back({p.x.get_str(), p.y.get_str()});
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << format_points(S);
        }
    } else if (audit->parsed()) {
        auto t0 = std::chrono::steady_clock::now();
        auto S = load_points(c_audit.file);
        DPConfig cfg = make_config(a_audit);
        auto aud = ratio_audit(S, cfg);
        auto res = approx_count(S, cfg);

        // Rectangle-cut spot check on the faces of the seed triangulation.
        auto faces = faces_of_triangulation(S, initial_triangulation(S));
        ordered_json cut;
        bool one_third_ok = true;
        Rat total = 0, biggest = 0;
        for (const auto& f : faces) total += f.weight;
        for (const auto& f : faces)
            if (f.weight > biggest) biggest = f.weight;
        if (biggest * 3 > total) one_third_ok = false;
        if (one_third_ok) {
            auto found = search_cut(faces, Rat(1, 2), 4, CutCandidateFamily::AxisRectangles);
            cut["searched"] = true;
            cut["found"] = found.has_value();
            if (found) {
                ordered_json verts = ordered_json::array();
                for (const auto& v : found->vertices)
                    verts.push_back({rat_to_string(v.x), rat_to_string(v.y)});
                cut["cut"] = verts;
                cut["report"] = cut_report_json(verify_cut(*found, faces, Rat(1, 2), 4));
            }
        } else {
            cut["searched"] = false;
            cut["reason"] = "a single face carries more than one third of the weight";
        }

        ordered_json j;
        j["command"] = "audit";
        j["n"] = S.size();
        j["config"] = {{"k", cfg.k},
                       {"delta", cfg.delta},
                       {"family", a_audit.family},
                       {"dp_points", a_audit.dp_mode}};
        j["exact"] = aud.exact.get_str();
        j["approx"] = aud.approx.get_str();
        j["log2_ratio_per_point"] =
            aud.underflow ? ordered_json(nullptr) : ordered_json(aud.log2_ratio_per_point);
        j["underflow"] = aud.underflow;
        j["cells"] = res.stats.cells;
        j["base_cells"] = res.stats.base_cells;
        j["partitions"] = res.stats.partitions;
        j["faces_checked"] = faces.size();
        j["rectangle_cut"] = cut;
        std::cout << j.dump(2) << "\n";
        std::cout << count_table_to_json(res.table) << "\n";
        std::cerr << "wall_ms=" << ms_since(t0) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CapacityExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) { // InvalidInput, NoTriangulation, UndefinedBase, ...
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
