// Command-line front end: generation, solving, exact oracles, verification,
// hardness reductions, and the benchmark sweep.
//
// Exit codes: 0 success, 1 usage error, 2 infeasibility or validation
// failure, 3 node budget exhausted. Errors go to stderr as JSON.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "geodis/awvd.hpp"
#include "geodis/exact.hpp"
#include "geodis/graphs.hpp"
#include "geodis/instance.hpp"
#include "geodis/local_search.hpp"
#include "geodis/reductions.hpp"

using namespace geodis;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitBudget = 3;

[[noreturn]] void fail(int code, const std::string& message) {
    json err;
    err["error"] = message;
    err["code"] = code;
    std::cerr << err.dump() << "\n";
    std::exit(code);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text << "\n";
        return;
    }
    std::ofstream out(path);
    if (!out) fail(kExitValidation, "cannot open for writing: " + path);
    out << text << "\n";
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(kExitValidation, "cannot open: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Problem parse_problem(const std::string& s) {
    if (s == "is") return Problem::IS;
    if (s == "ds") return Problem::DS;
    fail(kExitUsage, "problem must be is|ds");
}

Kind parse_kind(const std::string& s) {
    if (s == "disk") return Kind::Disk;
    if (s == "square") return Kind::Square;
    fail(kExitUsage, "kind must be disk|square");
}

json trace_to_json(const SearchTrace& trace) {
    json jt;
    jt["passes"] = trace.passes;
    jt["elapsed_ms"] = trace.elapsed_ms;
    jt["exchanges"] = json::array();
    for (const auto& ex : trace.exchanges)
        jt["exchanges"].push_back(
            {{"removed", ex.removed}, {"added", ex.added}, {"size", ex.new_size}});
    return jt;
}

json exact_to_json(const ExactResult& res) {
    json je;
    je["optimum"] = res.optimum;
    je["witness"] = res.witness.to_indices();
    je["nodes_explored"] = res.nodes_explored;
    je["proven"] = res.proven;
    return je;
}

int cmd_gen(const GenParams& params, const std::string& out) {
    const Instance inst = generate_random(params);
    write_text(out, to_json(inst));
    return kExitOk;
}

int cmd_solve(const std::string& in, const std::string& problem, int t, std::uint64_t order_seed,
              std::optional<std::size_t> max_passes, const std::string& out) {
    const Instance inst = load_instance(in);
    LocalSearchConfig cfg;
    cfg.t = t;
    cfg.order_seed = order_seed;
    cfg.max_passes = max_passes;
    const Problem prob = parse_problem(problem);
    const SearchResult res =
        prob == Problem::IS ? local_search_is(inst, cfg) : local_search_ds(inst, cfg);

    json j = json::parse(solution_to_json(res.solution));
    j["t"] = t;
    j["order_seed"] = order_seed;
    j["trace"] = trace_to_json(res.trace);
    write_text(out, j.dump(2));
    return kExitOk;
}

int cmd_exact(const std::string& in, const std::string& problem, std::uint64_t budget,
              const std::string& out) {
    const Problem prob = parse_problem(problem);
    const std::string text = read_text(in);
    ExactResult res;
    if (json::parse(text).contains("family")) {
        const EmbeddedInstance emb = embedded_from_json(text);
        res = prob == Problem::IS ? exact_is(emb, budget) : exact_ds(emb, budget);
    } else {
        const Instance inst = instance_from_json(text);
        res = prob == Problem::IS ? exact_is(inst, budget) : exact_ds(inst, budget);
    }
    write_text(out, exact_to_json(res).dump(2));
    return res.proven ? kExitOk : kExitBudget;
}

int cmd_verify(const std::string& in, const std::string& solution_path, int t,
               std::uint64_t trials, std::uint64_t seed, const std::string& out) {
    const Instance inst = load_instance(in);
    json report;
    bool failed = false;

    const auto violations = check_general_position(inst.objects, inst.points);
    report["general_position"] = {{"violations", violations.size()}};
    bool nested = false;
    for (const auto& v : violations)
        if (v.kind == ViolationKind::NestedObjects) nested = true;

    if (!inst.objects.empty()) {
        const auto cov = check_coverage_monotone(inst.objects, inst.points, trials, seed);
        report["coverage_monotone"] = json::parse(cov.to_json());
        failed = failed || !cov.clean();
        if (!nested) {
            const auto own = check_center_ownership(inst.objects);
            const auto star = check_star_shaped(inst.objects, trials, seed + 1);
            report["center_ownership"] = json::parse(own.to_json());
            report["star_shaped"] = json::parse(star.to_json());
            failed = failed || !own.clean() || !star.clean();
        } else {
            report["center_ownership"] = {{"skipped", "nested objects present"}};
            report["star_shaped"] = {{"skipped", "nested objects present"}};
        }
    }

    if (!solution_path.empty()) {
        const Solution sol = solution_from_json(read_text(solution_path), inst.num_objects());
        const bool feasible = sol.problem == Problem::IS ? is_feasible_is(inst, sol.selected)
                                                         : is_feasible_ds(inst, sol.selected);
        report["solution"] = {{"problem", problem_name(sol.problem)},
                              {"size", sol.size()},
                              {"feasible", feasible}};
        if (!feasible) {
            failed = true;
        } else {
            const bool opt = verify_local_optimality(inst, sol.selected, sol.problem, t);
            report["solution"]["t_locally_optimal"] = opt;
            report["solution"]["t"] = t;
            failed = failed || !opt;
        }
    }

    report["ok"] = !failed;
    write_text(out, report.dump(2));
    return failed ? kExitValidation : kExitOk;
}

int cmd_reduce(const std::string& graph_path, std::vector<std::string> emit,
               const std::string& prefix) {
    const CubicGraph g = parse_dimacs_cubic(read_text(graph_path));
    const SetSystem sys = special3ds_from_cubic(g);

    const bool all = emit.empty() || std::find(emit.begin(), emit.end(), "all") != emit.end();
    const auto wants = [&](const char* what) {
        return all || std::find(emit.begin(), emit.end(), what) != emit.end();
    };

    if (wants("special3ds")) write_text(prefix + ".special3ds.json", set_system_to_json(sys));
    if (wants("a1")) write_text(prefix + ".a1.json", embedded_to_json(embed_a1(sys)));
    if (wants("a3")) write_text(prefix + ".a3.json", embedded_to_json(embed_a3_strips(sys)));
    if (wants("a5")) write_text(prefix + ".a5.json", embedded_to_json(embed_a5_shadows(sys)));
    if (wants("triangles"))
        write_text(prefix + ".triangles.json",
                   embedded_to_json(embed_triangles_from_cubic_is(g)));
    if (wants("circles"))
        write_text(prefix + ".circles.json", embedded_to_json(embed_circles_from_cubic_is(g)));
    return kExitOk;
}

int cmd_bench(const std::string& problem, const std::vector<int>& ts, std::size_t count,
              std::uint64_t seed_base, std::size_t m, std::size_t n, const std::string& kind,
              i64 extent_lo, i64 extent_hi, i64 window, bool run_exact, std::uint64_t budget,
              bool canonical, const std::string& out) {
    const Problem prob = parse_problem(problem);
    const Kind k = parse_kind(kind);

    std::ostringstream csv;
    csv << "instance_id,problem,shape,m,n,t,ls_size,exact_size,ratio,exchanges,elapsed_ms\n";
    for (std::size_t idx = 0; idx < count; ++idx) {
        GenParams params;
        params.seed = seed_base + idx;
        params.m = m;
        params.n = n;
        params.kind = k;
        params.extent_lo = extent_lo;
        params.extent_hi = extent_hi;
        params.window = window;
        const Instance inst = generate_random(params);

        std::optional<ExactResult> exact;
        if (run_exact) {
            exact = prob == Problem::IS ? exact_is(inst, budget) : exact_ds(inst, budget);
            if (!exact->proven) exact.reset();  // no silent pseudo-ratios
        }

        for (int t : ts) {
            LocalSearchConfig cfg;
            cfg.t = t;
            const SearchResult res =
                prob == Problem::IS ? local_search_is(inst, cfg) : local_search_ds(inst, cfg);
            csv << kind << "-s" << params.seed << "," << problem << "," << kind << ","
                << inst.num_objects() << "," << inst.num_points() << "," << t << ","
                << res.solution.size() << ",";
            if (exact) {
                const double ratio = static_cast<double>(res.solution.size()) /
                                     static_cast<double>(exact->optimum);
                csv << exact->optimum << "," << std::fixed << std::setprecision(6) << ratio;
                csv.unsetf(std::ios::fixed);
            } else {
                csv << ",";
            }
            csv << "," << res.trace.exchanges.size() << ",";
            if (canonical)
                csv << 0;
            else
                csv << std::fixed << std::setprecision(3) << res.trace.elapsed_ms;
            csv.unsetf(std::ios::fixed);
            csv << "\n";
        }
    }
    if (out.empty() || out == "-") {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        if (!f) fail(kExitValidation, "cannot open for writing: " + out);
        f << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete independent/dominating set toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    GenParams gp;
    gp.m = 10;
    gp.n = 30;
    gp.extent_lo = 5;
    gp.extent_hi = 25;
    std::string gen_kind = "disk", gen_out;
    gen->add_option("--seed", gp.seed, "rng seed");
    gen->add_option("--m", gp.m, "object count");
    gen->add_option("--n", gp.n, "point count");
    gen->add_option("--kind", gen_kind, "disk|square");
    gen->add_option("--extent-min", gp.extent_lo, "min radius/side");
    gen->add_option("--extent-max", gp.extent_hi, "max radius/side");
    gen->add_option("--window", gp.window, "coordinates uniform in [0, window]");
    gen->add_option("-o,--out", gen_out, "output path (default stdout)");

    // solve
    auto* solve = app.add_subcommand("solve", "run t-level local search");
    std::string solve_in, solve_problem = "is", solve_out;
    int solve_t = 2;
    std::uint64_t solve_seed = 0;
    std::size_t solve_max_passes = 0;
    solve->add_option("--in", solve_in, "instance JSON")->required();
    solve->add_option("--problem", solve_problem, "is|ds");
    solve->add_option("--t", solve_t, "exchange radius (>= 1)");
    solve->add_option("--seed", solve_seed, "candidate order seed (0 = index order)");
    solve->add_option("--max-passes", solve_max_passes, "pass cap (0 = unlimited)");
    solve->add_option("-o,--out", solve_out, "solution JSON output");

    // exact
    auto* exact = app.add_subcommand("exact", "run the exact oracle");
    std::string exact_in, exact_problem = "is", exact_out;
    std::uint64_t exact_budget = kDefaultNodeBudget;
    exact->add_option("--in", exact_in, "instance JSON (core or embedding schema)")->required();
    exact->add_option("--problem", exact_problem, "is|ds");
    exact->add_option("--budget", exact_budget, "node budget");
    exact->add_option("-o,--out", exact_out, "result JSON output");

    // verify
    auto* verify = app.add_subcommand("verify", "general-position, AWVD, and solution checks");
    std::string verify_in, verify_solution, verify_out;
    int verify_t = 2;
    std::uint64_t verify_trials = 10000, verify_seed = 1;
    verify->add_option("--in", verify_in, "instance JSON")->required();
    verify->add_option("--solution", verify_solution, "solution JSON to validate");
    verify->add_option("--t", verify_t, "exchange radius for local-optimality check");
    verify->add_option("--trials", verify_trials, "samples per AWVD check");
    verify->add_option("--seed", verify_seed, "sampling seed");
    verify->add_option("-o,--out", verify_out, "report JSON output");

    // reduce
    auto* reduce = app.add_subcommand("reduce", "cubic graph -> SPECIAL-3DS -> embeddings");
    std::string reduce_graph, reduce_prefix = "reduction";
    std::vector<std::string> reduce_emit;
    reduce->add_option("--graph", reduce_graph, "DIMACS edge-list file")->required();
    reduce->add_option("--emit", reduce_emit,
                       "any of: special3ds a1 a3 a5 triangles circles all");
    reduce->add_option("-o,--out", reduce_prefix, "output path prefix");

    // bench
    auto* bench = app.add_subcommand("bench", "t-sweep over a seeded corpus, CSV out");
    std::string bench_problem = "is", bench_kind = "disk", bench_out;
    std::vector<int> bench_ts{1, 2, 3};
    std::size_t bench_count = 10, bench_m = 15, bench_n = 40;
    std::uint64_t bench_seed = 1, bench_budget = kDefaultNodeBudget;
    i64 bench_elo = 5, bench_ehi = 25, bench_window = 100;
    bool bench_no_exact = false, bench_canonical = false;
    bench->add_option("--problem", bench_problem, "is|ds");
    bench->add_option("--t", bench_ts, "t values to sweep");
    bench->add_option("--count", bench_count, "number of instances");
    bench->add_option("--seed-base", bench_seed, "first instance seed");
    bench->add_option("--m", bench_m, "objects per instance");
    bench->add_option("--n", bench_n, "points per instance");
    bench->add_option("--kind", bench_kind, "disk|square");
    bench->add_option("--extent-min", bench_elo, "min radius/side");
    bench->add_option("--extent-max", bench_ehi, "max radius/side");
    bench->add_option("--window", bench_window, "coordinate window");
    bench->add_flag("--no-exact", bench_no_exact, "skip the exact oracle (no ratio column)");
    bench->add_option("--budget", bench_budget, "exact oracle node budget");
    bench->add_flag("--canonical", bench_canonical,
                    "zero the elapsed column for byte-reproducible output");
    bench->add_option("-o,--out", bench_out, "CSV output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        json err;
        err["error"] = e.what();
        err["code"] = kExitUsage;
        std::cerr << err.dump() << "\n";
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            gp.kind = parse_kind(gen_kind);
            return cmd_gen(gp, gen_out);
        }
        if (solve->parsed())
            return cmd_solve(solve_in, solve_problem, solve_t, solve_seed,
                             solve_max_passes == 0
                                 ? std::nullopt
                                 : std::optional<std::size_t>(solve_max_passes),
                             solve_out);
        if (exact->parsed()) return cmd_exact(exact_in, exact_problem, exact_budget, exact_out);
        if (verify->parsed())
            return cmd_verify(verify_in, verify_solution, verify_t, verify_trials, verify_seed,
                              verify_out);
        if (reduce->parsed()) return cmd_reduce(reduce_graph, reduce_emit, reduce_prefix);
        if (bench->parsed())
            return cmd_bench(bench_problem, bench_ts, bench_count, bench_seed, bench_m, bench_n,
                             bench_kind, bench_elo, bench_ehi, bench_window, !bench_no_exact,
                             bench_budget, bench_canonical, bench_out);
    } catch (const std::invalid_argument& e) {
        fail(kExitValidation, e.what());
    } catch (const std::exception& e) {
        fail(kExitValidation, e.what());
    }
    return kExitUsage;
}
