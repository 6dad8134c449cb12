// Command-line front end: instance generation, single solver runs,
// seeded batches, scaling and trap experiments, DSATUR / exact baselines,
// and the full verification suite.
#include "vdcol/baselines.hpp"
#include "vdcol/dimacs.hpp"
#include "vdcol/experiments.hpp"
#include "vdcol/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

using json = nlohmann::json;
using namespace vdcol;

namespace {

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
}

std::int64_t default_budget(int n) { return 50LL * n * n * n; }

int cmd_gen(const std::string& spec_text, const std::string& out_path) {
    const Graph g = make_instance(parse_instance_spec(spec_text));
    if (out_path.empty())
        std::cout << write_dimacs(g);
    else
        write_dimacs_file(g, out_path);
    return 0;
}

int cmd_solve(const std::string& file, int k, std::uint64_t seed, std::int64_t budget,
              std::int64_t window, const std::string& trajectory_path,
              const std::string& coloring_path) {
    const Graph g = read_dimacs_file(file);
    SolverConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.max_steps = budget >= 0 ? budget : default_budget(g.vertex_count());
    cfg.cycle_window = window;
    cfg.record_trajectory = !trajectory_path.empty();
    const RunResult result = run(g, cfg);
    if (!trajectory_path.empty())
        write_text_file(trajectory_path, trajectory_csv(result));
    if (!coloring_path.empty())
        write_text_file(coloring_path, write_coloring(result.best_coloring));
    json out{{"instance", file},
             {"k", k},
             {"seed", seed},
             {"budget", cfg.max_steps},
             {"status", to_string(result.status)},
             {"steps", result.steps_taken},
             {"best_conflicts", result.best_conflicts}};
    std::cout << out.dump() << '\n';
    return result.status == RunStatus::feasible ? 0 : 2;
}

int cmd_batch(const std::string& spec_text, int k, int trials, std::uint64_t seed,
              std::int64_t budget, std::int64_t window, const std::string& out_path,
              const std::string& summary_path, int threads) {
    const InstanceSpec spec = parse_instance_spec(spec_text);
    const Graph g = make_instance(spec);
    SolverConfig cfg;
    cfg.k = k;
    cfg.max_steps = budget >= 0 ? budget : default_budget(g.vertex_count());
    cfg.cycle_window = window;
    const BatchResult result = run_batch(g, spec.name(), cfg, trials, seed, threads);
    if (out_path.empty())
        std::cout << records_csv(result.records);
    else
        write_text_file(out_path, records_csv(result.records));
    const std::string summary = summary_json(result.summary);
    if (!summary_path.empty())
        write_text_file(summary_path, summary);
    std::cout << summary << '\n';
    return 0;
}

int cmd_scaling(const std::string& family_text, std::vector<int> sizes, int k, int trials,
                std::uint64_t seed, const std::string& out_path, int threads) {
    ScalingFamily family;
    if (family_text == "path")
        family = ScalingFamily::path;
    else if (family_text == "ring_even")
        family = ScalingFamily::ring_even;
    else if (family_text == "ring_odd")
        family = ScalingFamily::ring_odd;
    else if (family_text == "rand3" || family_text == "bounded_degree3")
        family = ScalingFamily::bounded_degree3;
    else
        throw CLI::ValidationError("--family must be path|ring_even|ring_odd|rand3");
    if (k == 0)
        k = family == ScalingFamily::path || family == ScalingFamily::ring_even ? 2 : 3;
    const ScalingResult result = scaling_experiment(family, sizes, trials, k, seed, threads);
    if (out_path.empty())
        std::cout << scaling_csv(result);
    else
        write_text_file(out_path, scaling_csv(result));
    json out{{"family", to_string(result.family)},
             {"k", result.k},
             {"slope", result.slope},
             {"budget_flagged", result.budget_flagged}};
    std::cout << out.dump() << '\n';
    return result.budget_flagged ? 2 : 0;
}

int cmd_trap(const std::string& family_text, int size, int trials, std::int64_t budget,
             std::int64_t window, std::uint64_t seed, const std::string& out_path,
             const std::string& summary_path, int threads) {
    const TrapFamily family = family_text == "g2" ? TrapFamily::g2 : TrapFamily::g3;
    if (budget < 0)
        budget = family == TrapFamily::g2 ? 100'000 : 1'000'000;
    const TrapResult result = trap_experiment(family, size, trials, budget, window, seed, threads);
    if (out_path.empty())
        std::cout << records_csv(result.records);
    else
        write_text_file(out_path, records_csv(result.records));
    const std::string summary = trap_json(result);
    if (!summary_path.empty())
        write_text_file(summary_path, summary);
    std::cout << summary << '\n';
    return 0;
}

int cmd_dsatur(const std::string& file, bool enumerate, std::int64_t branch_limit) {
    const Graph g = read_dimacs_file(file);
    if (enumerate) {
        const auto [lo, hi] = dsatur_enumerate(g, branch_limit);
        std::cout << json{{"min_colours", lo}, {"max_colours", hi}}.dump() << '\n';
    } else {
        std::cout << json{{"colours_used", dsatur(g).colours_used}}.dump() << '\n';
    }
    return 0;
}

int cmd_exact(const std::string& file, std::int64_t node_budget) {
    const Graph g = read_dimacs_file(file);
    std::cout << json{{"chromatic", exact_chromatic(g, node_budget)}}.dump() << '\n';
    return 0;
}

int cmd_verify(std::uint64_t seed, const std::string& out_dir, int threads, bool determinism) {
    VerifyOptions options;
    options.base_seed = seed;
    options.threads = threads;
    VerifyReport report = verify_criteria(options);
    for (const auto& c : report.criteria)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " — "
                  << c.detail << '\n';
    bool deterministic = true;
    if (determinism) {
        const VerifyReport again = verify_criteria(options);
        deterministic = report.artifacts.size() == again.artifacts.size();
        for (std::size_t i = 0; deterministic && i < report.artifacts.size(); ++i)
            deterministic = report.artifacts[i].first == again.artifacts[i].first &&
                            strip_csv_column(report.artifacts[i].second, "wall_ms") ==
                                strip_csv_column(again.artifacts[i].second, "wall_ms");
        std::cout << (deterministic ? "[PASS] " : "[FAIL] ")
                  << "11 rerun with the same base seed reproduces every artifact\n";
    }
    if (!out_dir.empty())
        write_artifacts(report, out_dir);
    return report.all_passed() && deterministic ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph-colouring local-search laboratory"};
    app.require_subcommand(1);

    std::string spec_text, file, out_path, summary_path, trajectory_path, coloring_path;
    std::string family_text, out_dir = "verify_out";
    std::vector<int> sizes;
    int k = 0, trials = 100, size = 1, threads = 0;
    std::uint64_t seed = 0;
    std::int64_t budget = -1, window = 0, branch_limit = 1'000'000, node_budget = 50'000'000;
    bool enumerate = false, determinism = false;

    auto* gen = app.add_subcommand("gen", "generate an instance as DIMACS .col");
    gen->add_option("spec", spec_text, "instance spec, e.g. path:100, g2:5, rand:200:3:seed7")
        ->required();
    gen->add_option("-o,--out", out_path, "output file (stdout when omitted)");

    auto* solve = app.add_subcommand("solve", "run the local search once on a .col file");
    solve->add_option("file", file)->required();
    solve->add_option("-k", k, "colour count")->required();
    solve->add_option("--seed", seed);
    solve->add_option("--budget", budget, "step budget (default 50*n^3)");
    solve->add_option("--cycle-window", window, "state-revisit window, 0 = off");
    solve->add_option("--trajectory", trajectory_path, "write per-step CSV here");
    solve->add_option("--out", coloring_path, "write the best colouring here");

    auto* batch = app.add_subcommand("batch", "run seeded trials and summarise");
    batch->add_option("spec", spec_text)->required();
    batch->add_option("-k", k)->required();
    batch->add_option("-t,--trials", trials);
    batch->add_option("--seed", seed);
    batch->add_option("--budget", budget);
    batch->add_option("--cycle-window", window);
    batch->add_option("-o,--out", out_path, "records CSV");
    batch->add_option("--summary", summary_path, "summary JSON file");
    batch->add_option("--threads", threads);

    auto* scaling = app.add_subcommand("scaling", "median-steps growth over sizes");
    scaling->add_option("--family", family_text, "path|ring_even|ring_odd|rand3")->required();
    scaling->add_option("--sizes", sizes, "ascending sizes")->required()->delimiter(',');
    scaling->add_option("-k", k, "colour count (default per family)");
    scaling->add_option("-t,--trials", trials);
    scaling->add_option("--seed", seed);
    scaling->add_option("-o,--out", out_path);
    scaling->add_option("--threads", threads);

    auto* trap = app.add_subcommand("trap", "failure statistics on trap families");
    trap->add_option("--family", family_text, "g2|g3")
        ->required()
        ->check(CLI::IsMember({"g2", "g3"}));
    trap->add_option("--size", size, "tree count (g2) or leg count (g3)")->required();
    trap->add_option("-t,--trials", trials);
    trap->add_option("--budget", budget);
    trap->add_option("--window", window, "cycle window, 0 = 2n");
    trap->add_option("--seed", seed);
    trap->add_option("-o,--out", out_path);
    trap->add_option("--summary", summary_path);
    trap->add_option("--threads", threads);

    auto* ds = app.add_subcommand("dsatur", "saturation-greedy baseline");
    ds->add_option("file", file)->required();
    ds->add_flag("--enumerate", enumerate, "extremes over all tie-break resolutions");
    ds->add_option("--branch-limit", branch_limit);

    auto* exact = app.add_subcommand("exact", "exact chromatic number");
    exact->add_option("file", file)->required();
    exact->add_option("--budget", node_budget, "search node budget");

    auto* verify = app.add_subcommand("verify", "run the full verification suite");
    verify->add_option("--seed", seed)->default_val(VerifyOptions{}.base_seed);
    verify->add_option("--out-dir", out_dir, "artifact directory");
    verify->add_option("--threads", threads);
    verify->add_flag("--determinism", determinism, "run twice and compare artifacts");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(spec_text, out_path);
        if (solve->parsed())
            return cmd_solve(file, k, seed, budget, window, trajectory_path, coloring_path);
        if (batch->parsed())
            return cmd_batch(spec_text, k, trials, seed, budget, window, out_path, summary_path,
                             threads);
        if (scaling->parsed())
            return cmd_scaling(family_text, sizes, k, trials, seed, out_path, threads);
        if (trap->parsed())
            return cmd_trap(family_text, size, trials, budget, window, seed, out_path, summary_path,
                            threads);
        if (ds->parsed())
            return cmd_dsatur(file, enumerate, branch_limit);
        if (exact->parsed())
            return cmd_exact(file, node_budget);
        if (verify->parsed())
            return cmd_verify(seed, out_dir, threads, determinism);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
