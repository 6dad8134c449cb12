#include "vdcol/experiments.hpp"

#include "vdcol/rng.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace vdcol {

namespace {

int resolve_threads(int threads) {
    if (threads > 0)
        return threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i, seed_i) for i in [0, trials) across a thread pool; the
// record for trial i depends only on (i, seed_i), never on scheduling.
std::vector<TrialRecord> run_trials(int trials, std::uint64_t base_seed, int threads,
                                    const std::function<TrialRecord(int, std::uint64_t)>& fn) {
    if (trials < 1)
        throw std::invalid_argument("at least one trial required");
    std::vector<TrialRecord> records(static_cast<std::size_t>(trials));
    std::atomic<int> next{0};
    auto worker = [&] {
        for (int i = next.fetch_add(1); i < trials; i = next.fetch_add(1)) {
            const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(i));
            const auto start = std::chrono::steady_clock::now();
            TrialRecord record;
            try {
                record = fn(i, seed);
            } catch (const std::exception& e) {
                record.status = "error";
                record.error = e.what();
            }
            record.trial_index = i;
            record.seed = seed;
            record.wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
            records[static_cast<std::size_t>(i)] = record;
        }
    };
    const int pool = std::min(resolve_threads(threads), trials);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(pool - 1));
    for (int t = 1; t < pool; ++t)
        workers.emplace_back(worker);
    worker();
    for (auto& w : workers)
        w.join();
    return records;
}

TrialRecord record_from_run(const RunResult& result) {
    TrialRecord record;
    record.status = to_string(result.status);
    record.steps = result.steps_taken;
    record.best_conflicts = result.best_conflicts;
    return record;
}

std::int64_t nearest_rank(std::vector<std::int64_t>& sorted_steps, double q) {
    if (sorted_steps.empty())
        return 0;
    const auto rank = static_cast<std::size_t>(
        std::ceil(q * static_cast<double>(sorted_steps.size())));
    return sorted_steps[std::max<std::size_t>(rank, 1) - 1];
}

BatchSummary summarise(const std::string& instance, int k, const std::vector<TrialRecord>& records) {
    BatchSummary summary;
    summary.instance = instance;
    summary.k = k;
    summary.trials = static_cast<int>(records.size());
    std::vector<std::int64_t> steps;
    steps.reserve(records.size());
    int feasible = 0, cycles = 0, budget = 0, errors = 0;
    for (const auto& record : records) {
        steps.push_back(record.steps);
        if (record.status == "feasible")
            ++feasible;
        else if (record.status == "cycle_detected")
            ++cycles;
        else if (record.status == "budget_exhausted")
            ++budget;
        else
            ++errors;
    }
    std::sort(steps.begin(), steps.end());
    const double n = static_cast<double>(records.size());
    summary.success_rate = feasible / n;
    summary.cycle_rate = cycles / n;
    summary.budget_rate = budget / n;
    summary.error_rate = errors / n;
    summary.steps_p50 = nearest_rank(steps, 0.50);
    summary.steps_p90 = nearest_rank(steps, 0.90);
    summary.steps_max = steps.back();
    return summary;
}

} // namespace

BatchResult run_batch(const Graph& g, const std::string& instance_name, const SolverConfig& cfg,
                      int trials, std::uint64_t base_seed, int threads) {
    BatchResult result;
    result.records = run_trials(trials, base_seed, threads, [&](int, std::uint64_t seed) {
        SolverConfig trial_cfg = cfg;
        trial_cfg.seed = seed;
        return record_from_run(run(g, trial_cfg));
    });
    result.summary = summarise(instance_name, cfg.k, result.records);
    return result;
}

BatchResult run_batch(const InstanceSpec& spec, const SolverConfig& cfg, int trials,
                      std::uint64_t base_seed, int threads) {
    const Graph g = make_instance(spec);
    return run_batch(g, spec.name(), cfg, trials, base_seed, threads);
}

std::string records_csv(const std::vector<TrialRecord>& records) {
    std::ostringstream out;
    out << "trial,seed,status,steps,best_conflicts,wall_ms\n";
    for (const auto& r : records) {
        out << r.trial_index << ',' << r.seed << ',' << r.status << ',' << r.steps << ','
            << r.best_conflicts << ',';
        char wall[32];
        std::snprintf(wall, sizeof wall, "%.3f", r.wall_ms);
        out << wall << '\n';
    }
    return out.str();
}

std::string summary_json(const BatchSummary& s) {
    std::ostringstream out;
    out.precision(9);
    out << "{\"instance\":\"" << s.instance << "\",\"k\":" << s.k << ",\"trials\":" << s.trials
        << ",\"success_rate\":" << s.success_rate << ",\"cycle_rate\":" << s.cycle_rate
        << ",\"budget_rate\":" << s.budget_rate << ",\"error_rate\":" << s.error_rate
        << ",\"steps_p50\":" << s.steps_p50 << ",\"steps_p90\":" << s.steps_p90
        << ",\"steps_max\":" << s.steps_max << "}";
    return out.str();
}

std::string strip_csv_column(const std::string& csv, const std::string& column) {
    std::istringstream input(csv);
    std::ostringstream out;
    std::string line;
    int drop_index = -1;
    bool first = true;
    while (std::getline(input, line)) {
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fields_in(line);
        while (std::getline(fields_in, field, ','))
            fields.push_back(field);
        if (first) {
            first = false;
            for (std::size_t i = 0; i < fields.size(); ++i)
                if (fields[i] == column)
                    drop_index = static_cast<int>(i);
        }
        bool wrote = false;
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (static_cast<int>(i) == drop_index)
                continue;
            if (wrote)
                out << ',';
            out << fields[i];
            wrote = true;
        }
        out << '\n';
    }
    return out.str();
}

const char* to_string(ScalingFamily family) {
    switch (family) {
    case ScalingFamily::path: return "path";
    case ScalingFamily::ring_even: return "ring_even";
    case ScalingFamily::ring_odd: return "ring_odd";
    case ScalingFamily::bounded_degree3: return "bounded_degree3";
    }
    return "path";
}

namespace {

// Degree-<=3 random graph in the guaranteed-solvable class: connected and
// neither complete nor an odd ring. Deterministically skips seeds whose
// graph falls outside the class.
Graph filtered_cubic_graph(int n, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = bounded_degree_random(n, 3, derive_seed(seed, attempt));
        const BrooksReport report = classify_brooks(g);
        if (report.connected && report.cls == BrooksClass::other)
            return g;
        if (attempt > 10'000)
            throw std::runtime_error("no connected degree-3 instance found for n=" +
                                     std::to_string(n));
    }
}

} // namespace

ScalingResult scaling_experiment(ScalingFamily family, const std::vector<int>& sizes,
                                 int trials_per_size, int k, std::uint64_t base_seed, int threads) {
    if (sizes.size() < 3)
        throw std::invalid_argument("scaling fit needs at least 3 sizes");
    if (!std::is_sorted(sizes.begin(), sizes.end()) ||
        std::adjacent_find(sizes.begin(), sizes.end()) != sizes.end())
        throw std::invalid_argument("sizes must be strictly ascending");
    ScalingResult result;
    result.family = family;
    result.k = k;
    for (std::size_t size_index = 0; size_index < sizes.size(); ++size_index) {
        const int n = sizes[size_index];
        const std::int64_t budget = 50LL * n * n * n;
        const std::uint64_t size_seed = derive_seed(base_seed, 1000 + size_index);
        SolverConfig cfg;
        cfg.k = k;
        cfg.max_steps = budget;
        std::vector<TrialRecord> records;
        switch (family) {
        case ScalingFamily::path:
        case ScalingFamily::ring_even:
        case ScalingFamily::ring_odd: {
            const Graph g = family == ScalingFamily::path ? path_graph(n) : ring_graph(n);
            if (family == ScalingFamily::ring_even && n % 2 != 0)
                throw std::invalid_argument("even-ring family needs even sizes");
            if (family == ScalingFamily::ring_odd && n % 2 != 1)
                throw std::invalid_argument("odd-ring family needs odd sizes");
            records = run_batch(g, std::string(to_string(family)) + ":" + std::to_string(n), cfg,
                                trials_per_size, size_seed, threads)
                          .records;
            break;
        }
        case ScalingFamily::bounded_degree3:
            records = run_trials(trials_per_size, size_seed, threads,
                                 [&](int, std::uint64_t seed) {
                                     const Graph g = filtered_cubic_graph(n, seed);
                                     SolverConfig trial_cfg = cfg;
                                     trial_cfg.seed = derive_seed(seed, 1);
                                     return record_from_run(run(g, trial_cfg));
                                 });
            break;
        }
        ScalingRow row;
        row.n = n;
        row.trials = trials_per_size;
        std::vector<std::int64_t> steps;
        int feasible = 0;
        for (const auto& record : records) {
            steps.push_back(record.steps);
            if (record.status == "feasible")
                ++feasible;
            else
                result.budget_flagged = true;
        }
        std::sort(steps.begin(), steps.end());
        row.median_steps = nearest_rank(steps, 0.50);
        row.p90_steps = nearest_rank(steps, 0.90);
        row.max_steps = steps.back();
        row.success_rate = static_cast<double>(feasible) / trials_per_size;
        result.rows.push_back(row);
    }
    // least-squares slope of log(median) against log(n)
    const auto points = static_cast<double>(result.rows.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (const auto& row : result.rows) {
        const double x = std::log(static_cast<double>(row.n));
        const double y = std::log(static_cast<double>(std::max<std::int64_t>(row.median_steps, 1)));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    result.slope = (points * sxy - sx * sy) / (points * sxx - sx * sx);
    return result;
}

std::string scaling_csv(const ScalingResult& result) {
    std::ostringstream out;
    out << "family,n,k,trials,median_steps,p90_steps,max_steps,success_rate\n";
    for (const auto& row : result.rows) {
        char rate[32];
        std::snprintf(rate, sizeof rate, "%.6f", row.success_rate);
        out << to_string(result.family) << ',' << row.n << ',' << result.k << ',' << row.trials
            << ',' << row.median_steps << ',' << row.p90_steps << ',' << row.max_steps << ','
            << rate << '\n';
    }
    return out.str();
}

double g2_failure_lower_bound(int trees) {
    return 1.0 - std::pow(31.0 / 32.0, trees);
}

double g3_failure_lower_bound(int legs) {
    const double base = 239.0 / 243.0;
    return (1.0 - std::pow(base, legs)) * (1.0 - std::pow(base, legs - 1));
}

TrapResult trap_experiment(TrapFamily family, int size, int trials, std::int64_t budget,
                           std::int64_t window, std::uint64_t base_seed, int threads) {
    TrapResult result;
    result.family = family;
    result.size = size;
    result.k = family == TrapFamily::g2 ? 2 : 3;
    result.trials = trials;
    result.budget = budget;
    const Graph g = family == TrapFamily::g2 ? forest_g2(size) : legs_g3(size);
    result.window = window > 0 ? window : 2LL * g.vertex_count();
    result.analytic_lower_bound = family == TrapFamily::g2 ? g2_failure_lower_bound(size)
                                                           : g3_failure_lower_bound(size);

    SolverConfig cfg;
    cfg.k = result.k;
    cfg.max_steps = budget;
    cfg.cycle_window = result.window;
    const auto batch = run_batch(
        g, family == TrapFamily::g2 ? "g2:" + std::to_string(size) : "g3:" + std::to_string(size),
        cfg, trials, base_seed, threads);
    result.records = batch.records;
    result.cycle_rate = batch.summary.cycle_rate;
    result.budget_rate = batch.summary.budget_rate;
    result.non_success_rate = 1.0 - batch.summary.success_rate;

    const double p = result.analytic_lower_bound;
    result.three_sigma = 3.0 * std::sqrt(p * (1.0 - p) / trials);
    result.meets_bound = result.non_success_rate >= p - result.three_sigma;
    return result;
}

std::string trap_json(const TrapResult& r) {
    std::ostringstream out;
    out.precision(9);
    out << "{\"family\":\"" << (r.family == TrapFamily::g2 ? "g2" : "g3") << "\",\"size\":" << r.size
        << ",\"k\":" << r.k << ",\"trials\":" << r.trials << ",\"budget\":" << r.budget
        << ",\"cycle_window\":" << r.window << ",\"non_success_rate\":" << r.non_success_rate
        << ",\"cycle_rate\":" << r.cycle_rate << ",\"budget_rate\":" << r.budget_rate
        << ",\"analytic_lower_bound\":" << r.analytic_lower_bound
        << ",\"three_sigma\":" << r.three_sigma << ",\"meets_bound\":" << (r.meets_bound ? "true" : "false")
        << "}";
    return out.str();
}

DescentBoundReport descent_bound_check(const Graph& g, int k, int trials, std::uint64_t base_seed) {
    DescentBoundReport report;
    report.trials = trials;
    const std::int64_t m = g.edge_count();
    std::int64_t half_sum_floor = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        half_sum_floor += g.degree(v) / k;
    half_sum_floor /= 2;

    auto bound_satisfied = [&](const GammaTable& table) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (table.gamma(v, table.colour_of(v)) > g.degree(v) / k)
                return false;
        return true;
    };

    for (int trial = 0; trial < trials; ++trial) {
        const std::uint64_t seed = derive_seed(base_seed, static_cast<std::uint64_t>(trial));
        Rng rng(seed);
        GammaTable table(g, random_coloring(g, k, rng));
        std::int64_t improving = 0;
        bool reached = false;
        for (std::int64_t taken = 0;; ++taken) {
            if (bound_satisfied(table)) {
                reached = table.conflict_count() <= half_sum_floor;
                break;
            }
            if (taken >= m)
                break; // bound state must arrive within m steps
            const Move move = step(table, rng);
            if (move.delta < 0)
                ++improving;
        }
        if (!reached || improving > m) {
            report.ok = false;
            std::ostringstream dump;
            dump << "seed=" << seed << " k=" << k << " improving=" << improving << " m=" << m
                 << " conflicts=" << table.conflict_count() << " cap=" << half_sum_floor;
            report.failure = dump.str();
            return report;
        }
    }
    return report;
}

Graph random_gnm_graph(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    if (m > static_cast<std::int64_t>(pairs.size()))
        throw std::invalid_argument("too many edges requested");
    Rng rng(seed);
    for (std::int64_t i = 0; i < m; ++i) {
        const auto j = i + static_cast<std::int64_t>(rng.below(pairs.size() - i));
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(static_cast<std::size_t>(m));
    return Graph::from_edges(n, pairs);
}

} // namespace vdcol
