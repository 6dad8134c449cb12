#ifndef VDCOL_EXPERIMENTS_HPP
#define VDCOL_EXPERIMENTS_HPP

#include "vdcol/instances.hpp"
#include "vdcol/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vdcol {

struct TrialRecord {
    int trial_index = 0;
    std::uint64_t seed = 0;
    std::string status; // feasible | budget_exhausted | cycle_detected | error
    std::int64_t steps = 0;
    std::int64_t best_conflicts = 0;
    double wall_ms = 0.0;
    std::string error; // reason when status == error
};

struct BatchSummary {
    std::string instance;
    int k = 0;
    int trials = 0;
    double success_rate = 0.0;
    double cycle_rate = 0.0;
    double budget_rate = 0.0;
    double error_rate = 0.0;
    std::int64_t steps_p50 = 0;
    std::int64_t steps_p90 = 0;
    std::int64_t steps_max = 0;
};

struct BatchResult {
    BatchSummary summary;
    std::vector<TrialRecord> records; // sorted by trial_index
};

// Runs `trials` independent solver runs on one instance. Trial i draws
// its own RNG stream from (base_seed, i), so results do not depend on
// thread scheduling and rerunning any trial reproduces its record
// exactly (wall_ms aside). threads = 0 means hardware concurrency.
BatchResult run_batch(const Graph& g, const std::string& instance_name, const SolverConfig& cfg,
                      int trials, std::uint64_t base_seed, int threads = 0);
BatchResult run_batch(const InstanceSpec& spec, const SolverConfig& cfg, int trials,
                      std::uint64_t base_seed, int threads = 0);

// trial,seed,status,steps,best_conflicts,wall_ms
std::string records_csv(const std::vector<TrialRecord>& records);
std::string summary_json(const BatchSummary& summary);

// Removes one named column from a CSV text; used to compare outputs
// while ignoring wall-clock noise.
std::string strip_csv_column(const std::string& csv, const std::string& column);

enum class ScalingFamily { path, ring_even, ring_odd, bounded_degree3 };

const char* to_string(ScalingFamily family);

struct ScalingRow {
    int n = 0;
    int trials = 0;
    std::int64_t median_steps = 0;
    std::int64_t p90_steps = 0;
    std::int64_t max_steps = 0;
    double success_rate = 0.0;
};

struct ScalingResult {
    ScalingFamily family = ScalingFamily::path;
    int k = 0;
    std::vector<ScalingRow> rows;
    double slope = 0.0;        // least-squares fit of log(median) vs log(n)
    bool budget_flagged = false; // any trial ran out of budget
};

// Runs trials_per_size runs for each size with step budget 50*n^3 and
// fits the growth rate of the median step count. These families are
// solvable in expected polynomial time, so budget exhaustion anywhere
// flags the result. Sizes must be ascending and at least 3.
// The bounded_degree3 family generates a fresh degree-<=3 random graph
// per trial, skipping seeds whose graph is disconnected, complete, or an
// odd ring.
ScalingResult scaling_experiment(ScalingFamily family, const std::vector<int>& sizes,
                                 int trials_per_size, int k, std::uint64_t base_seed,
                                 int threads = 0);
std::string scaling_csv(const ScalingResult& result);

enum class TrapFamily { g2, g3 };

// Analytic lower bounds on the probability that descent never finds a
// feasible colouring, evaluated from their closed forms.
double g2_failure_lower_bound(int trees); // 1 - (31/32)^c
double g3_failure_lower_bound(int legs);  // [1 - (239/243)^L] * [1 - (239/243)^(L-1)]

struct TrapResult {
    TrapFamily family = TrapFamily::g2;
    int size = 0;
    int k = 0;
    int trials = 0;
    std::int64_t budget = 0;
    std::int64_t window = 0;
    double non_success_rate = 0.0; // cycle_detected or budget_exhausted
    double cycle_rate = 0.0;
    double budget_rate = 0.0;
    double analytic_lower_bound = 0.0;
    double three_sigma = 0.0;
    bool meets_bound = false; // non_success_rate >= bound - 3*sigma
    std::vector<TrialRecord> records;
};

// Batch with cycle detection enabled, compared against the analytic
// failure bound for the family. Non-success counts both finite-time
// witnesses of an infinite run: an exact state revisit and a spent
// budget. window = 0 picks 2n.
TrapResult trap_experiment(TrapFamily family, int size, int trials, std::int64_t budget,
                           std::int64_t window, std::uint64_t base_seed, int threads = 0);
std::string trap_json(const TrapResult& result);

struct DescentBoundReport {
    bool ok = true;
    int trials = 0;
    std::string failure; // seed + instance dump for the first violation
};

// Verifies the descent-phase contract on one graph: from any start, a
// state where every vertex v has gamma(v, colour(v)) <= floor(deg(v)/k)
// is reached within m improving steps, and at that first state the
// conflict count is at most (1/2) * sum_v floor(deg(v)/k).
DescentBoundReport descent_bound_check(const Graph& g, int k, int trials, std::uint64_t base_seed);

// Uniform random graph with n vertices and m edges; test fodder.
Graph random_gnm_graph(int n, std::int64_t m, std::uint64_t seed);

} // namespace vdcol

#endif
