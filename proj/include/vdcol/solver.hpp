#ifndef VDCOL_SOLVER_HPP
#define VDCOL_SOLVER_HPP

#include "vdcol/gamma_table.hpp"

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace vdcol {

struct SolverConfig {
    int k = 2;
    std::int64_t max_steps = 0;
    std::uint64_t seed = 0;
    bool record_trajectory = false;
    std::int64_t cycle_window = 0; // 0 disables cycle detection; otherwise >= 2
};

enum class RunStatus { feasible, budget_exhausted, cycle_detected };

const char* to_string(RunStatus status);

struct TrajectoryEntry {
    std::int64_t conflicts = 0; // after the move
    int moved_vertex = -1;
    int new_colour = -1;
    std::int64_t delta = 0;
};

struct RunResult {
    RunStatus status = RunStatus::budget_exhausted;
    std::int64_t steps_taken = 0;
    std::int64_t best_conflicts = 0;
    Coloring best_coloring;
    std::vector<TrajectoryEntry> trajectory; // one entry per applied move, when recorded
};

// All moves [v,c] with v conflicting and c != colour(v) whose delta equals
// the minimum over the whole neighbourhood, sorted by vertex then colour.
// The minimum may be positive: when every available move worsens the
// conflict count, the worsening moves are still the argmin set.
// Throws if the conflicting set is empty.
std::vector<Move> best_moves(const GammaTable& t);

// Selects uniformly at random among best_moves(t) and applies it.
Move step(GammaTable& t, Rng& rng);

// The full local-search loop: random initial colouring, then repeatedly
// apply a best move until the colouring is feasible, the step budget is
// exhausted, or (when enabled) the state fingerprint repeats within the
// cycle window. The best colouring seen and its conflict count are
// tracked across the whole run and updated on strict improvement only.
RunResult run(const Graph& g, const SolverConfig& cfg);

// Same loop from a caller-supplied initial colouring. cfg.k must match.
RunResult run_from(const Graph& g, Coloring initial, const SolverConfig& cfg);

// CSV dump of a recorded trajectory: step,conflicts,moved_vertex,new_colour,delta.
std::string trajectory_csv(const RunResult& result);

// Sliding-window duplicate detector over state fingerprints. The window
// holds the most recent `window` fingerprints including the current one.
class CycleDetector {
public:
    explicit CycleDetector(std::int64_t window);

    // Pushes one fingerprint; true iff it already occurs in the window.
    bool push(std::uint64_t fingerprint);

private:
    std::int64_t window_;
    std::deque<std::uint64_t> recent_;
    std::unordered_map<std::uint64_t, int> counts_;
};

// True iff some fingerprint occurs twice within any `window` consecutive
// entries of the history. Requires window >= 2.
bool detect_cycle(std::span<const std::uint64_t> fingerprints, std::int64_t window);

} // namespace vdcol

#endif
