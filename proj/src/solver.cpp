#include "vdcol/solver.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vdcol {

const char* to_string(RunStatus status) {
    switch (status) {
    case RunStatus::feasible: return "feasible";
    case RunStatus::budget_exhausted: return "budget_exhausted";
    case RunStatus::cycle_detected: return "cycle_detected";
    }
    return "budget_exhausted";
}

std::vector<Move> best_moves(const GammaTable& t) {
    if (t.conflicting().empty())
        throw std::logic_error("best_moves called on a feasible colouring");
    const int k = t.k();
    std::int64_t best = 0;
    bool first = true;
    std::vector<Move> ties;
    for (int v : t.conflicting()) {
        const int current = t.colour_of(v);
        const std::int64_t own = t.gamma(v, current);
        for (int c = 0; c < k; ++c) {
            if (c == current)
                continue;
            const std::int64_t delta = static_cast<std::int64_t>(t.gamma(v, c)) - own;
            if (first || delta < best) {
                best = delta;
                first = false;
                ties.clear();
                ties.push_back({v, c, delta});
            } else if (delta == best) {
                ties.push_back({v, c, delta});
            }
        }
    }
    std::sort(ties.begin(), ties.end(), [](const Move& a, const Move& b) {
        return a.vertex != b.vertex ? a.vertex < b.vertex : a.new_colour < b.new_colour;
    });
    return ties;
}

Move step(GammaTable& t, Rng& rng) {
    const std::vector<Move> candidates = best_moves(t);
    const Move chosen = candidates[rng.below(candidates.size())];
    t.apply_move(chosen);
    return chosen;
}

CycleDetector::CycleDetector(std::int64_t window) : window_(window) {
    if (window < 2)
        throw std::invalid_argument("cycle window must be at least 2");
}

bool CycleDetector::push(std::uint64_t fingerprint) {
    if (static_cast<std::int64_t>(recent_.size()) == window_) {
        const std::uint64_t oldest = recent_.front();
        recent_.pop_front();
        auto it = counts_.find(oldest);
        if (--it->second == 0)
            counts_.erase(it);
    }
    recent_.push_back(fingerprint);
    return ++counts_[fingerprint] > 1;
}

bool detect_cycle(std::span<const std::uint64_t> fingerprints, std::int64_t window) {
    CycleDetector detector(window);
    for (std::uint64_t fp : fingerprints)
        if (detector.push(fp))
            return true;
    return false;
}

namespace {

RunResult run_loop(const Graph& g, Coloring initial, const SolverConfig& cfg, Rng& rng) {
    if (cfg.k < 1)
        throw std::invalid_argument("colour count must be at least 1");
    if (cfg.max_steps < 0)
        throw std::invalid_argument("step budget must be non-negative");
    if (cfg.cycle_window == 1)
        throw std::invalid_argument("cycle window must be 0 (off) or at least 2");
    if (initial.k != cfg.k)
        throw std::invalid_argument("initial colouring colour count does not match config");

    GammaTable table(g, std::move(initial));
    RunResult result;
    result.best_conflicts = table.conflict_count();
    result.best_coloring = table.coloring();
    if (cfg.record_trajectory)
        result.trajectory.reserve(static_cast<std::size_t>(std::min<std::int64_t>(cfg.max_steps, 1 << 20)));

    CycleDetector detector(cfg.cycle_window > 0 ? cfg.cycle_window : 2);
    if (cfg.cycle_window > 0)
        detector.push(table.fingerprint());

    while (true) {
        if (table.conflict_count() == 0) {
            result.status = RunStatus::feasible;
            return result;
        }
        if (result.steps_taken >= cfg.max_steps) {
            result.status = RunStatus::budget_exhausted;
            return result;
        }
        const Move move = step(table, rng);
        ++result.steps_taken;
        if (cfg.record_trajectory)
            result.trajectory.push_back({table.conflict_count(), move.vertex, move.new_colour, move.delta});
        if (table.conflict_count() < result.best_conflicts) {
            result.best_conflicts = table.conflict_count();
            result.best_coloring = table.coloring();
        }
        if (cfg.cycle_window > 0 && detector.push(table.fingerprint())) {
            result.status = RunStatus::cycle_detected;
            return result;
        }
    }
}

} // namespace

RunResult run(const Graph& g, const SolverConfig& cfg) {
    Rng rng(cfg.seed);
    Coloring initial = random_coloring(g, cfg.k, rng);
    return run_loop(g, std::move(initial), cfg, rng);
}

RunResult run_from(const Graph& g, Coloring initial, const SolverConfig& cfg) {
    Rng rng(cfg.seed);
    return run_loop(g, std::move(initial), cfg, rng);
}

std::string trajectory_csv(const RunResult& result) {
    std::ostringstream out;
    out << "step,conflicts,moved_vertex,new_colour,delta\n";
    std::int64_t step_no = 0;
    for (const auto& entry : result.trajectory)
        out << ++step_no << ',' << entry.conflicts << ',' << entry.moved_vertex << ','
            << entry.new_colour << ',' << entry.delta << '\n';
    return out.str();
}

} // namespace vdcol
