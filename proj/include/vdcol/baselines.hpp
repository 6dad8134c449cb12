#ifndef VDCOL_BASELINES_HPP
#define VDCOL_BASELINES_HPP

#include "vdcol/coloring.hpp"
#include "vdcol/graph.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vdcol {

// Thrown when an exact search hits its node budget before deciding.
struct UndecidedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when tie-break enumeration exceeds its branch limit.
struct BranchLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class TieBreak { lexicographic, random };

struct DsaturOptions {
    TieBreak tie_break = TieBreak::lexicographic;
    std::uint64_t seed = 0;     // used by TieBreak::random
    bool record_trace = false;
};

struct DsaturResult {
    Coloring coloring; // always proper
    int colours_used = 0;
    std::vector<std::pair<int, int>> decision_trace; // (vertex, saturation at choice)
};

// Saturation-degree greedy: repeatedly colour the uncoloured vertex with
// the most distinct neighbour colours, breaking ties by degree in the
// uncoloured subgraph and remaining ties per policy, always assigning the
// smallest feasible colour.
DsaturResult dsatur(const Graph& g, const DsaturOptions& options = {});

// Exhaustive DFS over every remaining tie after the saturation + degree
// rules; returns the extreme colour counts over all runs. Identical
// partial colourings reached by different orders are merged. Throws
// BranchLimitError when the node count passes branch_limit, with no
// partial answer.
std::pair<int, int> dsatur_enumerate(const Graph& g, std::int64_t branch_limit = 1'000'000);

// Exact k-colourability by branch-and-prune backtracking; returns a
// proper witness when colourable. Throws UndecidedError past node_budget
// rather than hanging. Intended for small graphs (tens of vertices).
std::optional<Coloring> k_colorable(const Graph& g, int k, std::int64_t node_budget = 50'000'000);

// Minimum k admitting a proper colouring, searched upward from a greedy
// clique bound.
int exact_chromatic(const Graph& g, std::int64_t node_budget = 50'000'000);

} // namespace vdcol

#endif
