#include "vdcol/baselines.hpp"

#include "vdcol/rng.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace vdcol {

namespace {

// Shared DSATUR bookkeeping over a partial colouring.
struct DsaturState {
    const Graph* g;
    std::vector<int> colours;        // -1 = uncoloured
    std::vector<int> uncoloured_deg; // degree in the uncoloured subgraph
    int coloured_count = 0;
    int colours_used = 0;
    mutable std::vector<int> stamp; // colour -> last stamp_version that saw it
    mutable int stamp_version = 0;

    explicit DsaturState(const Graph& graph)
        : g(&graph), colours(static_cast<std::size_t>(graph.vertex_count()), -1),
          uncoloured_deg(static_cast<std::size_t>(graph.vertex_count())),
          stamp(static_cast<std::size_t>(graph.vertex_count()) + 1, 0) {
        for (int v = 0; v < graph.vertex_count(); ++v)
            uncoloured_deg[v] = graph.degree(v);
    }

    int saturation(int v) const {
        ++stamp_version;
        int count = 0;
        for (int w : g->neighbours(v)) {
            const int c = colours[w];
            if (c >= 0 && stamp[c] != stamp_version) {
                stamp[c] = stamp_version;
                ++count;
            }
        }
        return count;
    }

    // All uncoloured vertices with maximal (saturation, uncoloured degree).
    std::vector<int> candidates() const {
        std::vector<int> best;
        int best_sat = -1, best_deg = -1;
        for (int v = 0; v < g->vertex_count(); ++v) {
            if (colours[v] >= 0)
                continue;
            const int sat = saturation(v);
            if (sat > best_sat || (sat == best_sat && uncoloured_deg[v] > best_deg)) {
                best_sat = sat;
                best_deg = uncoloured_deg[v];
                best.assign(1, v);
            } else if (sat == best_sat && uncoloured_deg[v] == best_deg) {
                best.push_back(v);
            }
        }
        return best;
    }

    int smallest_feasible_colour(int v) const {
        ++stamp_version;
        for (int w : g->neighbours(v))
            if (colours[w] >= 0)
                stamp[colours[w]] = stamp_version;
        int c = 0;
        while (stamp[c] == stamp_version)
            ++c;
        return c;
    }

    void assign(int v) {
        colours[v] = smallest_feasible_colour(v);
        colours_used = std::max(colours_used, colours[v] + 1);
        ++coloured_count;
        for (int w : g->neighbours(v))
            --uncoloured_deg[w];
    }
};

} // namespace

DsaturResult dsatur(const Graph& g, const DsaturOptions& options) {
    DsaturState state(g);
    Rng rng(options.seed);
    DsaturResult result;
    while (state.coloured_count < g.vertex_count()) {
        const std::vector<int> ties = state.candidates();
        const int chosen = options.tie_break == TieBreak::lexicographic
                               ? ties.front()
                               : ties[rng.below(ties.size())];
        if (options.record_trace)
            result.decision_trace.emplace_back(chosen, state.saturation(chosen));
        state.assign(chosen);
    }
    result.coloring.colours = std::move(state.colours);
    result.coloring.k = std::max(state.colours_used, 1);
    result.colours_used = state.colours_used;
    return result;
}

namespace {

struct EnumerateContext {
    const Graph* g = nullptr;
    std::int64_t branch_limit = 0;
    std::int64_t nodes = 0;
    std::map<std::vector<int>, std::pair<int, int>> memo; // partial colouring -> extremes

    std::pair<int, int> explore(DsaturState& state) {
        if (++nodes > branch_limit)
            throw BranchLimitError("dsatur enumeration exceeded " + std::to_string(branch_limit) +
                                   " branches");
        if (state.coloured_count == g->vertex_count())
            return {state.colours_used, state.colours_used};
        if (auto it = memo.find(state.colours); it != memo.end())
            return it->second;
        std::pair<int, int> extremes{g->vertex_count() + 1, -1};
        for (int v : state.candidates()) {
            DsaturState next = state;
            next.assign(v);
            const auto [lo, hi] = explore(next);
            extremes.first = std::min(extremes.first, lo);
            extremes.second = std::max(extremes.second, hi);
        }
        memo.emplace(state.colours, extremes);
        return extremes;
    }
};

} // namespace

std::pair<int, int> dsatur_enumerate(const Graph& g, std::int64_t branch_limit) {
    if (g.vertex_count() == 0)
        return {0, 0};
    EnumerateContext context;
    context.g = &g;
    context.branch_limit = branch_limit;
    DsaturState state(g);
    return context.explore(state);
}

namespace {

struct ColorSearch {
    const Graph* g = nullptr;
    int k = 0;
    std::int64_t budget = 0;
    std::int64_t nodes = 0;
    std::vector<int> colours;
    std::vector<int> order_degree;

    bool extend(int coloured, int used) {
        if (++nodes > budget)
            throw UndecidedError("k-colourability search exceeded " + std::to_string(budget) +
                                 " nodes; undecided");
        if (coloured == g->vertex_count())
            return true;
        // Most-constrained vertex next: fewest feasible colours, then
        // highest degree. Colours fit in a 64-bit mask (k <= 64 is far
        // beyond the intended problem sizes).
        int chosen = -1;
        int chosen_feasible = k + 1;
        std::uint64_t chosen_mask = 0;
        for (int v = 0; v < g->vertex_count(); ++v) {
            if (colours[v] >= 0)
                continue;
            std::uint64_t used_mask = 0;
            for (int w : g->neighbours(v))
                if (colours[w] >= 0)
                    used_mask |= std::uint64_t{1} << colours[w];
            const int feasible = k - __builtin_popcountll(used_mask);
            if (feasible == 0)
                return false;
            if (feasible < chosen_feasible ||
                (feasible == chosen_feasible && order_degree[v] > order_degree[chosen])) {
                chosen = v;
                chosen_feasible = feasible;
                chosen_mask = used_mask;
            }
        }
        // Trying more than one previously unused colour only permutes
        // colour classes, so cap the palette at used+1.
        const int palette = std::min(k, used + 1);
        for (int c = 0; c < palette; ++c) {
            if (chosen_mask >> c & 1)
                continue;
            colours[chosen] = c;
            if (extend(coloured + 1, std::max(used, c + 1)))
                return true;
            colours[chosen] = -1;
        }
        return false;
    }
};

// Greedy clique grown from each high-degree seed vertex.
int greedy_clique_bound(const Graph& g) {
    std::vector<int> by_degree(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        by_degree[v] = v;
    std::sort(by_degree.begin(), by_degree.end(),
              [&](int a, int b) { return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b; });
    int best = g.vertex_count() > 0 ? 1 : 0;
    const int seeds = std::min(g.vertex_count(), 16);
    for (int i = 0; i < seeds; ++i) {
        std::vector<int> clique{by_degree[i]};
        for (int v : by_degree) {
            bool adjacent_to_all = true;
            for (int u : clique)
                if (u == v || !g.has_edge(u, v)) {
                    adjacent_to_all = false;
                    break;
                }
            if (adjacent_to_all)
                clique.push_back(v);
        }
        best = std::max(best, static_cast<int>(clique.size()));
    }
    return best;
}

} // namespace

std::optional<Coloring> k_colorable(const Graph& g, int k, std::int64_t node_budget) {
    if (k < 1)
        throw std::invalid_argument("colour count must be at least 1");
    if (k > 64)
        throw std::invalid_argument("k_colorable supports up to 64 colours");
    if (g.vertex_count() == 0)
        return Coloring{{}, k};
    if (g.edge_count() == 0) {
        Coloring s;
        s.k = k;
        s.colours.assign(static_cast<std::size_t>(g.vertex_count()), 0);
        return s;
    }
    if (k == 1)
        return std::nullopt; // has an edge
    ColorSearch search;
    search.g = &g;
    search.k = k;
    search.budget = node_budget;
    search.colours.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    search.order_degree.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        search.order_degree[v] = g.degree(v);
    if (!search.extend(0, 0))
        return std::nullopt;
    Coloring witness;
    witness.k = k;
    witness.colours = std::move(search.colours);
    return witness;
}

int exact_chromatic(const Graph& g, std::int64_t node_budget) {
    if (g.vertex_count() == 0)
        return 0;
    if (g.edge_count() == 0)
        return 1;
    const int lower = greedy_clique_bound(g);
    const int upper = dsatur(g).colours_used;
    for (int k = lower; k < upper; ++k)
        if (k_colorable(g, k, node_budget))
            return k;
    return upper;
}

} // namespace vdcol
