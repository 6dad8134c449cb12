#ifndef VDCOL_GAMMA_TABLE_HPP
#define VDCOL_GAMMA_TABLE_HPP

#include "vdcol/coloring.hpp"
#include "vdcol/graph.hpp"
#include "vdcol/rng.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vdcol {

// A recolouring of one vertex to a colour different from its current one.
struct Move {
    int vertex = -1;
    int new_colour = -1;
    std::int64_t delta = 0; // change in conflict count when applied

    bool operator==(const Move&) const = default;
};

// Per-vertex, per-colour neighbour-colour counts for one colouring, kept
// consistent incrementally:
//   gamma(v,c)      = number of neighbours of v coloured c
//   conflict_count  = (1/2) * sum_v gamma(v, colour(v))
//   conflicting     = { v : gamma(v, colour(v)) > 0 }
// Evaluating a candidate move is O(1); applying one is O(deg(v)).
// Single-writer mutable state: one solver run owns one table. The
// underlying Graph is shared read-only.
class GammaTable {
public:
    GammaTable(const Graph& g, Coloring s); // O(n*k + m) build

    const Graph& graph() const { return *graph_; }
    const Coloring& coloring() const { return coloring_; }
    int k() const { return coloring_.k; }
    int colour_of(int v) const { return coloring_.colours[v]; }

    std::int32_t gamma(int v, int c) const { return gamma_[index(v, c)]; }
    std::int64_t conflict_count() const { return conflict_count_; }

    // Members of the conflicting set, in no particular order.
    const std::vector<int>& conflicting() const { return conflicting_; }
    bool is_conflicting(int v) const { return position_[v] >= 0; }

    // gamma(v,c) - gamma(v, colour(v)); equals the conflict-count change
    // of recolouring v to c. Throws if c is v's current colour.
    std::int64_t move_delta(int v, int c) const;

    void apply_move(int v, int c);
    void apply_move(const Move& m) { apply_move(m.vertex, m.new_colour); }

    // Colour c' != colour(v) minimising gamma(v, .), ties broken uniformly
    // at random. Whenever gamma(v, colour(v)) > floor(deg(v)/k) the value
    // returned is at most floor(deg(v)/k) and the move strictly improves.
    // Requires k >= 2.
    std::pair<int, std::int32_t> best_replacement_colour(int v, Rng& rng) const;

    // 64-bit state fingerprint, a pure function of the colour vector,
    // maintained incrementally. Used for cycle detection.
    std::uint64_t fingerprint() const { return fingerprint_; }

private:
    std::size_t index(int v, int c) const {
        return static_cast<std::size_t>(v) * static_cast<std::size_t>(coloring_.k) +
               static_cast<std::size_t>(c);
    }
    static std::uint64_t state_key(int v, int c);
    void set_conflicting(int v, bool on);

    const Graph* graph_ = nullptr;
    Coloring coloring_;
    std::vector<std::int32_t> gamma_;
    std::int64_t conflict_count_ = 0;
    std::vector<int> conflicting_; // sparse-set members
    std::vector<int> position_;    // vertex -> index in conflicting_, or -1
    std::uint64_t fingerprint_ = 0;
};

} // namespace vdcol

#endif
