#include "vdcol/gamma_table.hpp"

#include <stdexcept>
#include <string>

namespace vdcol {

GammaTable::GammaTable(const Graph& g, Coloring s) : graph_(&g), coloring_(std::move(s)) {
    if (coloring_.size() != g.vertex_count())
        throw std::invalid_argument("colouring length " + std::to_string(coloring_.size()) +
                                    " does not match vertex count " + std::to_string(g.vertex_count()));
    if (coloring_.k < 1)
        throw std::invalid_argument("colour count must be at least 1");
    for (int v = 0; v < coloring_.size(); ++v)
        if (coloring_.colours[v] < 0 || coloring_.colours[v] >= coloring_.k)
            throw std::invalid_argument("vertex " + std::to_string(v) + " has colour outside 0..k-1");

    const int n = g.vertex_count();
    gamma_.assign(static_cast<std::size_t>(n) * coloring_.k, 0);
    position_.assign(static_cast<std::size_t>(n), -1);
    for (const auto& [u, v] : g.edges()) {
        ++gamma_[index(u, coloring_.colours[v])];
        ++gamma_[index(v, coloring_.colours[u])];
    }
    for (int v = 0; v < n; ++v) {
        conflict_count_ += gamma(v, coloring_.colours[v]);
        if (gamma(v, coloring_.colours[v]) > 0)
            set_conflicting(v, true);
        fingerprint_ ^= state_key(v, coloring_.colours[v]);
    }
    conflict_count_ /= 2;
}

std::uint64_t GammaTable::state_key(int v, int c) {
    std::uint64_t s = 0x6a09e667f3bcc909ULL ^ (static_cast<std::uint64_t>(v) << 20) ^
                      static_cast<std::uint64_t>(c);
    return splitmix64(s);
}

void GammaTable::set_conflicting(int v, bool on) {
    const int pos = position_[v];
    if (on) {
        if (pos >= 0)
            return;
        position_[v] = static_cast<int>(conflicting_.size());
        conflicting_.push_back(v);
    } else {
        if (pos < 0)
            return;
        const int last = conflicting_.back();
        conflicting_[pos] = last;
        position_[last] = pos;
        conflicting_.pop_back();
        position_[v] = -1;
    }
}

std::int64_t GammaTable::move_delta(int v, int c) const {
    const int current = coloring_.colours[v];
    if (c == current)
        throw std::invalid_argument("recolouring vertex " + std::to_string(v) +
                                    " to its current colour is not a move");
    if (c < 0 || c >= coloring_.k)
        throw std::invalid_argument("colour out of range");
    return static_cast<std::int64_t>(gamma(v, c)) - gamma(v, current);
}

void GammaTable::apply_move(int v, int c) {
    const int old_colour = coloring_.colours[v];
    conflict_count_ += move_delta(v, c); // validates the move
    for (int w : graph_->neighbours(v)) {
        --gamma_[index(w, old_colour)];
        ++gamma_[index(w, c)];
        const int wc = coloring_.colours[w];
        if (wc == old_colour && gamma(w, wc) == 0)
            set_conflicting(w, false);
        else if (wc == c && gamma(w, wc) == 1)
            set_conflicting(w, true);
    }
    coloring_.colours[v] = c;
    set_conflicting(v, gamma(v, c) > 0);
    fingerprint_ ^= state_key(v, old_colour) ^ state_key(v, c);
}

std::pair<int, std::int32_t> GammaTable::best_replacement_colour(int v, Rng& rng) const {
    if (coloring_.k < 2)
        throw std::invalid_argument("best_replacement_colour requires at least 2 colours");
    const int current = coloring_.colours[v];
    std::int32_t best_value = 0;
    int ties = 0;
    int chosen = -1;
    for (int c = 0; c < coloring_.k; ++c) {
        if (c == current)
            continue;
        const std::int32_t value = gamma(v, c);
        if (ties == 0 || value < best_value) {
            best_value = value;
            ties = 1;
            chosen = c;
        } else if (value == best_value) {
            ++ties;
            if (rng.below(static_cast<std::uint64_t>(ties)) == 0)
                chosen = c;
        }
    }
    return {chosen, best_value};
}

} // namespace vdcol
