#ifndef VDCOL_COLORING_HPP
#define VDCOL_COLORING_HPP

#include "vdcol/graph.hpp"
#include "vdcol/rng.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace vdcol {

// Assignment of one of k colours to each vertex. Colours are 0-indexed;
// colour classes are derived views, never stored.
struct Coloring {
    std::vector<int> colours;
    int k = 1;

    int size() const { return static_cast<int>(colours.size()); }
    int colour_of(int v) const { return colours[v]; }

    bool operator==(const Coloring&) const = default;
};

// Each vertex drawn independently and uniformly from 0..k-1.
Coloring random_coloring(const Graph& g, int k, Rng& rng);

// Monochromatic-edge count by direct edge scan; the oracle the
// incremental table is checked against.
std::int64_t conflict_count_direct(const Graph& g, const Coloring& s);

// One line "v <index> <colour>" per vertex, 0-indexed.
std::string write_coloring(const Coloring& s);
Coloring parse_coloring(const std::string& text);

} // namespace vdcol

#endif
