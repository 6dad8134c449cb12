#include "vdcol/coloring.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vdcol {

Coloring random_coloring(const Graph& g, int k, Rng& rng) {
    if (k < 1)
        throw std::invalid_argument("colour count must be at least 1");
    Coloring s;
    s.k = k;
    s.colours.resize(static_cast<std::size_t>(g.vertex_count()));
    for (auto& colour : s.colours)
        colour = rng.below_int(k);
    return s;
}

std::int64_t conflict_count_direct(const Graph& g, const Coloring& s) {
    std::int64_t conflicts = 0;
    for (const auto& [u, v] : g.edges())
        if (s.colours[u] == s.colours[v])
            ++conflicts;
    return conflicts;
}

std::string write_coloring(const Coloring& s) {
    std::ostringstream out;
    for (int v = 0; v < s.size(); ++v)
        out << "v " << v << ' ' << s.colours[v] << '\n';
    return out.str();
}

Coloring parse_coloring(const std::string& text) {
    std::istringstream input(text);
    std::string line;
    std::vector<std::pair<int, int>> entries;
    while (std::getline(input, line)) {
        if (line.empty() || line[0] == 'c')
            continue;
        std::istringstream fields(line);
        std::string tag;
        int vertex = 0, colour = 0;
        fields >> tag >> vertex >> colour;
        if (!fields || tag != "v" || vertex < 0 || colour < 0)
            throw std::invalid_argument("malformed colouring line: " + line);
        entries.emplace_back(vertex, colour);
    }
    Coloring s;
    s.colours.assign(entries.size(), -1);
    for (const auto& [vertex, colour] : entries) {
        if (vertex >= static_cast<int>(s.colours.size()) || s.colours[vertex] != -1)
            throw std::invalid_argument("colouring is not a dense permutation of vertex lines");
        s.colours[vertex] = colour;
        s.k = std::max(s.k, colour + 1);
    }
    return s;
}

} // namespace vdcol
