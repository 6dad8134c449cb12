#include "vdcol/instances.hpp"

#include "vdcol/rng.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vdcol {

Graph path_graph(int n) {
    if (n < 1)
        throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v)
        edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, edges);
}

Graph ring_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("ring needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
    if (n < 3)
        throw std::invalid_argument("complete graph needs at least 3 vertices");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph g1() {
    // Two diamonds (K4 minus an edge) joined tip-to-tip: 0-4 and 1-5
    // connect the degree-2 corners of one diamond to the degree-3 ring of
    // the other. Frozen by exhaustive oracle-checked search; the search
    // space contains exactly one isomorphism class passing all three
    // checks, and it passes the tie-break enumeration whether the
    // secondary degree rule counts uncoloured neighbours or all of them.
    static const std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3},
        {1, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
    };
    return Graph::from_edges(8, edges);
}

namespace {

constexpr int kTreeSize = 14;

void add_tree_edges(std::vector<std::pair<int, int>>& edges, int base) {
    const int a = base + 0, b = base + 1;
    const int c = base + 2, d = base + 3, e = base + 4, f = base + 5;
    edges.emplace_back(a, b);
    edges.emplace_back(a, c);
    edges.emplace_back(a, d);
    edges.emplace_back(b, e);
    edges.emplace_back(b, f);
    int leaf = base + 6;
    for (int parent : {c, d, e, f}) {
        edges.emplace_back(parent, leaf++);
        edges.emplace_back(parent, leaf++);
    }
}

} // namespace

Graph forest_g2(int trees) {
    if (trees < 1)
        throw std::invalid_argument("forest needs at least 1 tree");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(trees) * 13);
    for (int t = 0; t < trees; ++t)
        add_tree_edges(edges, t * kTreeSize);
    Graph g = Graph::from_edges(trees * kTreeSize, edges);
    if (g.edge_count() != static_cast<std::int64_t>(trees) * 13 || g.max_degree() != 3)
        throw std::logic_error("forest generator violated its contract");
    return g;
}

Coloring forest_g2_trap_coloring(int trees) {
    if (trees < 1)
        throw std::invalid_argument("forest needs at least 1 tree");
    Coloring s;
    s.k = 2;
    s.colours.assign(static_cast<std::size_t>(trees) * kTreeSize, 0);
    for (int t = 0; t < trees; ++t) {
        const int base = t * kTreeSize;
        for (int offset = 2; offset <= 5; ++offset)
            s.colours[base + offset] = 1; // C, D, E, F opposite to A, B and the leaves
    }
    return s;
}

namespace {

constexpr int kLegSize = 5;

} // namespace

Graph legs_g3(int legs) {
    if (legs < 2)
        throw std::invalid_argument("leg graph needs at least 2 legs");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(legs) * 7);
    const int centre = 0;
    for (int i = 0; i < legs; ++i) {
        const int base = 1 + i * kLegSize;
        const int a = base + 0, b = base + 1, p = base + 2, la = base + 3, lb = base + 4;
        edges.emplace_back(centre, a);
        edges.emplace_back(centre, b);
        edges.emplace_back(a, b);
        edges.emplace_back(a, p);
        edges.emplace_back(b, p);
        edges.emplace_back(a, la);
        edges.emplace_back(b, lb);
    }
    Graph g = Graph::from_edges(1 + legs * kLegSize, edges);
    if (g.degree(centre) != 2 * legs || g.edge_count() != static_cast<std::int64_t>(legs) * 7)
        throw std::logic_error("leg generator violated its contract");
    return g;
}

Coloring legs_g3_trap_coloring(int legs) {
    if (legs < 2)
        throw std::invalid_argument("leg graph needs at least 2 legs");
    Coloring s;
    s.k = 3;
    s.colours.assign(static_cast<std::size_t>(1 + legs * kLegSize), 0);
    for (int i = 0; i < legs; ++i) {
        const int base = 1 + i * kLegSize;
        int pair_second, rest;
        if (i == 0) {
            pair_second = 1; // pair {0,1}, colour 2 blocked
            rest = 2;
        } else if (i == 1) {
            pair_second = 2; // pair {0,2}, colour 1 blocked
            rest = 1;
        } else {
            s.colours[base + 0] = 1;
            s.colours[base + 1] = 2;
            s.colours[base + 2] = 0;
            s.colours[base + 3] = 0;
            s.colours[base + 4] = 0;
            continue;
        }
        s.colours[base + 0] = 0; // conflicts with the centre
        s.colours[base + 1] = pair_second;
        s.colours[base + 2] = rest;
        s.colours[base + 3] = rest;
        s.colours[base + 4] = rest;
    }
    return s;
}

Graph bounded_degree_random(int n, int delta_max, std::uint64_t seed) {
    if (n < 1)
        throw std::invalid_argument("random graph needs at least 1 vertex");
    if (delta_max < 0)
        throw std::invalid_argument("degree cap must be non-negative");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    Rng rng(seed);
    for (std::size_t i = pairs.size(); i > 1; --i)
        std::swap(pairs[i - 1], pairs[rng.below(i)]);
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edges;
    for (const auto& [u, v] : pairs) {
        if (degree[u] < delta_max && degree[v] < delta_max) {
            edges.emplace_back(u, v);
            ++degree[u];
            ++degree[v];
        }
    }
    return Graph::from_edges(n, edges);
}

std::string InstanceSpec::name() const {
    std::ostringstream out;
    switch (family) {
    case InstanceFamily::path: out << "path:" << size; break;
    case InstanceFamily::ring: out << "ring:" << size; break;
    case InstanceFamily::complete: out << "complete:" << size; break;
    case InstanceFamily::g1: out << "g1"; break;
    case InstanceFamily::forest_g2: out << "g2:" << size; break;
    case InstanceFamily::legs_g3: out << "g3:" << size; break;
    case InstanceFamily::bounded_degree_random:
        out << "rand:" << size << ':' << delta_max << ":seed" << seed;
        break;
    }
    return out.str();
}

namespace {

std::vector<std::string> split_fields(const std::string& text) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : text) {
        if (ch == ':') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    fields.push_back(current);
    return fields;
}

int parse_int_field(const std::string& field, const std::string& what) {
    try {
        std::size_t used = 0;
        const int value = std::stoi(field, &used);
        if (used != field.size())
            throw std::invalid_argument(what);
        return value;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse " + what + " from '" + field + "'");
    }
}

} // namespace

InstanceSpec parse_instance_spec(const std::string& text) {
    const auto fields = split_fields(text);
    const std::string& family = fields[0];
    InstanceSpec spec;
    auto expect_fields = [&](std::size_t count) {
        if (fields.size() != count)
            throw std::invalid_argument("instance spec '" + text + "' has the wrong number of fields");
    };
    if (family == "path" || family == "ring" || family == "complete") {
        expect_fields(2);
        spec.family = family == "path" ? InstanceFamily::path
                    : family == "ring" ? InstanceFamily::ring
                                       : InstanceFamily::complete;
        spec.size = parse_int_field(fields[1], "size");
    } else if (family == "g1") {
        expect_fields(1);
        spec.family = InstanceFamily::g1;
        spec.size = 8;
    } else if (family == "g2") {
        expect_fields(2);
        spec.family = InstanceFamily::forest_g2;
        spec.size = parse_int_field(fields[1], "tree count");
    } else if (family == "g3") {
        expect_fields(2);
        spec.family = InstanceFamily::legs_g3;
        spec.size = parse_int_field(fields[1], "leg count");
    } else if (family == "rand") {
        expect_fields(4);
        spec.family = InstanceFamily::bounded_degree_random;
        spec.size = parse_int_field(fields[1], "size");
        spec.delta_max = parse_int_field(fields[2], "degree cap");
        std::string seed_field = fields[3];
        if (seed_field.rfind("seed", 0) == 0)
            seed_field = seed_field.substr(4);
        spec.seed = static_cast<std::uint64_t>(parse_int_field(seed_field, "seed"));
    } else {
        throw std::invalid_argument("unknown instance family '" + family + "'");
    }
    return spec;
}

Graph make_instance(const InstanceSpec& spec) {
    switch (spec.family) {
    case InstanceFamily::path: return path_graph(spec.size);
    case InstanceFamily::ring: return ring_graph(spec.size);
    case InstanceFamily::complete: return complete_graph(spec.size);
    case InstanceFamily::g1: return g1();
    case InstanceFamily::forest_g2: return forest_g2(spec.size);
    case InstanceFamily::legs_g3: return legs_g3(spec.size);
    case InstanceFamily::bounded_degree_random:
        return bounded_degree_random(spec.size, spec.delta_max, spec.seed);
    }
    throw std::logic_error("unreachable instance family");
}

} // namespace vdcol
