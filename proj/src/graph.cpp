#include "vdcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vdcol {

Graph Graph::from_edges(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = vertex_count;
    g.adj_.assign(static_cast<std::size_t>(vertex_count), {});
    g.edges_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= vertex_count || v < 0 || v >= vertex_count)
            throw std::invalid_argument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside 0.." + std::to_string(vertex_count - 1));
        if (u == v)
            throw std::invalid_argument("self-loop (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") is not allowed");
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    for (const auto& [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    return g;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v)
        best = std::max(best, degree(v));
    return best;
}

bool Graph::has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

bool Graph::is_connected() const { return component_count() <= 1; }

int Graph::component_count() const {
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::vector<int> stack;
    int components = 0;
    for (int start = 0; start < n_; ++start) {
        if (seen[start])
            continue;
        ++components;
        seen[start] = 1;
        stack.push_back(start);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w : adj_[v]) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            }
        }
    }
    return components;
}

const char* to_string(BrooksClass cls) {
    switch (cls) {
    case BrooksClass::complete: return "complete";
    case BrooksClass::odd_ring: return "odd_ring";
    case BrooksClass::other: return "other";
    }
    return "other";
}

BrooksReport classify_brooks(const Graph& g) {
    BrooksReport report;
    report.connected = g.is_connected();
    const std::int64_t n = g.vertex_count();
    if (report.connected && g.edge_count() == n * (n - 1) / 2) {
        report.cls = BrooksClass::complete;
        return report;
    }
    if (report.connected && n >= 3 && n % 2 == 1) {
        bool two_regular = true;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 2) {
                two_regular = false;
                break;
            }
        }
        if (two_regular) {
            report.cls = BrooksClass::odd_ring;
            return report;
        }
    }
    report.cls = BrooksClass::other;
    return report;
}

namespace {

// K1 u P3 on exactly four vertices: induced degree multiset {0,1,1,2} with
// the degree-2 vertex adjacent to both degree-1 vertices.
bool four_set_is_k1_p3(const Graph& g, const std::vector<int>& vs) {
    int deg[4] = {0, 0, 0, 0};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.has_edge(vs[i], vs[j])) {
                ++deg[i];
                ++deg[j];
            }
    int count[3] = {0, 0, 0};
    int middle = -1;
    for (int i = 0; i < 4; ++i) {
        if (deg[i] > 2)
            return false;
        ++count[deg[i]];
        if (deg[i] == 2)
            middle = i;
    }
    if (count[0] != 1 || count[1] != 2 || count[2] != 1)
        return false;
    for (int i = 0; i < 4; ++i)
        if (deg[i] == 1 && !g.has_edge(vs[middle], vs[i]))
            return false;
    return true;
}

} // namespace

bool induces_k1_p3(const Graph& g, const std::vector<int>& four_vertices) {
    return four_set_is_k1_p3(g, four_vertices);
}

NeighbourhoodClassReport neighbourhood_class_check(const Graph& g) {
    NeighbourhoodClassReport report;
    report.max_degree = g.max_degree();
    bool all_pass = report.max_degree <= 4;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 4)
            continue;
        report.degree4_vertices.push_back(v);
        if (!four_set_is_k1_p3(g, g.neighbours(v)))
            all_pass = false;
    }
    report.all_induce_k1_p3 = all_pass;
    return report;
}

} // namespace vdcol
