#include "vdcol/dimacs.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace vdcol {

Graph parse_dimacs(const std::string& text, bool strict) {
    std::istringstream input(text);
    std::string line;
    bool got_header = false;
    int n = 0;
    std::int64_t declared_edges = 0;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(input, line)) {
        ++line_no;
        if (line.empty() || line[0] == 'c' || line[0] == '\r')
            continue;
        std::istringstream fields(line);
        if (line[0] == 'p') {
            std::string tag, format;
            fields >> tag >> format >> n >> declared_edges;
            if (!fields || tag != "p" || (format != "edge" && format != "edges" && format != "col"))
                throw DimacsError("malformed header at line " + std::to_string(line_no) + ": " + line);
            if (n < 0 || declared_edges < 0)
                throw DimacsError("negative counts in header at line " + std::to_string(line_no));
            if (got_header)
                throw DimacsError("duplicate header at line " + std::to_string(line_no));
            got_header = true;
        } else if (line[0] == 'e') {
            if (!got_header)
                throw DimacsError("edge before header at line " + std::to_string(line_no));
            std::string tag;
            int u = 0, v = 0;
            fields >> tag >> u >> v;
            if (!fields || tag != "e")
                throw DimacsError("malformed edge at line " + std::to_string(line_no) + ": " + line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw DimacsError("vertex index out of range at line " + std::to_string(line_no) + ": " + line);
            edges.emplace_back(u - 1, v - 1);
        } else if (strict) {
            throw DimacsError("unrecognised line " + std::to_string(line_no) + ": " + line);
        }
    }
    if (!got_header)
        throw DimacsError("missing 'p edge' header");
    if (declared_edges != static_cast<std::int64_t>(edges.size())) {
        const std::string what = "header declares " + std::to_string(declared_edges) +
                                 " edges but " + std::to_string(edges.size()) + " were read";
        if (strict)
            throw DimacsError(what);
        std::cerr << "warning: " << what << '\n';
    }
    return Graph::from_edges(n, edges);
}

std::string write_dimacs(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_dimacs_file(const std::string& path, bool strict) {
    std::ifstream input(path);
    if (!input)
        throw DimacsError("cannot open " + path);
    std::ostringstream buffer;
    buffer << input.rdbuf();
    return parse_dimacs(buffer.str(), strict);
}

void write_dimacs_file(const Graph& g, const std::string& path) {
    std::ofstream output(path);
    if (!output)
        throw DimacsError("cannot open " + path + " for writing");
    output << write_dimacs(g);
}

} // namespace vdcol
