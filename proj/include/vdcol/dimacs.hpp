#ifndef VDCOL_DIMACS_HPP
#define VDCOL_DIMACS_HPP

#include "vdcol/graph.hpp"

#include <stdexcept>
#include <string>

namespace vdcol {

struct DimacsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// DIMACS .col text, 1-indexed vertices: one "p edge <n> <m>" header,
// "e <u> <v>" per edge, "c ..." comments ignored.
// Out-of-range endpoints and malformed headers always fail; a mismatch
// between the declared and actual edge count fails only when strict.
Graph parse_dimacs(const std::string& text, bool strict = false);

std::string write_dimacs(const Graph& g);

Graph read_dimacs_file(const std::string& path, bool strict = false);
void write_dimacs_file(const Graph& g, const std::string& path);

} // namespace vdcol

#endif
