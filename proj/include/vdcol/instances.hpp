#ifndef VDCOL_INSTANCES_HPP
#define VDCOL_INSTANCES_HPP

#include "vdcol/coloring.hpp"
#include "vdcol/graph.hpp"

#include <cstdint>
#include <string>

namespace vdcol {

// Deterministic instance generators. Every generator validates its own
// structural contract before returning.

Graph path_graph(int n);     // n >= 1, edges (i, i+1)
Graph ring_graph(int n);     // n >= 3, 2-regular cycle
Graph complete_graph(int n); // n >= 3

// The 8-vertex 3-chromatic graph on which every tie-break resolution of
// the DSATUR heuristic uses exactly 4 colours. Its maximum degree is 4
// and the neighbourhood of every degree-4 vertex induces K1 u P3, so the
// local-search fast class applies to it even though the constructive
// heuristic always overshoots. The edge list was frozen by exhaustive
// search over 8-vertex graphs under exactly those oracle checks
// (chromatic number, DSATUR tie-break enumeration, neighbourhood class);
// the test suite re-certifies all three properties.
Graph g1();

// Forest of c identical 14-vertex trees (n = 14c, m = 13c, max degree 3).
// Within tree t, with base = 14*t, the fixed labelling is:
//   A = base+0, B = base+1        internal pair, edge A-B
//   C = base+2, D = base+3        children of A
//   E = base+4, F = base+5        children of B
//   base+6..base+13               leaf pairs of C, D, E, F in that order
// The two-conflict oscillation that defeats 2-colour descent needs each
// of C..F pinned by two leaves; the labelling is frozen so experiments
// can address the trap configuration symbolically.
Graph forest_g2(int trees); // trees >= 1

// A, B equal; C, D, E, F opposite; all leaves equal to A — in every tree.
// Descent at k = 2 enters a two-state loop from here.
Coloring forest_g2_trap_coloring(int trees);

// One central vertex (index 0) with `legs` diamond gadgets attached.
// Leg i occupies base = 1 + 5*i:
//   a = base+0, b = base+1        degree-4 pair, adjacent to the centre
//                                 and to each other
//   p = base+2                    pick vertex (degree 2, adjacent to a, b)
//   l_a = base+3, l_b = base+4    leaves of a and b
// n = 5*legs + 1, m = 7*legs, centre degree = 2*legs.
Graph legs_g3(int legs); // legs >= 2

// Centre = colour 0; leg 0 pair {0,1} with pick/leaves 2; leg 1 pair
// {0,2} with pick/leaves 1; remaining legs properly coloured. One leg
// blocks colour 2 for its pair and another blocks colour 1, so no
// feasible 3-colouring is reachable without recolouring a pick vertex or
// leaf, which descent never does from here.
Coloring legs_g3_trap_coloring(int legs);

// Random simple graph with maximum degree <= delta_max: all vertex pairs
// are attempted in a seeded shuffle order and an edge is inserted when
// both endpoints are below the cap. Deterministic per seed.
Graph bounded_degree_random(int n, int delta_max, std::uint64_t seed);

enum class InstanceFamily { path, ring, complete, g1, forest_g2, legs_g3, bounded_degree_random };

// Parsed form of CLI instance strings: "path:100", "ring:15",
// "complete:6", "g1", "g2:5", "g3:8", "rand:200:3:seed7".
struct InstanceSpec {
    InstanceFamily family = InstanceFamily::path;
    int size = 0;          // n, tree count, or leg count depending on family
    int delta_max = 0;     // rand only
    std::uint64_t seed = 0; // rand only

    std::string name() const;
};

InstanceSpec parse_instance_spec(const std::string& text);
Graph make_instance(const InstanceSpec& spec);

} // namespace vdcol

#endif
