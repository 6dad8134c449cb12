#include "vdcol/baselines.hpp"
#include "vdcol/experiments.hpp"
#include "vdcol/instances.hpp"

#include <doctest.h>

#include <algorithm>

using namespace vdcol;

namespace {

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer ring
        edges.emplace_back(i, i + 5);                // spoke
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
    }
    return Graph::from_edges(10, edges);
}

} // namespace

TEST_CASE("dsatur on fixed instances") {
    CHECK(dsatur(path_graph(10)).colours_used == 2);
    CHECK(dsatur(complete_graph(5)).colours_used == 5);
    CHECK(dsatur(ring_graph(6)).colours_used == 2);
    CHECK(dsatur(ring_graph(7)).colours_used == 3);

    // hard instance: 4 colours for every random tie-break seed
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        DsaturOptions options;
        options.tie_break = TieBreak::random;
        options.seed = seed;
        CHECK(dsatur(g1(), options).colours_used == 4);
    }
}

TEST_CASE("dsatur output is always proper and within the greedy bound") {
    for (int i = 0; i < 120; ++i) {
        Rng rng(14'000 + i);
        const int n = 1 + rng.below_int(40);
        const auto max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const Graph g = random_gnm_graph(n, static_cast<std::int64_t>(rng.below(max_edges + 1)),
                                         rng.next());
        DsaturOptions options;
        options.tie_break = i % 2 == 0 ? TieBreak::lexicographic : TieBreak::random;
        options.seed = rng.next();
        const DsaturResult result = dsatur(g, options);
        CHECK(conflict_count_direct(g, result.coloring) == 0);
        CHECK(result.colours_used <= g.max_degree() + 1);
    }
}

TEST_CASE("dsatur uses two colours on forests") {
    for (int trees : {1, 3, 6})
        CHECK(dsatur(forest_g2(trees)).colours_used == 2);
    CHECK(dsatur(path_graph(33)).colours_used == 2);
    CHECK(dsatur(Graph::from_edges(4, {})).colours_used == 1);
}

TEST_CASE("dsatur records a decision trace when asked") {
    DsaturOptions options;
    options.record_trace = true;
    const DsaturResult result = dsatur(path_graph(5), options);
    CHECK(result.decision_trace.size() == 5);
    CHECK(result.decision_trace.front().second == 0); // first pick saturates nothing
}

TEST_CASE("dsatur enumeration extremes") {
    CHECK(dsatur_enumerate(ring_graph(6)) == std::pair<int, int>{2, 2});
    CHECK(dsatur_enumerate(ring_graph(5)) == std::pair<int, int>{3, 3});
    CHECK(dsatur_enumerate(g1()) == std::pair<int, int>{4, 4});
    CHECK_THROWS_AS(dsatur_enumerate(ring_graph(14), 10), BranchLimitError);
}

TEST_CASE("enumeration minimum never beats the chromatic number") {
    for (int i = 0; i < 60; ++i) {
        Rng rng(15'000 + i);
        const int n = 2 + rng.below_int(9);
        const auto max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const Graph g = random_gnm_graph(n, static_cast<std::int64_t>(rng.below(max_edges + 1)),
                                         rng.next());
        const auto [lo, hi] = dsatur_enumerate(g);
        CHECK(lo <= hi);
        CHECK(lo >= exact_chromatic(g));
    }
}

TEST_CASE("exact colourability and chromatic number") {
    CHECK(exact_chromatic(ring_graph(7)) == 3);
    CHECK(exact_chromatic(complete_graph(6)) == 6);
    CHECK(exact_chromatic(petersen()) == 3);
    CHECK(exact_chromatic(path_graph(1)) == 1);
    CHECK(exact_chromatic(forest_g2(2)) == 2);

    CHECK_FALSE(k_colorable(petersen(), 2));
    const auto witness = k_colorable(petersen(), 3);
    REQUIRE(witness.has_value());
    CHECK(conflict_count_direct(petersen(), *witness) == 0);
    CHECK(*std::max_element(witness->colours.begin(), witness->colours.end()) < 3);

    CHECK_THROWS_AS(k_colorable(ring_graph(9), 0), std::invalid_argument);
}

TEST_CASE("exact search refuses past its node budget") {
    // a 3-chromatic instance large enough that 3 nodes cannot decide it
    CHECK_THROWS_AS(k_colorable(ring_graph(31), 2, 3), UndecidedError);
}

TEST_CASE("witnesses are proper on random graphs") {
    for (int i = 0; i < 40; ++i) {
        Rng rng(16'000 + i);
        const int n = 2 + rng.below_int(14);
        const auto max_edges = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const Graph g = random_gnm_graph(n, static_cast<std::int64_t>(rng.below(max_edges + 1)),
                                         rng.next());
        const int chroma = exact_chromatic(g);
        const auto witness = k_colorable(g, chroma);
        REQUIRE(witness.has_value());
        CHECK(conflict_count_direct(g, *witness) == 0);
        if (chroma > 1)
            CHECK_FALSE(k_colorable(g, chroma - 1));
    }
}
