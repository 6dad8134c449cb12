#include "vdcol/experiments.hpp"

#include <doctest.h>

#include <algorithm>

#include <cmath>

using namespace vdcol;

TEST_CASE("batches are reproducible modulo wall time") {
    SolverConfig cfg;
    cfg.k = 2;
    cfg.max_steps = 100'000;
    const InstanceSpec spec = parse_instance_spec("path:40");
    const BatchResult a = run_batch(spec, cfg, 50, 99, 2);
    const BatchResult b = run_batch(spec, cfg, 50, 99, 1);
    CHECK(strip_csv_column(records_csv(a.records), "wall_ms") ==
          strip_csv_column(records_csv(b.records), "wall_ms"));
    CHECK(summary_json(a.summary) == summary_json(b.summary));
}

TEST_CASE("trivial batch succeeds in zero steps") {
    SolverConfig cfg;
    cfg.k = 1;
    cfg.max_steps = 10;
    const BatchResult result = run_batch(parse_instance_spec("path:1"), cfg, 10, 5);
    CHECK(result.summary.success_rate == 1.0);
    CHECK(result.summary.steps_max == 0);
    CHECK(result.summary.success_rate + result.summary.cycle_rate + result.summary.budget_rate +
              result.summary.error_rate ==
          1.0);
}

TEST_CASE("per-trial errors are recorded with their reason") {
    SolverConfig cfg;
    cfg.k = 0; // rejected by the solver inside every trial
    cfg.max_steps = 10;
    const BatchResult result = run_batch(parse_instance_spec("path:5"), cfg, 3, 1);
    CHECK(result.summary.error_rate == 1.0);
    for (const auto& record : result.records) {
        CHECK(record.status == "error");
        CHECK_FALSE(record.error.empty());
    }
}

TEST_CASE("summary statistics come from sorted step counts") {
    SolverConfig cfg;
    cfg.k = 2;
    cfg.max_steps = 100'000;
    const BatchResult result = run_batch(parse_instance_spec("path:30"), cfg, 25, 3);
    CHECK(result.summary.steps_p50 <= result.summary.steps_p90);
    CHECK(result.summary.steps_p90 <= result.summary.steps_max);
    CHECK(result.records.size() == 25);
    for (std::size_t i = 0; i < result.records.size(); ++i)
        CHECK(result.records[i].trial_index == static_cast<int>(i));
}

TEST_CASE("records csv carries one line per trial") {
    SolverConfig cfg;
    cfg.k = 3;
    cfg.max_steps = 1000;
    const BatchResult result = run_batch(parse_instance_spec("ring:9"), cfg, 4, 1);
    const std::string csv = records_csv(result.records);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
    CHECK(csv.rfind("trial,seed,status,steps,best_conflicts,wall_ms\n", 0) == 0);
}

TEST_CASE("strip_csv_column removes exactly the named column") {
    const std::string csv = "a,b,c\n1,2,3\n4,5,6\n";
    CHECK(strip_csv_column(csv, "b") == "a,c\n1,3\n4,6\n");
    CHECK(strip_csv_column(csv, "missing") == csv);
}

TEST_CASE("analytic failure bounds evaluate their closed forms") {
    CHECK(g2_failure_lower_bound(1) == doctest::Approx(1.0 / 32.0));
    CHECK(g2_failure_lower_bound(10) == doctest::Approx(1.0 - std::pow(31.0 / 32.0, 10)));
    CHECK(g3_failure_lower_bound(2) ==
          doctest::Approx((1.0 - std::pow(239.0 / 243.0, 2)) * (1.0 - 239.0 / 243.0)));
    CHECK(g3_failure_lower_bound(50) == doctest::Approx(0.3139).epsilon(0.01));
    // monotone towards certainty
    CHECK(g2_failure_lower_bound(20) > g2_failure_lower_bound(5));
}

TEST_CASE("trap experiment counts cycles and spent budgets as non-success") {
    const TrapResult result = trap_experiment(TrapFamily::g2, 2, 120, 50'000, 0, 2024, 2);
    CHECK(result.k == 2);
    CHECK(result.trials == 120);
    CHECK(result.non_success_rate ==
          doctest::Approx(result.cycle_rate + result.budget_rate));
    CHECK(result.analytic_lower_bound == doctest::Approx(g2_failure_lower_bound(2)));
    CHECK(result.records.size() == 120);
    const std::string json = trap_json(result);
    CHECK(json.find("\"family\":\"g2\"") != std::string::npos);
}

TEST_CASE("trap non-success grows with the tree count") {
    const TrapResult small = trap_experiment(TrapFamily::g2, 1, 400, 50'000, 0, 33, 2);
    const TrapResult large = trap_experiment(TrapFamily::g2, 10, 400, 50'000, 0, 33, 2);
    CHECK(large.non_success_rate >= small.non_success_rate);
    CHECK(large.non_success_rate > 0.9); // approaches certainty
}

TEST_CASE("descent bound holds on degree-capped random graphs") {
    for (std::uint64_t s = 0; s < 4; ++s) {
        const Graph g = bounded_degree_random(50, 4, s);
        const auto report = descent_bound_check(g, 2, 25, s);
        CHECK_MESSAGE(report.ok, report.failure);
    }
}

TEST_CASE("scaling experiment validates its inputs") {
    CHECK_THROWS_AS(scaling_experiment(ScalingFamily::path, {16, 32}, 5, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaling_experiment(ScalingFamily::path, {32, 16, 64}, 5, 2, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(scaling_experiment(ScalingFamily::ring_odd, {16, 32, 64}, 5, 3, 1),
                    std::invalid_argument);
}

TEST_CASE("scaling experiment fits a slope over medians") {
    const ScalingResult result = scaling_experiment(ScalingFamily::path, {8, 16, 32}, 20, 2, 7, 2);
    CHECK(result.rows.size() == 3);
    CHECK_FALSE(result.budget_flagged);
    for (const auto& row : result.rows)
        CHECK(row.success_rate == 1.0);
    CHECK(result.slope > 0.0);
    CHECK(result.slope <= 5.0);
    const std::string csv = scaling_csv(result);
    CHECK(csv.rfind("family,n,k,trials,median_steps,p90_steps,max_steps,success_rate\n", 0) == 0);
}

TEST_CASE("descent bound check on the complete graph example") {
    // K5 at k=2: every vertex capped at floor(4/2)=2 conflicts and the
    // total capped at 5
    const auto report = descent_bound_check(complete_graph(5), 2, 20, 17);
    CHECK(report.ok);
    std::int64_t cap = 0;
    for (int v = 0; v < 5; ++v)
        cap += 4 / 2;
    CHECK(cap / 2 == 5);
}

TEST_CASE("descent bound check with k above the maximum degree ends feasible") {
    // per-vertex share is zero, so the reached state has no conflicts
    const Graph g = random_gnm_graph(30, 60, 4);
    const auto report = descent_bound_check(g, g.max_degree() + 1, 5, 2);
    CHECK(report.ok);
}

TEST_CASE("gnm generator is deterministic and validates") {
    const Graph a = random_gnm_graph(20, 50, 9);
    const Graph b = random_gnm_graph(20, 50, 9);
    CHECK(a.edges() == b.edges());
    CHECK(a.edge_count() == 50);
    CHECK_THROWS_AS(random_gnm_graph(4, 7, 1), std::invalid_argument);
}
