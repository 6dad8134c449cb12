#ifndef VDCOL_VERIFY_HPP
#define VDCOL_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace vdcol {

struct CriterionResult {
    std::string id;     // "01".."10"
    std::string title;
    bool passed = false;
    std::string detail; // measured values
};

struct VerifyReport {
    std::vector<CriterionResult> criteria;
    // artifact name -> CSV/JSON text, deterministic given the base seed
    // except for the wall_ms column of record files
    std::vector<std::pair<std::string, std::string>> artifacts;

    bool all_passed() const;
};

struct VerifyOptions {
    std::uint64_t base_seed = 20260808;
    int threads = 0; // 0 = hardware concurrency
};

// Runs the full verification suite: exact oracles, solvable-family
// batches, scaling fits, trap-instance statistics, and the descent-phase
// bound, each against its pinned threshold.
VerifyReport verify_criteria(const VerifyOptions& options);

// Writes every artifact into dir (created if missing).
void write_artifacts(const VerifyReport& report, const std::string& dir);

} // namespace vdcol

#endif
