// Acceptance gate: runs the verification suite against its pinned
// thresholds and prints one pass/fail line per criterion. The suite runs
// twice with the same base seed; the final criterion compares every
// artifact across the two runs with the wall-clock column removed.
// Exit code 0 only when every criterion passes.
#include "vdcol/experiments.hpp"
#include "vdcol/verify.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
    vdcol::VerifyOptions options;
    for (int i = 1; i < argc; ++i) {
        const std::string arg = argv[i];
        if (arg == "--seed" && i + 1 < argc)
            options.base_seed = std::strtoull(argv[++i], nullptr, 10);
        else if (arg == "--threads" && i + 1 < argc)
            options.threads = std::atoi(argv[++i]);
    }

    const vdcol::VerifyReport first = vdcol::verify_criteria(options);
    for (const auto& c : first.criteria)
        std::cout << (c.passed ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.title << " — "
                  << c.detail << '\n'
                  << std::flush;

    const vdcol::VerifyReport second = vdcol::verify_criteria(options);
    bool deterministic = first.artifacts.size() == second.artifacts.size();
    std::string mismatch;
    for (std::size_t i = 0; deterministic && i < first.artifacts.size(); ++i) {
        deterministic = first.artifacts[i].first == second.artifacts[i].first &&
                        vdcol::strip_csv_column(first.artifacts[i].second, "wall_ms") ==
                            vdcol::strip_csv_column(second.artifacts[i].second, "wall_ms");
        if (!deterministic)
            mismatch = first.artifacts[i].first;
    }
    std::cout << (deterministic ? "[PASS] " : "[FAIL] ")
              << "11 rerun with the same base seed reproduces every artifact — "
              << (deterministic ? std::to_string(first.artifacts.size()) + " artifacts identical"
                                : "first mismatch: " + mismatch)
              << '\n';

    vdcol::write_artifacts(first, "acceptance_artifacts");
    const bool ok = first.all_passed() && second.all_passed() && deterministic;
    std::cout << (ok ? "ACCEPTANCE: all criteria passed\n" : "ACCEPTANCE: FAILURES PRESENT\n");
    return ok ? 0 : 1;
}
