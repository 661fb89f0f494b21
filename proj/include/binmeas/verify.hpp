#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace binmeas {

struct VerifyConfig {
    std::uint64_t seed = 1;
    std::size_t depth = 64;
    std::size_t samples = 1000;
    std::size_t universe_cap = 24;
    std::size_t dimension_cap = 3;
};

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string witness;  // empty when passing
    double seconds = 0.0;
};

struct VerifyReport {
    std::vector<CheckResult> results;  // ordered by id
    bool all_pass() const;
    /// `CHECK <id> PASS|FAIL [witness]` lines; byte-identical for equal
    /// configs, so no timings here.
    std::string machine_text() const;
    /// Human summary with timings.
    std::string human_text() const;
};

/// Runs the whole verification suite deterministically under the seed,
/// including the determinism check that replays the suite and compares the
/// machine sections.
VerifyReport verify_all(const VerifyConfig& config);

/// The five-law truth table as fixed-order text (the `b2 table` output).
std::string render_b2_table();

}  // namespace binmeas
