#pragma once

#include "homcfi/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace homcfi {

/// Caps for the verification suites. The defaults match the sizes used by the
/// acceptance checks; the CLI can shrink them for quick runs.
struct VerifyOptions {
    std::uint64_t seed = 0;
    int corpus_random = 100;        // random connected bases added to the corpus
    int expansion_hosts = 200;      // hosts per expansion-equivalence pattern
    int lift_hosts = 100;           // hosts for the color-lifting identity
    int reduction_instances = 50;   // (S, G) instances per reduction case
    int minor_hosts = 20;           // hosts per minor-model
    int ie_sample = 500;            // sampled instances for large IE bases
    int ie_run_max_edges = 5;       // run the full IE pipeline up to this |E(S)|
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = true;
    long instances = 0;  // instances exercised
    long failures = 0;
    double seconds = 0.0;  // wall-clock time spent on the check
    std::string detail;    // JSON counterexample payload for the first failure
};

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const auto& c : checks) {
            if (!c.passed) return false;
        }
        return true;
    }
};

/// CFI construction: CSP solution counts, the filter unit value, the kill law
/// on non-surjectively colored graphs, and charge-pushing isomorphisms.
VerifyReport verify_cfi(const VerifyOptions& opts = {});

/// Quantum evaluation worked example, cardinality filters (exhaustive at small
/// size), and CFI vs inclusion-exclusion filter agreement.
VerifyReport verify_filters(const VerifyOptions& opts = {});

/// Hom-expansions of subgraph and induced-subgraph counts against brute-force
/// counting, the constituent sign law, and the color-lifting identity.
VerifyReport verify_expansion(const VerifyOptions& opts = {});

/// End-to-end oracle reduction (cases a, b, c), ledger call counts for the
/// CFI vs inclusion-exclusion contrast, and minor-model host lifting.
VerifyReport verify_reduction(const VerifyOptions& opts = {});

VerifyReport verify_all(const VerifyOptions& opts = {});

/// Dispatch by suite name: cfi | filters | expansion | reduction | all.
VerifyReport verify_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace homcfi
