// Acceptance gate: runs the full verification suites at their reference sizes
// and reports one pass/fail line per numbered criterion. Exits nonzero if any
// criterion fails, including the runtime bounds.
#include "homcfi/verify.hpp"

#include <cstdio>
#include <map>
#include <string>
#include <vector>

using namespace homcfi;

namespace {

struct Criterion {
    int number;
    std::string title;
    std::vector<std::string> checks;  // "suite/name" keys that must pass
    double time_limit = 0.0;          // seconds; 0 = no bound
};

}  // namespace

int main() {
    VerifyOptions opts;
    opts.seed = 0;
    opts.corpus_random = 100;
    opts.expansion_hosts = 200;
    opts.lift_hosts = 100;
    opts.reduction_instances = 50;
    opts.minor_hosts = 20;

    auto report = verify_all(opts);
    std::map<std::string, const CheckResult*> by_key;
    for (const auto& c : report.checks) by_key[c.suite + "/" + c.name] = &c;

    std::vector<Criterion> criteria{
        {1, "quantum worked example", {"filters/quantum-worked-example"}, 1.0},
        {2, "hom(S, X(S)) = 1 over the corpus", {"cfi/filter-unit"}, 120.0},
        {3, "CFI solution counts 2^(|E|-|V|+1) and 0", {"cfi/csp-solution-counts"}},
        {4, "X(S) kills non-surjectively colored graphs", {"cfi/filter-kills-nonsurjective"}},
        {5,
         "charge pushing and deleted-class isomorphisms verify",
         {"cfi/charge-push-isomorphisms"}},
        {6, "inclusion-exclusion agrees with the CFI filter", {"filters/ie-cfi-agreement"}},
        {7, "cardinality filters exact on small colored graphs",
         {"filters/cardinality-exhaustive"}},
        {8,
         "sub/ind hom-expansions match brute force with the sign law",
         {"expansion/sub-oracle-equivalence", "expansion/ind-oracle-equivalence",
          "expansion/sub-constituent-sign-law"}},
        {9,
         "oracle reduction recovers hom(S,G) in cases a, b, c",
         {"reduction/case-a", "reduction/case-b", "reduction/case-c"},
         600.0},
        {10, "CFI vs inclusion-exclusion call-count contrast",
         {"reduction/call-count-contrast"}},
        {11,
         "color lifting identity and colorful coefficients",
         {"expansion/color-lift-identity", "expansion/colorful-constituent-coefficients"}},
        {12, "minor-model host lifting", {"reduction/minor-lift"}},
    };

    int failed = 0;
    for (const auto& crit : criteria) {
        bool ok = true;
        long instances = 0;
        double seconds = 0.0;
        std::string detail;
        for (const auto& key : crit.checks) {
            auto it = by_key.find(key);
            if (it == by_key.end()) {
                ok = false;
                detail = "missing check " + key;
                continue;
            }
            instances += it->second->instances;
            seconds += it->second->seconds;
            if (!it->second->passed) {
                ok = false;
                if (detail.empty()) detail = key + ": " + it->second->detail;
            }
        }
        if (ok && crit.time_limit > 0.0 && seconds > crit.time_limit) {
            ok = false;
            detail = "time limit exceeded";
        }
        std::printf("criterion %2d: %s - %s (%ld instances, %.2f s)\n", crit.number,
                    ok ? "pass" : "FAIL", crit.title.c_str(), instances, seconds);
        if (!ok) {
            ++failed;
            if (!detail.empty()) std::printf("              %s\n", detail.c_str());
        }
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
