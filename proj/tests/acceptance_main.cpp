// Acceptance gate: nine criteria, one pass/fail line each.  Exits nonzero
// if any criterion fails.

#include "projperm/verify.hpp"

#include <cstdio>

namespace {

struct Criterion {
    const char* title;
    const char* suite;
};

const Criterion kCriteria[] = {
    {"coefficient maps invert each other", "coeff-roundtrip"},
    {"chain rewrites preserve the permutation", "chain-equivalence"},
    {"representation families are in bijection", "rep-bijection"},
    {"swap and power-map identities", "swap-identities"},
    {"rank algorithms cross-validate", "rank-cross"},
    {"rank bound and exactness certificate", "rank-bound"},
    {"constructive decomposition", "decompose"},
    {"classical two-cycle chains", "classic-identities"},
    {"rank distribution counts", "distribution"},
};

} // namespace

int main() {
    int failed = 0;
    int index = 0;
    for (const auto& c : kCriteria) {
        ++index;
        projperm::SuiteResult r = projperm::run_suite(c.suite);
        if (r.passed) {
            std::printf("criterion %d/9 %-42s PASS (%llu checks)\n", index, c.title,
                        static_cast<unsigned long long>(r.checks));
        } else {
            ++failed;
            std::printf("criterion %d/9 %-42s FAIL (%llu of %llu checks)\n", index,
                        c.title, static_cast<unsigned long long>(r.failed),
                        static_cast<unsigned long long>(r.checks));
            for (const auto& msg : r.failures)
                std::printf("    - %s\n", msg.c_str());
        }
    }
    if (failed == 0) {
        std::printf("all 9 acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d of 9 acceptance criteria failed\n", failed);
    return 1;
}
