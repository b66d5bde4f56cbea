#include <cstdio>
#include <exception>

#include "msym/acceptance.hpp"

// Standalone acceptance runner: executes every criterion, prints one
// verdict line per criterion plus the measured gauges, and exits 0 only
// when each criterion either passes outright or fails exclusively in the
// gauges registered as known defects (those verdicts show up as
// FAIL(registered) and stay visible).

int main() {
    using namespace msym;
    AcceptanceContext ctx;

    std::vector<CriterionOutcome> outcomes;
    try {
        outcomes = run_suite("all", ctx);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance aborted: %s\n", e.what());
        return 2;
    }

    int passed = 0, registered = 0, failed = 0;
    for (const auto& oc : outcomes) {
        const char* verdict = oc.pass ? "PASS" : (oc.acceptable ? "FAIL(registered)" : "FAIL");
        if (oc.pass)
            ++passed;
        else if (oc.acceptable)
            ++registered;
        else
            ++failed;
        std::printf("%-16s %-32s %7.2f s / %.0f s\n", verdict, oc.name.c_str(), oc.seconds,
                    oc.budget_seconds);
        for (const auto& g : oc.gauges) {
            if (!std::isfinite(g.tol)) {
                std::printf("    %-36s = %+.12e\n", g.key.c_str(), g.value);
            } else {
                std::printf("    %-36s = %+.6e  tol %.1e  %s%s\n", g.key.c_str(), g.value, g.tol,
                            g.ok ? "ok" : "EXCEEDED", !g.ok && g.registered_defect
                                                          ? " (registered defect)"
                                                          : "");
            }
        }
        if (!oc.note.empty()) std::printf("    note: %s\n", oc.note.c_str());
    }

    std::printf("\n%d passed, %d failed only in registered-defect gauges, %d failed\n", passed,
                registered, failed);
    return failed == 0 ? 0 : 1;
}
