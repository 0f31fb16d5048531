// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Criteria and tolerances:
//   1. exact series-vs-oracle equality, n <= 3 g <= 2 and n = 4 g <= 1 (< 5 min)
//   2. P_n definition == symmetric form, n <= 4, degree 8 (< 2 min)
//   3. permutation-algebra lemma suites, exact at random rational points (< 1 min)
//   4. numeric main theorem, 1e-6 (n=1) / 1e-4 (n=2,3) relative (< 2 min)
//   5. term-wise cyclic-composition correspondence, 1e-5 relative
//   6. truncated series vs numeric evaluation at x = 0.2, 1e-3 relative
//   7. string equation and first KdV equation, exact, weight <= 8

#include <cstdio>

#include "npoint/verify.hpp"

namespace {

struct Criterion {
    const char* label;
    npoint::VerificationReport (*run)();
    double budget_ms;  // 0 = no stated bound
};

npoint::VerificationReport run_cross() { return npoint::verify_cross_pipeline(); }
npoint::VerificationReport run_sym() { return npoint::verify_symmetric_form(); }
npoint::VerificationReport run_lemmas() { return npoint::verify_permutation_lemmas(); }
npoint::VerificationReport run_numeric() { return npoint::verify_main_theorem_numeric(); }
npoint::VerificationReport run_terms() { return npoint::verify_term_correspondence(); }
npoint::VerificationReport run_consistency() { return npoint::verify_series_consistency(); }
npoint::VerificationReport run_witten() { return npoint::verify_string_and_kdv(); }

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"exact cross-pipeline equality (series vs oracle)", run_cross, 300000},
        {"P_n definition vs symmetric form, degree 8", run_sym, 120000},
        {"permutation-algebra lemma suites", run_lemmas, 60000},
        {"numeric main theorem F_bur = F_ok", run_numeric, 120000},
        {"term-wise cyclic-composition correspondence", run_terms, 0},
        {"series vs numeric at x = 0.2", run_consistency, 0},
        {"string equation and first KdV equation", run_witten, 0},
    };

    int failed = 0, index = 0;
    for (const Criterion& c : criteria) {
        ++index;
        const npoint::VerificationReport report = c.run();
        const bool in_budget = c.budget_ms <= 0 || report.wall_ms <= c.budget_ms;
        const bool ok = report.ok() && in_budget;
        std::printf("CRITERION %d: %s -- %s (%zu checks, %d failures, %.0f ms%s)\n", index,
                    ok ? "PASS" : "FAIL", c.label, report.checks.size(), report.failures(),
                    report.wall_ms, in_budget ? "" : ", over time budget");
        if (!ok) {
            ++failed;
            for (const npoint::CheckResult& chk : report.checks) {
                if (!chk.passed) {
                    std::printf("  failed: %s -- %s\n", chk.name.c_str(), chk.detail.c_str());
                }
            }
        }
    }
    std::printf("%d of 7 criteria passed\n", 7 - failed);
    return failed == 0 ? 0 : 1;
}
