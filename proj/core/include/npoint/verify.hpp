#pragma once

#include <string>
#include <vector>

#include "npoint/numeric.hpp"

namespace npoint {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // non-empty on failure or for notable values
};

struct VerificationReport {
    std::string suite;
    std::vector<CheckResult> checks;
    double wall_ms = 0.0;

    int failures() const;
    bool ok() const { return failures() == 0; }
    /// "suite: N checks, M failures, T ms"
    std::string summary() const;
};

/// Exact cross-pipeline equality of the series pipeline against the DVV
/// oracle: every stable key with n <= 3, g <= 2 and n = 4, g <= 1, plus the
/// hand-verifiable values <tau_0^3>_0 = 1, <tau_1 tau_0^3>_0 = 1,
/// <tau_1>_1 = <tau_0 tau_2>_1 = <tau_1^2>_1 = 1/24, <tau_4>_2 = 1/1152.
VerificationReport verify_cross_pipeline();

/// p_n_definition == p_n_symmetric exactly for 2 <= n <= max_n at combined
/// degree cap; both pipelines certify zero remainders internally.
VerificationReport verify_symmetric_form(int max_n = 4, int cap = 8);

/// Permutation-algebra lemmas: A-vector injectivity, the cycle-product
/// solution and left-invariance (brute force, n <= 5), the Q-coset identity
/// (n <= 5) and the telescoping u-identity (n <= 6), the latter two at
/// `points` random pairwise-distinct rational points each.
VerificationReport verify_permutation_lemmas(int points = 100, unsigned seed = 20240817u);

/// |f_bur_numeric - f_ok_numeric| / |f_ok_numeric| <= 1e-6 for n = 1 at x = 1
/// (both equal e^{1/24} against the closed form) and <= 1e-4 for n = 2, 3 at
/// points with components in [0.3, 1.5].
VerificationReport verify_main_theorem_numeric(const NumericConfig& cfg = {});

/// term_correspondence to 1e-5 relative for every cyclic composition with
/// n <= 3; the single-block case agrees with the closed form to quadrature
/// roundoff.
VerificationReport verify_term_correspondence(const NumericConfig& cfg = {});

/// Unstable terms plus the degree-D stable series agree with f_ok_numeric to
/// 1e-3 relative at x = (0.2, ..., 0.2) for n = 1, 2, 3. Requires D >= 9.
VerificationReport verify_series_consistency(int degree = 12, const NumericConfig& cfg = {});

/// string_identity_check for all stable keys with n <= max_n, sum d <= max_weight,
/// and kdv_first_equation_check for all monomials of total weight <= max_weight;
/// includes the hand-checked instance 1/8 = 1/24 + 1/12.
VerificationReport verify_string_and_kdv(int max_n = 4, int max_weight = 8);

/// All suites above at their default scales, in criterion order.
std::vector<VerificationReport> verify_all();

}  // namespace npoint
