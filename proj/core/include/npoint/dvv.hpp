#pragma once

#include <map>
#include <string>
#include <vector>

#include "npoint/rational.hpp"

namespace npoint {

/// Key of an intersection-number correlator: genus and the sorted multiset of
/// tau-indices. Keys violating dimension or stability simply map to 0.
struct CorrelatorKey {
    int genus = 0;
    std::vector<int> d;  // ascending

    static CorrelatorKey make(int genus, std::vector<int> d);

    int points() const { return static_cast<int>(d.size()); }
    bool stable() const;
    /// sum d_i == 3g - 3 + n
    bool dimension_ok() const;

    auto operator<=>(const CorrelatorKey& o) const = default;
};

/// Memoized correlator values computed by the Virasoro/DVV recursion with
/// string and dilaton fast paths. Serves as the independent oracle for the
/// Buryak series pipeline.
class CorrelatorTable {
public:
    /// <prod tau_{d_i}>_g. Invalid keys (dimension, stability, negative
    /// entries) return 0.
    Rational correlator(int genus, std::vector<int> d);

    /// Genus-zero closed form (n-3)!/(d_1!...d_n!); 0 off-dimension.
    static Rational genus_zero(const std::vector<int>& d);

    /// Checks <tau_0 prod tau_{d_i}>_g == sum_j <tau_{d_j-1} prod_{i!=j}>_g
    /// on oracle values. (g, d) must be stable with sum d = 3g - 2 + n, so
    /// that the appended key sits on dimension.
    bool string_identity_check(int genus, const std::vector<int>& d);

    /// Coefficientwise check of the first KdV equation
    /// dU/dt_1 = U d0 U + (1/12) d0^3 U for U = d^2 F / dt_0^2, at the
    /// monomial indexed by the multiset K. Requires sum (k+1) <= max_total.
    bool kdv_first_equation_check(const std::vector<int>& K, int max_total);

    /// Sum over genus of <prod tau_{d_i}>; at most one genus is admissible.
    Rational genus_summed(const std::vector<int>& d);

    // Cache management. Canonical line format "g;d_1,...,d_n;num/den",
    // sorted by key.
    std::string dump() const;
    void save(const std::string& path) const;
    void load(const std::string& path);
    void clear() { memo_.clear(); }
    size_t size() const { return memo_.size(); }

private:
    std::map<CorrelatorKey, Rational> memo_;
};

}  // namespace npoint
