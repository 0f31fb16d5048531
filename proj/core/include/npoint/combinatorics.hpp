#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "npoint/rational.hpp"

namespace npoint {

/// Bijection of {1..n}, stored as images: img[i-1] = sigma(i).
struct Permutation {
    std::vector<int> img;

    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(img.size()); }
    int operator()(int i) const { return img[i - 1]; }
    Permutation inverse() const;

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;
};

/// Composition convention used throughout: (sigma o rho)(i) = sigma(rho(i)),
/// i.e. the right factor acts first. Products written left to right compose
/// with this rule.
Permutation compose(const Permutation& sigma, const Permutation& rho);

/// All n! permutations in deterministic (lexicographic) order. n >= 1.
std::vector<Permutation> permutations(int n);

/// The (n-1)! permutations with sigma(1) = 1, lexicographic order.
std::vector<Permutation> permutations_fixing_first(int n);

/// One representative per orbit of the rotation action sigma -> sigma o shift;
/// the canonical representative has sigma(1) = 1. (n-1)! elements.
std::vector<Permutation> cyclic_class_reps(int n);

/// The cyclic permutation (1, m, m-1, ..., 2): 1 -> m, k -> k-1 for 2 <= k <= m,
/// identity above m. Requires 2 <= m <= n.
Permutation cycle_C(int m, int n);

/// Unordered partition of {1..n} into disjoint non-empty blocks. Blocks are
/// stored sorted, smallest element ascending across blocks.
struct SetPartition {
    std::vector<std::vector<int>> blocks;
};

/// All Bell(n) partitions in deterministic order.
std::vector<SetPartition> set_partitions(int n);

/// Ordered block sequence modulo rotation; the canonical representative puts
/// the block containing 1 first.
struct CyclicComposition {
    std::vector<std::vector<int>> blocks;
};

/// All cyclically ordered partitions of {1..n}: for each set partition with
/// l blocks, its (l-1)! cyclic orderings.
std::vector<CyclicComposition> cyclic_ordered_partitions(int n);

/// Integer coefficient vector in the basis {w_{jk} : j < k}, with the
/// convention w_{kj} = -w_{jk}.
struct PairVector {
    std::map<std::pair<int, int>, long> coef;

    void add(int j, int k, long delta);
    bool operator==(const PairVector& o) const = default;
    auto operator<=>(const PairVector& o) const = default;
};

/// The sign-tracking vector A^sigma_{I,J} = sum_{i in I} sum_{l<i}
/// w_{sigma(l) sigma(i)} - sum_{j in J} sum_{l<j} w_{sigma(l) sigma(j)}.
/// I and J must partition {2..n}.
PairVector a_vector(const Permutation& sigma, const std::set<int>& I, const std::set<int>& J);

/// Q(sigma) = 1 / (u_{sigma(1)sigma(2)} ... u_{sigma(n-1)sigma(n)}) with the
/// symbols realized as u_{jk} = v_j - v_k on pairwise-distinct values.
Rational q_value(const Permutation& sigma, const std::vector<Rational>& v);

}  // namespace npoint
