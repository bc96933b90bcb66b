#ifndef NULLDECOMP_VALIDATE_HPP
#define NULLDECOMP_VALIDATE_HPP

#include <functional>
#include <optional>
#include <set>
#include <variant>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

inline constexpr long long kDefaultCycleCap = 1'000'000;

struct Certificate {
    Bipartition sides;
    std::set<int> cycle_lengths;
    long long cycle_count = 0;
};

struct Rejection {
    CycleWitness witness;
    bool odd_cycle = false;  // false: witness length ≡ 0 (mod 4)
};

struct Inconclusive {
    long long cap = 0;
};

using ValidationResult = std::variant<Certificate, Rejection, Inconclusive>;

/// Visits every elementary cycle of g exactly once, in a fixed order (roots
/// ascending, neighbors ascending; each cycle reported rooted at its smallest
/// vertex, in the direction whose second vertex is smaller). The callback gets
/// the closed sequence and returns false to stop early. Returns false when the
/// cap was hit before the enumeration finished.
bool visit_elementary_cycles(const Graph& g, long long cap,
                             const std::function<bool(const std::vector<int>&)>& visit);

std::variant<std::set<int>, Inconclusive> enumerate_cycle_lengths(const Graph& g,
                                                                  long long cap);

/// Certifies g as a C4k-free bipartite graph, or rejects with a witness cycle
/// (odd, or of length divisible by 4). Enumeration stops at the first bad
/// cycle; Inconclusive when the cycle cap is exceeded first.
ValidationResult check_c4kfree_bipartite(const Graph& g, long long cap = kDefaultCycleCap);

bool is_certified(const ValidationResult& r);

/// Witness sanity: consecutive adjacency, closure, interior distinctness.
bool witness_is_valid(const Graph& g, const CycleWitness& w);

}  // namespace nulldecomp

#endif
