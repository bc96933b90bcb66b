#ifndef NULLDECOMP_PROPERTY_SUITE_HPP
#define NULLDECOMP_PROPERTY_SUITE_HPP

#include <string>
#include <vector>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full cross-module invariant suite on one certified instance:
/// reach-set laws, decomposition identities, algebraic/combinatorial
/// agreement, stability under npart pair deletion, counting formulas, and the
/// three-way decomposition equivalence. Enumerative checks respect `budget`.
std::vector<CheckResult> run_property_suite(const Graph& g, int budget = 24);

bool all_passed(const std::vector<CheckResult>& results);
std::vector<std::string> failed_names(const std::vector<CheckResult>& results);

}  // namespace nulldecomp

#endif
