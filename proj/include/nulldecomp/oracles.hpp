#ifndef NULLDECOMP_ORACLES_HPP
#define NULLDECOMP_ORACLES_HPP

#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"

namespace nulldecomp::oracle {

// Independent brute-force implementations used to cross-validate the main
// pipeline. None of the searches below share code with the matching or
// decomposition modules.

struct TripleDecomposition {
    VertexSet always;     // supp / static-included / D
    VertexSet never;      // core / static-excluded / A
    VertexSet sometimes;  // npart / flexible / C
    std::string source;   // zito | gallai_edmonds | nullspace
    VertexSet overlap;    // always ∩ never; nonempty only for nullspace off-class
};

inline constexpr int kDefaultBudget = 24;

/// All maximum independent sets, exhaustively, in lexicographic order.
std::vector<VertexSet> enumerate_max_independent_sets(const Graph& g,
                                                      int budget = kDefaultBudget);

TripleDecomposition zito_decomposition(const Graph& g, int budget = kDefaultBudget);

/// D = {v : deleting v leaves the matching number unchanged}, A = N(D) \ D,
/// C the rest; matching numbers come from an exhaustive search.
TripleDecomposition gallai_edmonds_decomposition(const Graph& g,
                                                 int budget = kDefaultBudget);

/// Supp/Core/Npart straight from an exact null-space basis. Works on any
/// graph; off the certified class supp and core may overlap, and the overlap
/// is reported rather than forced into a partition.
TripleDecomposition nullspace_decomposition_general(const Graph& g);

/// All maximum matchings, exhaustively, in lexicographic edge order.
std::vector<Matching> enumerate_maximum_matchings(const Graph& g,
                                                  int budget = kDefaultBudget);

/// Matching number by memoized exhaustive search (no augmenting paths).
int matching_number_brute(const Graph& g, int budget = kDefaultBudget);

}  // namespace nulldecomp::oracle

#endif
