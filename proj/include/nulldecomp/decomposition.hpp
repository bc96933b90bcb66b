#ifndef NULLDECOMP_DECOMPOSITION_HPP
#define NULLDECOMP_DECOMPOSITION_HPP

#include <gmpxx.h>

#include <array>
#include <string>

#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"

namespace nulldecomp {

struct NullDecomposition {
    VertexSet supp;
    VertexSet core;
    VertexSet npart;
    Graph c_s;  // G<supp ∪ core>
    Graph c_n;  // G<npart>
    std::vector<Graph> s_components;
    std::vector<Graph> n_components;
};

struct AuditEntry {
    std::string identity;
    std::string method;  // closed-form | matching | exact-linalg | enumeration
    bool pass = false;
};

struct Options {
    bool unchecked = false;   // skip C4k-free certification (bipartite still required)
    int budget = 24;          // per-component brute-force vertex budget
    long long cycle_cap = 1'000'000;
};

struct AnalysisReport {
    long long nu = 0;
    long long rank = 0;
    long long nullity = 0;
    long long alpha = 0;
    std::array<long long, 3> inertia{0, 0, 0};
    mpz_class m_count{1};
    mpz_class a_count{1};
    NullDecomposition decomposition;
    std::vector<AuditEntry> audit;
};

/// Supp = R_e(U(m), m), Core = R_o(U(m), m), Npart the rest, with the induced
/// subgraphs and their components. Throws if m is not maximum.
NullDecomposition null_decomposition(const Graph& g, const Matching& m);

/// Full report: certification (unless opts.unchecked), canonical matching,
/// decomposition, closed-form quantities, product-formula counts, and an
/// audit trail recording how each identity was cross-checked.
AnalysisReport analysis_report(const Graph& g, const Options& opts = {});

/// Product over the components of C_S and C_N of per-component maximum
/// matching counts (exhaustive edge search per component).
mpz_class count_maximum_matchings(const Graph& g, const Options& opts = {});

/// Product over the components of C_N of per-component maximum independent
/// set counts; C_S contributes a factor of 1 (its maximum independent set is
/// unique).
mpz_class count_maximum_independent_sets(const Graph& g, const Options& opts = {});

/// Report for g − v − M(v). Requires v ∈ Npart(g).
AnalysisReport stability_delete_pair(const Graph& g, const Matching& m, int v,
                                     const Options& opts = {});

/// DOT rendering with the vertex class encoded in node shape/fill:
/// supp = circle, core = filled circle, npart = square, overlap = doublecircle.
std::string to_dot(const Graph& g, const VertexSet& supp, const VertexSet& core,
                   const VertexSet& npart);

}  // namespace nulldecomp

#endif
