#ifndef NULLDECOMP_MATCHING_HPP
#define NULLDECOMP_MATCHING_HPP

#include <map>

#include "nulldecomp/graph.hpp"

namespace nulldecomp {

/// A set of pairwise-disjoint edges, stored as the partner involution.
class Matching {
public:
    Matching() = default;

    /// Validates that the edges exist in g and are pairwise disjoint.
    static Matching from_edges(const Graph& g, const std::vector<Edge>& edges);

    bool saturates(int v) const { return partner_.count(v) > 0; }
    int partner(int v) const;  // throws if v is unsaturated
    std::size_t size() const { return partner_.size() / 2; }
    std::vector<Edge> edges() const;  // sorted, u < v
    const std::map<int, int>& partner_map() const { return partner_; }

    bool operator==(const Matching&) const = default;

private:
    std::map<int, int> partner_;
};

struct ReachSets {
    VertexSet even;  // R_e
    VertexSet odd;   // R_o
};

/// Deterministic maximum matching via augmenting paths, ascending label order.
Matching maximum_matching(const Graph& g, const Bipartition& bp);

VertexSet unsaturated(const Graph& g, const Matching& m);

/// Vertices reachable from `sources` by even/odd-length alternating paths
/// (sources are even at distance 0; first step uses a non-matching edge).
/// Every source must be unsaturated.
ReachSets alternating_reach(const Graph& g, const Matching& m, const VertexSet& sources);

/// Maximum matching leaving v unsaturated, built as m △ P for an even
/// alternating path P from an unsaturated vertex to v. Requires v even-reachable
/// from U(m), i.e. in the support.
Matching retarget_matching(const Graph& g, const Matching& m, int v);

bool has_augmenting_path(const Graph& g, const Matching& m);

}  // namespace nulldecomp

#endif
