#ifndef NULLDECOMP_NULL_BASIS_HPP
#define NULLDECOMP_NULL_BASIS_HPP

#include "nulldecomp/exact_linalg.hpp"
#include "nulldecomp/graph.hpp"
#include "nulldecomp/matching.hpp"

namespace nulldecomp {

/// Null-space basis built constructively, one vector per unsaturated vertex.
/// vectors[i] has entry −1 at anchors[i] and 0 at every other anchor, which
/// certifies linear independence.
struct NullBasis {
    std::vector<RationalVector> vectors;  // over V(G)
    std::vector<int> anchors;             // ascending
};

/// The constructive null vector anchored at unsaturated v: take
/// H = G<R_e(v,m) ∪ R_o(v,m)>, solve A(H−v)·x = (neighbor indicator of v),
/// prepend −1 at v and pad with zeros to V(G). The result is verified to lie
/// in Null(G) exactly.
RationalVector null_vector_for(const Graph& g, const Matching& m, int v);

NullBasis null_basis(const Graph& g, const Matching& m);

/// Zero-pad a vector over a subgraph to all of V(g).
RationalVector lift_to(const RationalVector& v, const Graph& g);

/// Project a vector over g down to the coordinates of subgraph h.
RationalVector restrict_to(const RationalVector& v, const Graph& h);

}  // namespace nulldecomp

#endif
