#include "nulldecomp/null_basis.hpp"

#include <algorithm>

namespace nulldecomp {

namespace {

bool in_nullspace(const Graph& g, const RationalVector& z) {
    for (int v : g.vertices()) {
        Rational acc = 0;
        for (int w : g.neighbors(v)) acc += z.at(w);
        if (acc != 0) return false;
    }
    return true;
}

}  // namespace

RationalVector null_vector_for(const Graph& g, const Matching& m, int v) {
    if (!g.has_vertex(v))
        throw std::out_of_range("unknown vertex label " + std::to_string(v));
    if (m.saturates(v))
        throw std::invalid_argument("anchor vertex " + std::to_string(v) +
                                    " is saturated");
    ReachSets r = alternating_reach(g, m, {v});
    VertexSet h_verts = r.even;
    h_verts.insert(r.odd.begin(), r.odd.end());

    RationalVector z(g.vertices());
    z.set(v, -1);
    if (h_verts.size() > 1) {
        VertexSet hp_verts = h_verts;
        hp_verts.erase(v);
        Graph hp = induced_subgraph(g, hp_verts);
        RationalMatrix a_hp = adjacency_matrix(hp, hp.vertices());
        RationalVector b(hp.vertices());  // neighbor indicator of v
        for (int w : g.neighbors(v))
            if (hp_verts.count(w)) b.set(w, 1);
        RationalVector x;
        try {
            x = solve(a_hp, b);
        } catch (const std::domain_error&) {
            throw std::logic_error(
                "A(H') singular at anchor " + std::to_string(v) +
                "; input is not a certified C4k-free bipartite graph");
        }
        for (int l : hp.vertices()) z.set(l, x.at(l));
    }
    if (!in_nullspace(g, z))
        throw std::logic_error("constructed vector left Null(G) at anchor " +
                               std::to_string(v) +
                               "; input is not a certified C4k-free bipartite graph");
    return z;
}

NullBasis null_basis(const Graph& g, const Matching& m) {
    NullBasis basis;
    for (int v : unsaturated(g, m)) {
        basis.anchors.push_back(v);
        basis.vectors.push_back(null_vector_for(g, m, v));
    }
    return basis;
}

RationalVector lift_to(const RationalVector& v, const Graph& g) {
    for (const auto& [l, _] : v.entries())
        if (!g.has_vertex(l))
            throw std::out_of_range("label " + std::to_string(l) +
                                    " not present in the target graph");
    RationalVector out(g.vertices());
    for (const auto& [l, q] : v.entries()) out.set(l, q);
    return out;
}

RationalVector restrict_to(const RationalVector& v, const Graph& h) {
    RationalVector out(h.vertices());
    for (int l : h.vertices()) {
        if (!v.has_label(l))
            throw std::out_of_range("label " + std::to_string(l) +
                                    " missing from the source vector");
        out.set(l, v.at(l));
    }
    return out;
}

}  // namespace nulldecomp
