#include "nulldecomp/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "nulldecomp/exact_linalg.hpp"
#include "nulldecomp/validate.hpp"

namespace nulldecomp {

NullDecomposition null_decomposition(const Graph& g, const Matching& m) {
    if (has_augmenting_path(g, m))
        throw std::invalid_argument("matching is not maximum (augmenting path found)");
    NullDecomposition d;
    ReachSets r = alternating_reach(g, m, unsaturated(g, m));
    d.supp = r.even;
    d.core = r.odd;
    for (int v : g.vertices())
        if (!d.supp.count(v) && !d.core.count(v)) d.npart.insert(v);
    VertexSet sc = d.supp;
    sc.insert(d.core.begin(), d.core.end());
    d.c_s = induced_subgraph(g, sc);
    d.c_n = induced_subgraph(g, d.npart);
    d.s_components = connected_components(d.c_s);
    d.n_components = connected_components(d.c_n);
    return d;
}

namespace {

std::string describe_rejection(const ValidationResult& vr) {
    if (std::holds_alternative<Inconclusive>(vr))
        return "certification inconclusive: cycle cap " +
               std::to_string(std::get<Inconclusive>(vr).cap) + " exceeded";
    const auto& rej = std::get<Rejection>(vr);
    std::ostringstream out;
    out << "not a C4k-free bipartite graph: "
        << (rej.odd_cycle ? "odd cycle" : "cycle of length divisible by 4") << " [";
    for (std::size_t i = 0; i < rej.witness.cycle.size(); ++i)
        out << (i ? "," : "") << rej.witness.cycle[i];
    out << "]";
    return out.str();
}

void check_component_budget(const Graph& comp, const char* family, std::size_t index,
                            int budget) {
    if (static_cast<int>(comp.vertex_count()) > budget) {
        std::ostringstream out;
        out << family << " component " << index << " (smallest vertex "
            << comp.vertices().front() << ") has " << comp.vertex_count()
            << " vertices, over brute-force budget " << budget;
        throw BudgetError(out.str());
    }
}

// Exhaustive edge-subset search counting matchings of exactly `target` edges.
struct MatchingCounter {
    std::vector<Edge> edges;
    int target = 0;
    VertexSet used{};
    mpz_class count = 0;

    void run(std::size_t idx, int size) {
        int free_edges = 0;
        for (std::size_t k = idx; k < edges.size(); ++k)
            if (!used.count(edges[k].first) && !used.count(edges[k].second)) ++free_edges;
        if (size + free_edges < target) return;
        if (idx == edges.size()) {
            if (size == target) ++count;
            return;
        }
        auto [u, v] = edges[idx];
        if (!used.count(u) && !used.count(v)) {
            used.insert(u);
            used.insert(v);
            run(idx + 1, size + 1);
            used.erase(u);
            used.erase(v);
        }
        run(idx + 1, size);
    }
};

mpz_class count_max_matchings_component(const Graph& comp) {
    auto sides = bipartition(comp);
    if (std::holds_alternative<CycleWitness>(sides))
        throw std::invalid_argument("component is not bipartite");
    int nu = static_cast<int>(maximum_matching(comp, std::get<Bipartition>(sides)).size());
    MatchingCounter counter{.edges = comp.edges(), .target = nu};
    counter.run(0, 0);
    return counter.count;
}

// Exhaustive independent-set search: branch on each vertex in label order,
// tracking how many chosen neighbors block it. Counts sets of maximum size.
struct IndepCounter {
    const Graph& g;
    std::vector<int> verts;
    std::map<int, int> blocked;
    int best = -1;
    mpz_class count = 0;

    explicit IndepCounter(const Graph& graph) : g(graph), verts(graph.vertices()) {
        for (int v : verts) blocked[v] = 0;
    }

    void run(std::size_t idx, int chosen) {
        int remaining = 0;
        for (std::size_t k = idx; k < verts.size(); ++k)
            if (blocked[verts[k]] == 0) ++remaining;
        if (chosen + remaining < best) return;
        if (idx == verts.size()) {
            if (chosen > best) {
                best = chosen;
                count = 1;
            } else if (chosen == best) {
                ++count;
            }
            return;
        }
        int v = verts[idx];
        if (blocked[v] == 0) {
            for (int w : g.neighbors(v)) ++blocked[w];
            run(idx + 1, chosen + 1);
            for (int w : g.neighbors(v)) --blocked[w];
        }
        run(idx + 1, chosen);
    }
};

mpz_class count_max_indep_sets_component(const Graph& comp) {
    IndepCounter counter(comp);
    counter.run(0, 0);
    return counter.count;
}

Bipartition require_bipartite(const Graph& g) {
    auto sides = bipartition(g);
    if (std::holds_alternative<CycleWitness>(sides))
        throw ValidationError("graph is not bipartite");
    return std::get<Bipartition>(sides);
}

}  // namespace

mpz_class count_maximum_matchings(const Graph& g, const Options& opts) {
    if (!opts.unchecked) {
        auto vr = check_c4kfree_bipartite(g, opts.cycle_cap);
        if (!is_certified(vr)) throw ValidationError(describe_rejection(vr));
    }
    Matching m = maximum_matching(g, require_bipartite(g));
    NullDecomposition d = null_decomposition(g, m);
    mpz_class total = 1;
    for (std::size_t i = 0; i < d.s_components.size(); ++i) {
        check_component_budget(d.s_components[i], "C_S", i, opts.budget);
        total *= count_max_matchings_component(d.s_components[i]);
    }
    for (std::size_t i = 0; i < d.n_components.size(); ++i) {
        check_component_budget(d.n_components[i], "C_N", i, opts.budget);
        total *= count_max_matchings_component(d.n_components[i]);
    }
    return total;
}

mpz_class count_maximum_independent_sets(const Graph& g, const Options& opts) {
    if (!opts.unchecked) {
        auto vr = check_c4kfree_bipartite(g, opts.cycle_cap);
        if (!is_certified(vr)) throw ValidationError(describe_rejection(vr));
    }
    Matching m = maximum_matching(g, require_bipartite(g));
    NullDecomposition d = null_decomposition(g, m);
    mpz_class total = 1;
    for (std::size_t i = 0; i < d.n_components.size(); ++i) {
        check_component_budget(d.n_components[i], "C_N", i, opts.budget);
        total *= count_max_indep_sets_component(d.n_components[i]);
    }
    return total;
}

AnalysisReport analysis_report(const Graph& g, const Options& opts) {
    if (!opts.unchecked) {
        auto vr = check_c4kfree_bipartite(g, opts.cycle_cap);
        if (!is_certified(vr)) throw ValidationError(describe_rejection(vr));
    }
    Bipartition bp = require_bipartite(g);
    Matching m = maximum_matching(g, bp);
    AnalysisReport rep;
    rep.decomposition = null_decomposition(g, m);
    const auto& d = rep.decomposition;
    const long long s = static_cast<long long>(d.supp.size());
    const long long c = static_cast<long long>(d.core.size());
    const long long np = static_cast<long long>(d.npart.size());
    const long long n = static_cast<long long>(g.vertex_count());

    rep.nu = c + np / 2;
    rep.rank = 2 * c + np;
    rep.nullity = s - c;
    rep.alpha = s + np / 2;
    rep.inertia = {rep.nu, rep.nullity, rep.nu};

    Options sub = opts;
    sub.unchecked = true;  // already certified above
    rep.m_count = count_maximum_matchings(g, sub);
    rep.a_count = count_maximum_independent_sets(g, sub);

    // Audit: recompute every identity from raw data and from the exact
    // algebraic side, recording how each was checked.
    VertexSet u = unsaturated(g, m);
    auto add = [&](std::string id, std::string method, bool pass) {
        rep.audit.push_back({std::move(id), std::move(method), pass});
    };
    add("nu = core + npart/2", "matching",
        static_cast<long long>(m.size()) == rep.nu);
    add("nullity = |U(M)|", "matching",
        static_cast<long long>(u.size()) == rep.nullity);
    add("alpha = nullity + nu", "closed-form", rep.alpha == rep.nullity + rep.nu);
    add("rank + nullity = |V|", "closed-form", rep.rank + rep.nullity == n);

    RationalMatrix a = adjacency_matrix(g, g.vertices());
    int exact_rank = rank(a);
    add("rank = 2 nu (exact elimination)", "exact-linalg", exact_rank == rep.rank);
    auto basis = nullspace_basis(a);
    add("nullity = dim Null(A) (exact elimination)", "exact-linalg",
        static_cast<long long>(basis.size()) == rep.nullity);
    VertexSet algebraic_supp;
    for (const auto& vec : basis)
        for (int l : vec.support()) algebraic_supp.insert(l);
    add("supp = union of null-space supports", "exact-linalg", algebraic_supp == d.supp);
    add("inertia = (nu, nullity, nu)", "exact-linalg",
        inertia_algebraic(a) == rep.inertia);
    int rank_cs = rank(adjacency_matrix(d.c_s, d.c_s.vertices()));
    int rank_cn = rank(adjacency_matrix(d.c_n, d.c_n.vertices()));
    add("rank additive across C_S/C_N", "exact-linalg", rank_cs + rank_cn == exact_rank);
    bool perfect = u.empty();
    add("perfect matching iff nonsingular iff G = C_N", "exact-linalg",
        (perfect == (exact_rank == n)) && (perfect == (np == n)));
    return rep;
}

AnalysisReport stability_delete_pair(const Graph& g, const Matching& m, int v,
                                     const Options& opts) {
    NullDecomposition d = null_decomposition(g, m);
    if (!d.npart.count(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not in npart");
    return analysis_report(delete_vertices(g, {v, m.partner(v)}), opts);
}

std::string to_dot(const Graph& g, const VertexSet& supp, const VertexSet& core,
                   const VertexSet& npart) {
    std::ostringstream out;
    out << "graph nulldecomp {\n";
    for (int v : g.vertices()) {
        const char* attrs = "shape=circle";
        bool in_supp = supp.count(v) > 0;
        bool in_core = core.count(v) > 0;
        if (in_supp && in_core)
            attrs = "shape=doublecircle";
        else if (in_core)
            attrs = "shape=circle, style=filled";
        else if (npart.count(v))
            attrs = "shape=square";
        out << "  " << v << " [" << attrs << "];\n";
    }
    for (auto [u, w] : g.edges()) out << "  " << u << " -- " << w << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace nulldecomp
