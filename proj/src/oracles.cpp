#include "nulldecomp/oracles.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "nulldecomp/exact_linalg.hpp"

namespace nulldecomp::oracle {

namespace {

void check_budget(const Graph& g, int budget) {
    if (static_cast<int>(g.vertex_count()) > budget)
        throw BudgetError("graph has " + std::to_string(g.vertex_count()) +
                          " vertices, over oracle budget " + std::to_string(budget));
}

void check_bitmask_limit(const Graph& g) {
    if (g.vertex_count() > 31)
        throw BudgetError("exhaustive matching search is limited to 31 vertices");
}

// Frontier-based enumeration: at each step branch on the smallest vertex not
// yet decided, keeping the set of still-eligible vertices explicit.
struct IndepEnumerator {
    const Graph& g;
    int best = 0;
    std::vector<VertexSet> found{};

    void run(const VertexSet& eligible, VertexSet& chosen) {
        if (static_cast<int>(chosen.size() + eligible.size()) < best) return;
        if (eligible.empty()) {
            int size = static_cast<int>(chosen.size());
            if (size > best) {
                best = size;
                found.clear();
            }
            if (size == best) found.push_back(chosen);
            return;
        }
        int v = *eligible.begin();
        VertexSet rest = eligible;
        rest.erase(v);
        // take v
        VertexSet take = rest;
        for (int w : g.neighbors(v)) take.erase(w);
        chosen.insert(v);
        run(take, chosen);
        chosen.erase(v);
        // leave v
        run(rest, chosen);
    }
};

// Branch on the smallest undecided vertex: leave it unmatched, or match it to
// each eligible neighbor. Memoized on the set of undecided vertices.
struct MatchingSearch {
    const Graph& g;
    std::vector<int> verts;
    std::unordered_map<int, int> index;
    std::unordered_map<uint32_t, int> memo;

    explicit MatchingSearch(const Graph& graph) : g(graph), verts(graph.vertices()) {
        for (std::size_t i = 0; i < verts.size(); ++i)
            index[verts[i]] = static_cast<int>(i);
    }

    int nu(uint32_t remaining) {
        if (remaining == 0) return 0;
        auto it = memo.find(remaining);
        if (it != memo.end()) return it->second;
        int i = std::countr_zero(remaining);
        uint32_t without = remaining & ~(1u << i);
        int best = nu(without);  // leave verts[i] unmatched
        for (int w : g.neighbors(verts[i])) {
            int j = index.at(w);
            if (remaining & (1u << j))
                best = std::max(best, 1 + nu(without & ~(1u << j)));
        }
        memo[remaining] = best;
        return best;
    }

    uint32_t full_mask() const {
        return verts.size() >= 32 ? ~0u : (1u << verts.size()) - 1u;
    }
};

struct MatchingEnumerator {
    const Graph& g;
    int target = 0;
    std::vector<std::vector<Edge>> found{};
    std::vector<Edge> current{};

    void run(const VertexSet& undecided) {
        if (static_cast<int>(current.size() + undecided.size() / 2) < target) return;
        if (undecided.empty() || static_cast<int>(current.size()) == target) {
            if (static_cast<int>(current.size()) == target) found.push_back(current);
            return;
        }
        int v = *undecided.begin();
        VertexSet rest = undecided;
        rest.erase(v);
        for (int w : g.neighbors(v)) {
            if (!rest.count(w)) continue;
            VertexSet next = rest;
            next.erase(w);
            current.emplace_back(std::min(v, w), std::max(v, w));
            run(next);
            current.pop_back();
        }
        run(rest);  // v stays unmatched
    }
};

}  // namespace

std::vector<VertexSet> enumerate_max_independent_sets(const Graph& g, int budget) {
    check_budget(g, budget);
    IndepEnumerator e{.g = g};
    VertexSet chosen;
    auto verts = g.vertices();
    VertexSet all(verts.begin(), verts.end());
    e.run(all, chosen);
    std::sort(e.found.begin(), e.found.end());
    return e.found;
}

TripleDecomposition zito_decomposition(const Graph& g, int budget) {
    auto sets = enumerate_max_independent_sets(g, budget);
    TripleDecomposition out;
    out.source = "zito";
    VertexSet in_some;
    for (const auto& s : sets) in_some.insert(s.begin(), s.end());
    for (int v : g.vertices()) {
        bool in_all = std::all_of(sets.begin(), sets.end(),
                                  [&](const VertexSet& s) { return s.count(v) > 0; });
        if (in_all)
            out.always.insert(v);
        else if (!in_some.count(v))
            out.never.insert(v);
        else
            out.sometimes.insert(v);
    }
    return out;
}

TripleDecomposition gallai_edmonds_decomposition(const Graph& g, int budget) {
    check_budget(g, budget);
    check_bitmask_limit(g);
    TripleDecomposition out;
    out.source = "gallai_edmonds";
    MatchingSearch search(g);
    int nu = search.nu(search.full_mask());
    for (int v : g.vertices()) {
        uint32_t mask = search.full_mask() & ~(1u << search.index.at(v));
        if (search.nu(mask) == nu) out.always.insert(v);  // avoidable: v ∈ D
    }
    for (int v : out.always)
        for (int w : g.neighbors(v))
            if (!out.always.count(w)) out.never.insert(w);
    for (int v : g.vertices())
        if (!out.always.count(v) && !out.never.count(v)) out.sometimes.insert(v);
    return out;
}

TripleDecomposition nullspace_decomposition_general(const Graph& g) {
    TripleDecomposition out;
    out.source = "nullspace";
    if (g.vertex_count() == 0) return out;
    auto basis = nullspace_basis(adjacency_matrix(g, g.vertices()));
    for (const auto& vec : basis)
        for (int l : vec.support()) out.always.insert(l);
    for (int v : out.always)
        for (int w : g.neighbors(v)) out.never.insert(w);
    for (int v : g.vertices())
        if (!out.always.count(v) && !out.never.count(v)) out.sometimes.insert(v);
    for (int v : out.always)
        if (out.never.count(v)) out.overlap.insert(v);
    return out;
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, int budget) {
    check_budget(g, budget);
    check_bitmask_limit(g);
    MatchingSearch search(g);
    int nu = search.nu(search.full_mask());
    MatchingEnumerator e{.g = g, .target = nu};
    auto verts = g.vertices();
    VertexSet all(verts.begin(), verts.end());
    e.run(all);
    std::sort(e.found.begin(), e.found.end());
    std::vector<Matching> out;
    out.reserve(e.found.size());
    for (const auto& edges : e.found) out.push_back(Matching::from_edges(g, edges));
    return out;
}

int matching_number_brute(const Graph& g, int budget) {
    check_budget(g, budget);
    check_bitmask_limit(g);
    MatchingSearch search(g);
    return search.nu(search.full_mask());
}

}  // namespace nulldecomp::oracle
