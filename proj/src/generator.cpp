#include "nulldecomp/generator.hpp"

#include <algorithm>
#include <set>

#include "nulldecomp/validate.hpp"

namespace nulldecomp {

Family family_from_string(const std::string& name) {
    if (name == "tree") return Family::tree;
    if (name == "c4kfree") return Family::c4kfree;
    if (name == "bipartite_any") return Family::bipartite_any;
    if (name == "general") return Family::general;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string family_to_string(Family f) {
    switch (f) {
        case Family::tree: return "tree";
        case Family::c4kfree: return "c4kfree";
        case Family::bipartite_any: return "bipartite_any";
        case Family::general: return "general";
    }
    return "?";
}

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (n == 0) return Graph{};
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    if (n == 1) return Graph::from_edge_list(verts, {});
    if (n == 2) return Graph::from_edge_list(verts, {{1, 2}});

    SplitMix64 rng(seed);
    std::vector<int> pruefer(n - 2);
    for (auto& a : pruefer) a = 1 + static_cast<int>(rng.bounded(n));

    std::vector<int> degree(n + 1, 1);
    for (int a : pruefer) ++degree[a];
    std::set<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (degree[v] == 1) leaves.insert(v);

    std::vector<Edge> edges;
    for (int a : pruefer) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(std::min(leaf, a), std::max(leaf, a));
        if (--degree[a] == 1) leaves.insert(a);
    }
    int u = *leaves.begin();
    int v = *std::next(leaves.begin());
    edges.emplace_back(std::min(u, v), std::max(u, v));
    return Graph::from_edge_list(verts, edges);
}

namespace {

// Draw k distinct indices from [0, pool) by a partial Fisher-Yates shuffle.
std::vector<std::size_t> sample_indices(SplitMix64& rng, std::size_t pool, std::size_t k) {
    std::vector<std::size_t> idx(pool);
    for (std::size_t i = 0; i < pool; ++i) idx[i] = i;
    k = std::min(k, pool);
    for (std::size_t i = 0; i < k; ++i)
        std::swap(idx[i], idx[i + rng.bounded(pool - i)]);
    idx.resize(k);
    return idx;
}

std::vector<Edge> candidate_edges(const Graph& tree, bool cross_only) {
    std::vector<Edge> out;
    Bipartition bp;
    if (cross_only) bp = std::get<Bipartition>(bipartition(tree));
    auto verts = tree.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            int u = verts[i], v = verts[j];
            if (tree.has_edge(u, v)) continue;
            if (cross_only && !edge_crosses(bp, {u, v})) continue;
            out.emplace_back(u, v);
        }
    return out;
}

Graph with_extra_edges(const Graph& tree, const std::vector<Edge>& candidates,
                       const std::vector<std::size_t>& picks) {
    std::vector<Edge> edges = tree.edges();
    for (std::size_t i : picks) edges.push_back(candidates[i]);
    return Graph::from_edge_list(tree.vertices(), edges);
}

}  // namespace

Graph random_c4kfree(const GenSpec& spec, int max_tries) {
    if (spec.family != Family::c4kfree)
        throw std::invalid_argument("random_c4kfree requires family c4kfree");
    SplitMix64 rng(spec.seed);
    Graph tree = random_tree(spec.n, rng.next());
    if (spec.extra_edges == 0 || spec.n < 4) return tree;

    auto candidates = candidate_edges(tree, /*cross_only=*/true);
    if (candidates.empty()) return tree;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        auto picks = sample_indices(rng, candidates.size(),
                                    static_cast<std::size_t>(spec.extra_edges));
        Graph g = with_extra_edges(tree, candidates, picks);
        if (is_certified(check_c4kfree_bipartite(g))) return g;
    }
    return tree;
}

Graph generate(const GenSpec& spec, int max_tries) {
    switch (spec.family) {
        case Family::tree:
            return random_tree(spec.n, SplitMix64(spec.seed).next());
        case Family::c4kfree:
            return random_c4kfree(spec, max_tries);
        case Family::bipartite_any:
        case Family::general: {
            SplitMix64 rng(spec.seed);
            Graph tree = random_tree(spec.n, rng.next());
            if (spec.extra_edges == 0 || spec.n < 3) return tree;
            auto candidates =
                candidate_edges(tree, spec.family == Family::bipartite_any);
            if (candidates.empty()) return tree;
            auto picks = sample_indices(rng, candidates.size(),
                                        static_cast<std::size_t>(spec.extra_edges));
            return with_extra_edges(tree, candidates, picks);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace nulldecomp
