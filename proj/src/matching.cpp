#include "nulldecomp/matching.hpp"

#include <algorithm>
#include <deque>

namespace nulldecomp {

Matching Matching::from_edges(const Graph& g, const std::vector<Edge>& edges) {
    Matching m;
    for (auto [u, v] : edges) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("matching edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "} not in graph");
        if (m.partner_.count(u) || m.partner_.count(v))
            throw std::invalid_argument("matching edges not disjoint at {" +
                                        std::to_string(u) + "," + std::to_string(v) + "}");
        m.partner_[u] = v;
        m.partner_[v] = u;
    }
    return m;
}

int Matching::partner(int v) const {
    auto it = partner_.find(v);
    if (it == partner_.end())
        throw std::out_of_range("vertex " + std::to_string(v) + " is unsaturated");
    return it->second;
}

std::vector<Edge> Matching::edges() const {
    std::vector<Edge> out;
    for (const auto& [u, v] : partner_)
        if (u < v) out.emplace_back(u, v);
    return out;
}

namespace {

// Single augmenting-path DFS for Kuhn's algorithm.
bool try_augment(const Graph& g, int u, std::map<int, int>& match, VertexSet& visited) {
    for (int w : g.neighbors(u)) {
        if (!visited.insert(w).second) continue;
        auto it = match.find(w);
        if (it == match.end() || try_augment(g, it->second, match, visited)) {
            match[w] = u;
            match[u] = w;
            return true;
        }
    }
    return false;
}

}  // namespace

Matching maximum_matching(const Graph& g, const Bipartition& bp) {
    std::map<int, int> match;
    for (int u : bp.side_x) {
        if (match.count(u)) continue;
        VertexSet visited;
        try_augment(g, u, match, visited);
    }
    std::vector<Edge> edges;
    for (const auto& [u, v] : match)
        if (u < v) edges.emplace_back(u, v);
    Matching m = Matching::from_edges(g, edges);
    if (has_augmenting_path(g, m))
        throw std::logic_error("augmenting path survived maximum matching search");
    return m;
}

VertexSet unsaturated(const Graph& g, const Matching& m) {
    VertexSet out;
    for (int v : g.vertices())
        if (!m.saturates(v)) out.insert(v);
    return out;
}

namespace {

struct ReachState {
    ReachSets sets;
    std::map<int, int> parent_even;  // even vertex -> odd predecessor
    std::map<int, int> parent_odd;   // odd vertex -> even predecessor
};

ReachState alternating_bfs(const Graph& g, const Matching& m, const VertexSet& sources) {
    ReachState st;
    std::deque<std::pair<int, bool>> queue;  // (vertex, is_even)
    for (int s : sources) {
        if (!g.has_vertex(s))
            throw std::out_of_range("unknown vertex label " + std::to_string(s));
        if (m.saturates(s))
            throw std::invalid_argument("source vertex " + std::to_string(s) +
                                        " is saturated");
        st.sets.even.insert(s);
        queue.emplace_back(s, true);
    }
    while (!queue.empty()) {
        auto [v, is_even] = queue.front();
        queue.pop_front();
        if (is_even) {
            for (int w : g.neighbors(v)) {
                if (m.saturates(v) && m.partner(v) == w) continue;  // matching edge
                if (st.sets.odd.insert(w).second) {
                    st.parent_odd[w] = v;
                    queue.emplace_back(w, false);
                }
            }
        } else if (m.saturates(v)) {
            int w = m.partner(v);
            if (st.sets.even.insert(w).second) {
                st.parent_even[w] = v;
                queue.emplace_back(w, true);
            }
        }
    }
    return st;
}

}  // namespace

ReachSets alternating_reach(const Graph& g, const Matching& m, const VertexSet& sources) {
    return alternating_bfs(g, m, sources).sets;
}

Matching retarget_matching(const Graph& g, const Matching& m, int v) {
    if (!g.has_vertex(v))
        throw std::out_of_range("unknown vertex label " + std::to_string(v));
    if (!m.saturates(v)) return m;
    ReachState st = alternating_bfs(g, m, unsaturated(g, m));
    if (!st.sets.even.count(v))
        throw std::invalid_argument("vertex " + std::to_string(v) + " not in support");

    // Walk the BFS forest back to an unsaturated root; v stays at the far end.
    std::vector<int> path{v};
    int cur = v;
    while (st.parent_even.count(cur)) {
        int odd = st.parent_even.at(cur);
        path.push_back(odd);
        cur = st.parent_odd.at(odd);
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());  // path[0] unsaturated, path.back() == v

    std::map<int, int> partner = m.partner_map();
    for (int x : path) partner.erase(x);
    for (std::size_t i = 0; i + 2 < path.size(); i += 2) {
        partner[path[i]] = path[i + 1];
        partner[path[i + 1]] = path[i];
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : partner)
        if (a < b) edges.emplace_back(a, b);
    return Matching::from_edges(g, edges);
}

bool has_augmenting_path(const Graph& g, const Matching& m) {
    VertexSet u = unsaturated(g, m);
    if (u.empty()) return false;
    ReachSets r = alternating_reach(g, m, u);
    for (int w : r.odd)
        if (!m.saturates(w)) return true;
    return false;
}

}  // namespace nulldecomp
