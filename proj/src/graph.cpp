#include "nulldecomp/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace nulldecomp {

Graph Graph::from_edge_list(const std::vector<int>& vertices,
                            const std::vector<Edge>& edges) {
    Graph g;
    for (int v : vertices) {
        if (v < 0) throw std::invalid_argument("negative vertex label " + std::to_string(v));
        g.adj_[v];
    }
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0) throw std::invalid_argument("negative vertex label");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.adj_[u];
        g.adj_[v];
    }
    for (auto [u, v] : edges) {
        auto& nu = g.adj_[u];
        if (std::find(nu.begin(), nu.end(), v) != nu.end())
            throw std::invalid_argument("duplicate edge {" + std::to_string(u) + "," +
                                        std::to_string(v) + "}");
        nu.push_back(v);
        g.adj_[v].push_back(u);
        ++g.edge_count_;
    }
    for (auto& [v, nbrs] : g.adj_) std::sort(nbrs.begin(), nbrs.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    auto it = adj_.find(u);
    if (it == adj_.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    auto it = adj_.find(v);
    if (it == adj_.end())
        throw std::out_of_range("unknown vertex label " + std::to_string(v));
    return it->second;
}

std::vector<int> Graph::vertices() const {
    std::vector<int> out;
    out.reserve(adj_.size());
    for (const auto& [v, _] : adj_) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (const auto& [v, nbrs] : adj_)
        for (int w : nbrs)
            if (v < w) out.emplace_back(v, w);
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<int> isolated;
    std::vector<Edge> edges;
    int line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<long long> tokens;
        std::string tok;
        while (ls >> tok) {
            try {
                std::size_t pos = 0;
                long long value = std::stoll(tok, &pos);
                if (pos != tok.size() || value < 0) throw std::invalid_argument(tok);
                tokens.push_back(value);
            } catch (const std::exception&) {
                throw ParseError(line_no, "malformed token '" + tok + "'");
            }
        }
        if (tokens.empty()) continue;
        if (tokens.size() == 1) {
            isolated.push_back(static_cast<int>(tokens[0]));
        } else if (tokens.size() == 2) {
            int u = static_cast<int>(tokens[0]);
            int v = static_cast<int>(tokens[1]);
            if (u == v) throw ParseError(line_no, "self-loop at vertex " + std::to_string(u));
            Edge e{std::min(u, v), std::max(u, v)};
            if (std::find(edges.begin(), edges.end(), e) != edges.end())
                throw ParseError(line_no, "duplicate edge {" + std::to_string(e.first) + "," +
                                              std::to_string(e.second) + "}");
            edges.push_back(e);
        } else {
            throw ParseError(line_no, "expected 1 or 2 labels, got " +
                                          std::to_string(tokens.size()));
        }
    }
    return Graph::from_edge_list(isolated, edges);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    for (int v : g.vertices())
        if (g.degree(v) == 0) out << v << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

CycleWitness canonical_cycle(std::vector<int> interior) {
    // rotate the smallest vertex to the front, then pick the direction whose
    // second vertex is smaller, so equal cycles print identically
    auto smallest = std::min_element(interior.begin(), interior.end());
    std::rotate(interior.begin(), smallest, interior.end());
    if (interior.size() > 2 && interior[1] > interior.back())
        std::reverse(interior.begin() + 1, interior.end());
    interior.push_back(interior.front());
    return CycleWitness{interior, static_cast<int>(interior.size() - 1)};
}

namespace {

// BFS 2-coloring; on a same-color edge, stitches the two tree paths together
// through their lowest common ancestor to produce a simple odd cycle.
struct ColorState {
    std::map<int, int> color;   // 0/1
    std::map<int, int> parent;
    std::map<int, int> depth;
};

CycleWitness odd_cycle_from_conflict(int u, int w, const ColorState& st) {
    std::vector<int> up_u{u}, up_w{w};
    int a = u, b = w;
    while (st.depth.at(a) > st.depth.at(b)) up_u.push_back(a = st.parent.at(a));
    while (st.depth.at(b) > st.depth.at(a)) up_w.push_back(b = st.parent.at(b));
    while (a != b) {
        up_u.push_back(a = st.parent.at(a));
        up_w.push_back(b = st.parent.at(b));
    }
    // up_u ends at the LCA; up_w reversed continues back to w.
    std::vector<int> cycle(up_u.begin(), up_u.end());
    for (auto it = up_w.rbegin() + 1; it != up_w.rend(); ++it) cycle.push_back(*it);
    return canonical_cycle(std::move(cycle));
}

}  // namespace

std::variant<Bipartition, CycleWitness> bipartition(const Graph& g) {
    ColorState st;
    Bipartition bp;
    for (int start : g.vertices()) {
        if (st.color.count(start)) continue;
        st.color[start] = 0;
        st.parent[start] = start;
        st.depth[start] = 0;
        std::deque<int> queue{start};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(v)) {
                if (!st.color.count(w)) {
                    st.color[w] = 1 - st.color[v];
                    st.parent[w] = v;
                    st.depth[w] = st.depth[v] + 1;
                    queue.push_back(w);
                } else if (st.color[w] == st.color[v]) {
                    return odd_cycle_from_conflict(v, w, st);
                }
            }
        }
        // component done; smallest label (start) belongs to side_x
        for (const auto& [v, c] : st.color) {
            if (bp.side_x.count(v) || bp.side_y.count(v)) continue;
            (c == st.color[start] ? bp.side_x : bp.side_y).insert(v);
        }
    }
    return bp;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts;
    for (int v : s) {
        if (!g.has_vertex(v))
            throw std::out_of_range("unknown vertex label " + std::to_string(v));
        verts.push_back(v);
    }
    std::vector<Edge> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (v < w && s.count(w)) edges.emplace_back(v, w);
    return Graph::from_edge_list(verts, edges);
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    VertexSet keep;
    for (int v : g.vertices())
        if (!s.count(v)) keep.insert(v);
    return induced_subgraph(g, keep);
}

std::vector<Graph> connected_components(const Graph& g) {
    std::vector<Graph> out;
    VertexSet seen;
    for (int start : g.vertices()) {
        if (seen.count(start)) continue;
        VertexSet comp;
        std::deque<int> queue{start};
        seen.insert(start);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            comp.insert(v);
            for (int w : g.neighbors(v))
                if (seen.insert(w).second) queue.push_back(w);
        }
        out.push_back(induced_subgraph(g, comp));
    }
    return out;
}

bool edge_crosses(const Bipartition& bp, const Edge& e) {
    return (bp.side_x.count(e.first) && bp.side_y.count(e.second)) ||
           (bp.side_y.count(e.first) && bp.side_x.count(e.second));
}

}  // namespace nulldecomp
