#ifndef NULLDECOMP_GRAPH_HPP
#define NULLDECOMP_GRAPH_HPP

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "nulldecomp/errors.hpp"

namespace nulldecomp {

using VertexSet = std::set<int>;
using Edge = std::pair<int, int>;  // normalized u < v

/// Immutable labeled simple graph. Labels are arbitrary nonnegative ints,
/// adjacency lists are kept sorted, so every traversal is deterministic.
class Graph {
public:
    Graph() = default;

    /// Builds a graph from explicit vertices plus edges (endpoints are added
    /// implicitly). Rejects self-loops and duplicate edges.
    static Graph from_edge_list(const std::vector<int>& vertices,
                                const std::vector<Edge>& edges);

    bool has_vertex(int v) const { return adj_.count(v) > 0; }
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;  // sorted; throws on unknown label
    std::size_t degree(int v) const { return neighbors(v).size(); }

    std::vector<int> vertices() const;  // sorted
    std::vector<Edge> edges() const;    // sorted, u < v
    std::size_t vertex_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    bool operator==(const Graph&) const = default;

private:
    std::map<int, std::vector<int>> adj_;
    std::size_t edge_count_ = 0;
};

struct Bipartition {
    VertexSet side_x;
    VertexSet side_y;
};

/// Closed vertex sequence (front == back) with all interior vertices distinct.
struct CycleWitness {
    std::vector<int> cycle;
    int length = 0;
};

Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

/// 2-colors each component; the side holding the component's smallest label
/// goes to side_x. On failure returns an odd simple cycle.
std::variant<Bipartition, CycleWitness> bipartition(const Graph& g);

Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph delete_vertices(const Graph& g, const VertexSet& s);

/// Canonical closed form of a cycle given without the closing vertex:
/// rotated to its smallest vertex, direction with the smaller second vertex.
CycleWitness canonical_cycle(std::vector<int> interior);

/// Maximal connected induced subgraphs, ordered by smallest vertex label.
std::vector<Graph> connected_components(const Graph& g);

bool edge_crosses(const Bipartition& bp, const Edge& e);

}  // namespace nulldecomp

#endif
