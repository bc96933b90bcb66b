#include "nulldecomp/validate.hpp"

#include <algorithm>

namespace nulldecomp {

namespace {

// Rooted path DFS. Every elementary cycle has a unique smallest vertex; the
// search from root r only walks vertices > r, so each cycle is seen exactly
// twice (once per direction), and the direction filter keeps one.
struct CycleDfs {
    const Graph& g;
    long long cap;
    const std::function<bool(const std::vector<int>&)>& visit;
    long long found = 0;
    bool stopped = false;  // callback asked to stop
    bool capped = false;
    std::vector<int> path{};
    VertexSet on_path{};

    bool extend(int root, int v) {
        for (int w : g.neighbors(v)) {
            if (stopped || capped) return false;
            if (w == root && path.size() >= 3) {
                if (path[1] > path.back()) continue;  // other direction finds it
                if (++found > cap) {
                    capped = true;
                    return false;
                }
                std::vector<int> cycle = path;
                cycle.push_back(root);
                if (!visit(cycle)) {
                    stopped = true;
                    return false;
                }
            } else if (w > root && !on_path.count(w)) {
                path.push_back(w);
                on_path.insert(w);
                extend(root, w);
                on_path.erase(w);
                path.pop_back();
            }
        }
        return !stopped && !capped;
    }
};

}  // namespace

bool visit_elementary_cycles(const Graph& g, long long cap,
                             const std::function<bool(const std::vector<int>&)>& visit) {
    CycleDfs dfs{.g = g, .cap = cap, .visit = visit};
    for (int root : g.vertices()) {
        dfs.path = {root};
        dfs.on_path = {root};
        dfs.extend(root, root);
        if (dfs.stopped) return true;
        if (dfs.capped) return false;
    }
    return true;
}

std::variant<std::set<int>, Inconclusive> enumerate_cycle_lengths(const Graph& g,
                                                                  long long cap) {
    std::set<int> lengths;
    bool complete = visit_elementary_cycles(g, cap, [&](const std::vector<int>& cycle) {
        lengths.insert(static_cast<int>(cycle.size() - 1));
        return true;
    });
    if (!complete) return Inconclusive{cap};
    return lengths;
}

ValidationResult check_c4kfree_bipartite(const Graph& g, long long cap) {
    auto sides = bipartition(g);
    if (std::holds_alternative<CycleWitness>(sides))
        return Rejection{std::get<CycleWitness>(sides), true};

    Certificate cert{std::get<Bipartition>(sides), {}, 0};
    std::optional<CycleWitness> bad;
    bool complete = visit_elementary_cycles(g, cap, [&](const std::vector<int>& cycle) {
        int len = static_cast<int>(cycle.size() - 1);
        cert.cycle_lengths.insert(len);
        ++cert.cycle_count;
        if (len % 4 == 0) {
            bad = canonical_cycle({cycle.begin(), cycle.end() - 1});
            return false;
        }
        return true;
    });
    if (bad) return Rejection{*bad, false};
    if (!complete) return Inconclusive{cap};
    return cert;
}

bool is_certified(const ValidationResult& r) {
    return std::holds_alternative<Certificate>(r);
}

bool witness_is_valid(const Graph& g, const CycleWitness& w) {
    const auto& c = w.cycle;
    if (c.size() < 4 || c.front() != c.back()) return false;
    if (w.length != static_cast<int>(c.size()) - 1) return false;
    VertexSet interior(c.begin(), c.end() - 1);
    if (interior.size() != c.size() - 1) return false;
    for (std::size_t i = 0; i + 1 < c.size(); ++i)
        if (!g.has_edge(c[i], c[i + 1])) return false;
    return true;
}

}  // namespace nulldecomp
