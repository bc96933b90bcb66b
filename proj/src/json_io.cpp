#include "nulldecomp/json_io.hpp"

#include <fstream>
#include <sstream>

namespace nulldecomp {

using nlohmann::json;

json graph_to_json(const Graph& g) {
    json j;
    j["vertices"] = g.vertices();
    auto edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j;
}

Graph graph_from_json(const json& j) {
    std::vector<int> vertices;
    if (j.contains("vertices")) vertices = j.at("vertices").get<std::vector<int>>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("edge entries must be [u, v] pairs");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_edge_list(vertices, edges);
}

Graph parse_graph_auto(std::string_view text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{')
        return graph_from_json(json::parse(text));
    return parse_edge_list(text);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_auto(buf.str());
}

namespace {

json count_to_json(const mpz_class& c) {
    if (c.fits_ulong_p()) return c.get_ui();
    return c.get_str();  // too big for a JSON integer; emit the digits as text
}

json vertex_lists(const std::vector<Graph>& comps) {
    auto out = json::array();
    for (const auto& c : comps) out.push_back(c.vertices());
    return out;
}

}  // namespace

json report_to_json(const AnalysisReport& rep) {
    json j;
    j["nu"] = rep.nu;
    j["rank"] = rep.rank;
    j["nullity"] = rep.nullity;
    j["alpha"] = rep.alpha;
    j["inertia"] = rep.inertia;
    j["m_count"] = count_to_json(rep.m_count);
    j["a_count"] = count_to_json(rep.a_count);
    j["supp"] = rep.decomposition.supp;
    j["core"] = rep.decomposition.core;
    j["npart"] = rep.decomposition.npart;
    j["s_components"] = vertex_lists(rep.decomposition.s_components);
    j["n_components"] = vertex_lists(rep.decomposition.n_components);
    auto audit = json::array();
    for (const auto& entry : rep.audit)
        audit.push_back({{"identity", entry.identity},
                         {"method", entry.method},
                         {"pass", entry.pass}});
    j["audit"] = audit;
    return j;
}

json basis_to_json(const NullBasis& basis) {
    auto out = json::array();
    for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
        json entries = json::object();
        for (const auto& [label, q] : basis.vectors[i].entries())
            if (q != 0) entries[std::to_string(label)] = rational_to_string(q);
        out.push_back({{"anchor", basis.anchors[i]}, {"entries", entries}});
    }
    return out;
}

}  // namespace nulldecomp
