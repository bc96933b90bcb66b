#ifndef NULLDECOMP_JSON_IO_HPP
#define NULLDECOMP_JSON_IO_HPP

#include <json.hpp>

#include "nulldecomp/decomposition.hpp"
#include "nulldecomp/graph.hpp"
#include "nulldecomp/null_basis.hpp"

namespace nulldecomp {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

/// Parses either the edge-list text format or the JSON graph format,
/// sniffing on the first non-space character.
Graph parse_graph_auto(std::string_view text);
Graph load_graph_file(const std::string& path);

nlohmann::json report_to_json(const AnalysisReport& rep);
nlohmann::json basis_to_json(const NullBasis& basis);

}  // namespace nulldecomp

#endif
