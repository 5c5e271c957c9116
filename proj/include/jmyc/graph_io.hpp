#ifndef JMYC_GRAPH_IO_HPP
#define JMYC_GRAPH_IO_HPP

#include <string>

#include <json.hpp>

#include "jmyc/graph.hpp"

namespace jmyc {

// Canonical JSON form: {"edges":[[i,j],...],"labels":[...],"n":N} with
// edges normalized i < j and sorted lexicographically; "labels" only when
// present. parse/serialize is the identity on canonical strings.
nlohmann::ordered_json graph_to_json(const Graph& g);
std::string serialize_graph(const Graph& g);

// Errors name the offending field ("edges[3]", "labels", "n").
Graph graph_from_json(const nlohmann::ordered_json& doc);
Graph parse_graph(const std::string& text);

// Undirected DOT document; the node name is the vertex label when labels
// are present, the index otherwise.
std::string to_dot(const Graph& g);

} // namespace jmyc

#endif
