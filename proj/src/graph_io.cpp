#include "jmyc/graph_io.hpp"

#include <cstdlib>
#include <sstream>

namespace jmyc {

using nlohmann::ordered_json;

ordered_json graph_to_json(const Graph& g) {
    ordered_json doc;
    doc["n"] = g.vertex_count();
    doc["edges"] = ordered_json::array();
    for (const auto& [a, b] : g.edges())
        doc["edges"].push_back({a, b});
    if (g.has_labels()) {
        ordered_json labels = ordered_json::array();
        for (const auto& label : g.labels())
            labels.push_back(label.name());
        doc["labels"] = std::move(labels);
    }
    return doc;
}

std::string serialize_graph(const Graph& g) {
    return graph_to_json(g).dump();
}

Graph graph_from_json(const ordered_json& doc) {
    if (!doc.is_object())
        throw parse_error("graph document must be a JSON object");
    for (const auto& [key, value] : doc.items())
        if (key != "n" && key != "edges" && key != "labels")
            throw parse_error("unknown field '" + key + "'");
    constexpr long long vertex_cap = 1'000'000;
    if (!doc.contains("n") || !doc["n"].is_number_integer() || doc["n"].get<long long>() < 0 ||
        doc["n"].get<long long>() > vertex_cap)
        throw parse_error("field 'n' must be an integer in 0.." + std::to_string(vertex_cap));
    const int n = doc["n"].get<int>();
    if (!doc.contains("edges") || !doc["edges"].is_array())
        throw parse_error("field 'edges' must be an array");
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
        const auto& entry = doc["edges"][i];
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || std::abs(entry[0].get<long long>()) > vertex_cap ||
            std::abs(entry[1].get<long long>()) > vertex_cap)
            throw parse_error("field 'edges[" + std::to_string(i) +
                              "]' must be a pair of vertex indices");
        edges.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
    std::optional<std::vector<VertexLabel>> labels;
    if (doc.contains("labels")) {
        if (!doc["labels"].is_array())
            throw parse_error("field 'labels' must be an array");
        labels.emplace();
        for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
            const auto& entry = doc["labels"][i];
            if (!entry.is_string())
                throw parse_error("field 'labels[" + std::to_string(i) + "]' must be a string");
            auto label = VertexLabel::parse(entry.get<std::string>());
            if (!label)
                throw parse_error("field 'labels[" + std::to_string(i) + "]': '" +
                                  entry.get<std::string>() + "' is not a vertex label");
            labels->push_back(*label);
        }
    }
    return Graph::from_edge_list(n, edges, std::move(labels));
}

Graph parse_graph(const std::string& text) {
    ordered_json doc = ordered_json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw parse_error("input is not valid JSON");
    return graph_from_json(doc);
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.has_labels())
            out << "  \"" << g.labels()[v].name() << "\";\n";
        else
            out << "  " << v << ";\n";
    }
    for (const auto& [a, b] : g.edges()) {
        if (g.has_labels())
            out << "  \"" << g.labels()[a].name() << "\" -- \"" << g.labels()[b].name()
                << "\";\n";
        else
            out << "  " << a << " -- " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace jmyc
