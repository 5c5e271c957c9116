#include "jmyc/constructions.hpp"

namespace jmyc {

namespace {

void require_nonempty(const Graph& g, const char* what) {
    if (g.vertex_count() < 1)
        throw invalid_parameter_error(std::string(what) + " needs at least one base vertex");
}

std::vector<VertexLabel> two_layer_labels(int n, bool with_root) {
    std::vector<VertexLabel> labels;
    labels.reserve(2 * n + (with_root ? 1 : 0));
    for (int i = 0; i < n; ++i)
        labels.push_back({Role::original, i});
    for (int i = 0; i < n; ++i)
        labels.push_back({Role::twin, i});
    if (with_root)
        labels.push_back({Role::root, 0});
    return labels;
}

// Base edges on originals plus the twin copies u_i v_j, u_j v_i.
std::vector<std::pair<int, int>> layered_edges(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.edges()) {
        edges.emplace_back(i, j);
        edges.emplace_back(n + i, j);
        edges.emplace_back(i, n + j);
    }
    return edges;
}

} // namespace

Graph mycielskian(const Graph& g) {
    require_nonempty(g, "mycielskian");
    const int n = g.vertex_count();
    auto edges = layered_edges(g);
    for (int i = 0; i < n; ++i)
        edges.emplace_back(n + i, 2 * n);
    return Graph::from_edge_list(2 * n + 1, edges, two_layer_labels(n, true));
}

Graph crib(const Graph& g) {
    require_nonempty(g, "crib");
    const int n = g.vertex_count();
    auto edges = layered_edges(g);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(n + i, 2 * n);
        edges.emplace_back(i, 2 * n);
    }
    return Graph::from_edge_list(2 * n + 1, edges, two_layer_labels(n, true));
}

Graph shadow(const Graph& g) {
    require_nonempty(g, "shadow");
    const int n = g.vertex_count();
    return Graph::from_edge_list(2 * n, layered_edges(g), two_layer_labels(n, false));
}

Graph federico(const Graph& g) {
    require_nonempty(g, "federico");
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (const auto& [i, j] : g.edges()) {
        edges.emplace_back(i, j);
        edges.emplace_back(2 * n + i, 2 * n + j);
        edges.emplace_back(n + i, 2 * n + j);
        edges.emplace_back(n + j, 2 * n + i);
    }
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, n + i);
    std::vector<VertexLabel> labels = two_layer_labels(n, false);
    for (int i = 0; i < n; ++i)
        labels.push_back({Role::plain, i});
    return Graph::from_edge_list(3 * n, edges, std::move(labels));
}

Graph apply_construction(ConstructionKind kind, const Graph& g) {
    switch (kind) {
    case ConstructionKind::mycielskian: return mycielskian(g);
    case ConstructionKind::crib: return crib(g);
    case ConstructionKind::shadow: return shadow(g);
    case ConstructionKind::federico: return federico(g);
    }
    throw invalid_parameter_error("unknown construction");
}

const char* construction_name(ConstructionKind kind) {
    switch (kind) {
    case ConstructionKind::mycielskian: return "mycielskian";
    case ConstructionKind::crib: return "crib";
    case ConstructionKind::shadow: return "shadow";
    case ConstructionKind::federico: return "federico";
    }
    return "?";
}

std::optional<ConstructionKind> parse_construction(const std::string& text) {
    if (text == "mycielskian") return ConstructionKind::mycielskian;
    if (text == "crib") return ConstructionKind::crib;
    if (text == "shadow") return ConstructionKind::shadow;
    if (text == "federico") return ConstructionKind::federico;
    return std::nullopt;
}

} // namespace jmyc
