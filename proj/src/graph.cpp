#include "jmyc/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace jmyc {

std::string VertexLabel::name() const {
    switch (role) {
    case Role::original: return "v" + std::to_string(index + 1);
    case Role::twin: return "u" + std::to_string(index + 1);
    case Role::root: return "w";
    case Role::plain: return "w" + std::to_string(index + 1);
    }
    return "?";
}

std::optional<VertexLabel> VertexLabel::parse(const std::string& text) {
    if (text == "w")
        return VertexLabel{Role::root, 0};
    if (text.size() < 2)
        return std::nullopt;
    Role role;
    switch (text[0]) {
    case 'v': role = Role::original; break;
    case 'u': role = Role::twin; break;
    case 'w': role = Role::plain; break;
    default: return std::nullopt;
    }
    int one_based = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), one_based);
    if (ec != std::errc{} || ptr != text.data() + text.size() || one_based < 1)
        return std::nullopt;
    return VertexLabel{role, one_based - 1};
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs,
                            std::optional<std::vector<VertexLabel>> labels) {
    if (n < 0)
        throw invalid_parameter_error("vertex count must be nonnegative, got " + std::to_string(n));
    std::set<std::pair<int, int>> normalized;
    for (const auto& [a, b] : pairs) {
        if (a == b)
            throw invalid_edge_error("self-loop at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw out_of_range_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") has an endpoint outside 0.." + std::to_string(n - 1));
        normalized.emplace(std::min(a, b), std::max(a, b));
    }
    if (labels) {
        if (static_cast<int>(labels->size()) != n)
            throw invalid_parameter_error("expected " + std::to_string(n) + " labels, got " +
                                          std::to_string(labels->size()));
        std::set<std::pair<int, int>> seen;
        for (const auto& label : *labels)
            if (!seen.emplace(static_cast<int>(label.role), label.index).second)
                throw invalid_parameter_error("duplicate vertex label " + label.name());
    }
    Graph g;
    g.n_ = n;
    g.edges_.assign(normalized.begin(), normalized.end());
    g.adj_.resize(n);
    for (const auto& [a, b] : g.edges_) {
        g.adj_[a].push_back(b);
        g.adj_[b].push_back(a);
    }
    for (auto& list : g.adj_)
        std::sort(list.begin(), list.end());
    g.labels_ = std::move(labels);
    return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw out_of_range_error("vertex " + std::to_string(v) + " outside 0.." +
                                 std::to_string(n_ - 1));
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

const std::vector<int>& Graph::neighbours(int v) const {
    check_vertex(v);
    return adj_[v];
}

Graph path_graph(int n) {
    if (n < 1)
        throw invalid_parameter_error("path needs n >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3)
        throw invalid_parameter_error("cycle needs n >= 3, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1)
        throw invalid_parameter_error("complete graph needs n >= 1, got " + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite_graph(int m, int n) {
    if (m < 1 || n < 1)
        throw invalid_parameter_error("complete bipartite graph needs m,n >= 1, got " +
                                      std::to_string(m) + "," + std::to_string(n));
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            edges.emplace_back(i, m + j);
    return Graph::from_edge_list(m + n, edges);
}

Graph generate(GraphFamily family, std::span<const int> params) {
    auto arity = family == GraphFamily::complete_bipartite ? 2u : 1u;
    if (params.size() != arity)
        throw invalid_parameter_error(std::string(family_name(family)) + " takes " +
                                      std::to_string(arity) + " parameter(s), got " +
                                      std::to_string(params.size()));
    switch (family) {
    case GraphFamily::path: return path_graph(params[0]);
    case GraphFamily::cycle: return cycle_graph(params[0]);
    case GraphFamily::complete: return complete_graph(params[0]);
    case GraphFamily::complete_bipartite: return complete_bipartite_graph(params[0], params[1]);
    }
    throw invalid_parameter_error("unknown family");
}

const char* family_name(GraphFamily family) {
    switch (family) {
    case GraphFamily::path: return "path";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::complete: return "complete";
    case GraphFamily::complete_bipartite: return "complete_bipartite";
    }
    return "?";
}

std::optional<GraphFamily> parse_family(const std::string& text) {
    if (text == "path") return GraphFamily::path;
    if (text == "cycle") return GraphFamily::cycle;
    if (text == "complete") return GraphFamily::complete;
    if (text == "complete_bipartite") return GraphFamily::complete_bipartite;
    return std::nullopt;
}

VertexSet closed_neighbourhood(const Graph& g, int v) {
    VertexSet result = g.neighbours(v);
    result.insert(std::upper_bound(result.begin(), result.end(), v), v);
    return result;
}

int min_degree(const Graph& g) {
    if (g.vertex_count() == 0)
        throw invalid_parameter_error("minimum degree of the empty graph is undefined");
    int best = g.degree(0);
    for (int v = 1; v < g.vertex_count(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

bool is_triangle_free(const Graph& g) {
    // For each edge, look for a common neighbour of its endpoints.
    for (const auto& [a, b] : g.edges()) {
        const auto& na = g.neighbours(a);
        const auto& nb = g.neighbours(b);
        auto ia = na.begin();
        auto ib = nb.begin();
        while (ia != na.end() && ib != nb.end()) {
            if (*ia == *ib)
                return false;
            if (*ia < *ib)
                ++ia;
            else
                ++ib;
        }
    }
    return true;
}

namespace {

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    std::vector<char>& used, int next) {
    const int n = a.vertex_count();
    if (next == n)
        return true;
    for (int candidate = 0; candidate < n; ++candidate) {
        if (used[candidate] || b.degree(candidate) != a.degree(next))
            continue;
        bool consistent = true;
        for (int prev = 0; prev < next; ++prev) {
            if (a.adjacent(next, prev) != b.adjacent(candidate, map[prev])) {
                consistent = false;
                break;
            }
        }
        if (!consistent)
            continue;
        map[next] = candidate;
        used[candidate] = 1;
        if (extend_mapping(a, b, map, used, next + 1))
            return true;
        used[candidate] = 0;
    }
    return false;
}

} // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() > isomorphism_vertex_limit || b.vertex_count() > isomorphism_vertex_limit)
        throw size_limit_error("isomorphism test limited to " +
                               std::to_string(isomorphism_vertex_limit) + " vertices");
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
        return false;
    const int n = a.vertex_count();
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db)
        return false;
    std::vector<int> map(n, -1);
    std::vector<char> used(n, 0);
    return extend_mapping(a, b, map, used, 0);
}

} // namespace jmyc
