#ifndef JMYC_GRAPH_HPP
#define JMYC_GRAPH_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jmyc/error.hpp"

namespace jmyc {

// Default vertex-count guard for the exact solvers; overridable per call
// (CLI: --max-vertices / JMYC_MAX_VERTICES).
inline constexpr int default_max_vertices = 64;

// Isomorphism is a refinement-free backtracker, hard-capped.
inline constexpr int isomorphism_vertex_limit = 12;

// Role a vertex plays in a derived construction. Plain is the third layer
// of the Federico graph.
enum class Role : unsigned char { original, twin, root, plain };

// Printable role tag: Original(2) -> "v3", Twin(0) -> "u1", Root -> "w",
// Plain(1) -> "w2". Indices are 0-based internally, 1-based in names.
struct VertexLabel {
    Role role = Role::original;
    int index = 0; // ignored for Role::root

    std::string name() const;
    static std::optional<VertexLabel> parse(const std::string& text);

    friend bool operator==(const VertexLabel&, const VertexLabel&) = default;
};

// Sorted, duplicate-free vertex indices.
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1. Edges are stored
// normalized (i < j) and lexicographically sorted; neighbour lists ascending.
class Graph {
public:
    Graph() = default;

    // Deduplicates and normalizes pairs. Loops and out-of-range endpoints
    // are rejected. Labels, when given, must be one per vertex and unique.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs,
                                std::optional<std::vector<VertexLabel>> labels = std::nullopt);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    const std::vector<int>& neighbours(int v) const;
    int degree(int v) const { return static_cast<int>(neighbours(v).size()); }

    bool has_labels() const { return labels_.has_value(); }
    const std::vector<VertexLabel>& labels() const { return *labels_; }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::optional<std::vector<VertexLabel>> labels_;
};

enum class GraphFamily { path, cycle, complete, complete_bipartite };

// Standard families in canonical vertex order: path edges {i,i+1}, cycle
// adds {n-1,0}, complete all pairs, bipartite all cross pairs (first part
// 0..m-1). path/cycle/complete take one parameter, complete_bipartite two.
Graph generate(GraphFamily family, std::span<const int> params);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);

// {v} together with the neighbours of v, sorted.
VertexSet closed_neighbourhood(const Graph& g, int v);

// Minimum vertex degree; rejects the empty graph.
int min_degree(const Graph& g);

// True iff no three vertices are mutually adjacent.
bool is_triangle_free(const Graph& g);

// Edge-preserving bijection test by backtracking over degree-compatible
// assignments. Both graphs must have at most isomorphism_vertex_limit
// vertices.
bool are_isomorphic(const Graph& a, const Graph& b);

const char* family_name(GraphFamily family);
std::optional<GraphFamily> parse_family(const std::string& text);

} // namespace jmyc

#endif
