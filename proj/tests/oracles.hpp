#ifndef JMYC_TEST_ORACLES_HPP
#define JMYC_TEST_ORACLES_HPP

// Brute-force reference computations for the tests. Everything here works
// from the public edge list with plain odometer enumeration and no pruning
// or symmetry breaking, independent of the library's search code.

#include <algorithm>
#include <string>
#include <vector>

#include "jmyc/constructions.hpp"
#include "jmyc/graph.hpp"

namespace oracle {

inline std::vector<std::vector<char>> adjacency_matrix(const jmyc::Graph& g) {
    std::vector<std::vector<char>> adj(g.vertex_count(),
                                       std::vector<char>(g.vertex_count(), 0));
    for (const auto& [a, b] : g.edges())
        adj[a][b] = adj[b][a] = 1;
    return adj;
}

// Odometer over base-t digits; returns false after the last assignment.
inline bool next_assignment(std::vector<int>& digits, int t) {
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (++digits[i] < t)
            return true;
        digits[i] = 0;
    }
    return false;
}

inline bool proper(const jmyc::Graph& g, const std::vector<int>& colour) {
    for (const auto& [a, b] : g.edges())
        if (colour[a] == colour[b])
            return false;
    return true;
}

inline bool surjective(const std::vector<int>& colour, int t) {
    std::vector<char> used(t, 0);
    for (int c : colour)
        used[c] = 1;
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

inline bool all_rainbow(const std::vector<std::vector<char>>& adj,
                        const std::vector<int>& colour, int t, bool internal_only) {
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v) {
        int degree = 0;
        std::vector<char> seen(t, 0);
        seen[colour[v]] = 1;
        for (int w = 0; w < n; ++w) {
            if (adj[v][w]) {
                ++degree;
                seen[colour[w]] = 1;
            }
        }
        if (internal_only && degree < 2)
            continue;
        if (!std::all_of(seen.begin(), seen.end(), [](char s) { return s != 0; }))
            return false;
    }
    return true;
}

// Colour counts admitting a surjective proper colouring with every
// (constrained) vertex in a rainbow neighbourhood, probing 1..min_degree+1.
inline std::vector<int> rainbow_spectrum(const jmyc::Graph& g, bool internal_only = false) {
    const int n = g.vertex_count();
    const auto adj = adjacency_matrix(g);
    int delta = n;
    for (int v = 0; v < n; ++v) {
        int degree = 0;
        for (int w = 0; w < n; ++w)
            degree += adj[v][w];
        delta = std::min(delta, degree);
    }
    std::vector<int> spectrum;
    for (int t = 1; t <= delta + 1; ++t) {
        std::vector<int> colour(n, 0);
        do {
            if (proper(g, colour) && surjective(colour, t) &&
                all_rainbow(adj, colour, t, internal_only)) {
                spectrum.push_back(t);
                break;
            }
        } while (next_assignment(colour, t));
    }
    return spectrum;
}

inline bool proper_colouring_exists(const jmyc::Graph& g, int t) {
    std::vector<int> colour(g.vertex_count(), 0);
    do {
        if (proper(g, colour))
            return true;
    } while (next_assignment(colour, t));
    return false;
}

inline bool has_triangle(const jmyc::Graph& g) {
    const auto adj = adjacency_matrix(g);
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[a][b] && adj[a][c] && adj[b][c])
                    return true;
    return false;
}

struct NamedGraph {
    std::string name;
    jmyc::Graph graph;
};

inline std::vector<NamedGraph> base_corpus() {
    std::vector<NamedGraph> corpus;
    for (int n = 2; n <= 7; ++n)
        corpus.push_back({"P_" + std::to_string(n), jmyc::path_graph(n)});
    for (int n = 3; n <= 6; ++n)
        corpus.push_back({"C_" + std::to_string(n), jmyc::cycle_graph(n)});
    corpus.push_back({"K_3", jmyc::complete_graph(3)});
    corpus.push_back({"K_{1,3}", jmyc::complete_bipartite_graph(1, 3)});
    corpus.push_back({"K_{2,3}", jmyc::complete_bipartite_graph(2, 3)});
    return corpus;
}

// Bases plus their four derived graphs (third layer only for triangle-free
// bases, matching the statements under test).
inline std::vector<NamedGraph> full_corpus() {
    std::vector<NamedGraph> corpus = base_corpus();
    const auto bases = base_corpus();
    for (const auto& [name, base] : bases) {
        corpus.push_back({"mu(" + name + ")", jmyc::mycielskian(base)});
        corpus.push_back({"c(" + name + ")", jmyc::crib(base)});
        corpus.push_back({"s(" + name + ")", jmyc::shadow(base)});
        if (jmyc::is_triangle_free(base))
            corpus.push_back({"F(" + name + ")", jmyc::federico(base)});
    }
    return corpus;
}

} // namespace oracle

#endif
