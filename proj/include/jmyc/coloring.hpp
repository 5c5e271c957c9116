#ifndef JMYC_COLORING_HPP
#define JMYC_COLORING_HPP

#include <optional>
#include <vector>

#include "jmyc/graph.hpp"

namespace jmyc {

// Total colour assignment, colours 0..colour_count-1.
struct Coloring {
    std::vector<int> assignment;
    int colour_count = 0;

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

// Outcome of a full-rainbow solve: the set of colour counts t admitting a
// valid colouring, its maximum, and the colouring found at the maximum.
// Every spectrum element satisfies t <= min_degree(G)+1: the closed
// neighbourhood of a minimum-degree vertex cannot meet more classes.
struct JResult {
    std::vector<int> spectrum;          // ascending
    std::optional<int> j_number;        // max of spectrum
    std::optional<Coloring> witness;
};

// True iff no edge joins two same-coloured endpoints.
bool is_proper(const Graph& g, const Coloring& c);

// True iff the closed neighbourhood of v meets every colour class.
bool in_rainbow_neighbourhood(const Graph& g, const Coloring& c, int v);

// Deterministic backtracking search for a proper t-colouring (not
// necessarily surjective); vertices in index order, colours ascending,
// each vertex capped at one more than the largest colour used so far.
std::optional<Coloring> find_proper_coloring(const Graph& g, int t,
                                             int max_vertices = default_max_vertices);

// Least t admitting a proper t-colouring, by iterative deepening.
int chromatic_number(const Graph& g, int max_vertices = default_max_vertices);

// Surjective proper t-colouring with every vertex in a rainbow
// neighbourhood, or nullopt. Deterministic: vertices in index order,
// colours ascending, colour 0 pinned to vertex 0. t above min_degree+1
// returns nullopt immediately.
std::optional<Coloring> find_j_coloring(const Graph& g, int t,
                                        int max_vertices = default_max_vertices);

// Same search with the rainbow requirement imposed only on internal
// vertices (degree >= 2); pendant and isolated vertices are exempt.
std::optional<Coloring> find_j_star_coloring(const Graph& g, int t,
                                             int max_vertices = default_max_vertices);

// Probes every t in [1, min_degree(G)+1]. The spectrum need not be an
// interval, so no binary search.
JResult j_solve(const Graph& g, int max_vertices = default_max_vertices);
JResult j_star_solve(const Graph& g, int max_vertices = default_max_vertices);

} // namespace jmyc

#endif
