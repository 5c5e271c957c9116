#ifndef JMYC_CONSTRUCTIONS_HPP
#define JMYC_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "jmyc/graph.hpp"

namespace jmyc {

enum class ConstructionKind { mycielskian, crib, shadow, federico };

// Mycielskian on 2n+1 vertices: originals 0..n-1 keep E(G), each twin n+i
// copies the adjacencies of vertex i into the original layer, and the root
// 2n is joined to every twin. |E| = 3m + n.
Graph mycielskian(const Graph& g);

// Mycielskian plus an edge from the root to every original. |E| = 3m + 2n.
Graph crib(const Graph& g);

// Mycielskian with the root (and its edges) removed; 2n vertices, |E| = 3m.
Graph shadow(const Graph& g);

// Three layers on 3n vertices: originals 0..n-1 and the plain layer
// 2n..3n-1 each copy E(G); twin n+i is joined to plain 2n+j exactly when
// {i,j} is a base edge; twins are matched to their originals. |E| = 4m + n.
// Well defined for any simple graph; triangle-free inputs stay triangle-free.
Graph federico(const Graph& g);

Graph apply_construction(ConstructionKind kind, const Graph& g);

const char* construction_name(ConstructionKind kind);
std::optional<ConstructionKind> parse_construction(const std::string& text);

} // namespace jmyc

#endif
