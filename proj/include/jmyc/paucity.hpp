#ifndef JMYC_PAUCITY_HPP
#define JMYC_PAUCITY_HPP

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "jmyc/coloring.hpp"
#include "jmyc/graph.hpp"

namespace jmyc {

inline constexpr long long default_subset_cap = 10'000'000;

// Minimal edge set whose addition makes the graph colourable with
// min_degree+1 colours so that every vertex sits in a rainbow
// neighbourhood, plus the witnessing colouring of the augmented graph.
// The colour budget is fixed from the ORIGINAL graph's minimum degree,
// even though added edges may raise it.
struct PaucityCertificate {
    std::vector<std::pair<int, int>> added_edges; // sorted, disjoint from E(G)
    int count = 0;
    Coloring witness;
};

// Same graph with extra edges; rejects duplicates of existing edges.
Graph augment(const Graph& g, std::span<const std::pair<int, int>> extra);

// Checks every certificate invariant against g: added edges are non-edges
// of g, count matches, and the witness is a surjective proper colouring of
// the augmented graph with min_degree(g)+1 colours and all vertices in
// rainbow neighbourhoods.
bool certificate_valid(const Graph& g, const PaucityCertificate& cert);

// Iterative deepening over the augmentation size m = 0,1,2,...: at each
// level the m-subsets of non-edges are tried in lexicographic order, so the
// result is the lexicographically least minimum certificate. Returns
// nullopt when budget_limit levels are exhausted (or no augmentation can
// ever work). Throws size_limit_error when a level would exceed
// subset_cap candidate subsets, reporting the levels already ruled out.
std::optional<PaucityCertificate> paucity_exact(const Graph& g,
                                                std::optional<int> budget_limit = std::nullopt,
                                                long long subset_cap = default_subset_cap,
                                                int max_vertices = default_max_vertices);

// The n-edge augmentation of the Mycielskian of the n-path: every original
// is joined to the root, originals/twins alternate two colours, the root
// takes the third. The returned certificate is verified before returning.
PaucityCertificate paucity_constructive_path(int n);

// The (n + 2r)-edge augmentation of the Mycielskian of the n-cycle,
// r = n mod 3: all originals join the root, and the 2r vertices whose
// neighbourhoods still miss a colour get one repair edge each, paired up
// when two deficient vertices can fix each other. Verified before return.
PaucityCertificate paucity_constructive_cycle(int n);

} // namespace jmyc

#endif
