#ifndef JMYC_CIRCULAR_HPP
#define JMYC_CIRCULAR_HPP

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "jmyc/graph.hpp"

namespace jmyc {

// Exact positive fraction, always reduced.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational of(long long num, long long den);

    std::string str() const; // "5/2"

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num * b.den <=> b.num * a.den;
    }
};

// Assignment into Z_k whose edges keep circular distance at least d.
struct KDColoring {
    int k = 0;
    int d = 0;
    std::vector<int> assignment;
};

// min(|a-b|, k-|a-b|) for a,b in 0..k-1.
int circular_distance(int a, int b, int k);

// True iff every edge has circular distance >= d between its endpoint
// values.
bool is_kd_coloring(const Graph& g, const KDColoring& f);

// Deterministic backtracking search, vertex 0 pinned to value 0 (rotation
// symmetry). Requires k >= 2d >= 2.
std::optional<KDColoring> find_kd_coloring(const Graph& g, int k, int d,
                                           int max_vertices = default_max_vertices);

struct CircularResult {
    Rational value;
    std::optional<KDColoring> witness;
};

// Minimum k/d over coprime pairs with 2 <= k <= max_k (default: vertex
// count), 1 <= d <= k/2, probed in increasing value order so the first
// feasible pair is the minimum. Edgeless graphs report 1/1 by convention.
CircularResult circular_solve(const Graph& g, int max_vertices = default_max_vertices,
                              int max_k = 0);
Rational circular_chromatic_number(const Graph& g, int max_vertices = default_max_vertices);

} // namespace jmyc

#endif
