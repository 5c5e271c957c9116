#include "jmyc/circular.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace jmyc {

namespace {

void check_guard(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw size_limit_error("graph has " + std::to_string(g.vertex_count()) +
                               " vertices, over the solver guard of " +
                               std::to_string(max_vertices));
}

void check_kd(int k, int d) {
    if (d < 1 || k < 2 * d)
        throw invalid_parameter_error("need k >= 2d >= 2, got k=" + std::to_string(k) +
                                      " d=" + std::to_string(d));
}

bool kd_extend(const Graph& g, std::vector<int>& value, int v, int k, int d) {
    if (v == g.vertex_count())
        return true;
    const int limit = v == 0 ? 1 : k; // rotate so vertex 0 gets 0
    for (int candidate = 0; candidate < limit; ++candidate) {
        bool ok = true;
        for (int w : g.neighbours(v)) {
            if (w < v && circular_distance(candidate, value[w], k) < d) {
                ok = false;
                break;
            }
        }
        if (!ok)
            continue;
        value[v] = candidate;
        if (kd_extend(g, value, v + 1, k, d))
            return true;
    }
    return false;
}

} // namespace

Rational Rational::of(long long num, long long den) {
    if (num <= 0 || den <= 0)
        throw invalid_parameter_error("rational must be positive, got " + std::to_string(num) +
                                      "/" + std::to_string(den));
    const long long g = std::gcd(num, den);
    return Rational{num / g, den / g};
}

std::string Rational::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

int circular_distance(int a, int b, int k) {
    const int diff = std::abs(a - b);
    return std::min(diff, k - diff);
}

bool is_kd_coloring(const Graph& g, const KDColoring& f) {
    check_kd(f.k, f.d);
    if (static_cast<int>(f.assignment.size()) != g.vertex_count())
        throw invalid_parameter_error("assignment covers " + std::to_string(f.assignment.size()) +
                                      " vertices, graph has " +
                                      std::to_string(g.vertex_count()));
    for (int value : f.assignment)
        if (value < 0 || value >= f.k)
            throw invalid_parameter_error("value " + std::to_string(value) + " outside 0.." +
                                          std::to_string(f.k - 1));
    for (const auto& [a, b] : g.edges())
        if (circular_distance(f.assignment[a], f.assignment[b], f.k) < f.d)
            return false;
    return true;
}

std::optional<KDColoring> find_kd_coloring(const Graph& g, int k, int d, int max_vertices) {
    check_kd(k, d);
    check_guard(g, max_vertices);
    std::vector<int> value(g.vertex_count(), -1);
    if (!kd_extend(g, value, 0, k, d))
        return std::nullopt;
    return KDColoring{k, d, std::move(value)};
}

CircularResult circular_solve(const Graph& g, int max_vertices, int max_k) {
    check_guard(g, max_vertices);
    if (g.vertex_count() == 0)
        throw invalid_parameter_error("circular chromatic number needs at least one vertex");
    if (g.edge_count() == 0)
        return {Rational{1, 1}, std::nullopt};
    // The minimum is attained with k at most the vertex count; --max-k can
    // narrow the sweep further.
    int k_bound = g.vertex_count();
    if (max_k > 0)
        k_bound = std::min(k_bound, max_k);
    std::vector<std::pair<int, int>> candidates;
    for (int k = 2; k <= k_bound; ++k)
        for (int d = 1; 2 * d <= k; ++d)
            if (std::gcd(k, d) == 1)
                candidates.emplace_back(k, d);
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        const long long lhs = static_cast<long long>(a.first) * b.second;
        const long long rhs = static_cast<long long>(b.first) * a.second;
        return lhs != rhs ? lhs < rhs : a.first < b.first;
    });
    for (const auto& [k, d] : candidates) {
        auto witness = find_kd_coloring(g, k, d, max_vertices);
        if (witness)
            return {Rational::of(k, d), std::move(witness)};
    }
    throw error("no (k,d)-colouring with k <= " + std::to_string(k_bound));
}

Rational circular_chromatic_number(const Graph& g, int max_vertices) {
    return circular_solve(g, max_vertices).value;
}

} // namespace jmyc
