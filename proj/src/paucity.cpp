#include "jmyc/paucity.hpp"

#include <algorithm>
#include <cstdint>

#include "jmyc/constructions.hpp"

namespace jmyc {

namespace {

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> result;
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = i + 1; j < g.vertex_count(); ++j)
            if (!g.adjacent(i, j))
                result.emplace_back(i, j);
    return result;
}

long long choose_capped(long long n, long long k, long long cap) {
    long long result = 1;
    for (long long i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap)
            return cap + 1;
    }
    return result;
}

// Lexicographic m-subset enumeration over indices 0..n-1.
bool next_combination(std::vector<int>& pick, int n) {
    const int m = static_cast<int>(pick.size());
    int i = m - 1;
    while (i >= 0 && pick[i] == n - m + i)
        --i;
    if (i < 0)
        return false;
    ++pick[i];
    for (int j = i + 1; j < m; ++j)
        pick[j] = pick[j - 1] + 1;
    return true;
}

bool all_rainbow(const Graph& g, const Coloring& c) {
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_rainbow_neighbourhood(g, c, v))
            return false;
    return true;
}

bool surjective(const Coloring& c) {
    std::vector<char> used(c.colour_count, 0);
    for (int colour : c.assignment) {
        if (colour < 0 || colour >= c.colour_count)
            return false;
        used[colour] = 1;
    }
    return std::all_of(used.begin(), used.end(), [](char u) { return u != 0; });
}

PaucityCertificate checked_certificate(const Graph& g, std::vector<std::pair<int, int>> added,
                                       Coloring witness) {
    PaucityCertificate cert{std::move(added), 0, std::move(witness)};
    cert.count = static_cast<int>(cert.added_edges.size());
    if (!certificate_valid(g, cert))
        throw error("constructive augmentation produced an invalid certificate");
    return cert;
}

} // namespace

Graph augment(const Graph& g, std::span<const std::pair<int, int>> extra) {
    auto edges = g.edges();
    for (const auto& [a, b] : extra) {
        if (a == b)
            throw invalid_edge_error("self-loop at vertex " + std::to_string(a));
        if (g.adjacent(a, b))
            throw invalid_edge_error("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") already present");
        edges.emplace_back(a, b);
    }
    std::optional<std::vector<VertexLabel>> labels;
    if (g.has_labels())
        labels = g.labels();
    return Graph::from_edge_list(g.vertex_count(), edges, std::move(labels));
}

bool certificate_valid(const Graph& g, const PaucityCertificate& cert) {
    if (cert.count != static_cast<int>(cert.added_edges.size()))
        return false;
    for (const auto& [a, b] : cert.added_edges) {
        if (a == b || a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
            return false;
        if (g.adjacent(a, b))
            return false;
    }
    Graph augmented = augment(g, cert.added_edges);
    if (augmented.edge_count() != g.edge_count() + cert.count)
        return false; // duplicate added edge
    if (cert.witness.colour_count != min_degree(g) + 1)
        return false;
    return is_proper(augmented, cert.witness) && surjective(cert.witness) &&
           all_rainbow(augmented, cert.witness);
}

std::optional<PaucityCertificate> paucity_exact(const Graph& g, std::optional<int> budget_limit,
                                                long long subset_cap, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw size_limit_error("graph has " + std::to_string(g.vertex_count()) +
                               " vertices, over the solver guard of " +
                               std::to_string(max_vertices));
    const int t = min_degree(g) + 1;
    if (auto witness = find_j_coloring(g, t, max_vertices))
        return PaucityCertificate{{}, 0, std::move(*witness)};
    // Edge additions only raise the chromatic number, so a budget of t
    // colours out of reach now stays out of reach.
    if (chromatic_number(g, max_vertices) > t)
        return std::nullopt;
    const auto candidates = non_edges(g);
    const int total = static_cast<int>(candidates.size());
    int deepest = budget_limit ? std::min(*budget_limit, total) : total;
    for (int m = 1; m <= deepest; ++m) {
        if (choose_capped(total, m, subset_cap) > subset_cap)
            throw size_limit_error(
                "level " + std::to_string(m) + " has more than " + std::to_string(subset_cap) +
                " edge subsets; no augmentation of fewer than " + std::to_string(m) +
                " edges exists");
        std::vector<int> pick(m);
        for (int i = 0; i < m; ++i)
            pick[i] = i;
        do {
            std::vector<std::pair<int, int>> added;
            added.reserve(m);
            for (int index : pick)
                added.push_back(candidates[index]);
            Graph augmented = augment(g, added);
            if (auto witness = find_j_coloring(augmented, t, max_vertices))
                return PaucityCertificate{std::move(added), m, std::move(*witness)};
        } while (next_combination(pick, total));
    }
    return std::nullopt;
}

PaucityCertificate paucity_constructive_path(int n) {
    if (n < 2)
        throw invalid_parameter_error("path augmentation needs n >= 2, got " + std::to_string(n));
    const Graph g = mycielskian(path_graph(n));
    std::vector<int> assignment(2 * n + 1);
    for (int i = 0; i < n; ++i)
        assignment[i] = assignment[n + i] = i % 2;
    assignment[2 * n] = 2;
    std::vector<std::pair<int, int>> added;
    for (int i = 0; i < n; ++i)
        added.emplace_back(i, 2 * n);
    return checked_certificate(g, std::move(added), Coloring{std::move(assignment), 3});
}

PaucityCertificate paucity_constructive_cycle(int n) {
    if (n < 4)
        throw invalid_parameter_error("cycle augmentation needs n >= 4, got " + std::to_string(n));
    const Graph g = mycielskian(cycle_graph(n));
    const int r = n % 3;
    // Three colours around the cycle, twins copying their originals, root
    // on the fourth colour. When n = 3q+1 the last vertex cannot continue
    // the cyclic pattern (it would repeat colour 0 across the closing
    // edge); n = 3q+2 closes properly as is.
    std::vector<int> assignment(2 * n + 1);
    for (int i = 0; i < n; ++i)
        assignment[i] = i % 3;
    if (r == 1)
        assignment[n - 1] = 1;
    for (int i = 0; i < n; ++i)
        assignment[n + i] = assignment[i];
    assignment[2 * n] = 3;
    const Coloring witness{std::move(assignment), 4};

    std::vector<std::pair<int, int>> added;
    for (int i = 0; i < n; ++i)
        added.emplace_back(i, 2 * n);
    Graph augmented = augment(g, added);

    // Vertices whose closed neighbourhood still misses a colour, with the
    // colour they miss (always exactly one here).
    std::vector<std::pair<int, int>> deficient;
    for (int v = 0; v < augmented.vertex_count(); ++v) {
        std::uint64_t seen = std::uint64_t(1) << witness.assignment[v];
        for (int w : augmented.neighbours(v))
            seen |= std::uint64_t(1) << witness.assignment[w];
        for (int colour = 0; colour < 4; ++colour)
            if (!(seen >> colour & 1))
                deficient.emplace_back(v, colour);
    }
    std::vector<char> fixed(augmented.vertex_count(), 0);
    for (std::size_t i = 0; i < deficient.size(); ++i) {
        const auto [v, missing] = deficient[i];
        if (fixed[v])
            continue;
        int target = -1;
        // A deficient partner of the missing colour that in turn misses
        // v's colour is repaired by the same edge.
        for (std::size_t j = i + 1; j < deficient.size() && target < 0; ++j) {
            const auto [u, missing_u] = deficient[j];
            if (!fixed[u] && witness.assignment[u] == missing &&
                missing_u == witness.assignment[v] && !augmented.adjacent(v, u))
                target = u;
        }
        const bool paired = target >= 0;
        if (target < 0) {
            for (int u = 0; u < augmented.vertex_count() && target < 0; ++u)
                if (u != v && witness.assignment[u] == missing && !augmented.adjacent(v, u))
                    target = u;
        }
        if (target < 0)
            throw error("no repair edge available for vertex " + std::to_string(v));
        added.emplace_back(std::min(v, target), std::max(v, target));
        fixed[v] = 1;
        if (paired)
            fixed[target] = 1;
        augmented = augment(g, added);
    }
    std::sort(added.begin(), added.end());
    if (static_cast<int>(added.size()) != n + 2 * r)
        throw error("cycle augmentation used " + std::to_string(added.size()) +
                    " edges, expected " + std::to_string(n + 2 * r));
    return checked_certificate(g, std::move(added), witness);
}

} // namespace jmyc
