#include "jmyc/coloring.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace jmyc {

namespace {

void check_total(const Graph& g, const Coloring& c) {
    if (static_cast<int>(c.assignment.size()) != g.vertex_count())
        throw invalid_parameter_error("colouring covers " + std::to_string(c.assignment.size()) +
                                      " vertices, graph has " +
                                      std::to_string(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v)
        if (c.assignment[v] < 0 || c.assignment[v] >= c.colour_count)
            throw invalid_parameter_error("vertex " + std::to_string(v) + " has colour " +
                                          std::to_string(c.assignment[v]) + ", outside 0.." +
                                          std::to_string(c.colour_count - 1));
}

void check_guard(const Graph& g, int max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw size_limit_error("graph has " + std::to_string(g.vertex_count()) +
                               " vertices, over the solver guard of " +
                               std::to_string(max_vertices));
}

void check_colour_count(int t) {
    if (t < 1)
        throw invalid_parameter_error("colour count must be >= 1, got " + std::to_string(t));
    if (t > 64)
        throw size_limit_error("colour count " + std::to_string(t) + " exceeds mask width 64");
}

// Backtracking search for a surjective proper t-colouring in which every
// constrained vertex ends up with all t colours inside its closed
// neighbourhood. Vertices are coloured in index order, so when vertex v is
// being placed exactly 0..v-1 are coloured.
//
// State per vertex w:
//   seen[w]       colour bits present among coloured members of N[w]
//   remaining[w]  uncoloured members of N[w]
//   banned[w]     colour bits on coloured neighbours of w (properness)
// A partial assignment dies as soon as popcount(seen[w]) + remaining[w] < t
// for a constrained w, some uncoloured vertex has every colour banned, or
// the uncoloured vertices cannot cover the still-unused colours.
//
// seen/banned bits can have several owners (two members of N[w] may share a
// colour), so each frame records exactly the bits it newly set and clears
// only those on the way back; stack discipline keeps that sound.
class RainbowSearch {
public:
    RainbowSearch(const Graph& g, int t, bool internal_only)
        : g_(g), n_(g.vertex_count()), t_(t) {
        closed_.resize(n_);
        constrained_.resize(n_, 1);
        for (int v = 0; v < n_; ++v) {
            closed_[v] = g.neighbours(v);
            closed_[v].push_back(v);
            if (internal_only && g.degree(v) < 2)
                constrained_[v] = 0;
        }
        colour_.assign(n_, -1);
        seen_.assign(n_, 0);
        banned_.assign(n_, 0);
        remaining_.resize(n_);
        for (int v = 0; v < n_; ++v)
            remaining_[v] = static_cast<int>(closed_[v].size());
        usage_.assign(t_, 0);
        seen_touched_.resize(n_);
        banned_touched_.resize(n_);
    }

    std::optional<Coloring> run() {
        if (n_ == 0 || !assign(0))
            return std::nullopt;
        return Coloring{colour_, t_};
    }

private:
    bool assign(int v) {
        if (v == n_)
            return true;
        const int limit = v == 0 ? 1 : t_; // colour 0 pinned to vertex 0
        for (int c = 0; c < limit; ++c) {
            if (banned_[v] >> c & 1)
                continue;
            if (place(v, c)) {
                if (assign(v + 1))
                    return true;
                unplace(v, c);
            }
        }
        return false;
    }

    bool place(int v, int c) {
        auto& seen_touched = seen_touched_[v];
        auto& banned_touched = banned_touched_[v];
        seen_touched.clear();
        banned_touched.clear();
        colour_[v] = c;
        if (usage_[c]++ == 0)
            ++used_count_;
        const std::uint64_t bit = std::uint64_t(1) << c;
        bool ok = true;
        for (int w : closed_[v]) {
            --remaining_[w];
            if (!(seen_[w] & bit)) {
                seen_[w] |= bit;
                seen_touched.push_back(w);
            }
            if (constrained_[w] && std::popcount(seen_[w]) + remaining_[w] < t_)
                ok = false;
        }
        for (int w : g_.neighbours(v)) {
            if (w < v)
                continue; // already coloured; its banned set no longer matters
            if (!(banned_[w] & bit)) {
                banned_[w] |= bit;
                banned_touched.push_back(w);
            }
            if (std::popcount(banned_[w]) >= t_)
                ok = false;
        }
        // Each still-uncoloured vertex can cover at most one unused colour.
        if (t_ - used_count_ > n_ - v - 1)
            ok = false;
        if (!ok) {
            unplace(v, c);
            return false;
        }
        return true;
    }

    void unplace(int v, int c) {
        const std::uint64_t bit = std::uint64_t(1) << c;
        for (int w : banned_touched_[v])
            banned_[w] &= ~bit;
        for (int w : seen_touched_[v])
            seen_[w] &= ~bit;
        for (int w : closed_[v])
            ++remaining_[w];
        if (--usage_[c] == 0)
            --used_count_;
        colour_[v] = -1;
    }

    const Graph& g_;
    int n_;
    int t_;
    int used_count_ = 0;
    std::vector<std::vector<int>> closed_;
    std::vector<char> constrained_;
    std::vector<int> colour_;
    std::vector<std::uint64_t> seen_;
    std::vector<std::uint64_t> banned_;
    std::vector<int> remaining_;
    std::vector<int> usage_;
    std::vector<std::vector<int>> seen_touched_;
    std::vector<std::vector<int>> banned_touched_;
};

std::optional<Coloring> rainbow_find(const Graph& g, int t, bool internal_only,
                                     int max_vertices) {
    check_guard(g, max_vertices);
    check_colour_count(t);
    if (g.vertex_count() == 0)
        throw invalid_parameter_error("colouring search needs at least one vertex");
    // N[v] of a minimum-degree vertex spans at most min_degree+1 classes.
    // Does not apply when low-degree vertices are exempt from the rainbow
    // requirement.
    if (!internal_only && t > min_degree(g) + 1)
        return std::nullopt;
    return RainbowSearch(g, t, internal_only).run();
}

JResult solve_spectrum(const Graph& g, bool internal_only, int max_vertices) {
    check_guard(g, max_vertices);
    if (g.vertex_count() == 0)
        throw invalid_parameter_error("solve needs at least one vertex");
    JResult result;
    const int bound = min_degree(g) + 1;
    for (int t = 1; t <= bound; ++t) {
        auto witness = rainbow_find(g, t, internal_only, max_vertices);
        if (witness) {
            result.spectrum.push_back(t);
            result.j_number = t;
            result.witness = std::move(witness);
        }
    }
    return result;
}

bool proper_extend(const Graph& g, std::vector<int>& colour, int v, int t, int max_used) {
    if (v == g.vertex_count())
        return true;
    const int limit = std::min(t - 1, max_used + 1);
    for (int c = 0; c <= limit; ++c) {
        bool clash = false;
        for (int w : g.neighbours(v)) {
            if (colour[w] == c) {
                clash = true;
                break;
            }
        }
        if (clash)
            continue;
        colour[v] = c;
        if (proper_extend(g, colour, v + 1, t, std::max(max_used, c)))
            return true;
        colour[v] = -1;
    }
    return false;
}

} // namespace

bool is_proper(const Graph& g, const Coloring& c) {
    check_total(g, c);
    for (const auto& [a, b] : g.edges())
        if (c.assignment[a] == c.assignment[b])
            return false;
    return true;
}

bool in_rainbow_neighbourhood(const Graph& g, const Coloring& c, int v) {
    check_total(g, c);
    check_colour_count(c.colour_count);
    std::uint64_t seen = std::uint64_t(1) << c.assignment[v];
    for (int w : g.neighbours(v))
        seen |= std::uint64_t(1) << c.assignment[w];
    const std::uint64_t all = c.colour_count == 64 ? ~std::uint64_t(0)
                                                   : (std::uint64_t(1) << c.colour_count) - 1;
    return seen == all;
}

std::optional<Coloring> find_proper_coloring(const Graph& g, int t, int max_vertices) {
    check_guard(g, max_vertices);
    check_colour_count(t);
    std::vector<int> colour(g.vertex_count(), -1);
    if (!proper_extend(g, colour, 0, t, -1))
        return std::nullopt;
    return Coloring{std::move(colour), t};
}

int chromatic_number(const Graph& g, int max_vertices) {
    check_guard(g, max_vertices);
    if (g.vertex_count() == 0)
        throw invalid_parameter_error("chromatic number needs at least one vertex");
    for (int t = 1;; ++t)
        if (find_proper_coloring(g, t, max_vertices))
            return t;
}

std::optional<Coloring> find_j_coloring(const Graph& g, int t, int max_vertices) {
    return rainbow_find(g, t, false, max_vertices);
}

std::optional<Coloring> find_j_star_coloring(const Graph& g, int t, int max_vertices) {
    return rainbow_find(g, t, true, max_vertices);
}

JResult j_solve(const Graph& g, int max_vertices) {
    return solve_spectrum(g, false, max_vertices);
}

JResult j_star_solve(const Graph& g, int max_vertices) {
    return solve_spectrum(g, true, max_vertices);
}

} // namespace jmyc
