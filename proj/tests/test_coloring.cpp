#include <doctest.h>

#include <random>

#include "jmyc/coloring.hpp"
#include "jmyc/constructions.hpp"
#include "oracles.hpp"

using namespace jmyc;

namespace {

bool witness_checks_out(const Graph& g, const Coloring& c) {
    if (!is_proper(g, c))
        return false;
    std::vector<char> used(c.colour_count, 0);
    for (int colour : c.assignment)
        used[colour] = 1;
    for (char u : used)
        if (!u)
            return false;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_rainbow_neighbourhood(g, c, v))
            return false;
    return true;
}

} // namespace

TEST_CASE("is_proper") {
    Graph p3 = path_graph(3);
    CHECK(is_proper(p3, {{0, 1, 0}, 2}));
    CHECK_FALSE(is_proper(p3, {{0, 0, 1}, 2}));
    CHECK(is_proper(cycle_graph(5), {{0, 1, 0, 1, 2}, 3}));
    CHECK_THROWS_AS(is_proper(p3, {{0, 1}, 2}), invalid_parameter_error);
}

TEST_CASE("in_rainbow_neighbourhood") {
    Graph c5 = cycle_graph(5);
    Coloring c{{0, 1, 0, 1, 2}, 3};
    CHECK(in_rainbow_neighbourhood(c5, c, 0));
    CHECK_FALSE(in_rainbow_neighbourhood(c5, c, 1));
    CHECK(in_rainbow_neighbourhood(complete_graph(2), {{0, 1}, 2}, 0));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(federico(path_graph(5))) == 2);

    // lower bound by exhaustive enumeration, upper bound by a checked witness
    Graph m = mycielskian(path_graph(7));
    CHECK_FALSE(oracle::proper_colouring_exists(m, 2));
    auto witness = find_proper_coloring(m, 3);
    REQUIRE(witness.has_value());
    CHECK(oracle::proper(m, witness->assignment));
    CHECK(chromatic_number(m) == 3);
}

TEST_CASE("solver size guard") {
    Graph p70 = path_graph(70);
    CHECK_THROWS_AS(chromatic_number(p70), size_limit_error);
    CHECK(chromatic_number(p70, 70) == 2);
    CHECK_THROWS_AS(j_solve(p70), size_limit_error);
}

TEST_CASE("solvers reject the empty graph") {
    CHECK_THROWS_AS(j_solve(Graph{}), invalid_parameter_error);
    CHECK_THROWS_AS(j_star_solve(Graph{}), invalid_parameter_error);
    CHECK_THROWS_AS(chromatic_number(Graph{}), invalid_parameter_error);
    CHECK_THROWS_AS(find_j_coloring(Graph{}, 1), invalid_parameter_error);
}

TEST_CASE("single vertices and isolated vertices") {
    Graph lone = Graph::from_edge_list(1, {});
    CHECK(j_solve(lone).spectrum == std::vector<int>{1});

    // an isolated vertex caps the probe range at t = 1, which any edge
    // rules out; the internal-only solve shares the cap
    Graph mixed = Graph::from_edge_list(3, {{0, 1}});
    CHECK(j_solve(mixed).spectrum.empty());
    CHECK(j_star_solve(mixed).spectrum.empty());
}

TEST_CASE("find_j_coloring") {
    auto p4 = find_j_coloring(path_graph(4), 2);
    REQUIRE(p4.has_value());
    CHECK(p4->assignment == std::vector<int>{0, 1, 0, 1});

    CHECK_FALSE(find_j_coloring(cycle_graph(5), 3).has_value());

    auto c4 = find_j_coloring(cycle_graph(4), 2);
    REQUIRE(c4.has_value());
    CHECK(c4->assignment == std::vector<int>{0, 1, 0, 1});

    // above the min-degree bound: immediate none
    CHECK_FALSE(find_j_coloring(path_graph(4), 4).has_value());
    CHECK_THROWS_AS(find_j_coloring(path_graph(4), 0), invalid_parameter_error);
}

TEST_CASE("j_solve on named graphs") {
    JResult p6 = j_solve(path_graph(6));
    CHECK(p6.spectrum == std::vector<int>{2});
    CHECK(p6.j_number == 2);

    JResult myc = j_solve(mycielskian(path_graph(5)));
    CHECK(myc.spectrum.empty());
    CHECK_FALSE(myc.j_number.has_value());
    CHECK_FALSE(myc.witness.has_value());

    CHECK(j_solve(crib(path_graph(6))).j_number == 3);
    CHECK(j_solve(complete_bipartite_graph(2, 3)).j_number == 2);
    CHECK(j_solve(cycle_graph(6)).spectrum == std::vector<int>{2, 3});
}

TEST_CASE("returned witnesses satisfy all three conditions") {
    for (const auto& [name, g] : oracle::base_corpus()) {
        CAPTURE(name);
        JResult result = j_solve(g);
        if (result.witness)
            CHECK(witness_checks_out(g, *result.witness));
        for (int t : result.spectrum) {
            auto witness = find_j_coloring(g, t);
            REQUIRE(witness.has_value());
            CHECK(witness_checks_out(g, *witness));
        }
    }
}

TEST_CASE("spectrum obeys the min-degree bound") {
    for (const auto& [name, g] : oracle::full_corpus()) {
        if (g.vertex_count() > 13)
            continue;
        CAPTURE(name);
        for (int t : j_solve(g).spectrum)
            CHECK(t <= min_degree(g) + 1);
    }
}

TEST_CASE("j_star_solve") {
    CHECK(j_star_solve(path_graph(4)).j_number == 2);

    JResult myc = j_star_solve(mycielskian(path_graph(5)));
    CHECK(myc.spectrum.empty());

    JResult star = j_star_solve(complete_bipartite_graph(1, 3));
    CHECK(star.spectrum == std::vector<int>{2});
    CHECK(star.j_number == 2);

    // the probe range is capped by the global minimum degree, but the raw
    // finder can exceed it when only internal vertices are constrained
    CHECK(find_j_star_coloring(complete_bipartite_graph(1, 3), 3).has_value());
    CHECK_FALSE(find_j_coloring(complete_bipartite_graph(1, 3), 3).has_value());
}

TEST_CASE("internal-only spectrum contains the full spectrum") {
    std::mt19937 rng(660913);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng() % 2 == 0)
                    edges.emplace_back(i, j);
        Graph g = Graph::from_edge_list(n, edges);
        auto full = j_solve(g).spectrum;
        auto internal = j_star_solve(g).spectrum;
        CHECK(std::includes(internal.begin(), internal.end(), full.begin(), full.end()));
    }
}

TEST_CASE("pendant-free graphs have identical full and internal solves") {
    for (const auto& [name, g] : oracle::full_corpus()) {
        if (g.vertex_count() > 13 || min_degree(g) < 2)
            continue;
        CAPTURE(name);
        JResult full = j_solve(g);
        JResult internal = j_star_solve(g);
        CHECK(full.spectrum == internal.spectrum);
        CHECK(full.witness == internal.witness);
    }
}

TEST_CASE("solves are deterministic") {
    Graph g = crib(path_graph(5));
    JResult first = j_solve(g);
    JResult second = j_solve(g);
    REQUIRE(first.witness.has_value());
    CHECK(first.spectrum == second.spectrum);
    CHECK(first.witness->assignment == second.witness->assignment);
}

TEST_CASE("pruned solver matches the exhaustive enumeration") {
    for (const auto& [name, g] : oracle::base_corpus()) {
        if (g.vertex_count() > 7)
            continue;
        CAPTURE(name);
        CHECK(j_solve(g).spectrum == oracle::rainbow_spectrum(g));
        CHECK(j_star_solve(g).spectrum == oracle::rainbow_spectrum(g, true));
    }
}
