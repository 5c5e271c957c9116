#include <doctest.h>

#include <algorithm>
#include <random>

#include "jmyc/constructions.hpp"
#include "oracles.hpp"

using namespace jmyc;

namespace {

Graph random_graph(std::mt19937& rng, int n, int denominator) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (static_cast<int>(rng() % denominator) == 0)
                edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

} // namespace

TEST_CASE("mycielskian sizes and structure") {
    Graph m = mycielskian(path_graph(7));
    CHECK(m.vertex_count() == 15);
    CHECK(m.edge_count() == 25);

    CHECK(are_isomorphic(mycielskian(complete_graph(2)), cycle_graph(5)));

    Graph lone = mycielskian(Graph::from_edge_list(1, {}));
    CHECK(lone.vertex_count() == 3);
    CHECK(lone.edges() == std::vector<std::pair<int, int>>{{1, 2}});
}

TEST_CASE("crib sizes and structure") {
    Graph c = crib(path_graph(6));
    CHECK(c.vertex_count() == 13);
    CHECK(c.edge_count() == 27);

    CHECK(crib(complete_graph(2)).vertex_count() == 5);
    CHECK(crib(complete_graph(2)).edge_count() == 7);

    Graph sparse = crib(Graph::from_edge_list(2, {}));
    CHECK(sparse.vertex_count() == 5);
    CHECK(sparse.edge_count() == 4);
    for (const auto& [a, b] : sparse.edges())
        CHECK(b == 4); // every edge touches the root
}

TEST_CASE("shadow sizes and structure") {
    Graph s = shadow(path_graph(6));
    CHECK(s.vertex_count() == 12);
    CHECK(s.edge_count() == 15);

    Graph sk2 = shadow(complete_graph(2));
    CHECK(sk2.vertex_count() == 4);
    CHECK(sk2.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}});

    CHECK(shadow(Graph::from_edge_list(3, {})).vertex_count() == 6);
    CHECK(shadow(Graph::from_edge_list(3, {})).edge_count() == 0);
}

TEST_CASE("shadow equals the mycielskian with the root removed") {
    for (const auto& [name, base] : oracle::base_corpus()) {
        CAPTURE(name);
        const int n = base.vertex_count();
        Graph m = mycielskian(base);
        std::vector<std::pair<int, int>> kept;
        for (const auto& [a, b] : m.edges())
            if (a != 2 * n && b != 2 * n)
                kept.emplace_back(a, b);
        CHECK(shadow(base) == Graph::from_edge_list(2 * n, kept));
    }
}

TEST_CASE("federico sizes and structure") {
    Graph f = federico(path_graph(5));
    CHECK(f.vertex_count() == 15);
    CHECK(f.edge_count() == 21);

    CHECK(federico(complete_graph(2)).vertex_count() == 6);
    CHECK(federico(complete_graph(2)).edge_count() == 6);

    Graph sparse = federico(Graph::from_edge_list(4, {}));
    CHECK(sparse.vertex_count() == 12);
    CHECK(sparse.edges() == std::vector<std::pair<int, int>>{{0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

TEST_CASE("federico layer rules") {
    for (const auto& [name, base] : oracle::base_corpus()) {
        CAPTURE(name);
        const int n = base.vertex_count();
        Graph f = federico(base);
        for (const auto& [a, b] : f.edges()) {
            const bool a_twin = a >= n && a < 2 * n;
            const bool b_twin = b >= n && b < 2 * n;
            CHECK_FALSE((a_twin && b_twin));                 // no twin-twin edge
            if (a_twin && b >= 2 * n)
                CHECK(b - 2 * n != a - n);                   // no twin to its own copy
            CHECK_FALSE((a < n && b >= 2 * n));              // no original-plain edge
        }
    }
}

TEST_CASE("construction size formulas hold on random graphs") {
    std::mt19937 rng(90121);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        Graph g = random_graph(rng, n, 2);
        const int m = g.edge_count();
        CHECK(mycielskian(g).vertex_count() == 2 * n + 1);
        CHECK(mycielskian(g).edge_count() == 3 * m + n);
        CHECK(crib(g).edge_count() == 3 * m + 2 * n);
        CHECK(shadow(g).edge_count() == 3 * m);
        CHECK(federico(g).vertex_count() == 3 * n);
        CHECK(federico(g).edge_count() == 4 * m + n);
    }
}

TEST_CASE("root degrees") {
    for (const auto& [name, base] : oracle::base_corpus()) {
        CAPTURE(name);
        const int n = base.vertex_count();
        CHECK(mycielskian(base).degree(2 * n) == n);
        CHECK(crib(base).degree(2 * n) == 2 * n);
    }
}

TEST_CASE("federico preserves triangle-freeness") {
    for (const auto& [name, base] : oracle::base_corpus()) {
        if (!is_triangle_free(base))
            continue;
        CAPTURE(name);
        CHECK_FALSE(oracle::has_triangle(federico(base)));
    }
    std::mt19937 rng(40787);
    int checked = 0;
    while (checked < 20) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 7), 3);
        if (!is_triangle_free(g))
            continue;
        ++checked;
        CHECK_FALSE(oracle::has_triangle(federico(g)));
    }
}

TEST_CASE("constructions carry role labels") {
    Graph m = mycielskian(complete_graph(2));
    REQUIRE(m.has_labels());
    std::vector<std::string> names;
    for (const auto& label : m.labels())
        names.push_back(label.name());
    CHECK(names == std::vector<std::string>{"v1", "v2", "u1", "u2", "w"});

    Graph f = federico(complete_graph(2));
    REQUIRE(f.has_labels());
    CHECK(f.labels()[4].name() == "w1");
    CHECK(f.labels()[5].name() == "w2");

    CHECK(construction_name(ConstructionKind::crib) == std::string("crib"));
    CHECK(parse_construction("shadow") == ConstructionKind::shadow);
    CHECK_FALSE(parse_construction("nope").has_value());
}
