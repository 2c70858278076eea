#include <catch2/catch_amalgamated.hpp>
#include <set>

#include "majcolor/generators.hpp"
#include "test_helpers.hpp"

using namespace majcolor;

TEST_CASE("cycle generator") {
    CHECK(cycle(3).m() == 3);
    Graph c8 = cycle(8);
    CHECK(c8.n == 8);
    CHECK(c8.max_degree == 2);
    CHECK_THROWS_MATCHES(cycle(2), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::too_small; }));
}

TEST_CASE("complete generator") {
    CHECK(complete(4).m() == 6);
    CHECK(complete(7).m() == 21);
    CHECK_THROWS_AS(complete(1), Error);
}

TEST_CASE("subdivided complete") {
    CHECK(subdivided_complete(4).n == 10);
    Graph k5 = subdivided_complete(5);
    CHECK(k5.n == 15);
    CHECK(k5.m() == 20);
    for (int v = 0; v < 5; ++v) CHECK(k5.degree[v] == 4);  // branch vertices keep degree n-1
    CHECK_THROWS_AS(subdivided_complete(2), Error);
}

TEST_CASE("diamond complete structure") {
    Graph g = diamond_complete(4);
    CHECK(g.n == 16);
    CHECK(g.m() == 5 * 6);
    for (int v = 0; v < 4; ++v) CHECK(g.degree[v] == 6);  // 2(n-1)
    for (int v = 4; v < 16; ++v) CHECK(g.degree[v] == 3);
    CHECK(g.min_degree == 3);
    // each diamond: a,b adjacent to each other and to both branch vertices
    auto has_edge = [&](int u, int v) {
        for (auto [w, e] : g.adj[u]) {
            (void)e;
            if (w == v) return true;
        }
        return false;
    };
    int a = 4, b = 5;  // first diamond replaces K_4 edge (0,1)
    CHECK(has_edge(a, b));
    CHECK(has_edge(0, a));
    CHECK(has_edge(0, b));
    CHECK(has_edge(1, a));
    CHECK(has_edge(1, b));
    CHECK_FALSE(has_edge(0, 1));
}

TEST_CASE("bipartite witness of Theorem-style lower bound") {
    Graph g = bipartite_witness(3, 2);
    CHECK(g.n == 3 + 3);
    for (int y = 3; y < 6; ++y) CHECK(g.degree[y] == 2);
    for (int x = 0; x < 3; ++x) CHECK(g.degree[x] == 2);  // C(|X|-1, delta-1)

    Graph h = bipartite_witness(4, 2);
    CHECK(h.n == 4 + 6);
    for (int x = 0; x < 4; ++x) CHECK(h.degree[x] == 3);
    for (int y = 4; y < 10; ++y) CHECK(h.degree[y] == 2);

    // neighborhoods enumerate the delta-subsets injectively
    std::set<std::vector<int>> nbhds;
    for (int y = 4; y < 10; ++y) {
        std::vector<int> nb;
        for (auto [u, e] : h.adj[y]) {
            (void)e;
            nb.push_back(u);
        }
        std::sort(nb.begin(), nb.end());
        nbhds.insert(nb);
    }
    CHECK(nbhds.size() == 6);

    CHECK(testutil::is_bipartite(g));
    CHECK_THROWS_MATCHES(bipartite_witness(30, 8), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::size_cap_exceeded; }));
    CHECK_THROWS_AS(bipartite_witness(1, 2), Error);
}

TEST_CASE("steiner triple systems cover every pair exactly once") {
    for (int n : {7, 9, 13, 15, 19, 21}) {
        SteinerTripleSystem sts = steiner_triple_system(n);
        CHECK(static_cast<int>(sts.triples.size()) == n * (n - 1) / 6);
        std::set<std::pair<int, int>> covered;
        for (const auto& t : sts.triples) {
            CHECK(t[0] != t[1]);
            CHECK(t[1] != t[2]);
            CHECK(t[0] != t[2]);
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    auto pr = std::minmax(t[i], t[j]);
                    CHECK(covered.insert({pr.first, pr.second}).second);
                }
        }
        CHECK(static_cast<int>(covered.size()) == n * (n - 1) / 2);
    }
    CHECK_THROWS_MATCHES(steiner_triple_system(8), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::invalid_order; }));
}

TEST_CASE("sts incidence graph") {
    SteinerTripleSystem sts7 = steiner_triple_system(7);
    Graph g = sts_incidence(sts7);
    CHECK(g.n == 14);
    CHECK(g.m() == 21);
    CHECK(g.max_degree == 3);
    CHECK(testutil::is_bipartite(g));
    for (int x = 0; x < 7; ++x) CHECK(g.degree[x] == 3);
    for (int y = 7; y < 14; ++y) CHECK(g.degree[y] == 3);  // (n-1)/2 = 3

    SteinerTripleSystem sts9 = steiner_triple_system(9);
    Graph h = sts_incidence(sts9);
    CHECK(h.n == 21);
    CHECK(h.m() == 36);
    for (int y = 12; y < 21; ++y) CHECK(h.degree[y] == 4);

    // any two points lie in exactly one common triple
    for (const Graph& inc : {g, h}) {
        int s = inc.n - (inc.n == 14 ? 7 : 9);
        for (int y1 = s; y1 < inc.n; ++y1)
            for (int y2 = y1 + 1; y2 < inc.n; ++y2) {
                int common = 0;
                for (auto [x1, e1] : inc.adj[y1]) {
                    (void)e1;
                    for (auto [x2, e2] : inc.adj[y2]) {
                        (void)e2;
                        if (x1 == x2) ++common;
                    }
                }
                CHECK(common == 1);
            }
    }
}

TEST_CASE("petersen girth and chromatic index") {
    Graph g = petersen();
    CHECK(testutil::girth(g) == 5);
    CHECK_FALSE(testutil::proper_edge_colorable(g, 3));  // class 2: a snark
    CHECK(testutil::proper_edge_colorable(g, 4));
}

TEST_CASE("circulant generator") {
    Graph g = circulant(12, {1, 2, 3});
    CHECK(g.n == 12);
    CHECK(g.m() == 36);
    CHECK(g.max_degree == 6);
    CHECK(g.min_degree == 6);
}

TEST_CASE("random regular generator") {
    Graph g = random_regular(10, 3, 42);
    CHECK(g.n == 10);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree[v] == 3);
    CHECK_THROWS_MATCHES(random_regular(5, 3, 1), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::infeasible; }));
    CHECK(random_regular(10, 3, 42).edges == g.edges);  // seeded determinism
    CHECK(random_regular(10, 3, 43).edges != g.edges);
    Graph big = random_regular(24, 6, 7);
    for (int v = 0; v < big.n; ++v) CHECK(big.degree[v] == 6);
}

TEST_CASE("random even degree generator") {
    Graph g = random_even_degree(12, 20, 5);
    CHECK(g.m() == 20);
    for (int v = 0; v < g.n; ++v) CHECK(g.degree[v] % 2 == 0);
    CHECK(random_even_degree(12, 20, 5).edges == g.edges);
    CHECK_THROWS_AS(random_even_degree(12, 2, 5), Error);
}

TEST_CASE("random min degree generators") {
    Graph g = random_min_degree(20, 45, 3, 11);
    CHECK(g.m() == 45);
    CHECK(g.min_degree >= 3);
    CHECK(random_min_degree(20, 45, 3, 11).edges == g.edges);

    Graph h = random_min_degree(30, 120, 7, 3);
    CHECK(h.m() == 120);
    CHECK(h.min_degree >= 7);

    Graph b = random_bipartite_min_degree(8, 10, 45, 4, 9);
    CHECK(b.m() == 45);
    CHECK(b.min_degree >= 4);
    CHECK(testutil::is_bipartite(b));
    for (auto [u, v] : b.edges) CHECK(((u < 8) != (v < 8)));

    CHECK_THROWS_MATCHES(random_min_degree(10, 10, 4, 1), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::infeasible; }));
}
