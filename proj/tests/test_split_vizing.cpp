#include <catch2/catch_amalgamated.hpp>

#include "majcolor/generators.hpp"
#include "majcolor/split.hpp"
#include "majcolor/vizing.hpp"
#include "test_helpers.hpp"

using namespace majcolor;

namespace {

void check_split_invariants(const Graph& g, const SplitResult& r) {
    const Graph& s = r.split_graph;
    CHECK(s.m() == g.m());
    CHECK(s.max_degree <= 3);

    // edge_map is a bijection preserving original endpoints
    std::vector<char> hit(s.m(), 0);
    for (int e = 0; e < g.m(); ++e) {
        int se = r.edge_map[e];
        REQUIRE((se >= 0 && se < s.m()));
        CHECK(!hit[se]);
        hit[se] = 1;
        auto [su, sv] = s.edges[se];
        auto [u, v] = g.edges[e];
        std::pair<int, int> orig{std::min(r.origin[su], r.origin[sv]), std::max(r.origin[su], r.origin[sv])};
        CHECK(orig == std::pair<int, int>(u, v));
    }

    for (int v = 0; v < g.n; ++v) {
        if (g.degree[v] <= 3) continue;
        int twos = 0;
        size_t total = 0;
        for (const auto& grp : r.groups[v]) {
            CHECK((grp.size() == 2 || grp.size() == 3));
            if (grp.size() == 2) ++twos;
            total += grp.size();
        }
        CHECK(twos <= 2);
        CHECK(total == static_cast<size_t>(g.degree[v]));
    }

    // split copies have degree 2 or 3; untouched vertices keep their degree
    for (int sv = 0; sv < s.n; ++sv) {
        int ov = r.origin[sv];
        if (g.degree[ov] > 3)
            CHECK((s.degree[sv] == 2 || s.degree[sv] == 3));
    }
}

}  // namespace

TEST_CASE("splitting is the identity on subcubic graphs") {
    Graph g = petersen();
    SplitResult r = split_vertices(g);
    CHECK(r.split_graph == g);
    for (int e = 0; e < g.m(); ++e) CHECK(r.edge_map[e] == e);
}

TEST_CASE("group sizes follow the residue of the degree") {
    auto sizes_of = [](const SplitResult& r, int v) {
        std::vector<int> s;
        for (const auto& grp : r.groups[v]) s.push_back(static_cast<int>(grp.size()));
        std::sort(s.begin(), s.end());
        return s;
    };
    SplitResult s7 = split_vertices(testutil::star_graph(7));
    CHECK(sizes_of(s7, 0) == std::vector<int>{2, 2, 3});
    SplitResult s6 = split_vertices(testutil::star_graph(6));
    CHECK(sizes_of(s6, 0) == std::vector<int>{3, 3});
    SplitResult s4 = split_vertices(testutil::star_graph(4));
    CHECK(sizes_of(s4, 0) == std::vector<int>{2, 2});
    SplitResult s5 = split_vertices(testutil::star_graph(5));
    CHECK(sizes_of(s5, 0) == std::vector<int>{2, 3});
}

TEST_CASE("split invariants hold across a corpus") {
    std::vector<Graph> corpus = {complete(6), complete(9), subdivided_complete(5), diamond_complete(4),
                                 sts_incidence(steiner_triple_system(9)), random_min_degree(20, 60, 3, 4),
                                 random_regular(12, 6, 9), testutil::star_graph(9)};
    for (const Graph& g : corpus) {
        SplitResult r = split_vertices(g);
        check_split_invariants(g, r);
    }
    CHECK_THROWS_MATCHES(split_vertices(testutil::path_graph(4)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::not_admissible; }));
}

TEST_CASE("misra-gries is proper within maxdeg+1 colors") {
    std::vector<Graph> corpus = {petersen(), complete(4), complete(5), complete(7), cycle(9),
                                 testutil::star_graph(6), subdivided_complete(4),
                                 random_min_degree(16, 40, 2, 31), random_regular(10, 4, 3)};
    for (const Graph& g : corpus) {
        EdgeColoring c = misra_gries_edge_color(g);
        CHECK(check_proper_edge(g, c));
        CHECK(c.palette <= g.max_degree + 1);
        for (int col : c.colors) CHECK((col >= 0 && col <= g.max_degree));
    }
}

TEST_CASE("subcubic proper coloring") {
    // a hand 3-coloring of K_4 is accepted by the properness checker
    CHECK(check_proper_edge(complete(4), EdgeColoring({0, 1, 2, 2, 1, 0})));

    EdgeColoring k4 = proper_edge_color_subcubic(complete(4));
    CHECK(check_proper_edge(complete(4), k4));
    CHECK(k4.palette <= 4);

    EdgeColoring p = proper_edge_color_subcubic(petersen());
    CHECK(check_proper_edge(petersen(), p));
    CHECK(p.palette == 4);  // the Petersen graph is class 2

    EdgeColoring c5 = proper_edge_color_subcubic(cycle(5));
    CHECK(check_proper_edge(cycle(5), c5));
    CHECK(c5.palette <= 3);

    CHECK_THROWS_MATCHES(proper_edge_color_subcubic(complete(5)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::degree_too_high; }));
}
