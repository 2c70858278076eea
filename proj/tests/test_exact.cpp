#include <catch2/catch_amalgamated.hpp>

#include "majcolor/exact.hpp"
#include "majcolor/generators.hpp"
#include "majcolor/verify.hpp"
#include "test_helpers.hpp"

using namespace majcolor;

namespace {

// independent oracle: enumerate all colorings with at most k colors
bool brute_vertex_sat(const Graph& g, int k) {
    std::vector<int> cols(g.n, 0);
    while (true) {
        if (check_strong_majority_vertex(g, VertexColoring(cols)).ok) return true;
        int i = 0;
        while (i < g.n && cols[i] == k - 1) cols[i++] = 0;
        if (i == g.n) return false;
        ++cols[i];
    }
}

int brute_maj_vertex(const Graph& g) {
    for (int k = 1; k <= g.n; ++k)
        if (brute_vertex_sat(g, k)) return k;
    return g.n;
}

bool brute_edge_sat(const Graph& g, int k) {
    std::vector<int> cols(g.m(), 0);
    while (true) {
        if (check_strong_majority_edge(g, EdgeColoring(cols)).ok) return true;
        int i = 0;
        while (i < g.m() && cols[i] == k - 1) cols[i++] = 0;
        if (i == g.m()) return false;
        ++cols[i];
    }
}

}  // namespace

TEST_CASE("decide_vertex_k on paper cycle and clique values") {
    CHECK(decide_vertex_k(cycle(5), 2).status == DecideStatus::unsat);
    CHECK(decide_vertex_k(cycle(8), 2).status == DecideStatus::sat);
    CHECK(decide_vertex_k(complete(4), 3).status == DecideStatus::unsat);
    CHECK(decide_vertex_k(complete(4), 4).status == DecideStatus::sat);
}

TEST_CASE("exact strong majority numbers from the paper") {
    CHECK(exact_maj_vertex(complete(5)).value == 3);
    CHECK(exact_maj_vertex(subdivided_complete(4)).value == 4);

    ExactResult sts = exact_maj_vertex(sts_incidence(steiner_triple_system(7)));
    CHECK(sts.value == 7);
    CHECK(sts.status == SolveStatus::proven);
    CHECK(check_strong_majority_vertex(sts_incidence(steiner_triple_system(7)), VertexColoring(sts.certificate)).ok);
}

TEST_CASE("STS(7) incidence refutes 6 colors via forced distinctness") {
    Graph g = sts_incidence(steiner_triple_system(7));
    DecideResult d = decide_vertex_k(g, 6);
    CHECK(d.status == DecideStatus::unsat);
    CHECK(d.refuted_by_clique);  // the 7 points are pairwise distinct
}

TEST_CASE("exact matches brute force on small graphs") {
    std::vector<Graph> corpus = {cycle(5), cycle(6), cycle(7), cycle(8), complete(4),
                                 complete(5), bipartite_witness(3, 2), subdivided_complete(3)};
    for (const Graph& g : corpus) {
        ExactResult r = exact_maj_vertex(g);
        REQUIRE(r.status == SolveStatus::proven);
        CHECK(r.value == brute_maj_vertex(g));
        VertexColoring cert(r.certificate);
        CHECK(check_strong_majority_vertex(g, cert).ok);
        CHECK(cert.palette == r.value);
        CHECK(decide_vertex_k(g, r.value - 1).status == DecideStatus::unsat);
        CHECK(decide_vertex_k(g, r.value + 1).status == DecideStatus::sat);  // monotone

        CHECK(r.lower_bound_trace.size() == static_cast<size_t>(r.value - 2));  // one refuted level per k
        for (const LevelTrace& t : r.lower_bound_trace) CHECK(t.k < r.value);
    }
}

TEST_CASE("exact edge values on cycles follow the 4-periodicity") {
    for (int n = 3; n <= 12; ++n) {
        ExactResult r = exact_maj_edge(cycle(n));
        REQUIRE(r.status == SolveStatus::proven);
        CHECK(r.value == (n % 4 == 0 ? 2 : 3));
        CHECK(check_strong_majority_edge(cycle(n), EdgeColoring(r.certificate)).ok);
    }
}

TEST_CASE("exact edge handles the vacuous single edge") {
    ExactResult r = exact_maj_edge(build_graph({{0, 1}}, 2));
    CHECK(r.value == 1);
    CHECK(r.certificate == std::vector<int>{0});
}

TEST_CASE("edge oracle agrees with vertex oracle on the line graph") {
    std::vector<Graph> corpus = {cycle(5), cycle(7), cycle(8), complete(4), testutil::star_graph(4),
                                 testutil::star_graph(5), random_min_degree(7, 11, 2, 21)};
    for (const Graph& g : corpus) {
        auto [lg, map] = line_graph(g);
        (void)map;
        if (!is_vertex_admissible(lg) || !is_edge_admissible(g)) continue;
        ExactResult via_line = exact_maj_vertex(lg);
        ExactResult direct = exact_maj_edge(g);
        REQUIRE(via_line.status == SolveStatus::proven);
        REQUIRE(direct.status == SolveStatus::proven);
        CHECK(via_line.value == direct.value);
    }
}

TEST_CASE("edge oracle agrees with brute force on tiny graphs") {
    for (const Graph& g : {cycle(5), cycle(6), complete(4), testutil::star_graph(3)}) {
        ExactResult r = exact_maj_edge(g);
        int brute = 1;
        while (!brute_edge_sat(g, brute)) ++brute;
        CHECK(r.value == brute);
    }
}

TEST_CASE("diamond complete graph needs n colors") {
    // every diamond forces its two branch endpoints apart
    ExactResult r = exact_maj_vertex(diamond_complete(3));
    CHECK(r.value == 3);
    DecideResult d = decide_vertex_k(diamond_complete(4), 3);
    CHECK(d.status == DecideStatus::unsat);
    CHECK(d.refuted_by_clique);
}

TEST_CASE("budget exhaustion is reported, never fabricated") {
    SearchBudget tiny;
    tiny.node_limit = 1;
    DecideResult d = decide_vertex_k(complete(6), 3, tiny);
    CHECK(d.status == DecideStatus::budget_exceeded);

    ExactResult r = exact_maj_vertex(complete(6), tiny);
    CHECK(r.status == SolveStatus::budget_exceeded);
}

TEST_CASE("exact oracles reject inadmissible inputs") {
    CHECK_THROWS_MATCHES(exact_maj_vertex(testutil::path_graph(3)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::not_admissible; }));
    CHECK_THROWS_MATCHES(exact_maj_edge(testutil::path_graph(4)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::not_admissible; }));
    CHECK_THROWS_AS(exact_maj_edge(build_graph({}, 3)), Error);
}
