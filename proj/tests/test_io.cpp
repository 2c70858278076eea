#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "majcolor/generators.hpp"
#include "majcolor/io.hpp"
#include "majcolor/report.hpp"
#include "test_helpers.hpp"

using namespace majcolor;

TEST_CASE("graph6 encodes the classics") {
    // K_4 in canonical graph6 is "C~"
    CHECK(encode_graph6(complete(4)) == "C~");
    CHECK(decode_graph6("C~") == complete(4));

    // 5-cycle: n=5, bits for edges 01,12,23,34,04
    Graph c5 = cycle(5);
    CHECK(decode_graph6(encode_graph6(c5)) == c5);

    // decode-then-encode is the identity on well-formed strings
    for (const char* s : {"D?{", "DQc", "C~", "Bw", "A_"}) {
        Graph g = decode_graph6(s);
        CHECK(encode_graph6(g) == s);
    }
}

TEST_CASE("graph6 round trip on a large seeded corpus") {
    std::mt19937_64 rng(123);
    int count = 0;
    for (int trial = 0; count < 1000; ++trial) {
        int n = 1 + static_cast<int>(rng() % 30);
        int maxm = n * (n - 1) / 2;
        int m = static_cast<int>(rng() % (maxm + 1));
        std::set<std::pair<int, int>> edges;
        while (static_cast<int>(edges.size()) < m) {
            int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
            if (u == v) continue;
            edges.emplace(std::min(u, v), std::max(u, v));
        }
        Graph g = build_graph({edges.begin(), edges.end()}, n);
        Graph back = decode_graph6(encode_graph6(g));
        CHECK(back == g);
        ++count;
    }
}

TEST_CASE("graph6 encodes orders above 62") {
    Graph big = cycle(100);
    std::string enc = encode_graph6(big);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(decode_graph6(enc) == big);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_MATCHES(decode_graph6("C"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::parse_error; }));
    CHECK_THROWS_MATCHES(decode_graph6("C~~~~"), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::parse_error; }));
    CHECK_THROWS_MATCHES(decode_graph6(std::string("C") + char(7)), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) { return e.code() == errc::parse_error; }));
}

TEST_CASE("edge list parsing") {
    Graph tri = parse_edgelist("0 1\n1 2\n2 0\n");
    CHECK(tri == build_graph({{0, 1}, {1, 2}, {0, 2}}, 3));

    // optional "n m" header: order can exceed the ids that appear
    Graph hdr = parse_edgelist("5 3\n0 1\n1 2\n2 0\n");
    CHECK(hdr.n == 5);
    CHECK(hdr.m() == 3);

    CHECK_THROWS_MATCHES(parse_edgelist("0 1\n0 x\n"), Error, Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == errc::parse_error &&
                                    std::string(e.what()).find("offset 4") != std::string::npos;
                         }));

    Graph round = parse_edgelist(emit_edgelist(petersen()));
    CHECK(round == petersen());
}

TEST_CASE("json graph envelope") {
    Graph g = petersen();
    nlohmann::json j = {{"graph", graph_to_json(g)}};
    CHECK(parse_graph(j.dump()) == g);
    CHECK(graph_from_json(graph_to_json(g)) == g);
    CHECK_THROWS_AS(parse_graph("{\"graph\": {\"n\": 2}}"), Error);
    CHECK_THROWS_AS(parse_graph("{nope"), Error);
}

TEST_CASE("format autodetection") {
    CHECK(parse_graph("C~") == complete(4));
    CHECK(parse_graph("0 1\n1 2\n2 0\n") == build_graph({{0, 1}, {1, 2}, {0, 2}}, 3));
    CHECK(parse_graph("{\"graph\":{\"n\":2,\"edges\":[[0,1]]}}") == build_graph({{0, 1}}, 2));
    CHECK(parse_graph(">>graph6<<C~") == complete(4));
}

TEST_CASE("coloring emit/parse round trips") {
    VertexColoring c({2, 0, 1});
    CHECK(emit_coloring_json(c) == "[2,0,1]");
    CHECK(parse_coloring_json(emit_coloring_json(c)) == c.colors);

    EdgeColoring e({1, 1, 0});
    std::string csv = emit_coloring_csv(e);
    CHECK(csv.rfind("id,color\n", 0) == 0);
    CHECK(parse_coloring_csv(csv) == e.colors);
}

TEST_CASE("run report serialization round trips") {
    RunReport r;
    r.graph = graph_hash(petersen());
    r.algorithm = "edge8";
    r.n = 10;
    r.m = 15;
    r.delta = 3;
    r.Delta = 3;
    r.palette = 4;
    r.bound = 8;
    r.ok = true;
    r.nodes = 42;
    r.ms = 1.5;
    r.seed = 7;
    r.status = "ok";
    RunReport back = RunReport::from_json(r.to_json());
    CHECK(back.graph == r.graph);
    CHECK(back.algorithm == r.algorithm);
    CHECK(back.palette == r.palette);
    CHECK(back.ok == r.ok);
    CHECK(back.seed == r.seed);

    CHECK(r.csv_row().find("edge8") != std::string::npos);
    CHECK(std::string(RunReport::csv_header()) == "graph,algorithm,n,m,delta,Delta,palette,bound,ok,nodes,ms,seed,status");
}

TEST_CASE("graph hash is stable and input sensitive") {
    CHECK(graph_hash(petersen()) == graph_hash(petersen()));
    CHECK(graph_hash(petersen()) != graph_hash(cycle(10)));
    CHECK(graph_hash(petersen()).size() == 16);
}
