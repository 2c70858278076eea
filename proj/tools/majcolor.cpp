// majcolor: generate, color, check, and exactly solve strong majority
// coloring instances. Commands compose through a JSON envelope
// {graph, coloring?, meta} on stdin/stdout; graph6 serves as the corpus
// format.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "majcolor/balance.hpp"
#include "majcolor/construct_vertex.hpp"
#include "majcolor/edge_construct.hpp"
#include "majcolor/exact.hpp"
#include "majcolor/generators.hpp"
#include "majcolor/io.hpp"
#include "majcolor/report.hpp"
#include "majcolor/split.hpp"
#include "majcolor/verify.hpp"

using namespace majcolor;
using nlohmann::json;

namespace {

int exit_code_for(errc c) {
    switch (c) {
    case errc::parse_error:
    case errc::duplicate_edge:
    case errc::loop_edge:
    case errc::id_out_of_range:
        return 3;
    case errc::budget_exceeded:
        return 4;
    case errc::repair_failed:
        return 5;
    default:
        return 2;  // unmet hypothesis or precondition
    }
}

std::string slurp(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw Error(errc::parse_error, "cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Envelope {
    Graph graph;
    bool has_coloring = false;
    std::string mode;  // "vertex" or "edge"
    std::vector<int> colors;
    json meta = json::object();
};

Envelope read_envelope(const std::string& path) {
    std::string bytes = slurp(path);
    Envelope env;
    size_t first = bytes.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && bytes[first] == '{') {
        json j = json::parse(bytes, nullptr, false);
        if (j.is_discarded()) throw Error(errc::parse_error, "malformed json envelope at offset 0");
        env.graph = j.contains("graph") ? graph_from_json(j.at("graph")) : graph_from_json(j);
        if (j.contains("coloring")) {
            env.has_coloring = true;
            env.mode = j.at("coloring").value("mode", "vertex");
            for (const auto& v : j.at("coloring").at("colors")) env.colors.push_back(v.get<int>());
        }
        if (j.contains("meta")) env.meta = j.at("meta");
    } else {
        env.graph = parse_graph(bytes);
    }
    return env;
}

void write_envelope(const Envelope& env, const std::string& format) {
    if (format == "g6") {
        std::cout << encode_graph6(env.graph) << "\n";
        return;
    }
    if (format == "edgelist") {
        std::cout << emit_edgelist(env.graph);
        return;
    }
    json j;
    j["graph"] = graph_to_json(env.graph);
    if (env.has_coloring) j["coloring"] = {{"mode", env.mode}, {"colors", env.colors}};
    j["meta"] = env.meta;
    std::cout << j.dump() << "\n";
}

RunReport base_report(const Graph& g, const std::string& algorithm, uint64_t seed) {
    RunReport r;
    r.graph = graph_hash(g);
    r.algorithm = algorithm;
    r.n = g.n;
    r.m = g.m();
    r.delta = g.min_degree;
    r.Delta = g.max_degree;
    r.seed = seed;
    return r;
}

void require_cycle(const Graph& g) {
    if (g.n < 3 || g.m() != g.n || g.max_degree != 2 || g.min_degree != 2 ||
        connected_components(g).size() != 1)
        throw Error(errc::hypothesis_violated, "input graph is not a cycle");
}

void require_complete(const Graph& g) {
    if (g.n < 2 || g.m() != g.n * (g.n - 1) / 2)
        throw Error(errc::hypothesis_violated, "input graph is not complete");
}

/// Coloring algorithm dispatch; returns (mode, colors, theorem bound).
std::tuple<std::string, std::vector<int>, int> run_algorithm(const std::string& name, const Graph& g, uint64_t seed) {
    if (name == "cycle") {
        require_cycle(g);
        VertexColoring pattern = color_cycle_vertices(g.n);
        // transplant the pattern along the actual cycle order
        std::vector<int> order = detail::walk_cycle(g, 0);
        std::vector<int> cols(g.n);
        int cur = 0;
        for (int i = 0; i < g.n; ++i) {
            cols[cur] = pattern.colors[i];
            auto [a, b] = g.edges[order[i]];
            cur = (cur == a) ? b : a;
        }
        return {"vertex", cols, g.n % 4 == 0 ? 2 : 3};
    }
    if (name == "complete") {
        require_complete(g);
        return {"vertex", color_complete_vertices(g.n).colors, g.n == 4 ? 4 : 3};
    }
    if (name == "brooks2d1") return {"vertex", brooks_2delta1(g).colors, 2 * g.max_degree + 1};
    if (name == "lovasz2") return {"vertex", lovasz_two_color(g).colors, 2};
    if (name == "edge8") return {"edge", strong_edge_8(g).colors, 8};
    if (name == "euler") {
        EdgeColoring c = euler_edge_color(g);
        bool all_div3 = true;
        for (const auto& comp : connected_components(g)) {
            int edges = 0;
            for (int v : comp) edges += g.degree[v];
            if ((edges / 2) % 3 != 0) all_div3 = false;
        }
        return {"edge", c.colors, all_div3 ? 3 : 4};
    }
    if (name == "sixreg") return {"edge", color_6regular(g).colors, 3};
    if (name == "kn3") {
        require_complete(g);
        EdgeColoring canonical = complete_edge_3color(g.n);
        std::vector<int> cols(g.m());
        auto lex_id = [&](int u, int v) {
            if (u > v) std::swap(u, v);
            return u * (2 * g.n - u - 1) / 2 + (v - u - 1);
        };
        for (int e = 0; e < g.m(); ++e) cols[e] = canonical.colors[lex_id(g.edges[e].first, g.edges[e].second)];
        return {"edge", cols, 3};
    }
    if (name == "delta7") return {"edge", strong_edge_delta7(g, seed).colors, 4};
    if (name == "delta9") return {"edge", strong_edge_delta9(g, seed).colors, 3};
    if (name == "bip4") return {"edge", strong_edge_bipartite4(g, seed).colors, 4};
    if (name == "bip5") return {"edge", strong_edge_bipartite5(g, seed).colors, 3};
    throw Error(errc::unknown_algorithm, name);
}

RunReport color_report(const Graph& g, const std::string& algorithm, uint64_t seed,
                       std::string& mode_out, std::vector<int>& colors_out) {
    auto t0 = std::chrono::steady_clock::now();
    auto [mode, colors, bound] = run_algorithm(algorithm, g, seed);
    RunReport rep = base_report(g, algorithm, seed);
    rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rep.bound = bound;
    if (mode == "vertex") {
        VertexColoring c(colors);
        rep.palette = c.palette;
        rep.ok = algorithm == "lovasz2" ? check_majority_vertex(g, c).ok
                                        : (g.n == 0 || check_strong_majority_vertex(g, c).ok);
    } else {
        EdgeColoring c(colors);
        rep.palette = c.palette;
        rep.ok = g.m() == 0 || check_strong_majority_edge(g, c).ok;
    }
    rep.status = rep.ok ? "ok" : "audit_failed";
    mode_out = mode;
    colors_out = std::move(colors);
    return rep;
}

SearchBudget budget_from(int64_t ms_flag, uint64_t nodes_flag) {
    SearchBudget b;
    if (const char* env = std::getenv("MAJCOLOR_BUDGET_MS")) b.time_limit_ms = std::atoll(env);
    if (ms_flag > 0) b.time_limit_ms = ms_flag;
    if (nodes_flag > 0) b.node_limit = nodes_flag;
    return b;
}

Graph dispatch_gen(const std::string& family, const std::vector<int64_t>& a, uint64_t seed) {
    auto want = [&](size_t k) {
        if (a.size() != k)
            throw Error(errc::invalid_argument, family + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (family == "cycle") {
        want(1);
        return cycle(static_cast<int>(a[0]));
    }
    if (family == "complete") {
        want(1);
        return complete(static_cast<int>(a[0]));
    }
    if (family == "khat") {
        want(1);
        return subdivided_complete(static_cast<int>(a[0]));
    }
    if (family == "ktilde") {
        want(1);
        return diamond_complete(static_cast<int>(a[0]));
    }
    if (family == "witness") {
        want(2);
        return bipartite_witness(static_cast<int>(a[0]), static_cast<int>(a[1]));
    }
    if (family == "sts" || family == "sts-incidence") {
        want(1);
        return sts_incidence(steiner_triple_system(static_cast<int>(a[0])));
    }
    if (family == "petersen") {
        want(0);
        return petersen();
    }
    if (family == "random-regular") {
        want(2);
        return random_regular(static_cast<int>(a[0]), static_cast<int>(a[1]), seed);
    }
    if (family == "random-even") {
        want(2);
        return random_even_degree(static_cast<int>(a[0]), static_cast<int>(a[1]), seed);
    }
    if (family == "random-mindeg") {
        want(3);
        return random_min_degree(static_cast<int>(a[0]), static_cast<int>(a[1]), static_cast<int>(a[2]), seed);
    }
    if (family == "random-bip") {
        want(4);
        return random_bipartite_min_degree(static_cast<int>(a[0]), static_cast<int>(a[1]),
                                           static_cast<int>(a[2]), static_cast<int>(a[3]), seed);
    }
    throw Error(errc::unknown_algorithm, "unknown generator " + family);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"strong majority colorings: constructions, checkers, exact search"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "generate a graph from a named family");
    std::string gen_family;
    std::vector<int64_t> gen_params;
    uint64_t gen_seed = 0;
    std::string gen_format = "json";
    gen->add_option("family", gen_family)->required();
    gen->add_option("params", gen_params);
    gen->add_option("--seed", gen_seed);
    gen->add_option("--format", gen_format)->check(CLI::IsMember({"json", "g6", "edgelist"}));

    auto* transform = app.add_subcommand("transform", "rewrite the piped graph");
    std::string tr_op, tr_in = "-";
    transform->add_option("op", tr_op)->required()->check(CLI::IsMember({"subdivide", "line"}));
    transform->add_option("--in", tr_in);

    auto* color = app.add_subcommand("color", "run a coloring algorithm and audit it");
    std::string col_algorithm, col_in = "-", col_emit;
    uint64_t col_seed = 0;
    color->add_option("algorithm", col_algorithm)->required();
    color->add_option("--in", col_in);
    color->add_option("--seed", col_seed);
    color->add_option("--emit", col_emit)->check(CLI::IsMember({"json", "csv"}));

    auto* check = app.add_subcommand("check", "verify a coloring against a majority condition");
    std::string chk_mode = "auto", chk_in = "-";
    check->add_option("--mode", chk_mode)
        ->check(CLI::IsMember({"auto", "vertex", "edge", "vertex-weak", "proper-vertex", "proper-edge"}));
    check->add_option("--in", chk_in);

    auto* exact = app.add_subcommand("exact", "exact strong majority number / index");
    std::string ex_mode, ex_in = "-";
    int ex_k = 0;
    int64_t ex_budget_ms = 0;
    uint64_t ex_budget_nodes = 0;
    exact->add_option("--mode", ex_mode)->required()->check(CLI::IsMember({"vertex", "edge"}));
    exact->add_option("--k", ex_k);
    exact->add_option("--budget-ms", ex_budget_ms);
    exact->add_option("--budget-nodes", ex_budget_nodes);
    exact->add_option("--in", ex_in);

    auto* disc = app.add_subcommand("discrepancy", "evaluate or search balanced edge colorings");
    int disc_k = 0;
    bool disc_search = false;
    uint64_t disc_seed = 0;
    std::string disc_in = "-";
    disc->add_option("--k", disc_k)->required();
    disc->add_flag("--search", disc_search);
    disc->add_option("--seed", disc_seed);
    disc->add_option("--in", disc_in);

    auto* bench = app.add_subcommand("bench", "stream RunReport CSV over a corpus directory");
    std::string bench_dir;
    std::vector<std::string> bench_algorithms;
    uint64_t bench_seed = 0;
    int bench_jobs = 4;
    bench->add_option("dir", bench_dir)->required();
    bench->add_option("--algorithm", bench_algorithms)->required();
    bench->add_option("--seed", bench_seed);
    bench->add_option("--jobs", bench_jobs)->check(CLI::PositiveNumber);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Envelope env;
            env.graph = dispatch_gen(gen_family, gen_params, gen_seed);
            env.meta = {{"family", gen_family}, {"params", gen_params}, {"seed", gen_seed}};
            write_envelope(env, gen_format);
            return 0;
        }

        if (*transform) {
            Envelope env = read_envelope(tr_in);
            Envelope out;
            out.graph = tr_op == "subdivide" ? subdivide(env.graph) : line_graph(env.graph).graph;
            out.meta = {{"transform", tr_op}};
            write_envelope(out, "json");
            return 0;
        }

        if (*color) {
            Envelope env = read_envelope(col_in);
            std::string mode;
            std::vector<int> colors;
            RunReport rep = color_report(env.graph, col_algorithm, col_seed, mode, colors);
            if (!col_emit.empty()) {
                if (mode == "vertex") {
                    VertexColoring c(colors);
                    std::cout << (col_emit == "json" ? emit_coloring_json(c) + "\n" : emit_coloring_csv(c));
                } else {
                    EdgeColoring c(colors);
                    std::cout << (col_emit == "json" ? emit_coloring_json(c) + "\n" : emit_coloring_csv(c));
                }
            } else {
                Envelope out;
                out.graph = env.graph;
                out.has_coloring = true;
                out.mode = mode;
                out.colors = std::move(colors);
                out.meta = {{"report", rep.to_json()}};
                write_envelope(out, "json");
            }
            return rep.ok ? 0 : 5;
        }

        if (*check) {
            Envelope env = read_envelope(chk_in);
            if (!env.has_coloring) throw Error(errc::parse_error, "input envelope has no coloring");
            std::string mode = chk_mode == "auto" ? env.mode : chk_mode;
            json out;
            bool ok;
            if (mode == "proper-vertex") {
                ok = check_proper_vertex(env.graph, VertexColoring(env.colors));
                out = {{"ok", ok}};
            } else if (mode == "proper-edge") {
                ok = check_proper_edge(env.graph, EdgeColoring(env.colors));
                out = {{"ok", ok}};
            } else {
                Verdict v;
                if (mode == "vertex")
                    v = check_strong_majority_vertex(env.graph, VertexColoring(env.colors));
                else if (mode == "vertex-weak")
                    v = check_majority_vertex(env.graph, VertexColoring(env.colors));
                else if (mode == "edge")
                    v = check_strong_majority_edge(env.graph, EdgeColoring(env.colors));
                else
                    throw Error(errc::invalid_argument, "cannot infer check mode");
                ok = v.ok;
                json wit = json::array();
                for (const Witness& w : v.witnesses)
                    wit.push_back({{"site", w.site}, {"color", w.color}, {"count", w.offending_count}, {"threshold", w.threshold}});
                out = {{"ok", ok}, {"witnesses", wit}};
            }
            std::cout << out.dump() << "\n";
            return ok ? 0 : 1;
        }

        if (*exact) {
            Envelope env = read_envelope(ex_in);
            SearchBudget budget = budget_from(ex_budget_ms, ex_budget_nodes);
            auto t0 = std::chrono::steady_clock::now();
            Envelope out;
            out.graph = env.graph;
            RunReport rep = base_report(env.graph, "exact-" + ex_mode, 0);
            int code = 0;
            if (ex_k > 0) {
                DecideResult d = ex_mode == "vertex" ? decide_vertex_k(env.graph, ex_k, budget)
                                                     : decide_edge_k(env.graph, ex_k, budget);
                rep.nodes = d.nodes;
                rep.status = d.status == DecideStatus::sat     ? "SAT"
                             : d.status == DecideStatus::unsat ? "UNSAT"
                                                               : "BUDGET_EXCEEDED";
                rep.ok = d.status != DecideStatus::budget_exceeded;
                rep.bound = ex_k;
                if (d.status == DecideStatus::sat) {
                    out.has_coloring = true;
                    out.mode = ex_mode;
                    out.colors = d.coloring;
                    rep.palette = ex_mode == "vertex" ? VertexColoring(d.coloring).palette
                                                      : EdgeColoring(d.coloring).palette;
                }
                if (d.status == DecideStatus::budget_exceeded) code = 4;
            } else {
                ExactResult r = ex_mode == "vertex" ? exact_maj_vertex(env.graph, budget)
                                                    : exact_maj_edge(env.graph, budget);
                rep.status = r.status == SolveStatus::proven ? "PROVEN" : "BUDGET_EXCEEDED";
                rep.ok = r.status == SolveStatus::proven;
                rep.palette = r.value;
                rep.bound = r.value;
                json trace = json::array();
                for (const LevelTrace& t : r.lower_bound_trace) {
                    trace.push_back({{"k", t.k}, {"nodes", t.nodes}, {"by_clique", t.by_clique}, {"ms", t.ms}});
                    rep.nodes += t.nodes;
                }
                if (r.status == SolveStatus::proven) {
                    out.has_coloring = true;
                    out.mode = ex_mode;
                    out.colors = r.certificate;
                } else {
                    code = 4;
                }
                out.meta["value"] = r.value;
                out.meta["lower_bound_trace"] = trace;
            }
            rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
            out.meta["report"] = rep.to_json();
            write_envelope(out, "json");
            return code;
        }

        if (*disc) {
            Envelope env = read_envelope(disc_in);
            Envelope out;
            out.graph = env.graph;
            if (disc_search) {
                auto t0 = std::chrono::steady_clock::now();
                EdgeColoring c = balanced_edge_color(env.graph, disc_k, disc_seed);
                DiscrepancyReport r = discrepancy(env.graph, c, disc_k);
                RunReport rep = base_report(env.graph, "balance", disc_seed);
                rep.palette = c.palette;
                rep.bound = is_bipartite(env.graph) ? 1 : 2;
                rep.ok = r.value <= rep.bound;
                rep.status = "ok";
                rep.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                out.has_coloring = true;
                out.mode = "edge";
                out.colors = c.colors;
                out.meta = {{"discrepancy", r.value}, {"report", rep.to_json()}};
            } else {
                if (!env.has_coloring || env.mode != "edge")
                    throw Error(errc::parse_error, "need an edge coloring in the envelope (or --search)");
                DiscrepancyReport r = discrepancy(env.graph, EdgeColoring(env.colors), disc_k);
                out.has_coloring = true;
                out.mode = "edge";
                out.colors = env.colors;
                out.meta = {{"discrepancy", r.value}};
            }
            write_envelope(out, "json");
            return 0;
        }

        if (*bench) {
            std::vector<Graph> graphs;
            std::vector<std::filesystem::path> files;
            for (const auto& entry : std::filesystem::directory_iterator(bench_dir))
                if (entry.is_regular_file() && entry.path().extension() == ".g6") files.push_back(entry.path());
            std::sort(files.begin(), files.end());
            for (const auto& path : files) {
                std::ifstream f(path);
                std::string line;
                while (std::getline(f, line)) {
                    if (line.empty()) continue;
                    graphs.push_back(decode_graph6(line));
                }
            }
            std::cout << RunReport::csv_header() << "\n";
            auto run_one = [&](size_t idx) {
                std::vector<std::string> rows;
                for (const std::string& alg : bench_algorithms) {
                    std::string mode;
                    std::vector<int> colors;
                    try {
                        RunReport rep = color_report(graphs[idx], alg, bench_seed, mode, colors);
                        rows.push_back(rep.csv_row());
                    } catch (const Error& e) {
                        RunReport rep = base_report(graphs[idx], alg, bench_seed);
                        rep.status = errc_name(e.code());
                        rows.push_back(rep.csv_row());
                    }
                }
                return rows;
            };
            for (size_t base = 0; base < graphs.size(); base += static_cast<size_t>(bench_jobs)) {
                size_t end = std::min(graphs.size(), base + static_cast<size_t>(bench_jobs));
                std::vector<std::future<std::vector<std::string>>> batch;
                for (size_t i = base; i < end; ++i)
                    batch.push_back(std::async(std::launch::async, run_one, i));
                for (auto& fut : batch)
                    for (const std::string& row : fut.get()) std::cout << row << "\n";
            }
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}, {"code", errc_name(e.code())}}.dump() << "\n";
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}}.dump() << "\n";
        return 5;
    }
    return 0;
}
