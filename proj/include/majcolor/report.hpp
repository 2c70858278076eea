#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "majcolor/errors.hpp"

namespace majcolor {

/// One algorithm run over one graph, as reported by the CLI.
struct RunReport {
    std::string graph;  // FNV-1a hash of the canonical graph6 encoding
    std::string algorithm;
    int n = 0;
    int m = 0;
    int delta = 0;       // minimum degree
    int Delta = 0;       // maximum degree
    int palette = 0;
    int bound = 0;       // the theorem bound the palette is held against
    bool ok = false;
    uint64_t nodes = 0;  // search nodes, when a solver ran
    double ms = 0.0;
    uint64_t seed = 0;
    std::string status;  // "ok", "PROVEN", "BUDGET_EXCEEDED", ...

    static const char* csv_header() { return "graph,algorithm,n,m,delta,Delta,palette,bound,ok,nodes,ms,seed,status"; }

    std::string csv_row() const {
        std::string out;
        out += graph + "," + algorithm + "," + std::to_string(n) + "," + std::to_string(m) + ",";
        out += std::to_string(delta) + "," + std::to_string(Delta) + "," + std::to_string(palette) + ",";
        out += std::to_string(bound) + "," + (ok ? "true" : "false") + "," + std::to_string(nodes) + ",";
        char msbuf[32];
        std::snprintf(msbuf, sizeof msbuf, "%.3f", ms);
        out += std::string(msbuf) + "," + std::to_string(seed) + "," + status;
        return out;
    }

    nlohmann::json to_json() const {
        return {{"graph", graph}, {"algorithm", algorithm}, {"n", n},     {"m", m},
                {"delta", delta}, {"Delta", Delta},         {"palette", palette}, {"bound", bound},
                {"ok", ok},       {"nodes", nodes},         {"ms", ms},   {"seed", seed},
                {"status", status}};
    }

    static RunReport from_json(const nlohmann::json& j) {
        RunReport r;
        try {
            r.graph = j.at("graph").get<std::string>();
            r.algorithm = j.at("algorithm").get<std::string>();
            r.n = j.at("n").get<int>();
            r.m = j.at("m").get<int>();
            r.delta = j.at("delta").get<int>();
            r.Delta = j.at("Delta").get<int>();
            r.palette = j.at("palette").get<int>();
            r.bound = j.at("bound").get<int>();
            r.ok = j.at("ok").get<bool>();
            r.nodes = j.at("nodes").get<uint64_t>();
            r.ms = j.at("ms").get<double>();
            r.seed = j.at("seed").get<uint64_t>();
            r.status = j.at("status").get<std::string>();
        } catch (const nlohmann::json::exception& e) {
            throw Error(errc::parse_error, std::string("bad report json: ") + e.what());
        }
        return r;
    }
};

}  // namespace majcolor
