#pragma once

#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "majcolor/coloring.hpp"
#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"

namespace majcolor {

enum class GraphFormat { graph6, edgelist, json, autodetect };

// ---------------------------------------------------------------- graph6 --

inline std::string encode_graph6(const Graph& g) {
    std::string out;
    auto push6 = [&](int value) { out.push_back(static_cast<char>(value + 63)); };
    if (g.n <= 62) {
        push6(g.n);
    } else if (g.n <= 258047) {
        out.push_back(126);
        push6((g.n >> 12) & 63);
        push6((g.n >> 6) & 63);
        push6(g.n & 63);
    } else {
        throw Error(errc::size_cap_exceeded, "graph too large for this encoder");
    }
    std::vector<char> bits;
    bits.reserve(static_cast<size_t>(g.n) * (g.n - 1) / 2);
    std::vector<std::vector<char>> adj(g.n, std::vector<char>(g.n, 0));
    for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(adj[i][j]);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int word = 0;
        for (int b = 0; b < 6; ++b) word = (word << 1) | bits[i + b];
        push6(word);
    }
    return out;
}

inline Graph decode_graph6(const std::string& in) {
    size_t pos = 0;
    std::string s = in;
    if (s.rfind(">>graph6<<", 0) == 0) {
        s = s.substr(10);
    }
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    auto need = [&](size_t count) {
        if (pos + count > s.size())
            throw Error(errc::parse_error, "graph6 truncated at offset " + std::to_string(s.size()));
    };
    auto get6 = [&]() {
        need(1);
        unsigned char c = static_cast<unsigned char>(s[pos]);
        if (c < 63 || c > 126)
            throw Error(errc::parse_error, "invalid graph6 byte at offset " + std::to_string(pos));
        ++pos;
        return static_cast<int>(c - 63);
    };
    int64_t n;
    int first = get6();
    if (first != 63) {
        n = first;
    } else {
        int a = get6();
        if (a == 63) throw Error(errc::parse_error, "graph6 order too large at offset " + std::to_string(pos));
        int b = get6(), c = get6();
        n = (static_cast<int64_t>(a) << 12) | (b << 6) | c;
    }
    int64_t nbits = n * (n - 1) / 2;
    int64_t nbytes = (nbits + 5) / 6;
    std::vector<char> bits;
    bits.reserve(nbytes * 6);
    for (int64_t i = 0; i < nbytes; ++i) {
        int word = get6();
        for (int b = 5; b >= 0; --b) bits.push_back((word >> b) & 1);
    }
    if (pos != s.size())
        throw Error(errc::parse_error, "trailing bytes at offset " + std::to_string(pos));
    std::vector<std::pair<int, int>> edges;
    int64_t at = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++at)
            if (bits[at]) edges.emplace_back(i, j);
    for (int64_t i = nbits; i < nbytes * 6; ++i)
        if (bits[i]) throw Error(errc::parse_error, "nonzero padding at offset " + std::to_string(pos - 1));
    return build_graph(std::move(edges), static_cast<int>(n));
}

// -------------------------------------------------------------- edgelist --

/// One "u v" pair per ASCII line; an optional first line "n m" giving the
/// order and size (recognized when m matches the number of remaining lines).
inline Graph parse_edgelist(const std::string& in) {
    struct Row {
        long long a, b;
        size_t offset;
    };
    std::vector<Row> rows;
    size_t line_start = 0;
    while (line_start < in.size()) {
        size_t line_end = in.find('\n', line_start);
        if (line_end == std::string::npos) line_end = in.size();
        std::string line = in.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (!blank && line[line.find_first_not_of(" \t")] != '#') {
            std::istringstream ss(line);
            long long a, b;
            std::string rest;
            if (!(ss >> a >> b) || (ss >> rest))
                throw Error(errc::parse_error, "bad edge line at offset " + std::to_string(line_start));
            rows.push_back({a, b, line_start});
        }
        line_start = line_end + 1;
    }
    if (rows.empty()) return build_graph({}, 0);

    bool header = false;
    if (rows[0].a >= 0 && rows[0].b == static_cast<long long>(rows.size()) - 1) {
        header = true;
        for (size_t i = 1; i < rows.size(); ++i)
            if (rows[i].a >= rows[0].a || rows[i].b >= rows[0].a) header = false;
    }
    std::vector<std::pair<int, int>> edges;
    int n = 0;
    for (size_t i = header ? 1 : 0; i < rows.size(); ++i) {
        if (rows[i].a < 0 || rows[i].b < 0 || rows[i].a > 1000000000 || rows[i].b > 1000000000)
            throw Error(errc::parse_error, "vertex id out of range at offset " + std::to_string(rows[i].offset));
        edges.emplace_back(static_cast<int>(rows[i].a), static_cast<int>(rows[i].b));
        n = std::max({n, static_cast<int>(rows[i].a) + 1, static_cast<int>(rows[i].b) + 1});
    }
    if (header) n = static_cast<int>(rows[0].a);
    return build_graph(std::move(edges), n);
}

inline std::string emit_edgelist(const Graph& g) {
    std::string out = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// ------------------------------------------------------------------ json --

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : g.edges) edges.push_back({u, v});
    return {{"n", g.n}, {"edges", edges}};
}

inline Graph graph_from_json(const nlohmann::json& j) {
    try {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
        return build_graph(std::move(edges), n);
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, std::string("bad graph json: ") + e.what());
    }
}

inline Graph parse_graph(const std::string& bytes, GraphFormat format = GraphFormat::autodetect) {
    if (format == GraphFormat::autodetect) {
        size_t first = bytes.find_first_not_of(" \t\r\n");
        if (first == std::string::npos) throw Error(errc::parse_error, "empty input at offset 0");
        if (bytes[first] == '{')
            format = GraphFormat::json;
        else {
            size_t eol = bytes.find('\n', first);
            std::string head = bytes.substr(first, eol == std::string::npos ? std::string::npos : eol - first);
            format = head.find(' ') != std::string::npos || bytes.rfind(">>graph6<<", 0) == 0
                         ? (bytes[first] == '>' ? GraphFormat::graph6 : GraphFormat::edgelist)
                         : GraphFormat::graph6;
        }
    }
    switch (format) {
    case GraphFormat::graph6: {
        std::string line = bytes;
        while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
        return decode_graph6(line);
    }
    case GraphFormat::edgelist:
        return parse_edgelist(bytes);
    case GraphFormat::json: {
        nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
        if (j.is_discarded()) throw Error(errc::parse_error, "malformed json at offset 0");
        if (j.contains("graph")) return graph_from_json(j.at("graph"));
        return graph_from_json(j);
    }
    default:
        throw Error(errc::parse_error, "unknown graph format");
    }
}

// ------------------------------------------------------------- colorings --

template <typename ColoringT>
inline std::string emit_coloring_json(const ColoringT& c) {
    return nlohmann::json(c.colors).dump();
}

template <typename ColoringT>
inline std::string emit_coloring_csv(const ColoringT& c) {
    std::string out = "id,color\n";
    for (size_t i = 0; i < c.colors.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(c.colors[i]) + "\n";
    return out;
}

inline std::vector<int> parse_coloring_json(const std::string& bytes) {
    nlohmann::json j = nlohmann::json::parse(bytes, nullptr, false);
    if (j.is_discarded() || !j.is_array())
        throw Error(errc::parse_error, "coloring must be a json array");
    std::vector<int> out;
    for (const auto& v : j) out.push_back(v.get<int>());
    return out;
}

inline std::vector<int> parse_coloring_csv(const std::string& bytes) {
    std::vector<int> out;
    size_t line_start = 0;
    bool first = true;
    while (line_start < bytes.size()) {
        size_t line_end = bytes.find('\n', line_start);
        if (line_end == std::string::npos) line_end = bytes.size();
        std::string line = bytes.substr(line_start, line_end - line_start);
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) {
            if (first) {
                if (line != "id,color")
                    throw Error(errc::parse_error, "expected id,color header at offset " + std::to_string(line_start));
                first = false;
            } else {
                size_t comma = line.find(',');
                if (comma == std::string::npos)
                    throw Error(errc::parse_error, "bad csv row at offset " + std::to_string(line_start));
                size_t id = std::stoul(line.substr(0, comma));
                int color = std::stoi(line.substr(comma + 1));
                if (id != out.size())
                    throw Error(errc::parse_error, "csv rows out of order at offset " + std::to_string(line_start));
                out.push_back(color);
            }
        }
        line_start = line_end + 1;
    }
    return out;
}

/// 64-bit FNV-1a over the canonical graph6 encoding; stable across runs.
inline std::string graph_hash(const Graph& g) {
    uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : encode_graph6(g)) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace majcolor
