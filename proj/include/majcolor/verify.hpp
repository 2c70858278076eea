#pragma once

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "majcolor/coloring.hpp"
#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"

namespace majcolor {

/// One violated majority condition: at `site` (vertex or edge id), `color`
/// appears `offending_count` times among the adjacent sites, above `threshold`.
struct Witness {
    int site = 0;
    int color = 0;
    int offending_count = 0;
    int threshold = 0;

    bool operator==(const Witness& o) const {
        return site == o.site && color == o.color && offending_count == o.offending_count &&
               threshold == o.threshold;
    }
};

struct Verdict {
    bool ok = true;
    std::vector<Witness> witnesses;
};

namespace detail {

inline void require_total(const std::vector<int>& colors, size_t expected, const char* what) {
    if (colors.size() != expected) throw Error(errc::partial_coloring, std::string(what) + ": wrong length");
    for (int c : colors)
        if (c < 0) throw Error(errc::partial_coloring, std::string(what) + ": negative color");
}

}  // namespace detail

/// Strong majority for vertices: every color fills at most half of every
/// neighborhood. Defined only for graphs without pendant vertices.
inline Verdict check_strong_majority_vertex(const Graph& g, const VertexColoring& c) {
    if (!is_vertex_admissible(g)) throw Error(errc::not_admissible, "minimum degree below 2");
    detail::require_total(c.colors, static_cast<size_t>(g.n), "vertex coloring");
    Verdict verdict;
    std::unordered_map<int, int> count;
    for (int v = 0; v < g.n; ++v) {
        count.clear();
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            ++count[c.colors[u]];
        }
        int threshold = g.degree[v] / 2;
        for (auto [color, cnt] : count)
            if (cnt > threshold) verdict.witnesses.push_back({v, color, cnt, threshold});
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.site != b.site ? a.site < b.site : a.color < b.color; });
    verdict.ok = verdict.witnesses.empty();
    return verdict;
}

/// Strong majority for edges: for every edge e, no color fills more than half
/// of the d(u)+d(v)-2 edges adjacent to e.
inline Verdict check_strong_majority_edge(const Graph& g, const EdgeColoring& c) {
    if (!is_edge_admissible(g)) throw Error(errc::not_admissible, "pendant path of length more than one");
    detail::require_total(c.colors, static_cast<size_t>(g.m()), "edge coloring");
    Verdict verdict;
    std::unordered_map<int, int> count;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        count.clear();
        for (auto [w, f] : g.adj[u]) {
            (void)w;
            if (f != e) ++count[c.colors[f]];
        }
        for (auto [w, f] : g.adj[v]) {
            (void)w;
            if (f != e) ++count[c.colors[f]];
        }
        int threshold = (g.degree[u] + g.degree[v] - 2) / 2;
        for (auto [color, cnt] : count)
            if (cnt > threshold) verdict.witnesses.push_back({e, color, cnt, threshold});
    }
    std::sort(verdict.witnesses.begin(), verdict.witnesses.end(),
              [](const Witness& a, const Witness& b) { return a.site != b.site ? a.site < b.site : a.color < b.color; });
    verdict.ok = verdict.witnesses.empty();
    return verdict;
}

/// Weak (Lovasz) majority: at most half the neighbors of v share v's own color.
inline Verdict check_majority_vertex(const Graph& g, const VertexColoring& c) {
    detail::require_total(c.colors, static_cast<size_t>(g.n), "vertex coloring");
    Verdict verdict;
    for (int v = 0; v < g.n; ++v) {
        int same = 0;
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            if (c.colors[u] == c.colors[v]) ++same;
        }
        int threshold = g.degree[v] / 2;
        if (same > threshold) verdict.witnesses.push_back({v, c.colors[v], same, threshold});
    }
    verdict.ok = verdict.witnesses.empty();
    return verdict;
}

inline bool check_proper_vertex(const Graph& g, const VertexColoring& c) {
    detail::require_total(c.colors, static_cast<size_t>(g.n), "vertex coloring");
    for (auto [u, v] : g.edges)
        if (c.colors[u] == c.colors[v]) return false;
    return true;
}

inline bool check_proper_edge(const Graph& g, const EdgeColoring& c) {
    detail::require_total(c.colors, static_cast<size_t>(g.m()), "edge coloring");
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < g.adj[v].size(); ++i)
            for (size_t j = i + 1; j < g.adj[v].size(); ++j)
                if (c.colors[g.adj[v][i].second] == c.colors[g.adj[v][j].second]) return false;
    return true;
}

/// Per-vertex color-class tallies and the max imbalance between two classes.
struct DiscrepancyReport {
    int value = 0;
    std::vector<std::vector<int>> per_vertex;  // vertex -> k incident-edge counts
};

inline DiscrepancyReport discrepancy(const Graph& g, const EdgeColoring& c, int k) {
    if (k < 1) throw Error(errc::invalid_argument, "palette size must be positive");
    detail::require_total(c.colors, static_cast<size_t>(g.m()), "edge coloring");
    for (int col : c.colors)
        if (col >= k) throw Error(errc::color_out_of_range, "color " + std::to_string(col) + " with k=" + std::to_string(k));
    DiscrepancyReport rep;
    rep.per_vertex.assign(g.n, std::vector<int>(k, 0));
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        ++rep.per_vertex[u][c.colors[e]];
        ++rep.per_vertex[v][c.colors[e]];
    }
    for (int v = 0; v < g.n; ++v) {
        auto [lo, hi] = std::minmax_element(rep.per_vertex[v].begin(), rep.per_vertex[v].end());
        rep.value = std::max(rep.value, *hi - *lo);
    }
    return rep;
}

}  // namespace majcolor
