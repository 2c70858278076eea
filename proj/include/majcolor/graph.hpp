#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "majcolor/errors.hpp"

namespace majcolor {

/// Finite simple undirected graph with dense 0-based vertex and edge ids.
/// Immutable after construction; all queries are O(1) table lookups.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;             // normalized u < v, id = index
    std::vector<std::vector<std::pair<int, int>>> adj;  // vertex -> (neighbor, edge id), ascending edge id
    std::vector<int> degree;
    int max_degree = 0;
    int min_degree = 0;

    int m() const { return static_cast<int>(edges.size()); }

    /// Same labeled graph; edge id order is an artifact of construction and
    /// not part of identity.
    bool operator==(const Graph& o) const {
        if (n != o.n || edges.size() != o.edges.size()) return false;
        auto a = edges, b = o.edges;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        return a == b;
    }
};

/// Closed walk given as an ordered list of edge ids, each appearing once.
struct EdgeSeq {
    std::vector<int> edge_ids;
};

inline Graph build_graph(std::vector<std::pair<int, int>> edge_list, int n) {
    if (n < 0) throw Error(errc::id_out_of_range, "negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw Error(errc::id_out_of_range,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v) throw Error(errc::loop_edge, "loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    {
        auto sorted = edge_list;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw Error(errc::duplicate_edge, "duplicate edge after normalization");
    }

    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adj.assign(n, {});
    g.degree.assign(n, 0);
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        g.adj[u].emplace_back(v, e);
        g.adj[v].emplace_back(u, e);
        ++g.degree[u];
        ++g.degree[v];
    }
    if (n > 0) {
        g.max_degree = *std::max_element(g.degree.begin(), g.degree.end());
        g.min_degree = *std::min_element(g.degree.begin(), g.degree.end());
    }
    return g;
}

struct LineGraphResult {
    Graph graph;
    std::vector<int> edge_to_vertex;  // bijection E(G) -> V(L(G))
};

/// Line graph: one vertex per edge of G, adjacent iff the edges share an endpoint.
inline LineGraphResult line_graph(const Graph& g) {
    if (g.m() == 0) throw Error(errc::empty_graph, "line graph needs at least one edge");
    std::vector<std::pair<int, int>> ledges;
    for (int v = 0; v < g.n; ++v) {
        const auto& inc = g.adj[v];
        for (size_t i = 0; i < inc.size(); ++i)
            for (size_t j = i + 1; j < inc.size(); ++j)
                ledges.emplace_back(std::min(inc[i].second, inc[j].second),
                                    std::max(inc[i].second, inc[j].second));
    }
    // two distinct edges of a simple graph share at most one endpoint, so no pair repeats
    LineGraphResult r;
    r.graph = build_graph(std::move(ledges), g.m());
    r.edge_to_vertex.resize(g.m());
    for (int e = 0; e < g.m(); ++e) r.edge_to_vertex[e] = e;
    return r;
}

/// Replace every edge by a path of length two. Edge e gains the new vertex n + e.
inline Graph subdivide(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(2 * g.edges.size());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        edges.emplace_back(u, g.n + e);
        edges.emplace_back(v, g.n + e);
    }
    return build_graph(std::move(edges), g.n + g.m());
}

inline bool is_vertex_admissible(const Graph& g) { return g.n > 0 && g.min_degree >= 2; }

/// Admissible for edge colorings: no degree-1 vertex with a degree-2 neighbor.
inline bool is_edge_admissible(const Graph& g) {
    for (int v = 0; v < g.n; ++v) {
        if (g.degree[v] != 1) continue;
        if (g.degree[g.adj[v][0].first] == 2) return false;
    }
    return true;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n, -1);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto [u, e] : g.adj[v]) {
                (void)e;
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (seen[s]) continue;
        seen[s] = 1;
        stack.push_back(s);
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (auto [u, e] : g.adj[v]) {
                (void)e;
                if (!seen[u]) {
                    seen[u] = 1;
                    stack.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

namespace detail {

/// Hierholzer from `start`, consuming every edge of its component.
/// `used` must be sized m and false on the component's edges.
/// Ties broken by always extending along the lowest-numbered unused edge.
inline std::vector<int> euler_tour_from(const Graph& g, int start, std::vector<char>& used) {
    std::vector<int> tour;
    std::vector<size_t> next(g.n, 0);
    std::vector<std::pair<int, int>> stack;  // (vertex, edge that led here)
    stack.emplace_back(start, -1);
    while (!stack.empty()) {
        auto [v, ein] = stack.back();
        bool extended = false;
        while (next[v] < g.adj[v].size()) {
            auto [u, e] = g.adj[v][next[v]];
            if (used[e]) {
                ++next[v];
                continue;
            }
            used[e] = 1;
            stack.emplace_back(u, e);
            extended = true;
            break;
        }
        if (!extended) {
            stack.pop_back();
            if (ein >= 0) tour.push_back(ein);
        }
    }
    std::reverse(tour.begin(), tour.end());
    return tour;
}

}  // namespace detail

/// Euler tour of a connected graph with all degrees even (m >= 1).
inline EdgeSeq euler_tour(const Graph& g) {
    if (g.m() == 0) throw Error(errc::empty_graph, "no edges to tour");
    if (connected_components(g).size() != 1) throw Error(errc::not_connected, "euler tour needs a connected graph");
    for (int v = 0; v < g.n; ++v)
        if (g.degree[v] % 2 != 0)
            throw Error(errc::odd_degree_vertex, "vertex " + std::to_string(v) + " has odd degree");
    std::vector<char> used(g.m(), 0);
    EdgeSeq seq;
    seq.edge_ids = detail::euler_tour_from(g, 0, used);
    return seq;
}

}  // namespace majcolor
