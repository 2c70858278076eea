#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "majcolor/graph.hpp"

// Small independent oracles used across the test suite. These deliberately
// avoid the library's own traversal/coloring code paths.
namespace testutil {

using majcolor::Graph;

inline Graph path_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return majcolor::build_graph(std::move(e), n);
}

inline Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return majcolor::build_graph(std::move(e), leaves + 1);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> e = a.edges;
    for (auto [u, v] : b.edges) e.emplace_back(u + a.n, v + a.n);
    return majcolor::build_graph(std::move(e), a.n + b.n);
}

inline bool is_closed_euler_walk(const Graph& g, const std::vector<int>& seq) {
    if (static_cast<int>(seq.size()) != g.m()) return false;
    std::set<int> distinct(seq.begin(), seq.end());
    if (static_cast<int>(distinct.size()) != g.m()) return false;
    if (seq.empty()) return true;
    for (int dir = 0; dir < 2; ++dir) {
        int cur = dir == 0 ? g.edges[seq[0]].first : g.edges[seq[0]].second;
        int start = cur;
        bool ok = true;
        for (int e : seq) {
            auto [u, v] = g.edges[e];
            if (cur == u)
                cur = v;
            else if (cur == v)
                cur = u;
            else {
                ok = false;
                break;
            }
        }
        if (ok && cur == start) return true;
    }
    return false;
}

inline std::vector<int> bfs_dist(const Graph& g, int src, int skip_edge = -1) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [u, e] : g.adj[v]) {
            if (e == skip_edge || dist[u] >= 0) continue;
            dist[u] = dist[v] + 1;
            q.push_back(u);
        }
    }
    return dist;
}

inline int girth(const Graph& g) {
    int best = -1;
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        auto dist = bfs_dist(g, u, e);
        if (dist[v] >= 0 && (best == -1 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    return best;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> side(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [u, e] : g.adj[v]) {
                (void)e;
                if (side[u] == -1) {
                    side[u] = 1 - side[v];
                    q.push_back(u);
                } else if (side[u] == side[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// exhaustive search for a proper edge coloring with k colors
inline bool proper_edge_colorable(const Graph& g, int k) {
    std::vector<int> color(g.m(), -1);
    std::function<bool(int)> go = [&](int e) -> bool {
        if (e == g.m()) return true;
        auto [u, v] = g.edges[e];
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (auto [w, f] : g.adj[u])
                if (f != e && color[f] == c) { clash = true; break; }
            if (!clash)
                for (auto [w, f] : g.adj[v])
                    if (f != e && color[f] == c) { clash = true; break; }
            if (clash) continue;
            color[e] = c;
            if (go(e + 1)) return true;
            color[e] = -1;
        }
        return false;
    };
    return go(0);
}

}  // namespace testutil
