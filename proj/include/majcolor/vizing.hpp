#pragma once

#include <vector>

#include "majcolor/coloring.hpp"
#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"
#include "majcolor/verify.hpp"

namespace majcolor {

/// Misra-Gries fan/Kempe-chain edge coloring: proper with maxdeg+1 colors.
inline EdgeColoring misra_gries_edge_color(const Graph& g) {
    const int K = g.max_degree + 1;
    std::vector<int> color(g.m(), -1);

    auto is_free = [&](int x, int c) {
        for (auto [w, f] : g.adj[x]) {
            (void)w;
            if (color[f] == c) return false;
        }
        return true;
    };
    auto free_color = [&](int x) {
        for (int c = 0; c < K; ++c)
            if (is_free(x, c)) return c;
        throw Error(errc::repair_failed, "no free color at a vertex; coloring state corrupt");
    };
    auto edge_between = [&](int a, int b) {
        for (auto [w, f] : g.adj[a])
            if (w == b) return f;
        return -1;
    };

    for (int e0 = 0; e0 < g.m(); ++e0) {
        if (color[e0] != -1) continue;
        const int u = g.edges[e0].first;
        const int v = g.edges[e0].second;

        // maximal fan of u starting at v
        std::vector<int> fan{v};
        std::vector<char> in_fan(g.n, 0);
        in_fan[v] = 1;
        bool extended = true;
        while (extended) {
            extended = false;
            for (auto [w, f] : g.adj[u]) {
                if (color[f] == -1 || in_fan[w]) continue;
                if (is_free(fan.back(), color[f])) {
                    fan.push_back(w);
                    in_fan[w] = 1;
                    extended = true;
                    break;
                }
            }
        }

        int c = free_color(u);
        int d = free_color(fan.back());
        if (c != d) {
            // invert the maximal cd-path starting at u
            int cur = u, want = d, prev_edge = -1;
            while (true) {
                int ne = -1, nxt = -1;
                for (auto [w, f] : g.adj[cur]) {
                    if (f != prev_edge && color[f] == want) {
                        ne = f;
                        nxt = w;
                        break;
                    }
                }
                if (ne == -1) break;
                color[ne] = (want == d ? c : d);
                want = (want == d ? c : d);
                prev_edge = ne;
                cur = nxt;
            }
        }

        // shortest prefix that is still a fan and ends where d is free
        int w = -1;
        for (int i = 0; i < static_cast<int>(fan.size()); ++i) {
            if (!is_free(fan[i], d)) continue;
            bool fan_ok = true;
            for (int j = 0; j < i; ++j) {
                int f = edge_between(u, fan[j + 1]);
                if (color[f] < 0 || !is_free(fan[j], color[f])) {
                    fan_ok = false;
                    break;
                }
            }
            if (fan_ok) {
                w = i;
                break;
            }
        }
        if (w < 0) throw Error(errc::repair_failed, "fan rotation target missing");

        for (int j = 0; j < w; ++j)
            color[edge_between(u, fan[j])] = color[edge_between(u, fan[j + 1])];
        color[edge_between(u, fan[w])] = d;
    }

    EdgeColoring result(std::move(color));
    if (!check_proper_edge(g, result))
        throw Error(errc::repair_failed, "edge coloring is not proper");
    return result;
}

/// Proper 4-edge-coloring of a subcubic graph (Vizing bound for maxdeg 3).
inline EdgeColoring proper_edge_color_subcubic(const Graph& g) {
    if (g.max_degree > 3) throw Error(errc::degree_too_high, "graph is not subcubic");
    return misra_gries_edge_color(g);
}

}  // namespace majcolor
