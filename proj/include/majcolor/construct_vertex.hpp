#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "majcolor/coloring.hpp"
#include "majcolor/errors.hpp"
#include "majcolor/generators.hpp"
#include "majcolor/graph.hpp"
#include "majcolor/verify.hpp"

namespace majcolor {

namespace detail {

inline void audit_strong_vertex(const Graph& g, const VertexColoring& c, const char* who) {
    if (!check_strong_majority_vertex(g, c).ok)
        throw Error(errc::repair_failed, std::string(who) + " produced a coloring that fails its own checker");
}

}  // namespace detail

/// 1,1,2,2,... around the cycle, with the tail adjusted by n mod 4.
/// Palette 2 iff n = 0 (mod 4), else 3.
inline VertexColoring color_cycle_vertices(int n) {
    if (n < 3) throw Error(errc::too_small, "cycle needs n >= 3");
    std::vector<int> cols;
    cols.reserve(n);
    if (n == 3) {
        cols = {0, 1, 2};
    } else {
        int body = n - (n % 4);
        if (n % 4 == 3) body = n - 3;
        for (int i = 0; i < body; ++i) cols.push_back((i / 2) % 2);
        if (n % 4 == 1) cols.push_back(2);
        if (n % 4 == 2) {
            cols.push_back(2);
            cols.push_back(2);
        }
        if (n % 4 == 3) {
            cols.push_back(0);
            cols.push_back(2);
            cols.push_back(2);
        }
    }
    VertexColoring c(std::move(cols));
    detail::audit_strong_vertex(cycle(n), c, "color_cycle_vertices");
    return c;
}

/// Three classes as equitable as possible; all four classes distinct for K_4.
inline VertexColoring color_complete_vertices(int n) {
    if (n < 3) throw Error(errc::too_small, "complete graph coloring needs n >= 3");
    std::vector<int> cols(n);
    if (n == 4) {
        cols = {0, 1, 2, 3};
    } else {
        int q = n / 3, r = n % 3, v = 0;
        for (int part = 0; part < 3; ++part) {
            int size = q + (part < r ? 1 : 0);  // remainders to the lowest-indexed parts
            for (int i = 0; i < size; ++i) cols[v++] = part;
        }
    }
    VertexColoring c(std::move(cols));
    detail::audit_strong_vertex(complete(n), c, "color_complete_vertices");
    return c;
}

/// Strong majority coloring with at most 2*maxdeg+1 colors: properly color the
/// auxiliary graph H that has a cycle through N(v) for d(v) >= 3 and an edge
/// between the two neighbors for d(v) = 2. Greedy on a smallest-last order
/// keeps the palette within Delta(H)+1.
inline VertexColoring brooks_2delta1(const Graph& g) {
    if (!is_vertex_admissible(g)) throw Error(errc::not_admissible, "minimum degree below 2");
    std::set<std::pair<int, int>> hedges;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb;
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            nb.push_back(u);
        }
        std::sort(nb.begin(), nb.end());
        if (g.degree[v] == 2) {
            hedges.emplace(nb[0], nb[1]);
        } else {
            for (size_t i = 0; i < nb.size(); ++i) {
                int a = nb[i], b = nb[(i + 1) % nb.size()];
                hedges.emplace(std::min(a, b), std::max(a, b));
            }
        }
    }
    std::vector<std::vector<int>> hadj(g.n);
    for (auto [a, b] : hedges) {
        hadj[a].push_back(b);
        hadj[b].push_back(a);
    }

    // smallest-last (degeneracy) order
    std::vector<int> hdeg(g.n), order;
    std::vector<char> removed(g.n, 0);
    for (int v = 0; v < g.n; ++v) hdeg[v] = static_cast<int>(hadj[v].size());
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!removed[v] && (best == -1 || hdeg[v] < hdeg[best])) best = v;
        removed[best] = 1;
        order.push_back(best);
        for (int u : hadj[best])
            if (!removed[u]) --hdeg[u];
    }
    std::reverse(order.begin(), order.end());

    std::vector<int> cols(g.n, -1);
    for (int v : order) {
        std::set<int> taken;
        for (int u : hadj[v])
            if (cols[u] >= 0) taken.insert(cols[u]);
        int c = 0;
        while (taken.count(c)) ++c;
        cols[v] = c;
    }
    VertexColoring c(std::move(cols));
    if (c.palette > 2 * g.max_degree + 1)
        throw Error(errc::repair_failed, "auxiliary coloring exceeded the 2*Delta+1 bound");
    detail::audit_strong_vertex(g, c, "brooks_2delta1");
    return c;
}

/// Two-coloring in which at most half of every vertex's neighbors share its
/// color, found by flipping violating vertices; each flip strictly grows the
/// number of bichromatic edges, so this terminates.
inline VertexColoring lovasz_two_color(const Graph& g) {
    std::vector<int> cols(g.n, 0);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n; ++v) {
            int same = 0;
            for (auto [u, e] : g.adj[v]) {
                (void)e;
                if (cols[u] == cols[v]) ++same;
            }
            if (same > g.degree[v] / 2) {
                cols[v] ^= 1;
                changed = true;
            }
        }
    }
    VertexColoring c(std::move(cols));
    if (!check_majority_vertex(g, c).ok)
        throw Error(errc::repair_failed, "flip search ended on a non-majority coloring");
    return c;
}

}  // namespace majcolor
