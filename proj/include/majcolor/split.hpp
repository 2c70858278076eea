#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"

namespace majcolor {

/// Result of splitting every vertex of degree > 3 into copies whose
/// neighborhoods partition the original one into groups of size 2 or 3,
/// with at most two groups of size 2 per vertex.
struct SplitResult {
    Graph split_graph;
    std::vector<int> edge_map;                        // E(G) -> E(G*), a bijection
    std::vector<std::vector<std::vector<int>>> groups;  // original vertex -> neighbor groups
    std::vector<int> origin;                          // V(G*) -> original vertex
};

inline SplitResult split_vertices(const Graph& g) {
    if (!is_edge_admissible(g)) throw Error(errc::not_admissible, "graph is not edge-admissible");
    SplitResult res;
    res.groups.resize(g.n);

    if (g.max_degree <= 3) {
        res.split_graph = g;
        res.edge_map.resize(g.m());
        std::iota(res.edge_map.begin(), res.edge_map.end(), 0);
        res.origin.resize(g.n);
        std::iota(res.origin.begin(), res.origin.end(), 0);
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> nb;
            for (auto [u, e] : g.adj[v]) {
                (void)e;
                nb.push_back(u);
            }
            std::sort(nb.begin(), nb.end());
            if (!nb.empty()) res.groups[v].push_back(std::move(nb));
        }
        return res;
    }

    // copy ids and, per vertex, which copy each incident neighbor routes to
    std::vector<std::vector<int>> copy_of_neighbor(g.n);  // aligned with sorted neighbor list
    std::vector<std::vector<int>> sorted_nbrs(g.n);
    std::vector<int> first_copy(g.n, -1);
    int next_id = 0;
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nb;
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            nb.push_back(u);
        }
        std::sort(nb.begin(), nb.end());
        int d = static_cast<int>(nb.size());
        std::vector<int> sizes;
        if (d <= 3) {
            sizes.assign(1, d);  // unsplit; a single group (possibly empty)
        } else if (d % 3 == 0) {
            sizes.assign(d / 3, 3);
        } else if (d % 3 == 1) {
            sizes.assign((d - 4) / 3, 3);
            sizes.push_back(2);
            sizes.push_back(2);
        } else {
            sizes.assign((d - 2) / 3, 3);
            sizes.push_back(2);
        }
        first_copy[v] = next_id;
        int at = 0;
        for (int gi = 0; gi < static_cast<int>(sizes.size()); ++gi) {
            std::vector<int> group(nb.begin() + at, nb.begin() + at + sizes[gi]);
            for (int i = 0; i < sizes[gi]; ++i) copy_of_neighbor[v].push_back(next_id);
            at += sizes[gi];
            if (sizes[gi] > 0 || d == 0) res.groups[v].push_back(std::move(group));
            ++next_id;
        }
        sorted_nbrs[v] = std::move(nb);
    }

    auto copy_for = [&](int v, int nbr) {
        const auto& nb = sorted_nbrs[v];
        int idx = static_cast<int>(std::lower_bound(nb.begin(), nb.end(), nbr) - nb.begin());
        return copy_of_neighbor[v][idx];
    };

    std::vector<std::pair<int, int>> sedges;
    sedges.reserve(g.m());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        sedges.emplace_back(copy_for(u, v), copy_for(v, u));
    }
    res.split_graph = build_graph(std::move(sedges), next_id);
    res.edge_map.resize(g.m());
    std::iota(res.edge_map.begin(), res.edge_map.end(), 0);  // built in G's edge order
    res.origin.assign(next_id, -1);
    for (int v = 0; v < g.n; ++v)
        for (size_t i = 0; i < res.groups[v].size(); ++i) res.origin[first_copy[v] + static_cast<int>(i)] = v;
    return res;
}

}  // namespace majcolor
