#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "majcolor/coloring.hpp"
#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"
#include "majcolor/verify.hpp"

namespace majcolor {

namespace detail {

/// Split a subset of edges into two halves whose sizes differ by at most one
/// at every vertex. Walks Euler tours of the subset (plus a virtual vertex
/// tied to the odd-degree ones) and alternates sides; on bipartite graphs
/// every closed tour is even, so the alternation never slips.
inline std::pair<std::vector<int>, std::vector<int>> euler_halves(const Graph& g, const std::vector<int>& subset) {
    const int t = g.n;  // virtual vertex absorbing odd degrees
    std::vector<std::vector<std::pair<int, int>>> adj(g.n + 1);  // (neighbor, local edge id)
    std::vector<int> deg(g.n, 0);
    for (int e : subset) {
        ++deg[g.edges[e].first];
        ++deg[g.edges[e].second];
    }
    std::vector<int> local_to_global;
    for (int e : subset) {
        auto [u, v] = g.edges[e];
        int id = static_cast<int>(local_to_global.size());
        local_to_global.push_back(e);
        adj[u].emplace_back(v, id);
        adj[v].emplace_back(u, id);
    }
    for (int v = 0; v < g.n; ++v) {
        if (deg[v] % 2 == 0) continue;
        int id = static_cast<int>(local_to_global.size());
        local_to_global.push_back(-1);
        adj[t].emplace_back(v, id);
        adj[v].emplace_back(t, id);
    }

    const int total = static_cast<int>(local_to_global.size());
    std::vector<char> used(total, 0);
    std::vector<size_t> next(g.n + 1, 0);
    std::pair<std::vector<int>, std::vector<int>> halves;

    auto tour_from = [&](int start) {
        std::vector<int> tour;
        std::vector<std::pair<int, int>> stack{{start, -1}};
        while (!stack.empty()) {
            auto [v, ein] = stack.back();
            bool extended = false;
            while (next[v] < adj[v].size()) {
                auto [u, id] = adj[v][next[v]];
                if (used[id]) {
                    ++next[v];
                    continue;
                }
                used[id] = 1;
                stack.emplace_back(u, id);
                extended = true;
                break;
            }
            if (!extended) {
                stack.pop_back();
                if (ein >= 0) tour.push_back(ein);
            }
        }
        std::reverse(tour.begin(), tour.end());
        int side = 0;
        for (int id : tour) {
            if (local_to_global[id] >= 0)
                (side == 0 ? halves.first : halves.second).push_back(local_to_global[id]);
            side ^= 1;  // dummy edges consume a slot too, exactly once per odd vertex
        }
    };

    tour_from(t);  // components with odd vertices; the wrap lands harmlessly on t
    for (int e : subset) {
        auto [u, v] = g.edges[e];
        int lid = -1;
        for (auto [w, id] : adj[u]) {
            (void)w;
            if (local_to_global[id] == e) lid = id;
        }
        if (!used[lid]) tour_from(u);  // even component: any start works, tours are even
    }
    return halves;
}

}  // namespace detail

/// Edge k-coloring with small per-vertex imbalance: at most 1 on bipartite
/// graphs (pairwise Euler-split balancing, deterministic) and at most 2 in
/// general (potential-descent local search with seeded restarts).
inline EdgeColoring balanced_edge_color(const Graph& g, int k, uint64_t seed = 0) {
    if (k < 2) throw Error(errc::invalid_argument, "need at least two colors");
    if (g.m() == 0) return EdgeColoring(std::vector<int>{});

    std::vector<int> col(g.m());
    std::vector<std::vector<int>> cnt(g.n, std::vector<int>(k, 0));
    auto greedy_init = [&]() {
        for (auto& row : cnt) std::fill(row.begin(), row.end(), 0);
        for (int e = 0; e < g.m(); ++e) {
            auto [u, v] = g.edges[e];
            int best = 0;
            for (int a = 1; a < k; ++a)
                if (cnt[u][a] + cnt[v][a] < cnt[u][best] + cnt[v][best]) best = a;
            col[e] = best;
            ++cnt[u][best];
            ++cnt[v][best];
        }
    };
    auto disc_now = [&]() {
        int worst = 0;
        for (int v = 0; v < g.n; ++v) {
            auto [lo, hi] = std::minmax_element(cnt[v].begin(), cnt[v].end());
            worst = std::max(worst, *hi - *lo);
        }
        return worst;
    };

    if (is_bipartite(g)) {
        greedy_init();
        // rebalance color pairs until no Euler split lowers the sum of squares
        bool improved = true;
        while (improved) {
            improved = false;
            for (int a = 0; a < k; ++a) {
                for (int b = a + 1; b < k; ++b) {
                    std::vector<int> subset;
                    for (int e = 0; e < g.m(); ++e)
                        if (col[e] == a || col[e] == b) subset.push_back(e);
                    if (subset.empty()) continue;
                    auto halves = detail::euler_halves(g, subset);
                    auto gain = [&](const std::vector<int>& to_a, const std::vector<int>& to_b) {
                        long long before = 0, after = 0;
                        std::vector<int> na(g.n, 0), nb(g.n, 0);
                        for (int e : to_a) {
                            ++na[g.edges[e].first];
                            ++na[g.edges[e].second];
                        }
                        for (int e : to_b) {
                            ++nb[g.edges[e].first];
                            ++nb[g.edges[e].second];
                        }
                        std::vector<char> seen(g.n, 0);
                        for (int e : subset)
                            for (int v : {g.edges[e].first, g.edges[e].second}) {
                                if (seen[v]) continue;
                                seen[v] = 1;
                                before += 1LL * cnt[v][a] * cnt[v][a] + 1LL * cnt[v][b] * cnt[v][b];
                                after += 1LL * na[v] * na[v] + 1LL * nb[v] * nb[v];
                            }
                        return after - before;
                    };
                    long long d1 = gain(halves.first, halves.second);
                    long long d2 = gain(halves.second, halves.first);
                    if (std::min(d1, d2) >= 0) continue;
                    const auto& to_a = d1 <= d2 ? halves.first : halves.second;
                    const auto& to_b = d1 <= d2 ? halves.second : halves.first;
                    for (int e : to_a) {
                        auto [u, v] = g.edges[e];
                        --cnt[u][col[e]];
                        --cnt[v][col[e]];
                        col[e] = a;
                        ++cnt[u][a];
                        ++cnt[v][a];
                    }
                    for (int e : to_b) {
                        auto [u, v] = g.edges[e];
                        --cnt[u][col[e]];
                        --cnt[v][col[e]];
                        col[e] = b;
                        ++cnt[u][b];
                        ++cnt[v][b];
                    }
                    improved = true;
                }
            }
        }
        if (disc_now() > 1)
            throw Error(errc::repair_failed, "bipartite balancing missed the imbalance-1 guarantee");
        return EdgeColoring(std::move(col));
    }

    // general graphs: first-improvement descent on sum of squared class sizes
    const int target = 2;
    std::mt19937_64 rng(seed);
    const int restarts = g.m() <= 20 ? 60 : 8;
    std::vector<int> best_col;
    int best_disc = -1;
    for (int restart = 0; restart < restarts; ++restart) {
        if (restart == 0) {
            greedy_init();
        } else {
            for (auto& row : cnt) std::fill(row.begin(), row.end(), 0);
            for (int e = 0; e < g.m(); ++e) {
                col[e] = static_cast<int>(rng() % k);
                ++cnt[g.edges[e].first][col[e]];
                ++cnt[g.edges[e].second][col[e]];
            }
        }
        for (int pass = 0; pass < 500; ++pass) {
            bool improved = false;
            for (int e = 0; e < g.m(); ++e) {
                auto [u, v] = g.edges[e];
                int a = col[e];
                int best = a;
                long long best_delta = 0;
                for (int b = 0; b < k; ++b) {
                    if (b == a) continue;
                    long long delta = 2LL * (cnt[u][b] - cnt[u][a]) + 2 + 2LL * (cnt[v][b] - cnt[v][a]) + 2;
                    if (delta < best_delta) {
                        best_delta = delta;
                        best = b;
                    }
                }
                if (best != a) {
                    --cnt[u][a];
                    --cnt[v][a];
                    col[e] = best;
                    ++cnt[u][best];
                    ++cnt[v][best];
                    improved = true;
                }
            }
            if (!improved) break;
        }
        int d = disc_now();
        if (best_disc == -1 || d < best_disc) {
            best_disc = d;
            best_col = col;
        }
        if (best_disc == 0) break;
        if (best_disc <= target && g.m() > 20) break;
    }
    if (best_disc > target)
        throw Error(errc::budget_exceeded, "local search did not certify the discrepancy bound");
    return EdgeColoring(std::move(best_col));
}

}  // namespace majcolor
