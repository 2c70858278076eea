#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"

namespace majcolor {

namespace detail {

/// Seeded helpers; all randomized generators draw from mt19937_64 only
/// through these, so identical (params, seed) gives identical graphs.
inline uint64_t rand_below(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

template <typename T>
inline void shuffle_vec(std::vector<T>& v, std::mt19937_64& rng) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[rand_below(rng, i)]);
}

inline uint64_t pair_key(int u, int v, int n) {
    if (u > v) std::swap(u, v);
    return static_cast<uint64_t>(u) * static_cast<uint64_t>(n) + static_cast<uint64_t>(v);
}

}  // namespace detail

inline Graph cycle(int n) {
    if (n < 3) throw Error(errc::too_small, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return build_graph(std::move(edges), n);
}

inline Graph complete(int n) {
    if (n < 2) throw Error(errc::too_small, "complete graph needs n >= 2");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return build_graph(std::move(edges), n);
}

inline Graph subdivided_complete(int n) {
    if (n < 3) throw Error(errc::too_small, "subdivided complete graph needs n >= 3");
    return subdivide(complete(n));
}

/// K_n with each edge uv replaced by a diamond K_4 - e whose degree-2
/// vertices are u and v.
inline Graph diamond_complete(int n) {
    if (n < 3) throw Error(errc::too_small, "diamond complete graph needs n >= 3");
    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int a = next++;
            int b = next++;
            edges.emplace_back(u, a);
            edges.emplace_back(u, b);
            edges.emplace_back(v, a);
            edges.emplace_back(v, b);
            edges.emplace_back(a, b);
        }
    return build_graph(std::move(edges), next);
}

/// Bipartite G = (X u Y, E) with |X| = floor(delta/2)*K and one Y-vertex per
/// delta-subset of X, adjacent to exactly that subset. Forces Maj(G) >= K.
inline Graph bipartite_witness(int K, int delta, uint64_t edge_cap = 1000000) {
    if (K < 2 || delta < 2) throw Error(errc::too_small, "need K >= 2 and delta >= 2");
    const int x = (delta / 2) * K;
    // |Y| = C(x, delta), guarded against blowing the cap mid-computation
    uint64_t y = 1;
    for (int i = 0; i < delta; ++i) {
        y = y * static_cast<uint64_t>(x - i) / static_cast<uint64_t>(i + 1);
        if (y > edge_cap) throw Error(errc::size_cap_exceeded, "witness graph exceeds edge cap");
    }
    if (y * static_cast<uint64_t>(delta) > edge_cap)
        throw Error(errc::size_cap_exceeded, "witness graph exceeds edge cap");

    std::vector<std::pair<int, int>> edges;
    std::vector<int> subset(delta);
    std::iota(subset.begin(), subset.end(), 0);
    int yid = x;
    while (true) {
        for (int p : subset) edges.emplace_back(p, yid);
        ++yid;
        // next delta-subset of {0..x-1} in lexicographic order
        int i = delta - 1;
        while (i >= 0 && subset[i] == x - delta + i) --i;
        if (i < 0) break;
        ++subset[i];
        for (int j = i + 1; j < delta; ++j) subset[j] = subset[j - 1] + 1;
    }
    return build_graph(std::move(edges), yid);
}

/// Point set {0..n-1} with triples covering every pair exactly once.
struct SteinerTripleSystem {
    int n = 0;
    std::vector<std::array<int, 3>> triples;
};

/// Bose construction for n = 3 mod 6, Skolem construction for n = 1 mod 6.
inline SteinerTripleSystem steiner_triple_system(int n) {
    if (n < 7 || (n % 6 != 1 && n % 6 != 3))
        throw Error(errc::invalid_order, "STS(n) needs n = 1 or 3 (mod 6), n >= 7");
    SteinerTripleSystem sts;
    sts.n = n;
    if (n % 6 == 3) {
        const int t = (n - 3) / 6;
        const int m = 2 * t + 1;  // odd group order
        auto id = [&](int x, int k) { return k * m + x; };
        auto mul = [&](int i, int j) { return ((i + j) * (t + 1)) % m; };  // idempotent: i*i = i
        for (int i = 0; i < m; ++i) sts.triples.push_back({id(i, 0), id(i, 1), id(i, 2)});
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int k = 0; k < 3; ++k)
                    sts.triples.push_back({id(i, k), id(j, k), id(mul(i, j), (k + 1) % 3)});
    } else {
        const int t = (n - 1) / 6;
        const int q = 2 * t;
        const int inf = 6 * t;
        auto id = [&](int x, int k) { return k * q + x; };
        // half-idempotent commutative quasigroup on Z_2t
        auto mul = [&](int i, int j) {
            int e = (i + j) % q;
            return e % 2 == 0 ? e / 2 : t + (e - 1) / 2;
        };
        for (int i = 0; i < t; ++i) sts.triples.push_back({id(i, 0), id(i, 1), id(i, 2)});
        for (int i = 0; i < t; ++i)
            for (int k = 0; k < 3; ++k) sts.triples.push_back({inf, id(t + i, k), id(i, (k + 1) % 3)});
        for (int i = 0; i < q; ++i)
            for (int j = i + 1; j < q; ++j)
                for (int k = 0; k < 3; ++k)
                    sts.triples.push_back({id(i, k), id(j, k), id(mul(i, j), (k + 1) % 3)});
    }
    return sts;
}

/// Block-point incidence graph: X = triples (ids 0..s-1), Y = points
/// (ids s..s+n-1), edge iff the point lies in the triple.
inline Graph sts_incidence(const SteinerTripleSystem& sts) {
    const int s = static_cast<int>(sts.triples.size());
    std::vector<std::pair<int, int>> edges;
    edges.reserve(3 * sts.triples.size());
    for (int x = 0; x < s; ++x)
        for (int p : sts.triples[x]) edges.emplace_back(x, s + p);
    return build_graph(std::move(edges), s + sts.n);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9 (step 2), spokes i -- 5+i.
inline Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, 5 + i);
    return build_graph(std::move(edges), 10);
}

/// Circulant graph on Z_n with the given connection offsets.
inline Graph circulant(int n, const std::vector<int>& offsets) {
    if (n < 3) throw Error(errc::too_small, "circulant needs n >= 3");
    std::set<std::pair<int, int>> edges;
    for (int off : offsets) {
        if (off <= 0 || off > n / 2) throw Error(errc::invalid_argument, "offset out of range");
        for (int v = 0; v < n; ++v) {
            int u = (v + off) % n;
            edges.emplace(std::min(u, v), std::max(u, v));
        }
    }
    return build_graph(std::vector<std::pair<int, int>>(edges.begin(), edges.end()), n);
}

/// Pairing-model sampler with rejection of loops and parallel edges.
inline Graph random_regular(int n, int r, uint64_t seed) {
    if (n <= 0 || r < 0 || r >= n || (static_cast<int64_t>(n) * r) % 2 != 0)
        throw Error(errc::infeasible, "no r-regular simple graph with these parameters");
    std::mt19937_64 rng(seed);
    const int stubs = n * r;
    std::vector<int> points(stubs);
    for (int i = 0; i < stubs; ++i) points[i] = i / r;
    const int max_attempts = 100000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        detail::shuffle_vec(points, rng);
        std::unordered_set<uint64_t> seen;
        std::vector<std::pair<int, int>> edges;
        bool ok = true;
        for (int i = 0; i < stubs; i += 2) {
            int u = points[i], v = points[i + 1];
            if (u == v || !seen.insert(detail::pair_key(u, v, n)).second) {
                ok = false;
                break;
            }
            edges.emplace_back(u, v);
        }
        if (ok) return build_graph(std::move(edges), n);
    }
    throw Error(errc::retry_limit, "pairing model kept producing loops or parallel edges");
}

/// Union of edge-disjoint random cycles: every degree is even by construction.
inline Graph random_even_degree(int n, int m, uint64_t seed) {
    if (n < 3 || m < 0 || (m > 0 && m < 3) ||
        static_cast<int64_t>(m) > static_cast<int64_t>(n) * (n - 1) / 2)
        throw Error(errc::infeasible, "cannot realize an even-degree simple graph with these parameters");
    std::mt19937_64 rng(seed);
    const int max_attempts = 1000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::set<std::pair<int, int>> edges;
        std::vector<int> verts(n);
        std::iota(verts.begin(), verts.end(), 0);
        bool stuck = false;
        while (static_cast<int>(edges.size()) < m && !stuck) {
            int remaining = m - static_cast<int>(edges.size());
            std::vector<int> lens;
            for (int len = 3; len <= std::min(n, remaining); ++len)
                if (remaining - len == 0 || remaining - len >= 3) lens.push_back(len);
            if (lens.empty()) {
                stuck = true;
                break;
            }
            int len = lens[detail::rand_below(rng, lens.size())];
            bool placed = false;
            for (int tries = 0; tries < 200 && !placed; ++tries) {
                detail::shuffle_vec(verts, rng);
                std::vector<std::pair<int, int>> cyc;
                bool clash = false;
                for (int i = 0; i < len; ++i) {
                    int u = verts[i], v = verts[(i + 1) % len];
                    if (u > v) std::swap(u, v);
                    if (edges.count({u, v})) {
                        clash = true;
                        break;
                    }
                    cyc.emplace_back(u, v);
                }
                std::sort(cyc.begin(), cyc.end());
                if (!clash && std::adjacent_find(cyc.begin(), cyc.end()) == cyc.end()) {
                    for (auto& e : cyc) edges.insert(e);
                    placed = true;
                }
            }
            if (!placed) stuck = true;
        }
        if (!stuck && static_cast<int>(edges.size()) == m)
            return build_graph(std::vector<std::pair<int, int>>(edges.begin(), edges.end()), n);
    }
    throw Error(errc::retry_limit, "could not assemble a cycle decomposition of the requested size");
}

namespace detail {

inline Graph random_min_degree_impl(int n_left, int n_right, int m, int delta, uint64_t seed, bool bipartite) {
    const int n = bipartite ? n_left + n_right : n_left;
    auto side_ok = [&](int u, int v) {
        if (!bipartite) return true;
        return (u < n_left) != (v < n_left);
    };
    int64_t max_edges = bipartite ? static_cast<int64_t>(n_left) * n_right
                                  : static_cast<int64_t>(n) * (n - 1) / 2;
    int64_t min_edges;
    if (bipartite)
        min_edges = std::max(static_cast<int64_t>(n_left) * delta, static_cast<int64_t>(n_right) * delta);
    else
        min_edges = (static_cast<int64_t>(n) * delta + 1) / 2;
    bool degree_feasible = bipartite ? (delta <= n_left && delta <= n_right) : (delta < n);
    if (n <= 0 || delta < 0 || !degree_feasible || m < min_edges || m > max_edges)
        throw Error(errc::infeasible, "no simple graph with these degree constraints");

    std::mt19937_64 rng(seed);
    const int max_attempts = 200;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::set<std::pair<int, int>> edges;
        std::vector<int> deg(n, 0);
        std::vector<std::set<int>> nbrs(n);
        auto add_edge = [&](int u, int v) {
            edges.emplace(std::min(u, v), std::max(u, v));
            ++deg[u];
            ++deg[v];
            nbrs[u].insert(v);
            nbrs[v].insert(u);
        };
        // phase A: lift every deficient vertex to degree delta, preferring
        // deficient partners so the edge count stays near the minimum
        bool failed = false;
        while (!failed) {
            int v = -1;
            for (int u = 0; u < n; ++u)
                if (deg[u] < delta && (v == -1 || deg[u] < deg[v])) v = u;
            if (v == -1) break;
            int best = -1;
            bool best_deficient = false;
            std::vector<int> pool;
            for (int u = 0; u < n; ++u) {
                if (u == v || nbrs[v].count(u) || !side_ok(u, v)) continue;
                bool u_def = deg[u] < delta;
                if (best == -1 || (u_def && !best_deficient) ||
                    (u_def == best_deficient && deg[u] < deg[best])) {
                    best = u;
                    best_deficient = u_def;
                    pool.clear();
                    pool.push_back(u);
                } else if (u_def == best_deficient && deg[u] == deg[best]) {
                    pool.push_back(u);
                }
            }
            if (best == -1) {
                failed = true;
                break;
            }
            add_edge(v, pool[rand_below(rng, pool.size())]);
        }
        if (failed) continue;
        // phase B: trim surplus edges whose endpoints both stay above delta
        bool trimmed = true;
        while (static_cast<int>(edges.size()) > m && trimmed) {
            trimmed = false;
            std::vector<std::pair<int, int>> removable;
            for (auto& e : edges)
                if (deg[e.first] > delta && deg[e.second] > delta) removable.push_back(e);
            if (!removable.empty()) {
                auto e = removable[rand_below(rng, removable.size())];
                edges.erase(e);
                --deg[e.first];
                --deg[e.second];
                nbrs[e.first].erase(e.second);
                nbrs[e.second].erase(e.first);
                trimmed = true;
            }
        }
        if (static_cast<int>(edges.size()) > m) continue;
        // phase C: fill up with uniform random non-edges
        int stall = 0;
        while (static_cast<int>(edges.size()) < m && stall < 100000) {
            int u = static_cast<int>(rand_below(rng, static_cast<uint64_t>(n)));
            int v = static_cast<int>(rand_below(rng, static_cast<uint64_t>(n)));
            if (u == v || !side_ok(u, v) || nbrs[u].count(v)) {
                ++stall;
                continue;
            }
            add_edge(u, v);
            stall = 0;
        }
        if (static_cast<int>(edges.size()) == m)
            return build_graph(std::vector<std::pair<int, int>>(edges.begin(), edges.end()), n);
    }
    throw Error(errc::retry_limit, "min-degree sampler failed to hit the requested edge count");
}

}  // namespace detail

inline Graph random_min_degree(int n, int m, int delta, uint64_t seed) {
    return detail::random_min_degree_impl(n, 0, m, delta, seed, false);
}

inline Graph random_bipartite_min_degree(int n1, int n2, int m, int delta, uint64_t seed) {
    return detail::random_min_degree_impl(n1, n2, m, delta, seed, true);
}

}  // namespace majcolor
