#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <vector>

#include "majcolor/errors.hpp"
#include "majcolor/graph.hpp"

namespace majcolor {

struct SearchBudget {
    uint64_t node_limit = 100000000;
    int64_t time_limit_ms = 60000;
};

enum class DecideStatus { sat, unsat, budget_exceeded };
enum class SolveStatus { proven, budget_exceeded };

struct DecideResult {
    DecideStatus status = DecideStatus::unsat;
    std::vector<int> coloring;
    uint64_t nodes = 0;
    bool refuted_by_clique = false;
};

struct LevelTrace {
    int k = 0;
    uint64_t nodes = 0;
    bool by_clique = false;
    double ms = 0.0;
};

struct ExactResult {
    int value = 0;
    std::vector<int> certificate;
    SolveStatus status = SolveStatus::proven;
    std::vector<LevelTrace> lower_bound_trace;
};

namespace detail {

/// Majority-coloring CSP over abstract sites. A coloring is feasible iff for
/// every site v, no color occupies more than floor(deg(v)/2) of adj(v). Both
/// the vertex problem (sites = vertices) and the edge problem (sites = edges,
/// adjacency = sharing an endpoint) instantiate this.
class MajoritySolver {
public:
    explicit MajoritySolver(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
        n_ = static_cast<int>(adj_.size());
        deg_.resize(n_);
        threshold_.resize(n_);
        for (int v = 0; v < n_; ++v) {
            deg_[v] = static_cast<int>(adj_[v].size());
            if (deg_[v] == 1)
                throw Error(errc::not_admissible, "site with a single neighbor cannot be majority colored");
            threshold_[v] = deg_[v] / 2;
        }
    }

    bool has_constrained_site() const {
        return std::any_of(deg_.begin(), deg_.end(), [](int d) { return d > 0; });
    }

    int site_count() const { return n_; }

    /// Greedy clique in the pairwise-distinctness graph induced by sites with
    /// threshold 1 (each neighborhood of such a site must be rainbow).
    int distinct_clique_bound() const {
        std::vector<std::vector<char>> d(n_, std::vector<char>(n_, 0));
        bool any = false;
        for (int v = 0; v < n_; ++v) {
            if (threshold_[v] != 1) continue;
            for (size_t i = 0; i < adj_[v].size(); ++i)
                for (size_t j = i + 1; j < adj_[v].size(); ++j) {
                    d[adj_[v][i]][adj_[v][j]] = d[adj_[v][j]][adj_[v][i]] = 1;
                    any = true;
                }
        }
        if (!any) return n_ > 0 ? 1 : 0;
        std::vector<int> ddeg(n_, 0);
        for (int v = 0; v < n_; ++v) ddeg[v] = static_cast<int>(std::count(d[v].begin(), d[v].end(), 1));
        int best = 1;
        for (int seed = 0; seed < n_; ++seed) {
            if (ddeg[seed] + 1 <= best) continue;
            std::vector<int> cand;
            for (int u = 0; u < n_; ++u)
                if (d[seed][u]) cand.push_back(u);
            int size = 1;
            while (!cand.empty()) {
                int pick = cand[0];
                int pick_score = -1;
                for (int u : cand) {
                    int score = 0;
                    for (int w : cand)
                        if (d[u][w]) ++score;
                    if (score > pick_score) {
                        pick_score = score;
                        pick = u;
                    }
                }
                ++size;
                std::vector<int> next;
                for (int w : cand)
                    if (w != pick && d[pick][w]) next.push_back(w);
                cand.swap(next);
            }
            best = std::max(best, size);
        }
        return best;
    }

    DecideResult decide(int k, const SearchBudget& budget) {
        if (k < 1) throw Error(errc::invalid_argument, "palette must be positive");
        DecideResult res;
        // a site needs k*threshold >= deg just to absorb its own neighborhood
        for (int v = 0; v < n_; ++v)
            if (threshold_[v] * k < deg_[v]) {
                res.status = DecideStatus::unsat;
                return res;
            }
        if (distinct_clique_bound() > k) {
            res.status = DecideStatus::unsat;
            res.refuted_by_clique = true;
            return res;
        }

        k_ = k;
        nodes_ = 0;
        deadline_ = std::chrono::steady_clock::now() + std::chrono::milliseconds(budget.time_limit_ms);
        node_limit_ = budget.node_limit;
        color_.assign(n_, -1);
        cnt_.assign(static_cast<size_t>(n_) * k, 0);
        forbid_.assign(static_cast<size_t>(n_) * k, 0);
        allowed_.assign(n_, k);
        uncolored_nbrs_ = deg_;
        capacity_.resize(n_);
        for (int v = 0; v < n_; ++v) capacity_[v] = threshold_[v] * k;

        order_.clear();
        for (int v = 0; v < n_; ++v)
            if (deg_[v] > 0) order_.push_back(v);
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return deg_[a] > deg_[b]; });

        found_.assign(n_, 0);
        DecideStatus s = dfs(0, -1);
        res.status = s;
        res.nodes = nodes_;
        if (s == DecideStatus::sat) {
            res.coloring = found_;
            for (int v = 0; v < n_; ++v)
                if (deg_[v] == 0) res.coloring[v] = 0;  // unconstrained sites
        }
        return res;
    }

private:
    int& cnt(int v, int a) { return cnt_[static_cast<size_t>(v) * k_ + a]; }
    int& forbid(int v, int a) { return forbid_[static_cast<size_t>(v) * k_ + a]; }

    // Applies u := a with full propagation; returns false on any conflict.
    // Effects are always applied in full so that unassign mirrors exactly.
    bool assign(int u, int a) {
        bool ok = true;
        color_[u] = a;
        for (int v : adj_[u]) {
            int before = cnt(v, a)++;
            if (before < threshold_[v]) --capacity_[v];
            --uncolored_nbrs_[v];
            if (before + 1 > threshold_[v]) ok = false;
            if (capacity_[v] < uncolored_nbrs_[v]) ok = false;
            if (before + 1 == threshold_[v]) {
                for (int w : adj_[v]) {
                    if (color_[w] != -1) continue;
                    if (forbid(w, a)++ == 0) {
                        if (--allowed_[w] == 0) ok = false;
                    }
                }
            }
        }
        return ok;
    }

    void unassign(int u, int a) {
        for (int v : adj_[u]) {
            if (cnt(v, a) == threshold_[v]) {
                for (int w : adj_[v]) {
                    if (color_[w] != -1) continue;
                    if (--forbid(w, a) == 0) ++allowed_[w];
                }
            }
            int after = --cnt(v, a);
            if (after < threshold_[v]) ++capacity_[v];
            ++uncolored_nbrs_[v];
        }
        color_[u] = -1;
    }

    DecideStatus dfs(size_t pos, int max_used) {
        if (pos == order_.size()) {
            found_ = color_;
            return DecideStatus::sat;
        }
        if (nodes_ >= node_limit_) return DecideStatus::budget_exceeded;
        if ((nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_)
            return DecideStatus::budget_exceeded;
        int u = order_[pos];
        int hi = std::min(k_ - 1, max_used + 1);
        for (int a = 0; a <= hi; ++a) {
            if (forbid(u, a) > 0) continue;
            ++nodes_;
            bool feasible = assign(u, a);
            if (feasible) {
                DecideStatus r = dfs(pos + 1, std::max(max_used, a));
                if (r != DecideStatus::unsat) {
                    unassign(u, a);
                    return r;
                }
            }
            unassign(u, a);
        }
        return DecideStatus::unsat;
    }

    std::vector<std::vector<int>> adj_;
    int n_ = 0;
    int k_ = 0;
    std::vector<int> deg_, threshold_, color_, allowed_, uncolored_nbrs_, capacity_, order_, found_;
    std::vector<int> cnt_, forbid_;
    uint64_t nodes_ = 0;
    uint64_t node_limit_ = 0;
    std::chrono::steady_clock::time_point deadline_;
};

inline std::vector<std::vector<int>> vertex_instance(const Graph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (int v = 0; v < g.n; ++v)
        for (auto [u, e] : g.adj[v]) {
            (void)e;
            adj[v].push_back(u);
        }
    return adj;
}

/// Edge-adjacency built directly from incidence (not via line_graph), so the
/// two exact routes stay independent.
inline std::vector<std::vector<int>> edge_instance(const Graph& g) {
    std::vector<std::vector<int>> adj(g.m());
    for (int e = 0; e < g.m(); ++e) {
        auto [u, v] = g.edges[e];
        for (auto [w, f] : g.adj[u]) {
            (void)w;
            if (f != e) adj[e].push_back(f);
        }
        for (auto [w, f] : g.adj[v]) {
            (void)w;
            if (f != e) adj[e].push_back(f);
        }
    }
    return adj;
}

inline ExactResult exact_min_colors(MajoritySolver& solver, const SearchBudget& budget) {
    ExactResult res;
    if (!solver.has_constrained_site()) {
        res.value = 1;
        res.certificate.assign(solver.site_count(), 0);
        res.status = SolveStatus::proven;
        return res;
    }
    for (int k = 2; k <= std::max(2, solver.site_count()); ++k) {
        auto t0 = std::chrono::steady_clock::now();
        DecideResult d = solver.decide(k, budget);
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
        if (d.status == DecideStatus::sat) {
            res.value = k;
            res.certificate = d.coloring;
            res.status = SolveStatus::proven;
            return res;
        }
        res.lower_bound_trace.push_back({k, d.nodes, d.refuted_by_clique, ms});
        if (d.status == DecideStatus::budget_exceeded) {
            res.status = SolveStatus::budget_exceeded;
            res.value = k;  // best known lower bound; not proven
            return res;
        }
    }
    throw Error(errc::infeasible, "no palette size admitted a coloring");  // unreachable
}

}  // namespace detail

inline DecideResult decide_vertex_k(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (!is_vertex_admissible(g)) throw Error(errc::not_admissible, "minimum degree below 2");
    detail::MajoritySolver solver(detail::vertex_instance(g));
    return solver.decide(k, budget);
}

inline ExactResult exact_maj_vertex(const Graph& g, const SearchBudget& budget = {}) {
    if (!is_vertex_admissible(g)) throw Error(errc::not_admissible, "minimum degree below 2");
    detail::MajoritySolver solver(detail::vertex_instance(g));
    return detail::exact_min_colors(solver, budget);
}

inline DecideResult decide_edge_k(const Graph& g, int k, const SearchBudget& budget = {}) {
    if (g.m() == 0 || !is_edge_admissible(g))
        throw Error(errc::not_admissible, "graph is not edge-admissible");
    detail::MajoritySolver solver(detail::edge_instance(g));
    return solver.decide(k, budget);
}

inline ExactResult exact_maj_edge(const Graph& g, const SearchBudget& budget = {}) {
    if (g.m() == 0 || !is_edge_admissible(g))
        throw Error(errc::not_admissible, "graph is not edge-admissible");
    detail::MajoritySolver solver(detail::edge_instance(g));
    return detail::exact_min_colors(solver, budget);
}

}  // namespace majcolor
