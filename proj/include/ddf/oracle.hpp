#pragma once

// Independent ground truth: exhaustive enumeration of every (multi-)digraph
// fitting a spec, with the target property tested per candidate.  Deliberately
// depends only on the digraph and connectivity headers so it cannot share a
// bug with the inequality checkers it certifies.

#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "ddf/connectivity.hpp"
#include "ddf/digraph.hpp"

namespace ddf {

enum class OracleSimplicity { simple, simple_with_start, loopless, multi };
enum class OracleProperty { none, strong, edge, node };

struct OracleQuery {
    DegreeSpec spec;
    std::optional<Digraph> d0;
    int k = 1;
    OracleProperty property = OracleProperty::none;
    OracleSimplicity simplicity = OracleSimplicity::simple;
    std::optional<Digraph> forbidden_parallel;      // cells the added digraph must avoid
    std::optional<std::vector<NodeMask>> cover;     // sets the added digraph alone must enter
    int multiplicity_cap = -1;                      // default: gamma
};

namespace detail {

// Visits every non-negative integer n x n matrix with the prescribed row and
// column sums and per-cell caps, row by row with running column-margin
// pruning.  The callback receives the matrix and stops the walk by returning
// true.
class FittingMatrixWalk {
  public:
    FittingMatrixWalk(const DegreeSpec& spec, std::vector<int> caps)
        : n_(spec.n()), caps_(std::move(caps)), row_sum_(spec.out_all()), col_left_(spec.in_all()) {
        cell_.assign(static_cast<std::size_t>(n_) * n_, 0);
        suffix_cap_.assign(static_cast<std::size_t>(n_ + 1) * n_, 0);
        for (int u = n_ - 1; u >= 0; --u)
            for (int v = 0; v < n_; ++v)
                suffix_cap_[static_cast<std::size_t>(u) * n_ + v] =
                    suffix_cap_[static_cast<std::size_t>(u + 1) * n_ + v] + caps_[static_cast<std::size_t>(u) * n_ + v];
    }

    bool run(const std::function<bool(const std::vector<int>&)>& cb) {
        cb_ = &cb;
        return row(0);
    }

  private:
    bool row(int u) {
        if (u == n_) {
            return (*cb_)(cell_);
        }
        for (int v = 0; v < n_; ++v)
            if (col_left_[v] > suffix_cap_[static_cast<std::size_t>(u) * n_ + v]) return false;
        return cell(u, 0, row_sum_[u]);
    }

    bool cell(int u, int v, int left) {
        if (v == n_) return left == 0 ? row(u + 1) : false;
        int rest = 0;  // capacity of the remaining cells in this row
        for (int w = v + 1; w < n_; ++w)
            rest += std::min(caps_[static_cast<std::size_t>(u) * n_ + w], col_left_[w]);
        int hi = std::min({caps_[static_cast<std::size_t>(u) * n_ + v], col_left_[v], left});
        int lo = std::max(0, left - rest);
        for (int t = lo; t <= hi; ++t) {
            cell_[static_cast<std::size_t>(u) * n_ + v] = t;
            col_left_[v] -= t;
            if (cell(u, v + 1, left - t)) return true;
            col_left_[v] += t;
        }
        cell_[static_cast<std::size_t>(u) * n_ + v] = 0;
        return false;
    }

    int n_;
    std::vector<int> caps_, cell_;
    std::vector<int> row_sum_, col_left_;
    std::vector<int> suffix_cap_;
    const std::function<bool(const std::vector<int>&)>* cb_ = nullptr;
};

inline Digraph matrix_to_digraph(int n, const std::vector<int>& cell) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            for (int c = 0; c < cell[static_cast<std::size_t>(u) * n + v]; ++c) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

}  // namespace detail

// Enumerates the digraphs fitting the spec under the query's simplicity class;
// the callback stops the walk by returning true.
inline bool for_each_fitting_digraph(const OracleQuery& q, const std::function<bool(const Digraph&)>& cb) {
    int n = q.spec.n();
    bool simple = q.simplicity == OracleSimplicity::simple || q.simplicity == OracleSimplicity::simple_with_start;
    int mcap = q.multiplicity_cap >= 0 ? q.multiplicity_cap : q.spec.gamma();
    std::vector<int> caps(static_cast<std::size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            int c;
            if (u == v)
                c = q.simplicity == OracleSimplicity::multi ? mcap : 0;
            else
                c = simple ? 1 : mcap;
            if (simple && q.simplicity == OracleSimplicity::simple_with_start && q.d0 && q.d0->has_arc(u, v)) c = 0;
            if (q.forbidden_parallel && q.forbidden_parallel->has_arc(u, v)) c = 0;
            caps[static_cast<std::size_t>(u) * n + v] = std::min(c, std::min(q.spec.out(u), q.spec.in(v)));
        }
    detail::FittingMatrixWalk walk(q.spec, std::move(caps));
    return walk.run([&](const std::vector<int>& cell) { return cb(detail::matrix_to_digraph(n, cell)); });
}

struct OracleAnswer {
    bool exists = false;
    std::optional<Digraph> witness;
};

inline OracleAnswer oracle_exists(const OracleQuery& q) {
    int n = q.spec.n();
    bool simple = q.simplicity == OracleSimplicity::simple || q.simplicity == OracleSimplicity::simple_with_start;
    if (simple && n > 6) throw cap_exceeded("simple-mode oracle capped at n <= 6");
    if (!simple && n > 4) throw cap_exceeded("multigraph-mode oracle capped at n <= 4");
    if (q.d0 && q.d0->n() != n) throw std::invalid_argument("start digraph and spec node counts differ");
    OracleAnswer answer;
    for_each_fitting_digraph(q, [&](const Digraph& d) {
        if (q.cover) {
            for (NodeMask k_set : *q.cover)
                if (d.in_degree_set(k_set) == 0) return false;
        }
        Digraph whole = q.d0 ? q.d0->plus(d) : d;
        bool ok = true;
        switch (q.property) {
            case OracleProperty::none: break;
            case OracleProperty::strong: ok = is_strong(whole); break;
            case OracleProperty::edge: ok = is_k_edge_connected(whole, q.k); break;
            case OracleProperty::node: ok = is_k_connected(whole, q.k); break;
        }
        if (ok) {
            answer.exists = true;
            answer.witness = d;
            return true;
        }
        return false;
    });
    return answer;
}

// Exhaustive k-elementary existence for bipartite degree prescriptions:
// enumerate the 0-1 bipartite adjacency matrices with the given side sums and
// test the neighbourhood-surplus bound directly.
inline bool bigraph_is_k_elementary_matrix(int n, const std::vector<int>& cell, int k) {
    if (k < 1 || k > n - 1) return false;
    std::vector<NodeMask> nbrs(n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (cell[static_cast<std::size_t>(s) * n + t]) nbrs[s] |= bit(t);
    for (NodeMask x = 1; x < (NodeMask{1} << n); ++x) {
        if (set_size(x) > n - k) continue;
        NodeMask gamma = 0;
        for (NodeMask m = x; m; m &= m - 1) gamma |= nbrs[std::countr_zero(m)];
        if (set_size(gamma) < set_size(x) + k) return false;
    }
    return true;
}

inline OracleAnswer bipartite_oracle_k_elementary(const std::vector<int>& m_s, const std::vector<int>& m_t, int k) {
    int n = static_cast<int>(m_s.size());
    if (n > 6) throw cap_exceeded("bipartite oracle capped at n <= 6");
    DegreeSpec side_spec(m_t, m_s);  // rows are S (degree m_S), columns are T
    std::vector<int> caps(static_cast<std::size_t>(n) * n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            caps[static_cast<std::size_t>(s) * n + t] = (m_s[s] > 0 && m_t[t] > 0) ? 1 : 0;
    // row sums must be m_S: reuse the walk with out = m_S, in = m_T
    DegreeSpec walk_spec(m_s, m_t);
    detail::FittingMatrixWalk walk(walk_spec, std::move(caps));
    OracleAnswer answer;
    walk.run([&](const std::vector<int>& cell) {
        if (bigraph_is_k_elementary_matrix(n, cell, k)) {
            answer.exists = true;
            return true;
        }
        return false;
    });
    return answer;
}

// --- deterministic instance generators for grids and sampled comparisons ----

// every (m_o, m_i) pair with entries in [0, max_value]^n and equal totals
inline void for_each_spec_in_grid(int n, int max_value, const std::function<void(const DegreeSpec&)>& fn) {
    std::vector<std::vector<std::vector<int>>> by_sum(static_cast<std::size_t>(max_value) * n + 1);
    std::vector<int> tuple(n, 0);
    while (true) {
        int s = 0;
        for (int v : tuple) s += v;
        by_sum[s].push_back(tuple);
        int i = n - 1;
        while (i >= 0 && tuple[i] == max_value) tuple[i--] = 0;
        if (i < 0) break;
        ++tuple[i];
    }
    for (const auto& group : by_sum)
        for (const auto& mo : group)
            for (const auto& mi : group) fn(DegreeSpec(mo, mi));
}

inline DegreeSpec random_spec(std::mt19937& rng, int n, int max_value) {
    std::uniform_int_distribution<int> dist(0, max_value);
    while (true) {
        std::vector<int> mo(n), mi(n);
        int so = 0, si = 0;
        for (int v = 0; v < n; ++v) so += mo[v] = dist(rng);
        for (int v = 0; v < n; ++v) si += mi[v] = dist(rng);
        if (so == si) return DegreeSpec(mo, mi);
    }
}

inline Digraph random_simple_digraph(std::mt19937& rng, int n, double arc_prob) {
    std::bernoulli_distribution flip(arc_prob);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && flip(rng)) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

inline Digraph random_multi_digraph(std::mt19937& rng, int n, int max_mult, bool loops) {
    std::uniform_int_distribution<int> dist(0, max_mult);
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) {
            if (u == v && !loops) continue;
            for (int c = dist(rng); c > 0; --c) arcs.emplace_back(u, v);
        }
    return Digraph(n, std::move(arcs));
}

}  // namespace ddf
