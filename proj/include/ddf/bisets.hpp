#pragma once

// Bi-set algebra: meet/join/wall arithmetic, crossing and independence tests,
// the degree-encoding functions p1/p2/p3, and exact maximization of
// sum(k - w(B)) over independent families of one-way bi-sets.  The maximizer
// is a branch-and-bound over the conflict graph of candidate bi-sets; it
// replaces a polynomial-time covering algorithm at desk scale.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ddf/digraph.hpp"

namespace ddf {

struct BiSet {
    NodeMask outer = 0;
    NodeMask inner = 0;

    BiSet() = default;
    BiSet(NodeMask outer_set, NodeMask inner_set) : outer(outer_set), inner(inner_set) {
        if ((inner & ~outer) != 0) throw std::invalid_argument("bi-set inner set not inside outer set");
    }

    NodeMask wall() const { return outer & ~inner; }
    int wall_size() const { return set_size(wall()); }
    bool is_trivial(int n) const { return inner == 0 || outer == full_mask(n); }

    bool operator==(const BiSet&) const = default;
    // lexicographic (inner, outer) order; used for deterministic witnesses
    bool operator<(const BiSet& o) const { return inner != o.inner ? inner < o.inner : outer < o.outer; }
};

inline BiSet meet(const BiSet& b, const BiSet& c) { return {b.outer & c.outer, b.inner & c.inner}; }
inline BiSet join(const BiSet& b, const BiSet& c) { return {b.outer | c.outer, b.inner | c.inner}; }

inline bool comparable(const BiSet& b, const BiSet& c) {
    bool b_in_c = (b.inner & ~c.inner) == 0 && (b.outer & ~c.outer) == 0;
    bool c_in_b = (c.inner & ~b.inner) == 0 && (c.outer & ~b.outer) == 0;
    return b_in_c || c_in_b;
}

inline bool is_crossing(const BiSet& b, const BiSet& c, int n) {
    return (b.outer | c.outer) != full_mask(n) && (b.inner & c.inner) != 0 && !comparable(b, c);
}

// An arc covers B when it enters both the outer and the inner set; loops cover
// nothing.
inline bool arc_covers(const Arc& e, const BiSet& b) {
    return !contains(b.outer, e.first) && contains(b.inner, e.second);
}

inline bool is_oneway(const Digraph& g, const BiSet& b) {
    for (NodeMask m = b.inner; m; m &= m - 1)
        if (g.in_neighbors(std::countr_zero(m)) & ~b.outer) return false;
    return true;
}

// No single arc can cover both: inner sets disjoint or outer sets co-disjoint.
inline bool independent(const BiSet& b, const BiSet& c, int n) {
    return (b.inner & c.inner) == 0 || (b.outer | c.outer) == full_mask(n);
}

struct BiSetFamily {
    std::vector<BiSet> members;

    bool is_independent(int n) const {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!independent(members[i], members[j], n)) return false;
        return true;
    }
};

// Context for the functions p1/p2/p3 of the degree-specified augmentation
// machinery.  N_plus/N_minus are closed neighbourhoods taken from the arcs
// the augmenting digraph must not parallel: the whole of D0 when the
// augmented digraph is to be simple, or a prescribed subset F0 of A0 when
// only parallels with F0 are forbidden.
struct PFunctionContext {
    Digraph d0;
    DegreeSpec spec;
    int k;
    std::vector<NodeMask> n_plus, n_minus;

    PFunctionContext(Digraph d0_in, DegreeSpec spec_in, int k_in)
        : PFunctionContext(d0_in, std::move(spec_in), k_in, d0_in) {}

    PFunctionContext(Digraph d0_in, DegreeSpec spec_in, int k_in, const Digraph& parallel_forbidden)
        : d0(std::move(d0_in)), spec(std::move(spec_in)), k(k_in) {
        if (!d0.is_simple()) throw std::invalid_argument("p-function context requires a simple digraph");
        if (d0.n() != spec.n() || parallel_forbidden.n() != d0.n())
            throw std::invalid_argument("context node counts differ");
        int n = d0.n();
        n_plus.resize(n);
        n_minus.resize(n);
        for (int v = 0; v < n; ++v) {
            n_plus[v] = bit(v) | parallel_forbidden.out_neighbors(v);
            n_minus[v] = bit(v) | parallel_forbidden.in_neighbors(v);
        }
    }
};

struct PValues {
    int p1, p2, p3, p;
};

inline PValues p_value(const PFunctionContext& ctx, const BiSet& b) {
    int n = ctx.d0.n();
    if (b.is_trivial(n))
        throw std::invalid_argument("p is undefined on trivial bi-sets");
    PValues v{};
    v.p1 = ctx.k - b.wall_size();
    v.p2 = 0;
    NodeMask full = full_mask(n);
    NodeMask outer_co = full & ~b.outer;
    if (set_size(outer_co) == 1) {
        NodeId u = std::countr_zero(outer_co);
        if (b.inner == (full & ~ctx.n_plus[u])) v.p2 = ctx.spec.out(u);
    }
    v.p3 = 0;
    if (set_size(b.inner) == 1) {
        NodeId node = std::countr_zero(b.inner);
        v.p3 = ctx.spec.in(node) + set_size(ctx.n_minus[node]) - set_size(b.outer);
    }
    v.p = std::max({v.p1, v.p2, v.p3, 0});
    return v;
}

inline constexpr int kMaxP1HardCap = 10;

struct P1Result {
    int value = 0;
    std::vector<BiSet> family;  // lexicographically least optimum, sorted
};

namespace detail {

// Candidate bi-sets for the maximization: non-trivial, one-way with respect to
// the given strict in-neighbour masks, wall smaller than k, optionally
// filtered.  For a fixed inner set the minimal legal outer set is
// inner | N^-(inner); larger outer sets only shrink the weight, but they can
// be needed for independence, so all of them below the weight bound are kept.
inline std::vector<BiSet> p1_candidates(int n, const std::vector<NodeMask>& in_nbrs, int k,
                                        const std::function<bool(const BiSet&)>& filter = nullptr) {
    std::vector<BiSet> out;
    if (k <= 0) return out;
    NodeMask full = full_mask(n);
    for (NodeMask inner = 1; inner <= full; ++inner) {
        NodeMask need = 0;
        for (NodeMask m = inner; m; m &= m - 1) need |= in_nbrs[std::countr_zero(m)];
        NodeMask base = inner | need;
        if (base == full) continue;
        int base_wall = set_size(base & ~inner);
        if (base_wall >= k) continue;
        NodeMask rest = full & ~base;
        for (NodeMask extra = rest;; extra = (extra - 1) & rest) {
            NodeMask outer = base | extra;
            if (outer != full && base_wall + set_size(extra) < k) {
                BiSet b{outer, inner};
                if (!filter || filter(b)) out.push_back(b);
            }
            if (extra == 0) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Exact max-weight independent set over the conflict graph of the candidates.
class FamilySolver {
  public:
    FamilySolver(const std::vector<BiSet>& candidates, int n, int k) : count_(candidates.size()) {
        words_ = (count_ + 63) / 64;
        // search in weight-descending order so the additive bound bites early
        order_.resize(count_);
        for (int i = 0; i < count_; ++i) order_[i] = i;
        std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
            return k - candidates[a].wall_size() > k - candidates[b].wall_size();
        });
        weight_.resize(count_);
        for (int i = 0; i < count_; ++i) weight_[i] = k - candidates[order_[i]].wall_size();
        conflict_.assign(static_cast<std::size_t>(count_) * words_, 0);
        for (int i = 0; i < count_; ++i)
            for (int j = i + 1; j < count_; ++j)
                if (!independent(candidates[order_[i]], candidates[order_[j]], n)) {
                    conflict_[static_cast<std::size_t>(i) * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
                    conflict_[static_cast<std::size_t>(j) * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
                }
    }

    // max total weight over independent subsets of the candidates whose
    // order_-index is allowed; `forced` weights are added on top
    int solve(std::vector<std::uint64_t> free, int forced) {
        best_ = forced;
        dfs(free, forced);
        return best_;
    }

    std::vector<std::uint64_t> all_free() const {
        std::vector<std::uint64_t> free(words_, 0);
        for (int i = 0; i < count_; ++i) free[i / 64] |= std::uint64_t{1} << (i % 64);
        return free;
    }

    void drop(std::vector<std::uint64_t>& free, int original_index_in_order) const {
        free[original_index_in_order / 64] &= ~(std::uint64_t{1} << (original_index_in_order % 64));
    }
    void drop_conflicts(std::vector<std::uint64_t>& free, int idx) const {
        for (int w = 0; w < words_; ++w) free[w] &= ~conflict_[static_cast<std::size_t>(idx) * words_ + w];
    }
    bool is_free(const std::vector<std::uint64_t>& free, int idx) const {
        return (free[idx / 64] >> (idx % 64)) & 1;
    }
    int position_of(int candidate_index) const {
        for (int i = 0; i < count_; ++i)
            if (order_[i] == candidate_index) return i;
        return -1;
    }

  private:
    void dfs(std::vector<std::uint64_t>& free, int cur) {
        int slack = 0;
        for (int w = 0; w < words_; ++w)
            for (std::uint64_t m = free[w]; m; m &= m - 1) slack += weight_[w * 64 + std::countr_zero(m)];
        if (cur + slack <= best_) {
            if (cur > best_) best_ = cur;
            return;
        }
        int v = -1;
        for (int w = 0; w < words_ && v < 0; ++w)
            if (free[w]) v = w * 64 + std::countr_zero(free[w]);
        if (v < 0) {
            if (cur > best_) best_ = cur;
            return;
        }
        std::vector<std::uint64_t> with = free;
        drop(with, v);
        drop_conflicts(with, v);
        dfs(with, cur + weight_[v]);
        drop(free, v);
        dfs(free, cur);
    }

    int count_, words_;
    std::vector<int> order_, weight_;
    std::vector<std::uint64_t> conflict_;
    int best_ = 0;
};

inline void require_max_p1_cap(int n) {
    if (n > kMaxP1HardCap)
        throw cap_exceeded("independent-family search capped at n <= " + std::to_string(kMaxP1HardCap));
}

inline int max_p1_value_masks(int n, const std::vector<NodeMask>& in_nbrs, int k,
                              const std::function<bool(const BiSet&)>& filter = nullptr) {
    require_max_p1_cap(n);
    auto candidates = p1_candidates(n, in_nbrs, k, filter);
    if (candidates.empty()) return 0;
    FamilySolver solver(candidates, n, k);
    return solver.solve(solver.all_free(), 0);
}

inline P1Result max_p1_family_masks(int n, const std::vector<NodeMask>& in_nbrs, int k,
                                    const std::function<bool(const BiSet&)>& filter = nullptr) {
    require_max_p1_cap(n);
    auto candidates = p1_candidates(n, in_nbrs, k, filter);
    P1Result result;
    if (candidates.empty()) return result;
    FamilySolver solver(candidates, n, k);
    auto free = solver.all_free();
    result.value = solver.solve(free, 0);
    // fix members one by one in lexicographic candidate order; a candidate
    // joins the witness iff some optimum extends the current prefix with it
    int got = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        int pos = solver.position_of(static_cast<int>(c));
        if (!solver.is_free(free, pos)) continue;
        auto trial = free;
        solver.drop(trial, pos);
        solver.drop_conflicts(trial, pos);
        int w = k - candidates[c].wall_size();
        if (solver.solve(trial, got + w) == result.value) {
            result.family.push_back(candidates[c]);
            got += w;
            free = trial;
        } else {
            solver.drop(free, pos);
        }
    }
    return result;
}

}  // namespace detail

inline std::vector<NodeMask> in_neighbor_masks(const Digraph& g) {
    std::vector<NodeMask> masks(g.n());
    for (int v = 0; v < g.n(); ++v) masks[v] = g.in_neighbors(v);
    return masks;
}

// Maximum of sum(k - w(B)) over independent families of non-trivial g-one-way
// bi-sets, together with the lexicographically least attaining family.  This
// equals the minimum number of new arcs that make g k-node-connected.
inline P1Result max_p1_independent(const Digraph& g, int k) {
    return detail::max_p1_family_masks(g.n(), in_neighbor_masks(g), k);
}

inline int max_p1_value(const Digraph& g, int k) {
    return detail::max_p1_value_masks(g.n(), in_neighbor_masks(g), k);
}

}  // namespace ddf
