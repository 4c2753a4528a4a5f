#pragma once

// Test-only reference implementations.  These deliberately recompute results
// through routes the library does not use, so they can serve as independent
// oracles for the fast paths.

#include <random>
#include <set>
#include <vector>

#include "ddf/bisets.hpp"
#include "ddf/connectivity.hpp"
#include "ddf/digraph.hpp"
#include "ddf/oracle.hpp"

namespace ddf::testing {

inline Digraph random_multi_test(std::mt19937& rng, int n_low = 3, int n_high = 5) {
    std::uniform_int_distribution<int> pick_n(n_low, n_high);
    return random_multi_digraph(rng, pick_n(rng), 2, true);
}

inline Digraph random_simple_test(std::mt19937& rng, int n_low = 3, int n_high = 5) {
    std::uniform_int_distribution<int> pick_n(n_low, n_high);
    return random_simple_digraph(rng, pick_n(rng), 0.4);
}

// d(Z, X) recomputed from the multiplicity matrix instead of the arc list
inline int d_between_reference(const Digraph& g, NodeMask z, NodeMask x) {
    int total = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (contains(z, u) && contains(x, v)) total += g.multiplicity(u, v);
    return total;
}

// min rho(X) by plain subset scan
inline int edge_connectivity_by_subsets(const Digraph& g) {
    int best = std::numeric_limits<int>::max();
    for (NodeMask x = 1; x < full_mask(g.n()); ++x) best = std::min(best, g.in_degree_set(x));
    return best;
}

// all simple digraphs on n nodes, one arc mask at a time
template <class F>
void for_each_simple_digraph(int n, F&& fn) {
    std::vector<Arc> positions;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v) positions.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << positions.size()); ++mask) {
        std::vector<Arc> arcs;
        for (std::size_t i = 0; i < positions.size(); ++i)
            if ((mask >> i) & 1) arcs.push_back(positions[i]);
        fn(Digraph(n, std::move(arcs)));
    }
}

// exact smallest number of new arcs whose addition makes g k-node-connected,
// by breadth-first search over arc subsets of the complete digraph
inline int min_arcs_to_k_connected(const Digraph& g, int k, int limit = 12) {
    if (is_k_connected(g, k)) return 0;
    std::vector<Arc> candidates;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v) candidates.emplace_back(u, v);
    for (int count = 1; count <= limit; ++count) {
        std::vector<int> pick(count);
        std::function<bool(int, int)> rec = [&](int idx, int from) {
            if (idx == count) {
                std::vector<Arc> arcs = g.arcs();
                for (int i : pick) arcs.push_back(candidates[i]);
                return is_k_connected(Digraph(g.n(), std::move(arcs)), k);
            }
            for (int i = from; i < static_cast<int>(candidates.size()); ++i) {
                pick[idx] = i;
                if (rec(idx + 1, i + 1)) return true;
            }
            return false;
        };
        if (rec(0, 0)) return count;
    }
    return limit + 1;
}

// maximum of sum(k - w(B)) over independent families, by depth-first search
// over all independent subsets of the candidate bi-sets
inline int max_p1_by_family_dfs(const Digraph& g, int k) {
    std::vector<BiSet> candidates;
    int n = g.n();
    NodeMask full = full_mask(n);
    for (NodeMask inner = 1; inner <= full; ++inner)
        for (NodeMask wall = full & ~inner;; wall = (wall - 1) & (full & ~inner)) {
            BiSet b{inner | wall, inner};
            if ((inner | wall) != full && b.wall_size() < k && is_oneway(g, b)) candidates.push_back(b);
            if (wall == 0) break;
        }
    int best = 0;
    std::function<void(std::size_t, std::vector<BiSet>&, int)> rec = [&](std::size_t i, std::vector<BiSet>& fam,
                                                                         int total) {
        best = std::max(best, total);
        for (std::size_t j = i; j < candidates.size(); ++j) {
            bool ok = true;
            for (const auto& b : fam)
                if (!independent(b, candidates[j], n)) ok = false;
            if (!ok) continue;
            fam.push_back(candidates[j]);
            rec(j + 1, fam, total + k - candidates[j].wall_size());
            fam.pop_back();
        }
    };
    std::vector<BiSet> fam;
    rec(0, fam, 0);
    return best;
}

}  // namespace ddf::testing
