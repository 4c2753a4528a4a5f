#pragma once

// Exact strong-, k-edge- and k-node-connectivity verification.  There are four
// deliberately independent routes to node-connectivity: the removal
// definition, the bi-set in-degree bound, the one-way wall bound, and openly
// disjoint paths via node-split max-flow.  Tests cross-check all four.

#include <limits>
#include <stdexcept>

#include "ddf/digraph.hpp"
#include "ddf/flow.hpp"

namespace ddf {

inline constexpr int kSubsetScanCap = 20;  // 2^n enumerations
inline constexpr int kBisetScanCap = 14;   // 3^n enumerations
inline constexpr int kPairScanCap = 10;    // 4^n enumerations

namespace detail {

inline void require_subset_scan(int n) {
    if (n > kSubsetScanCap)
        throw cap_exceeded("subset enumeration capped at n <= " + std::to_string(kSubsetScanCap));
}
inline void require_biset_scan(int n) {
    if (n > kBisetScanCap)
        throw cap_exceeded("bi-set enumeration capped at n <= " + std::to_string(kBisetScanCap));
}
inline void require_pair_scan(int n) {
    if (n > kPairScanCap)
        throw cap_exceeded("subset-pair enumeration capped at n <= " + std::to_string(kPairScanCap));
}

}  // namespace detail

inline bool is_strong(const Digraph& g) {
    int n = g.n();
    if (n <= 1) return true;
    auto sweep = [&](bool forward) {
        NodeMask seen = bit(0), frontier = bit(0);
        while (frontier) {
            NodeMask next = 0;
            for (NodeMask m = frontier; m; m &= m - 1) {
                NodeId v = std::countr_zero(m);
                next |= forward ? g.out_neighbors(v) : g.in_neighbors(v);
            }
            frontier = next & ~seen;
            seen |= next;
        }
        return seen == full_mask(n);
    };
    return sweep(true) && sweep(false);
}

// Subgraph induced by V - removed, nodes relabelled contiguously.
inline Digraph remove_nodes(const Digraph& g, NodeMask removed) {
    int n = g.n();
    std::vector<int> relabel(n, -1);
    int m = 0;
    for (int v = 0; v < n; ++v)
        if (!contains(removed, v)) relabel[v] = m++;
    std::vector<Arc> arcs;
    for (auto [u, v] : g.arcs())
        if (relabel[u] >= 0 && relabel[v] >= 0) arcs.emplace_back(relabel[u], relabel[v]);
    return Digraph(m, std::move(arcs));
}

// min rho(X) over nonempty proper X; a single-node digraph is vacuously
// k-edge-connected for every k, reported as INT_MAX.
inline int edge_connectivity(const Digraph& g) {
    int n = g.n();
    if (n <= 1) return std::numeric_limits<int>::max();
    auto local = [&](int s, int t) {
        FlowNetwork net(n, s, t);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && g.multiplicity(u, v) > 0) net.add_arc(u, v, g.multiplicity(u, v));
        return net.max_flow();
    };
    int best = std::numeric_limits<int>::max();
    for (int t = 1; t < n; ++t) best = std::min({best, local(0, t), local(t, 0)});
    return best;
}

inline bool is_k_edge_connected(const Digraph& g, int k) {
    if (k <= 0) return true;
    return edge_connectivity(g) >= k;
}

// Maximum number of openly disjoint s->t paths (internally node-disjoint; an
// arc st counts as one path bypassing every internal node).  Parallel arcs and
// loops are ignored.
inline int openly_disjoint_paths(const Digraph& g, NodeId s, NodeId t) {
    int n = g.n();
    if (s < 0 || s >= n || t < 0 || t >= n || s == t) throw std::invalid_argument("bad s/t");
    // v_in = v, v_out = n + v; source = s_out, sink = t_in.
    FlowNetwork net(2 * n, n + s, t);
    for (int v = 0; v < n; ++v)
        if (v != s && v != t) net.add_arc(v, n + v, 1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && g.has_arc(u, v) && v != s && u != t) net.add_arc(n + u, v, 1);
    return net.max_flow();
}

// Largest k <= n-1 such that removing any set of fewer than k nodes leaves a
// strong digraph.  Loops and parallel arcs are collapsed away first.
inline int node_connectivity(const Digraph& g_in) {
    Digraph g = g_in.collapse_to_simple();
    int n = g.n();
    if (n <= 1) return 0;
    if (g.arc_count() == n * (n - 1)) return n - 1;
    int best = std::numeric_limits<int>::max();
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t)
            if (s != t && !g.has_arc(s, t)) best = std::min(best, openly_disjoint_paths(g, s, t));
    return best;
}

// The removal definition, verbatim; enumerates node sets instead of flows so
// it can serve as an independent cross-check.
inline int node_connectivity_by_removal(const Digraph& g_in) {
    Digraph g = g_in.collapse_to_simple();
    int n = g.n();
    if (n <= 1) return 0;
    detail::require_subset_scan(n);
    for (int size = 0; size <= n - 2; ++size)
        for (NodeMask k_set = 0; k_set < (NodeMask{1} << n); ++k_set)
            if (set_size(k_set) == size && !is_strong(remove_nodes(g, k_set))) return size;
    return n - 1;
}

inline bool is_k_connected(const Digraph& g, int k) {
    if (k <= 0) return true;
    if (k > g.n() - 1) return false;
    return node_connectivity(g) >= k;
}

// min over non-trivial bi-sets of rho(B) + w(B), capped at n-1.
inline int min_biset_indegree_plus_wall(const Digraph& g_in) {
    Digraph g = g_in.collapse_to_simple();
    int n = g.n();
    if (n <= 1) return 0;
    detail::require_biset_scan(n);
    NodeMask full = full_mask(n);
    int best = std::numeric_limits<int>::max();
    for (NodeMask inner = 1; inner <= full; ++inner) {
        NodeMask rest = full & ~inner;
        for (NodeMask wall = rest;; wall = (wall - 1) & rest) {
            NodeMask outer = inner | wall;
            if (outer != full) {
                int rho = 0;
                for (NodeMask m = inner; m; m &= m - 1)
                    rho += set_size(g.in_neighbors(std::countr_zero(m)) & ~outer);
                best = std::min(best, rho + set_size(wall));
            }
            if (wall == 0) break;
        }
    }
    return best;
}

// min w(B) over non-trivial one-way bi-sets; n-1 when none exist (complete
// digraph).  Equals node_connectivity for simple digraphs.
inline int min_wall_oneway(const Digraph& g_in) {
    Digraph g = g_in.collapse_to_simple();
    int n = g.n();
    if (n <= 1) return 0;
    detail::require_subset_scan(n);
    NodeMask full = full_mask(n);
    int best = n - 1;
    for (NodeMask inner = 1; inner <= full; ++inner) {
        NodeMask need = 0;
        for (NodeMask m = inner; m; m &= m - 1) need |= g.in_neighbors(std::countr_zero(m));
        NodeMask base = (inner | need) & ~inner;  // wall nodes forced by one-wayness
        if ((inner | need) == full) continue;     // outer would have to be V
        // smallest wall is the forced one
        best = std::min(best, set_size(base));
    }
    return best;
}

}  // namespace ddf
