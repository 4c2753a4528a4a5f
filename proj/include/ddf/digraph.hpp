#pragma once

// Core directed-graph representation: loops and parallel arcs are first-class,
// simplicity is a queried property, never silently enforced.  Node sets are
// bitmasks, which caps the library at 62 nodes -- every feasibility check in
// this library enumerates subsets, so desk scale is the design point.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ddf {

using NodeId = int;
using NodeMask = std::uint64_t;
using Arc = std::pair<NodeId, NodeId>;  // (tail, head)

inline constexpr int kMaxNodes = 62;

struct cap_exceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline NodeMask bit(NodeId v) { return NodeMask{1} << v; }
inline NodeMask full_mask(int n) { return (NodeMask{1} << n) - 1; }
inline bool contains(NodeMask m, NodeId v) { return (m >> v) & 1; }
inline int set_size(NodeMask m) { return std::popcount(m); }

inline std::vector<NodeId> mask_to_nodes(NodeMask m) {
    std::vector<NodeId> out;
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

inline NodeMask nodes_to_mask(const std::vector<NodeId>& nodes, int n) {
    NodeMask m = 0;
    for (NodeId v : nodes) {
        if (v < 0 || v >= n) throw std::invalid_argument("node id out of range");
        m |= bit(v);
    }
    return m;
}

class Digraph {
  public:
    explicit Digraph(int n, std::vector<Arc> arcs = {}) : n_(n), arcs_(std::move(arcs)) {
        if (n < 0 || n > kMaxNodes) throw std::invalid_argument("node count must be in [0, 62]");
        mult_.assign(static_cast<std::size_t>(n) * n, 0);
        in_deg_.assign(n, 0);
        out_deg_.assign(n, 0);
        loops_.assign(n, 0);
        in_nbrs_.assign(n, 0);
        out_nbrs_.assign(n, 0);
        for (auto [u, v] : arcs_) {
            if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("arc endpoint out of range");
            ++mult_[static_cast<std::size_t>(u) * n + v];
            ++out_deg_[u];
            ++in_deg_[v];
            if (u == v) {
                ++loops_[u];
            } else {
                in_nbrs_[v] |= bit(u);
                out_nbrs_[u] |= bit(v);
            }
        }
        std::sort(arcs_.begin(), arcs_.end());
        simple_ = true;
        for (int v = 0; v < n; ++v)
            if (loops_[v] > 0) simple_ = false;
        for (int u = 0; u < n && simple_; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && mult_[static_cast<std::size_t>(u) * n + v] > 1) { simple_ = false; break; }
    }

    static Digraph empty(int n) { return Digraph(n); }

    static Digraph complete(int n) {
        std::vector<Arc> arcs;
        arcs.reserve(static_cast<std::size_t>(n) * (n - 1));
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v) arcs.emplace_back(u, v);
        return Digraph(n, std::move(arcs));
    }

    int n() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    int multiplicity(NodeId u, NodeId v) const { return mult_[static_cast<std::size_t>(u) * n_ + v]; }
    bool has_arc(NodeId u, NodeId v) const { return multiplicity(u, v) > 0; }

    // In-degree of a node counts loops; in-degree of the singleton set does not.
    int in_degree(NodeId v) const { return in_deg_[v]; }
    int out_degree(NodeId v) const { return out_deg_[v]; }
    int loops_at(NodeId v) const { return loops_[v]; }

    // Strict neighbourhoods (loops excluded): u is an in-neighbour of v iff an
    // arc uv with u != v exists.
    NodeMask in_neighbors(NodeId v) const { return in_nbrs_[v]; }
    NodeMask out_neighbors(NodeId v) const { return out_nbrs_[v]; }

    bool is_simple() const { return simple_; }

    bool has_loops() const {
        for (int v = 0; v < n_; ++v)
            if (loops_[v]) return true;
        return false;
    }

    // rho(X): arcs with tail outside X and head inside X.
    int in_degree_set(NodeMask x) const {
        int count = 0;
        for (auto [u, v] : arcs_)
            if (!contains(x, u) && contains(x, v)) ++count;
        return count;
    }

    // delta(X): arcs leaving X.
    int out_degree_set(NodeMask x) const {
        int count = 0;
        for (auto [u, v] : arcs_)
            if (contains(x, u) && !contains(x, v)) ++count;
        return count;
    }

    // d(Z,X): arcs with tail in Z and head in X; a loop at a node in both Z and X counts.
    int d_between(NodeMask z, NodeMask x) const {
        int count = 0;
        for (auto [u, v] : arcs_)
            if (contains(z, u) && contains(x, v)) ++count;
        return count;
    }

    Digraph plus(const Digraph& other) const {
        if (other.n_ != n_) throw std::invalid_argument("node counts differ");
        std::vector<Arc> arcs = arcs_;
        arcs.insert(arcs.end(), other.arcs_.begin(), other.arcs_.end());
        return Digraph(n_, std::move(arcs));
    }

    // Drops loops and merges parallel arcs.  Node-connectivity is insensitive
    // to both, so checks in that family operate on the collapsed graph.
    Digraph collapse_to_simple() const {
        std::vector<Arc> arcs;
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v && multiplicity(u, v) > 0) arcs.emplace_back(u, v);
        return Digraph(n_, std::move(arcs));
    }

    bool operator==(const Digraph& other) const { return n_ == other.n_ && arcs_ == other.arcs_; }

  private:
    int n_;
    std::vector<Arc> arcs_;  // sorted multiset
    std::vector<int> mult_;  // n*n multiplicity matrix
    std::vector<int> in_deg_, out_deg_, loops_;
    std::vector<NodeMask> in_nbrs_, out_nbrs_;
    bool simple_ = true;
};

// D*[Z,X]: the simple digraph with arc uv (u != v) iff u in Z or v in X.
// It has |Z|(n-1) + (n-|Z|)|X| - |X-Z| arcs; every node of X cap Z is full.
inline Digraph star_graph(int n, NodeMask z, NodeMask x) {
    std::vector<Arc> arcs;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && (contains(z, u) || contains(x, v))) arcs.emplace_back(u, v);
    return Digraph(n, std::move(arcs));
}

inline Digraph complement(const Digraph& g) {
    if (!g.is_simple()) throw std::invalid_argument("complement requires a simple digraph");
    std::vector<Arc> arcs;
    for (int u = 0; u < g.n(); ++u)
        for (int v = 0; v < g.n(); ++v)
            if (u != v && !g.has_arc(u, v)) arcs.emplace_back(u, v);
    return Digraph(g.n(), std::move(arcs));
}

// Paired out-/in-degree prescriptions over [0, n).  The common total of the
// two sides is the arc count gamma of any digraph fitting the spec.
class DegreeSpec {
  public:
    DegreeSpec(std::vector<int> m_o, std::vector<int> m_i)
        : m_o_(std::move(m_o)), m_i_(std::move(m_i)) {
        if (m_o_.size() != m_i_.size()) throw std::invalid_argument("degree spec sides differ in length");
        if (m_o_.size() > static_cast<std::size_t>(kMaxNodes))
            throw std::invalid_argument("degree spec longer than 62 nodes");
        for (int d : m_o_)
            if (d < 0) throw std::invalid_argument("negative out-degree prescription");
        for (int d : m_i_)
            if (d < 0) throw std::invalid_argument("negative in-degree prescription");
        int so = std::accumulate(m_o_.begin(), m_o_.end(), 0);
        int si = std::accumulate(m_i_.begin(), m_i_.end(), 0);
        if (so != si)
            throw std::invalid_argument("degree spec totals differ: sum m_o = " + std::to_string(so) +
                                        ", sum m_i = " + std::to_string(si));
        gamma_ = so;
    }

    int n() const { return static_cast<int>(m_o_.size()); }
    int gamma() const { return gamma_; }
    int out(NodeId v) const { return m_o_[v]; }
    int in(NodeId v) const { return m_i_[v]; }
    const std::vector<int>& out_all() const { return m_o_; }
    const std::vector<int>& in_all() const { return m_i_; }

    int out_sum(NodeMask z) const {
        int s = 0;
        for (NodeMask m = z; m; m &= m - 1) s += m_o_[std::countr_zero(m)];
        return s;
    }
    int in_sum(NodeMask x) const {
        int s = 0;
        for (NodeMask m = x; m; m &= m - 1) s += m_i_[std::countr_zero(m)];
        return s;
    }

    bool fits(const Digraph& g) const {
        if (g.n() != n()) return false;
        for (int v = 0; v < n(); ++v)
            if (g.out_degree(v) != m_o_[v] || g.in_degree(v) != m_i_[v]) return false;
        return true;
    }

    // Node order by decreasing m_i (resp. m_o), ties by index.  Prefix h of
    // this order is "the h largest values of m_i" in the checkers.
    std::vector<NodeId> order_by_in_desc() const { return order_desc(m_i_); }
    std::vector<NodeId> order_by_out_desc() const { return order_desc(m_o_); }

    std::vector<int> prefix_in_sums() const { return prefix_sums(m_i_, order_by_in_desc()); }
    std::vector<int> prefix_out_sums() const { return prefix_sums(m_o_, order_by_out_desc()); }

  private:
    static std::vector<NodeId> order_desc(const std::vector<int>& vals) {
        std::vector<NodeId> idx(vals.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](NodeId a, NodeId b) { return vals[a] > vals[b]; });
        return idx;
    }
    static std::vector<int> prefix_sums(const std::vector<int>& vals, const std::vector<NodeId>& order) {
        std::vector<int> ps(vals.size() + 1, 0);
        for (std::size_t i = 0; i < order.size(); ++i) ps[i + 1] = ps[i] + vals[order[i]];
        return ps;
    }

    std::vector<int> m_o_, m_i_;
    int gamma_;
};

}  // namespace ddf
