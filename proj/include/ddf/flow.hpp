#pragma once

// Integral max-flow on small capacitated networks (Dinic).  Exact and
// deterministic; every connectivity question in the library reduces to a
// handful of these flows, so asymptotics are irrelevant at this scale.

#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

namespace ddf {

class FlowNetwork {
  public:
    FlowNetwork(int node_count, int source, int sink)
        : n_(node_count), source_(source), sink_(sink), head_(node_count, -1) {
        if (source < 0 || source >= node_count || sink < 0 || sink >= node_count || source == sink)
            throw std::invalid_argument("bad source/sink");
    }

    int add_arc(int from, int to, int capacity) {
        if (capacity < 0) throw std::invalid_argument("negative capacity");
        int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = id;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = id + 1;
        return id;
    }

    int node_count() const { return n_; }
    int source() const { return source_; }
    int sink() const { return sink_; }

    // Flow currently on the arc returned by add_arc (call after max_flow).
    int flow_on(int arc_id) const { return arcs_[arc_id + 1].cap; }

    int max_flow() {
        int total = 0;
        std::vector<int> level(n_), it(n_);
        while (bfs(level)) {
            for (int v = 0; v < n_; ++v) it[v] = head_[v];
            while (int pushed = dfs(source_, std::numeric_limits<int>::max(), level, it)) total += pushed;
        }
        return total;
    }

    // Nodes reachable from the source in the residual network; the source side
    // of a minimum cut.  Valid after max_flow.
    std::vector<bool> min_cut_source_side() const {
        std::vector<bool> seen(n_, false);
        std::queue<int> q;
        seen[source_] = true;
        q.push(source_);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && !seen[arcs_[e].to]) {
                    seen[arcs_[e].to] = true;
                    q.push(arcs_[e].to);
                }
        }
        return seen;
    }

  private:
    struct ArcRec {
        int to, next, cap;
    };

    bool bfs(std::vector<int>& level) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[source_] = 0;
        q.push(source_);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e = head_[v]; e != -1; e = arcs_[e].next)
                if (arcs_[e].cap > 0 && level[arcs_[e].to] < 0) {
                    level[arcs_[e].to] = level[v] + 1;
                    q.push(arcs_[e].to);
                }
        }
        return level[sink_] >= 0;
    }

    int dfs(int v, int limit, const std::vector<int>& level, std::vector<int>& it) {
        if (v == sink_) return limit;
        for (int& e = it[v]; e != -1; e = arcs_[e].next) {
            ArcRec& a = arcs_[e];
            if (a.cap > 0 && level[a.to] == level[v] + 1) {
                int got = dfs(a.to, std::min(limit, a.cap), level, it);
                if (got > 0) {
                    a.cap -= got;
                    arcs_[e ^ 1].cap += got;
                    return got;
                }
            }
        }
        return 0;
    }

    int n_, source_, sink_;
    std::vector<int> head_;
    std::vector<ArcRec> arcs_;
};

}  // namespace ddf
