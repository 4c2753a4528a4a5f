#include <catch_amalgamated.hpp>

#include "ddf/connectivity.hpp"
#include "ddf/flow.hpp"
#include "helpers.hpp"

using namespace ddf;
using namespace ddf::testing;

namespace {

// min s-t cut by direct enumeration of node bipartitions
int min_cut_by_enumeration(int n, const std::vector<std::tuple<int, int, int>>& arcs, int s, int t) {
    int best = std::numeric_limits<int>::max();
    for (NodeMask side = 0; side < (NodeMask{1} << n); ++side) {
        if (!contains(side, s) || contains(side, t)) continue;
        int cut = 0;
        for (auto [u, v, c] : arcs)
            if (contains(side, u) && !contains(side, v)) cut += c;
        best = std::min(best, cut);
    }
    return best;
}

Digraph paper_two_connected_example() {
    // x=0, y=1, z=2, v=3: {xv,vx,yv,vy,zv,vz,xy,yz,zx}
    return Digraph(4, {{0, 3}, {3, 0}, {1, 3}, {3, 1}, {2, 3}, {3, 2}, {0, 1}, {1, 2}, {2, 0}});
}

}  // namespace

TEST_CASE("max flow equals min cut on small networks") {
    {
        FlowNetwork net(2, 0, 1);
        net.add_arc(0, 1, 7);
        CHECK(net.max_flow() == 7);
    }
    {
        FlowNetwork net(4, 0, 3);
        net.add_arc(0, 1, 2);
        net.add_arc(1, 3, 1);
        net.add_arc(0, 2, 3);
        net.add_arc(2, 3, 5);
        CHECK(net.max_flow() == 4);  // two parallel paths, bottlenecks 1 and 3
    }
    std::mt19937 rng(21);
    std::uniform_int_distribution<int> cap(0, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + trial % 5;
        std::vector<std::tuple<int, int, int>> arcs;
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                if (u != v && cap(rng) > 2) arcs.emplace_back(u, v, cap(rng));
        FlowNetwork net(n, 0, n - 1);
        for (auto [u, v, c] : arcs) net.add_arc(u, v, c);
        CHECK(net.max_flow() == min_cut_by_enumeration(n, arcs, 0, n - 1));
    }
}

TEST_CASE("edge connectivity matches the subset scan") {
    std::vector<Arc> cycle;
    for (int v = 0; v < 5; ++v) cycle.emplace_back(v, (v + 1) % 5);
    CHECK(edge_connectivity(Digraph(5, cycle)) == 1);
    CHECK(edge_connectivity(Digraph::complete(4)) == 3);
    std::mt19937 rng(22);
    for (int trial = 0; trial < 40; ++trial) {
        Digraph g = random_multi_test(rng, 2, 6);
        CHECK(edge_connectivity(g) == edge_connectivity_by_subsets(g));
    }
}

TEST_CASE("edge connectivity never exceeds the minimum degree") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph g = random_multi_test(rng, 2, 5);
        int min_deg = std::numeric_limits<int>::max();
        for (int v = 0; v < g.n(); ++v) min_deg = std::min({min_deg, g.in_degree(v), g.out_degree(v)});
        CHECK(edge_connectivity(g) <= min_deg);
    }
}

TEST_CASE("node connectivity of the worked examples") {
    CHECK(node_connectivity(Digraph::complete(5)) == 4);
    CHECK(node_connectivity(paper_two_connected_example()) == 2);

    // x<->y, y<->z, z<->v, v<->x plus a loop at v: the loop changes nothing
    Digraph ring(4, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}, {3, 3}});
    CHECK(node_connectivity(ring) == 2);

    // swapping the loop with xy (the loop-reducing step) loses 2-connectivity
    Digraph swapped(4, {{1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 0}, {0, 3}, {0, 3}, {3, 1}});
    CHECK(node_connectivity(swapped) == 1);
}

TEST_CASE("openly disjoint paths respect direct arcs and node capacities") {
    Digraph complete = Digraph::complete(4);
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            if (s != t) CHECK(openly_disjoint_paths(complete, s, t) == 3);

    Digraph path(3, {{0, 1}, {1, 2}});
    CHECK(openly_disjoint_paths(path, 0, 2) == 1);
    CHECK(openly_disjoint_paths(path, 2, 0) == 0);

    Digraph g = paper_two_connected_example();
    int worst = std::numeric_limits<int>::max();
    for (int s = 0; s < 4; ++s)
        for (int t = 0; t < 4; ++t)
            if (s != t && !g.has_arc(s, t)) worst = std::min(worst, openly_disjoint_paths(g, s, t));
    CHECK(worst == 2);
}

TEST_CASE("the four connectivity routes agree on every 3-node digraph") {
    for_each_simple_digraph(3, [&](const Digraph& g) {
        int by_flow = node_connectivity(g);
        CHECK(node_connectivity_by_removal(g) == by_flow);
        CHECK(std::min(min_biset_indegree_plus_wall(g), g.n() - 1) == by_flow);
        CHECK(std::min(min_wall_oneway(g), g.n() - 1) == by_flow);
    });
}

TEST_CASE("wall bound equals node connectivity on random 5-node digraphs") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 300; ++trial) {
        Digraph g = random_simple_digraph(rng, 5, 0.15 + 0.15 * (trial % 5));
        CHECK(std::min(min_wall_oneway(g), 4) == node_connectivity(g));
    }
    CHECK(min_wall_oneway(Digraph::complete(4)) == 3);  // sentinel: no one-way bi-set
}

TEST_CASE("deleting an arc never increases connectivity") {
    std::mt19937 rng(25);
    for (int trial = 0; trial < 25; ++trial) {
        Digraph g = random_simple_test(rng);
        if (g.arc_count() == 0) continue;
        int ke = edge_connectivity(g), kn = node_connectivity(g);
        auto arcs = g.arcs();
        arcs.erase(arcs.begin() + static_cast<long>(rng() % arcs.size()));
        Digraph smaller(g.n(), arcs);
        CHECK(edge_connectivity(smaller) <= ke);
        CHECK(node_connectivity(smaller) <= kn);
    }
}

TEST_CASE("node connectivity is bounded by collapsed edge connectivity") {
    std::mt19937 rng(26);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph g = random_multi_test(rng, 2, 5);
        CHECK(node_connectivity(g) <= edge_connectivity(g.collapse_to_simple()));
    }
}
