#include <catch_amalgamated.hpp>

#include "ddf/oracle.hpp"
#include "helpers.hpp"

using namespace ddf;
using namespace ddf::testing;

TEST_CASE("simple-mode enumeration is complete") {
    // count enumerated digraphs against a direct walk over all arc subsets
    std::mt19937 rng(81);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + trial % 2;
        DegreeSpec spec = random_spec(rng, n, n - 1);
        long long walked = 0;
        OracleQuery q{spec, std::nullopt, 0, OracleProperty::none, OracleSimplicity::simple};
        for_each_fitting_digraph(q, [&](const Digraph&) {
            ++walked;
            return false;
        });
        long long direct = 0;
        for_each_simple_digraph(n, [&](const Digraph& g) {
            if (spec.fits(g)) ++direct;
        });
        CHECK(walked == direct);
    }
}

TEST_CASE("multigraph enumeration covers loops and multiplicities") {
    DegreeSpec spec({2, 0}, {1, 1});
    long long count = 0;
    OracleQuery q{spec, std::nullopt, 0, OracleProperty::none, OracleSimplicity::multi};
    for_each_fitting_digraph(q, [&](const Digraph& g) {
        CHECK(spec.fits(g));
        ++count;
        return false;
    });
    // matrices [[a,b],[c,d]] with a+b=2, c+d=0, a+c=1, b+d=1: exactly one (a=1,b=1)
    CHECK(count == 1);
}

TEST_CASE("existence answers on landmark queries") {
    DegreeSpec zeros({0, 0, 0}, {0, 0, 0});
    OracleQuery trivial{zeros, Digraph::complete(3), 2, OracleProperty::node, OracleSimplicity::simple_with_start};
    auto a = oracle_exists(trivial);
    CHECK(a.exists);
    CHECK(a.witness->arc_count() == 0);

    DegreeSpec one({1}, {1});
    OracleQuery impossible{one, std::nullopt, 0, OracleProperty::none, OracleSimplicity::simple};
    CHECK(!oracle_exists(impossible).exists);

    DegreeSpec paper({2, 2, 2, 3}, {2, 2, 2, 3});
    OracleQuery loopless2{paper, std::nullopt, 2, OracleProperty::node, OracleSimplicity::loopless};
    auto answer = oracle_exists(loopless2);
    REQUIRE(answer.exists);
    CHECK(answer.witness->arc_count() == 9);
    CHECK(!answer.witness->has_loops());
    CHECK(node_connectivity(*answer.witness) == 2);
    CHECK(paper.fits(*answer.witness));
}

TEST_CASE("witnesses satisfy the queried property") {
    std::mt19937 rng(82);
    for (int trial = 0; trial < 60; ++trial) {
        DegreeSpec spec = random_spec(rng, 4, 3);
        Digraph d0 = random_simple_digraph(rng, 4, 0.3);
        OracleProperty property[] = {OracleProperty::strong, OracleProperty::edge, OracleProperty::node};
        OracleQuery q{spec, d0, 1 + trial % 2, property[trial % 3], OracleSimplicity::simple_with_start};
        auto answer = oracle_exists(q);
        if (!answer.exists) continue;
        const Digraph& d = *answer.witness;
        CHECK(spec.fits(d));
        CHECK(d.is_simple());
        Digraph whole = d0.plus(d);
        CHECK(whole.is_simple());
        switch (q.property) {
            case OracleProperty::strong: CHECK(is_strong(whole)); break;
            case OracleProperty::edge: CHECK(is_k_edge_connected(whole, q.k)); break;
            case OracleProperty::node: CHECK(is_k_connected(whole, q.k)); break;
            default: break;
        }
    }
}

TEST_CASE("cover queries demand an arc into every named set") {
    DegreeSpec ones({1, 1, 1}, {1, 1, 1});
    OracleQuery q{ones, std::nullopt, 0, OracleProperty::none, OracleSimplicity::simple};
    q.cover = std::vector<NodeMask>{0b001, 0b010, 0b100, 0b011, 0b101, 0b110};
    auto answer = oracle_exists(q);
    REQUIRE(answer.exists);
    for (NodeMask m : *q.cover) CHECK(answer.witness->in_degree_set(m) >= 1);
}

TEST_CASE("bipartite oracle recognizes the complete bigraph and rejects bare matchings") {
    CHECK(bipartite_oracle_k_elementary({4, 4, 4, 4}, {4, 4, 4, 4}, 2).exists);
    CHECK(bipartite_oracle_k_elementary({4, 4, 4, 4}, {4, 4, 4, 4}, 3).exists);
    CHECK(!bipartite_oracle_k_elementary({1, 1, 1, 1}, {1, 1, 1, 1}, 1).exists);
    CHECK(bipartite_oracle_k_elementary({2, 2, 2, 2}, {2, 2, 2, 2}, 1).exists);
}

TEST_CASE("size guards fire instead of silently truncating") {
    DegreeSpec big(std::vector<int>(7, 1), std::vector<int>(7, 1));
    OracleQuery q{big, std::nullopt, 1, OracleProperty::strong, OracleSimplicity::simple};
    CHECK_THROWS_AS(oracle_exists(q), cap_exceeded);
    DegreeSpec multi5(std::vector<int>(5, 1), std::vector<int>(5, 1));
    OracleQuery qm{multi5, std::nullopt, 1, OracleProperty::strong, OracleSimplicity::multi};
    CHECK_THROWS_AS(oracle_exists(qm), cap_exceeded);
}

TEST_CASE("grid and random generators are deterministic") {
    int count = 0;
    for_each_spec_in_grid(3, 2, [&](const DegreeSpec&) { ++count; });
    // tuples of [0,2]^3 grouped by sum: sum over s of c(s)^2 with c = 1,3,6,7,6,3,1
    CHECK(count == 1 + 9 + 36 + 49 + 36 + 9 + 1);
    std::mt19937 a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        DegreeSpec sa = random_spec(a, 4, 3), sb = random_spec(b, 4, 3);
        CHECK(sa.out_all() == sb.out_all());
        CHECK(sa.in_all() == sb.in_all());
    }
}
