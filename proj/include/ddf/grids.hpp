#pragma once

// Checker-versus-oracle comparison runs.  Each preset sweeps an instance
// family, asks the inequality checker and the exhaustive oracle the same
// question, and reports every disagreement (there must be none).  The presets
// back both the `oracle --grid` command and the acceptance suite.

#include <random>
#include <string>

#include "ddf/characterize.hpp"
#include "ddf/construct.hpp"
#include "ddf/json_io.hpp"
#include "ddf/oracle.hpp"

namespace ddf {

struct GridReport {
    std::string preset;
    long long instances = 0;
    json disagreements = json::array();
    bool ok() const { return disagreements.empty(); }
};

namespace detail {

inline constexpr int kMaxReportedDisagreements = 25;

inline void report_disagreement(GridReport& report, json entry) {
    if (report.disagreements.size() < kMaxReportedDisagreements) report.disagreements.push_back(std::move(entry));
}

inline json spec_json(const DegreeSpec& spec) {
    return json{{"m_o", spec.out_all()}, {"m_i", spec.in_all()}};
}

// the degree sequence of a random subgraph of the complement of d0: such a
// spec always admits a simple augmenting digraph disjoint from d0, so the
// verdict hinges on the connectivity condition rather than on realizability
inline DegreeSpec random_spec_from_complement(std::mt19937& rng, const Digraph& d0, double keep) {
    std::bernoulli_distribution flip(keep);
    std::vector<int> mo(d0.n(), 0), mi(d0.n(), 0);
    for (int u = 0; u < d0.n(); ++u)
        for (int v = 0; v < d0.n(); ++v)
            if (u != v && !d0.has_arc(u, v) && flip(rng)) {
                ++mo[u];
                ++mi[v];
            }
    return DegreeSpec(mo, mi);
}

}  // namespace detail

// Simple k-connected degree sequences against exhaustive enumeration: every
// spec with n = 4 and entries in [0, 3], k = 1..3.
inline GridReport grid_kseq_n4() {
    GridReport report{"kseq-n4"};
    for_each_spec_in_grid(4, 3, [&](const DegreeSpec& spec) {
        // one enumeration answers all three targets: existence is monotone in k
        int best = 0;
        OracleQuery q{spec, std::nullopt, 0, OracleProperty::none, OracleSimplicity::simple};
        for_each_fitting_digraph(q, [&](const Digraph& d) {
            best = std::max(best, node_connectivity(d));
            return best >= 3;
        });
        for (int k = 1; k <= 3; ++k) {
            ++report.instances;
            bool checker = check_k_connected_degree_sequence(spec, k).feasible;
            bool oracle = best >= k;
            if (checker != oracle)
                detail::report_disagreement(
                    report, json{{"spec", detail::spec_json(spec)}, {"k", k}, {"checker", checker}, {"oracle", oracle}});
        }
    });
    return report;
}

// Strong simple realizability: the full n = 4 grid plus sampled n = 5 specs.
inline GridReport grid_strong_n4() {
    GridReport report{"strong-n4"};
    for_each_spec_in_grid(4, 3, [&](const DegreeSpec& spec) {
        ++report.instances;
        bool checker = check_strong_simple(spec).feasible;
        OracleQuery q{spec, std::nullopt, 1, OracleProperty::strong, OracleSimplicity::simple};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report,
                                        json{{"spec", detail::spec_json(spec)}, {"checker", checker}, {"oracle", oracle}});
    });
    return report;
}

inline GridReport grid_strong_n5_random(int samples = 1000, unsigned seed = 1) {
    GridReport report{"strong-n5-random"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        DegreeSpec spec = random_spec(rng, 5, 4);
        ++report.instances;
        bool checker = check_strong_simple(spec).feasible;
        OracleQuery q{spec, std::nullopt, 1, OracleProperty::strong, OracleSimplicity::simple};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report,
                                        json{{"spec", detail::spec_json(spec)}, {"checker", checker}, {"oracle", oracle}});
    }
    return report;
}

// Strong connectivity via a simple augmented digraph over random starts.
inline GridReport grid_strong_augment_n4(int samples = 500, unsigned seed = 2) {
    GridReport report{"strong-augment-n4"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Digraph d0 = random_simple_digraph(rng, 4, 0.35);
        DegreeSpec spec =
            i % 2 ? detail::random_spec_from_complement(rng, d0, 0.55) : random_spec(rng, 4, 3);
        ++report.instances;
        bool checker = check_strong_augment_simple(d0, spec).feasible;
        OracleQuery q{spec, d0, 1, OracleProperty::strong, OracleSimplicity::simple_with_start};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

// Simple k-connected augmentation over random starts, half of them empty so
// the general route reproduces the synthesis case.
inline GridReport grid_node_simple_n4(int samples = 300, unsigned seed = 3) {
    GridReport report{"node-simple-n4"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Digraph d0 = (i % 2 == 0) ? Digraph::empty(4) : random_simple_digraph(rng, 4, 0.3);
        DegreeSpec spec =
            i % 4 < 2 ? random_spec(rng, 4, 3) : detail::random_spec_from_complement(rng, d0, 0.7);
        int k = 1 + (i / 2) % 2;
        ++report.instances;
        AugmentInstance inst{d0, spec, k, ConnectivityMode::node, Simplicity::augmented_simple, std::nullopt};
        bool checker = check_node_augment_simple(inst).feasible;
        OracleQuery q{spec, d0, k, OracleProperty::node, OracleSimplicity::simple_with_start};
        bool oracle = oracle_exists(q).exists;
        bool bad = checker != oracle;
        if (!bad && d0.arc_count() == 0) {
            // the synthesis special case must agree with the prefix checker
            bool prefix = check_k_connected_degree_sequence(spec, k).feasible;
            bad = prefix != checker;
        }
        if (bad)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"k", k},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

inline GridReport grid_node_multi_n4(int samples = 200, unsigned seed = 4) {
    GridReport report{"node-multi-n4"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Digraph d0 = random_simple_digraph(rng, 4, 0.3);
        DegreeSpec spec = random_spec(rng, 4, 2);
        int k = 1 + i % 2;
        bool loopless = i % 3 == 0;
        ++report.instances;
        AugmentInstance inst{d0, spec, k, ConnectivityMode::node,
                             loopless ? Simplicity::loopless : Simplicity::any, std::nullopt};
        bool checker = check_node_augment_multigraph(inst).feasible;
        OracleQuery q{spec, d0, k, OracleProperty::node,
                      loopless ? OracleSimplicity::loopless : OracleSimplicity::multi};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"k", k},
                                                     {"loopless", loopless},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

inline GridReport grid_edge_multi_n4(int samples = 200, unsigned seed = 5) {
    GridReport report{"edge-multi-n4"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Digraph d0 = random_multi_digraph(rng, 4, 1, false);
        DegreeSpec spec = random_spec(rng, 4, 2);
        int k = 1 + i % 3;
        bool loopless = i % 2 == 0;
        ++report.instances;
        bool checker = check_edge_augment_multigraph(d0, spec, k, loopless).feasible;
        OracleQuery q{spec, d0, k, OracleProperty::edge,
                      loopless ? OracleSimplicity::loopless : OracleSimplicity::multi};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"k", k},
                                                     {"loopless", loopless},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

// Covering the tight sets of a random start: the family of minimum-in-degree
// sets of a digraph is crossing, which is exactly the checker's precondition.
inline GridReport grid_cover_n5(int samples = 150, unsigned seed = 6) {
    GridReport report{"cover-n5"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        int n = 4 + i % 2;
        Digraph d0 = random_simple_digraph(rng, n, 0.4);
        int level = edge_connectivity(d0);
        std::vector<NodeMask> cover;
        for (NodeMask k_set = 1; k_set < full_mask(n); ++k_set)
            if (d0.in_degree_set(k_set) == level) cover.push_back(k_set);
        DegreeSpec spec = random_spec(rng, n, 3);
        ++report.instances;
        bool checker = check_cover_crossing_family(spec, cover).feasible;
        OracleQuery q{spec, std::nullopt, 0, OracleProperty::none, OracleSimplicity::simple};
        q.cover = cover;
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

// Raising edge-connectivity by one with a simple digraph, random starts made
// (k-1)-edge-connected by construction.
inline GridReport grid_edge_plus_one_n4(int samples = 150, unsigned seed = 7) {
    GridReport report{"edge-plus-one-n4"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        Digraph d0 = random_multi_digraph(rng, 4, 1, false);
        int k = edge_connectivity(d0) + 1;
        DegreeSpec spec = random_spec(rng, 4, 3);
        ++report.instances;
        bool checker = check_edge_augment_plus_one(d0, spec, k).feasible;
        // the oracle asks for a simple added digraph, parallels to d0 allowed
        OracleQuery q{spec, d0, k, OracleProperty::edge, OracleSimplicity::simple};
        bool oracle = oracle_exists(q).exists;
        if (checker != oracle)
            detail::report_disagreement(report, json{{"d0", digraph_to_json(d0)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"k", k},
                                                     {"checker", checker},
                                                     {"oracle", oracle}});
    }
    return report;
}

// k-elementary degree prescriptions: all side specs with n = 4, entries <= 4,
// k in {1, 2}; feasible verdicts also build the witness and audit it.
inline GridReport grid_kelem_n4() {
    GridReport report{"kelem-n4"};
    for_each_spec_in_grid(4, 4, [&](const DegreeSpec& sides) {
        const auto& m_s = sides.out_all();
        const auto& m_t = sides.in_all();
        for (int k = 1; k <= 2; ++k) {
            ++report.instances;
            auto result = check_k_elementary_degrees(m_s, m_t, k);
            bool oracle = bipartite_oracle_k_elementary(m_s, m_t, k).exists;
            bool bad = result.verdict.feasible != oracle;
            if (result.verdict.feasible && !bad) {
                const auto& g = *result.witness;
                bool diagonal_ok = true;
                std::vector<int> s_asc(4), t_desc(4);
                for (int i = 0; i < 4; ++i) s_asc[i] = t_desc[i] = i;
                std::stable_sort(s_asc.begin(), s_asc.end(), [&](int a, int b) { return m_s[a] < m_s[b]; });
                std::stable_sort(t_desc.begin(), t_desc.end(), [&](int a, int b) { return m_t[a] > m_t[b]; });
                for (int i = 0; i < 4; ++i)
                    if (std::find(g.edges.begin(), g.edges.end(), std::make_pair(s_asc[i], t_desc[i])) ==
                        g.edges.end())
                        diagonal_ok = false;
                std::vector<int> ds(4, 0), dt(4, 0);
                for (auto [s, t] : g.edges) {
                    ++ds[s];
                    ++dt[t];
                }
                bad = !diagonal_ok || ds != m_s || dt != m_t || !is_k_elementary(g, k);
            }
            if (bad)
                detail::report_disagreement(report, json{{"m_S", m_s},
                                                         {"m_T", m_t},
                                                         {"k", k},
                                                         {"checker", result.verdict.feasible},
                                                         {"oracle", oracle}});
        }
    });
    return report;
}

// Subgraph realization against exhaustive search, with certificate audits.
inline GridReport grid_ore_n5(int samples = 1000, unsigned seed = 8) {
    GridReport report{"ore-n5"};
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i) {
        int n = 3 + i % 3;
        Digraph host = random_multi_digraph(rng, n, 2, true);
        DegreeSpec spec = random_spec(rng, n, 3);
        ++report.instances;
        auto res = ore_realize(host, spec);
        // oracle: walk every sub-multiset of the host with the right margins
        std::vector<int> caps(static_cast<std::size_t>(n) * n);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                caps[static_cast<std::size_t>(u) * n + v] =
                    std::min({host.multiplicity(u, v), spec.out(u), u == v ? spec.in(u) : spec.in(v)});
        detail::FittingMatrixWalk walk(spec, std::move(caps));
        bool oracle = walk.run([](const std::vector<int>&) { return true; });
        bool bad = res.feasible != oracle;
        if (res.feasible && !bad) {
            bad = !res.digraph || !spec.fits(*res.digraph);
            if (!bad)
                for (auto [u, v] : res.digraph->arcs())
                    if (host.multiplicity(u, v) < res.digraph->multiplicity(u, v)) bad = true;
        }
        if (!res.feasible && !bad) {
            const auto& cert = *res.certificate;
            int lhs = spec.in_sum(*cert.x) + spec.out_sum(*cert.z) - host.d_between(*cert.z, *cert.x);
            bad = lhs != cert.lhs || lhs <= spec.gamma();
        }
        if (bad)
            detail::report_disagreement(report, json{{"host", digraph_to_json(host)},
                                                     {"spec", detail::spec_json(spec)},
                                                     {"checker", res.feasible},
                                                     {"oracle", oracle}});
    }
    return report;
}

inline GridReport run_grid_preset(const std::string& name) {
    if (name == "kseq-n4") return grid_kseq_n4();
    if (name == "strong-n4") return grid_strong_n4();
    if (name == "strong-n5-random") return grid_strong_n5_random();
    if (name == "strong-augment-n4") return grid_strong_augment_n4();
    if (name == "node-simple-n4") return grid_node_simple_n4();
    if (name == "node-multi-n4") return grid_node_multi_n4();
    if (name == "edge-multi-n4") return grid_edge_multi_n4();
    if (name == "edge-plus-one-n4") return grid_edge_plus_one_n4();
    if (name == "cover-n5") return grid_cover_n5();
    if (name == "kelem-n4") return grid_kelem_n4();
    if (name == "ore-n5") return grid_ore_n5();
    throw std::invalid_argument("unknown grid preset: " + name);
}

inline std::vector<std::string> grid_preset_names() {
    return {"kseq-n4",    "strong-n4",     "strong-n5-random", "strong-augment-n4", "node-simple-n4", "node-multi-n4",
            "edge-multi-n4", "edge-plus-one-n4", "cover-n5",   "kelem-n4",          "ore-n5"};
}

}  // namespace ddf
