#pragma once

// Command-line surface.  Verbs: check, realize, augment, witness, verify,
// oracle, bigraph.  Every run prints a single JSON document with the resolved
// configuration echoed under "command".  Exit codes: 0 feasible/verified,
// 1 infeasible/violated, 2 usage or guard error.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ddf/grids.hpp"
#include "ddf/json_io.hpp"

namespace ddf::cli {

inline constexpr const char* kSchema = "ddf-1";

namespace detail {

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    return json::parse(in);  // parse errors carry the byte position
}

inline DegreeSpec spec_of(const InstanceFile& inst) {
    if (!inst.m_o || !inst.m_i) throw std::invalid_argument("instance needs \"m_o\" and \"m_i\"");
    if (static_cast<int>(inst.m_o->size()) != inst.n || static_cast<int>(inst.m_i->size()) != inst.n)
        throw std::invalid_argument("degree prescriptions must have length n");
    return DegreeSpec(*inst.m_o, *inst.m_i);
}

inline Digraph digraph_of(const InstanceFile& inst) {
    return Digraph(inst.n, inst.arcs.value_or(std::vector<Arc>{}));
}

inline int k_of(const InstanceFile& inst, int fallback = 1) { return inst.k.value_or(fallback); }

inline Simplicity parse_simplicity(const std::string& s) {
    if (s == "augmented") return Simplicity::augmented_simple;
    if (s == "augmenting") return Simplicity::augmenting_simple;
    if (s == "loopless") return Simplicity::loopless;
    if (s == "any") return Simplicity::any;
    throw std::invalid_argument("unknown simplicity class: " + s);
}

inline BipartiteInstance bigraph_of(const InstanceFile& inst) {
    BipartiteInstance g;
    g.n = inst.n;
    if (inst.edges) g.edges = *inst.edges;
    if (inst.m_s) g.m_s = *inst.m_s;
    if (inst.m_t) g.m_t = *inst.m_t;
    return g;
}

// --- certificate re-evaluation from primitives ------------------------------

inline bool recheck(const std::string& theorem, const InstanceFile& file, const Certificate& c) {
    int n = file.n;
    NodeMask full = full_mask(n);
    NodeMask x = c.x.value_or(0), z = c.z.value_or(0);
    auto spec = [&]() { return spec_of(file); };
    auto d0 = [&]() { return digraph_of(file); };
    auto match = [&](int lhs, int rhs) {
        bool violated = c.relation == ">=" ? lhs < rhs : lhs > rhs;
        return lhs == c.lhs && rhs == c.rhs && violated;
    };
    if (c.inequality == ineq::simple_realization) {
        auto s = spec();
        return match(s.in_sum(x) + s.out_sum(z) - set_size(x) * set_size(z) + set_size(x & z), s.gamma());
    }
    if (c.inequality == ineq::subgraph_realization) {
        auto s = spec();
        return match(s.in_sum(x) + s.out_sum(z) - d0().d_between(z, x), s.gamma());
    }
    if (c.inequality == ineq::loopless_point) {
        auto s = spec();
        if (!c.node) return false;
        return match(s.in(*c.node) + s.out(*c.node), s.gamma());
    }
    if (c.inequality == ineq::strong_pair) {
        auto s = spec();
        if ((x & z) || (x | z) == 0 || x == full || z == full) return false;
        return match(s.out_sum(z) + s.in_sum(x) - set_size(x) * set_size(z) + 1, s.gamma());
    }
    if (c.inequality == ineq::cover_pair) {
        auto s = spec();
        if (!c.k_set) return false;
        NodeMask k_set = *c.k_set;
        if (k_set == 0 || k_set == full || (z & ~k_set) || (x & k_set)) return false;
        if (theorem == "cover") {
            if (!file.family || std::find(file.family->begin(), file.family->end(), k_set) == file.family->end())
                return false;
        } else if (d0().in_degree_set(k_set) != k_of(file) - 1) {
            return false;
        }
        return match(s.out_sum(z) + s.in_sum(x) - set_size(x) * set_size(z) + 1, s.gamma());
    }
    if (c.inequality == ineq::cut_indegree) {
        auto s = spec();
        if (x == 0 || x == full) return false;
        return match(s.in_sum(x) + d0().in_degree_set(x), k_of(file));
    }
    if (c.inequality == ineq::cut_outdegree) {
        auto s = spec();
        if (x == 0 || x == full) return false;
        return match(s.out_sum(x) + d0().out_degree_set(x), k_of(file));
    }
    if (c.inequality == ineq::point_degree_in) {
        auto s = spec();
        if (!c.node) return false;
        return match(d0().in_degree(*c.node) + s.in(*c.node), k_of(file));
    }
    if (c.inequality == ineq::point_degree_out) {
        auto s = spec();
        if (!c.node) return false;
        return match(d0().out_degree(*c.node) + s.out(*c.node), k_of(file));
    }
    if (c.inequality == ineq::indegree_family || c.inequality == ineq::outdegree_family) {
        auto s = spec();
        auto g = d0();
        if (!c.family) return false;
        int k = k_of(file);
        int total = 0;
        const auto& members = c.family->members;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const BiSet& b = members[i];
            if (b.is_trivial(n) || !is_oneway(g, b)) return false;
            if (c.inequality == ineq::indegree_family && (b.inner & ~z)) return false;
            if (c.inequality == ineq::outdegree_family && (b.outer | z) != full) return false;
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!independent(b, members[j], n)) return false;
            total += k - b.wall_size();
        }
        int cap = c.inequality == ineq::indegree_family ? s.in_sum(z) : s.out_sum(z);
        return match(cap, total);
    }
    if (c.inequality == ineq::node_augment_family) {
        auto s = spec();
        auto g = d0();
        if (!c.family) return false;
        int k = k_of(file);
        Digraph forbidden = file.f0 ? Digraph(n, *file.f0) : g;
        Digraph composite = g.plus(star_graph(n, z, x));
        int total = 0;
        const auto& members = c.family->members;
        for (std::size_t i = 0; i < members.size(); ++i) {
            const BiSet& b = members[i];
            if (b.is_trivial(n) || !is_oneway(composite, b)) return false;
            for (std::size_t j = i + 1; j < members.size(); ++j)
                if (!independent(b, members[j], n)) return false;
            total += k - b.wall_size();
        }
        int lhs = total + s.out_sum(z) + s.in_sum(x) +
                  -(set_size(z) * set_size(x) - set_size(z & x) - forbidden.d_between(z, x));
        return match(lhs, s.gamma());
    }
    if (c.inequality == ineq::strong_augment_pair) {
        auto s = spec();
        auto g = d0();
        int allowed = set_size(z) * set_size(x) - set_size(z & x) - g.d_between(z, x);
        return match(s.out_sum(z) + s.in_sum(x) - allowed, s.gamma());
    }
    if (c.inequality == ineq::strong_augment_source_set) {
        auto s = spec();
        auto g = d0();
        if (!c.k_set) return false;
        NodeMask k_set = *c.k_set;
        if (k_set == 0 || k_set == full || g.in_degree_set(k_set) != 0) return false;
        return match(std::min(s.in_sum(k_set), s.out_sum(full & ~k_set)), 1);
    }
    if (c.inequality == ineq::strong_augment_blocked_pair) {
        auto s = spec();
        auto g = d0();
        if (x == 0 || z == 0 || (x & z)) return false;
        NodeMask seen = x, frontier = x;
        while (frontier) {
            NodeMask next = 0;
            for (NodeMask m = frontier; m; m &= m - 1) next |= g.out_neighbors(std::countr_zero(m));
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen & z) return false;
        int allowed = set_size(z) * set_size(x) - g.d_between(z, x);
        return match(s.out_sum(z) + s.in_sum(x) - allowed + 1, s.gamma());
    }
    if (c.inequality == ineq::k_connected_pair) {
        auto s = spec();
        if (x == z || x == full || z == full) return false;
        return match(s.in_sum(x) + s.out_sum(z) - set_size(x) * set_size(z) + k_of(file), s.gamma());
    }
    if (c.inequality == ineq::bipartite_realization || c.inequality == ineq::k_elementary_pair) {
        if (!file.m_s || !file.m_t) return false;
        int ss = 0, st = 0, gamma = 0;
        for (NodeMask m = x; m; m &= m - 1) ss += (*file.m_s)[std::countr_zero(m)];
        for (NodeMask m = z; m; m &= m - 1) st += (*file.m_t)[std::countr_zero(m)];
        for (int d : *file.m_s) gamma += d;
        int lhs = ss + st - set_size(x) * set_size(z);
        if (c.inequality == ineq::k_elementary_pair) {
            if (x == full || z == full) return false;
            lhs += n - set_size(x) - set_size(z) + k_of(file);
        }
        return match(lhs, gamma);
    }
    return false;
}

inline FeasibilityVerdict run_checker(const std::string& theorem, const InstanceFile& file, bool loopless,
                                      const std::string& simplicity, int family_cap) {
    if (theorem == "strong") return check_strong_simple(spec_of(file));
    if (theorem == "cover") {
        if (!file.family) throw std::invalid_argument("the cover check needs a \"family\" entry");
        return check_cover_crossing_family(spec_of(file), *file.family);
    }
    if (theorem == "edge+1") return check_edge_augment_plus_one(digraph_of(file), spec_of(file), k_of(file));
    if (theorem == "edge-multi")
        return check_edge_augment_multigraph(digraph_of(file), spec_of(file), k_of(file), loopless);
    if (theorem == "node-simple") {
        AugmentInstance inst{digraph_of(file), spec_of(file), k_of(file), ConnectivityMode::node,
                             parse_simplicity(simplicity.empty() ? "augmented" : simplicity), std::nullopt};
        if (file.f0) inst.f0 = Digraph(file.n, *file.f0);
        return check_node_augment_simple(inst, family_cap);
    }
    if (theorem == "node-multi") {
        AugmentInstance inst{digraph_of(file), spec_of(file), k_of(file), ConnectivityMode::node,
                             loopless ? Simplicity::loopless : Simplicity::any, std::nullopt};
        return check_node_augment_multigraph(inst, family_cap);
    }
    if (theorem == "strong-augment") return check_strong_augment_simple(digraph_of(file), spec_of(file));
    if (theorem == "kseq") return check_k_connected_degree_sequence(spec_of(file), k_of(file));
    if (theorem == "kelem") {
        if (!file.m_s || !file.m_t) throw std::invalid_argument("the kelem check needs \"m_S\" and \"m_T\"");
        return check_k_elementary_degrees(*file.m_s, *file.m_t, k_of(file), /*build_witness=*/false).verdict;
    }
    throw std::invalid_argument("unknown theorem selector: " + theorem);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"degree-specified digraph feasibility toolkit"};
    app.require_subcommand(1);

    std::string instance_path, theorem, mode = "node", simplicity, recheck_path, host_path, grid_preset;
    bool loopless = false, flag_simple = false, flag_loopless = false, flag_any = false;
    bool to_digraph = false, from_digraph = false, check_kelem = false, realize_degrees = false;
    int cap = -1, budget = kWitnessBudgetDefault, target_k = -1, samples = -1;
    unsigned seed = 0;
    bool seed_given = false;

    auto* check = app.add_subcommand("check", "decide a characterization and print verdict + certificate");
    check->add_option("--theorem", theorem, "strong|cover|edge+1|edge-multi|node-simple|node-multi|strong-augment|kseq|kelem")
        ->required();
    check->add_option("instance", instance_path, "instance JSON file")->required();
    check->add_flag("--loopless", loopless, "restrict the added digraph to be loopless");
    check->add_option("--simplicity", simplicity, "augmented|augmenting (node-simple only)");
    check->add_option("--cap", cap, "override enumeration caps (prints a warning)");
    check->add_option("--recheck-certificate", recheck_path, "re-evaluate the certificate in this report file");

    auto* realize = app.add_subcommand("realize", "construct a digraph fitting the prescription");
    realize->add_option("instance", instance_path)->required();
    realize->add_flag("--simple", flag_simple);
    realize->add_flag("--loopless", flag_loopless);
    realize->add_flag("--any", flag_any);
    realize->add_option("--host", host_path, "realize a subgraph of this host digraph");

    auto* verify = app.add_subcommand("verify", "report connectivity and fit of a concrete digraph");
    verify->add_option("instance", instance_path)->required();
    verify->add_option("--k", target_k, "connectivity target");
    verify->add_option("--mode", mode, "node|edge|strong");

    auto* witness = app.add_subcommand("witness", "search for an augmenting digraph witness");
    witness->add_option("instance", instance_path)->required();
    witness->add_option("--mode", mode, "node|edge");
    witness->add_option("--simplicity", simplicity, "augmented|augmenting|loopless|any");
    witness->add_option("--budget", budget, "node-count cap for the search");
    witness->add_option("--cap", cap, "override enumeration caps (prints a warning)");

    auto* augment = app.add_subcommand("augment", "check an augmentation instance and build a witness");
    augment->add_option("instance", instance_path)->required();
    augment->add_option("--mode", mode, "node|edge");
    augment->add_option("--simplicity", simplicity, "augmented|augmenting|loopless|any");
    augment->add_option("--budget", budget, "node-count cap for the search");
    augment->add_option("--cap", cap, "override enumeration caps (prints a warning)");

    auto* oracle_cmd = app.add_subcommand("oracle", "run a checker-versus-oracle comparison grid");
    oracle_cmd->add_option("--grid", grid_preset, "preset name (see --list)");
    bool list_presets = false;
    oracle_cmd->add_flag("--list", list_presets, "list preset names");
    oracle_cmd->add_option("--samples", samples, "override sample count for randomized presets");
    oracle_cmd->add_option("--seed", seed, "override the preset's random seed")->each([&](const std::string&) {
        seed_given = true;
    });

    auto* bigraph_cmd = app.add_subcommand("bigraph", "bigraph <-> digraph correspondence tools");
    bigraph_cmd->add_option("instance", instance_path)->required();
    bigraph_cmd->add_flag("--to-digraph", to_digraph);
    bigraph_cmd->add_flag("--from-digraph", from_digraph);
    bigraph_cmd->add_flag("--check-k-elementary", check_kelem);
    bigraph_cmd->add_flag("--realize-degrees", realize_degrees);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e, out, err);
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    int family_cap = kFamilySearchDefaultCap;
    if (cap >= 0) {
        err << "warning: enumeration caps overridden to n <= " << cap << "\n";
        family_cap = cap;
        budget = std::max(budget, cap);
    }

    try {
        json output{{"schema", kSchema}};

        if (*check) {
            InstanceFile file = parse_instance(detail::load_json(instance_path));
            output["command"] = json{{"verb", "check"},       {"theorem", theorem},        {"n", file.n},
                                     {"loopless", loopless},  {"cap", family_cap},         {"k", file.k.value_or(1)},
                                     {"instance", instance_path}};
            if (!recheck_path.empty()) {
                json report = detail::load_json(recheck_path);
                Certificate cert = certificate_from_json(report.at("certificate"));
                bool valid = detail::recheck(theorem, file, cert);
                output["command"]["recheck_certificate"] = recheck_path;
                output["certificate_valid"] = valid;
                out << output.dump(2) << "\n";
                return valid ? 0 : 1;
            }
            auto verdict = detail::run_checker(theorem, file, loopless, simplicity, family_cap);
            output["feasible"] = verdict.feasible;
            if (verdict.certificate) output["certificate"] = certificate_to_json(*verdict.certificate);
            out << output.dump(2) << "\n";
            return verdict.feasible ? 0 : 1;
        }

        if (*realize) {
            InstanceFile file = parse_instance(detail::load_json(instance_path));
            DegreeSpec spec = detail::spec_of(file);
            std::string kind = flag_simple ? "simple" : flag_loopless ? "loopless" : "any";
            if (!host_path.empty()) kind = "host";
            output["command"] = json{{"verb", "realize"}, {"kind", kind}, {"n", file.n}, {"instance", instance_path}};
            RealizationResult res;
            if (!host_path.empty()) {
                InstanceFile host_file = parse_instance(detail::load_json(host_path));
                res = ore_realize(detail::digraph_of(host_file), spec);
            } else if (flag_simple) {
                res = simple_realize(spec);
            } else if (flag_loopless) {
                bool ok = true;
                for (int v = 0; v < spec.n() && ok; ++v)
                    if (spec.in(v) + spec.out(v) > spec.gamma()) {
                        Certificate cert;
                        cert.inequality = ineq::loopless_point;
                        cert.node = v;
                        cert.lhs = spec.in(v) + spec.out(v);
                        cert.rhs = spec.gamma();
                        res = {false, std::nullopt, cert};
                        ok = false;
                    }
                if (ok) res.digraph = loop_reduce(greedy_realize(spec));
            } else {
                res.digraph = greedy_realize(spec);
            }
            output["feasible"] = res.feasible;
            if (res.digraph) output["digraph"] = digraph_to_json(*res.digraph);
            if (res.certificate) output["certificate"] = certificate_to_json(*res.certificate);
            out << output.dump(2) << "\n";
            return res.feasible ? 0 : 1;
        }

        if (*verify) {
            InstanceFile file = parse_instance(detail::load_json(instance_path));
            Digraph g = detail::digraph_of(file);
            output["command"] =
                json{{"verb", "verify"}, {"mode", mode}, {"k", target_k}, {"n", file.n}, {"instance", instance_path}};
            json report;
            report["n"] = g.n();
            report["arc_count"] = g.arc_count();
            report["simple"] = g.is_simple();
            report["loopless"] = !g.has_loops();
            report["strong"] = is_strong(g);
            int k_node = node_connectivity(g);
            report["k_node"] = k_node;
            if (g.n() >= 2) {
                report["k_edge"] = edge_connectivity(g);
                json witnesses;
                if (g.n() <= kDisjointPairScanCap) {
                    int lambda = report["k_edge"].get<int>();
                    for (NodeMask xm = 1; xm < full_mask(g.n()); ++xm)
                        if (g.in_degree_set(xm) == lambda) {
                            witnesses["min_in_cut"] = mask_to_json(xm);
                            break;
                        }
                    if (k_node < g.n() - 1) {
                        Digraph gs = g.collapse_to_simple();
                        for (NodeMask inner = 1; inner < full_mask(g.n()); ++inner) {
                            NodeMask need = 0;
                            for (NodeMask m = inner; m; m &= m - 1) need |= gs.in_neighbors(std::countr_zero(m));
                            if ((inner | need) == full_mask(g.n())) continue;
                            if (set_size(need & ~inner) == k_node) {
                                witnesses["min_separator"] = mask_to_json(need & ~inner);
                                break;
                            }
                        }
                    }
                }
                report["witnesses"] = witnesses;
            } else {
                report["k_edge"] = nullptr;
            }
            bool fits = true;
            if (file.m_o && file.m_i) {
                fits = detail::spec_of(file).fits(g);
                report["fits_spec"] = fits;
            }
            output["report"] = report;
            bool met = true;
            if (target_k >= 0) {
                if (mode == "node")
                    met = k_node >= target_k;
                else if (mode == "edge")
                    met = is_k_edge_connected(g, target_k);
                else if (mode == "strong")
                    met = is_strong(g);
                else
                    throw std::invalid_argument("unknown mode: " + mode);
            }
            output["verified"] = met && fits;
            out << output.dump(2) << "\n";
            return (met && fits) ? 0 : 1;
        }

        if (*witness || *augment) {
            InstanceFile file = parse_instance(detail::load_json(instance_path));
            AugmentInstance inst{detail::digraph_of(file), detail::spec_of(file), detail::k_of(file),
                                 mode == "edge" ? ConnectivityMode::edge : ConnectivityMode::node,
                                 detail::parse_simplicity(simplicity.empty() ? "augmented" : simplicity),
                                 std::nullopt};
            if (file.f0) inst.f0 = Digraph(file.n, *file.f0);
            output["command"] = json{{"verb", *witness ? "witness" : "augment"},
                                     {"mode", mode},
                                     {"simplicity", simplicity.empty() ? "augmented" : simplicity},
                                     {"k", inst.k},
                                     {"budget", budget},
                                     {"n", file.n},
                                     {"instance", instance_path}};
            auto res = construct_witness(inst, budget);
            output["feasible"] = res.feasible;
            if (res.digraph) {
                output["digraph"] = digraph_to_json(*res.digraph);
                Digraph whole = inst.d0.plus(*res.digraph);
                json audit;
                audit["fits_spec"] = inst.spec.fits(*res.digraph);
                audit["combined_simple"] = whole.is_simple();
                audit["witness_simple"] = res.digraph->is_simple();
                audit["k_node"] = node_connectivity(whole);
                if (whole.n() >= 2) audit["k_edge"] = edge_connectivity(whole);
                output["audit"] = audit;
            }
            if (res.certificate) output["certificate"] = certificate_to_json(*res.certificate);
            out << output.dump(2) << "\n";
            return res.feasible ? 0 : 1;
        }

        if (*oracle_cmd) {
            if (list_presets) {
                json names = json::array();
                for (const auto& name : grid_preset_names()) names.push_back(name);
                output["presets"] = names;
                out << output.dump(2) << "\n";
                return 0;
            }
            if (grid_preset.empty()) throw std::invalid_argument("oracle needs --grid <preset> or --list");
            GridReport report;
            if (samples > 0 || seed_given) {
                unsigned s = seed_given ? seed : 1;
                int count = samples > 0 ? samples : 200;
                if (grid_preset == "strong-n5-random")
                    report = grid_strong_n5_random(count, s);
                else if (grid_preset == "strong-augment-n4")
                    report = grid_strong_augment_n4(count, s);
                else if (grid_preset == "node-simple-n4")
                    report = grid_node_simple_n4(count, s);
                else if (grid_preset == "node-multi-n4")
                    report = grid_node_multi_n4(count, s);
                else if (grid_preset == "edge-multi-n4")
                    report = grid_edge_multi_n4(count, s);
                else if (grid_preset == "edge-plus-one-n4")
                    report = grid_edge_plus_one_n4(count, s);
                else if (grid_preset == "cover-n5")
                    report = grid_cover_n5(count, s);
                else if (grid_preset == "ore-n5")
                    report = grid_ore_n5(count, s);
                else
                    report = run_grid_preset(grid_preset);
            } else {
                report = run_grid_preset(grid_preset);
            }
            output["command"] = json{{"verb", "oracle"}, {"grid", report.preset}};
            output["instances"] = report.instances;
            output["disagreements"] = report.disagreements;
            out << output.dump(2) << "\n";
            return report.ok() ? 0 : 1;
        }

        if (*bigraph_cmd) {
            InstanceFile file = parse_instance(detail::load_json(instance_path));
            if (to_digraph) {
                BipartiteInstance g = detail::bigraph_of(file);
                auto matching = find_perfect_matching(g);
                if (!matching) {
                    output["command"] = json{{"verb", "bigraph"}, {"action", "to-digraph"}};
                    output["error"] = "bigraph has no perfect matching";
                    out << output.dump(2) << "\n";
                    return 1;
                }
                Digraph d = bigraph_to_digraph(g, *matching);
                output["command"] = json{{"verb", "bigraph"}, {"action", "to-digraph"}, {"instance", instance_path}};
                output["digraph"] = digraph_to_json(d);
                output["matching"] = *matching;
                out << output.dump(2) << "\n";
                return 0;
            }
            if (from_digraph) {
                Digraph d = detail::digraph_of(file);
                auto [g, matching] = digraph_to_bigraph(d);
                output["command"] = json{{"verb", "bigraph"}, {"action", "from-digraph"}, {"instance", instance_path}};
                output["bigraph"] = bigraph_to_json(g);
                output["matching"] = matching;
                out << output.dump(2) << "\n";
                return 0;
            }
            if (check_kelem) {
                BipartiteInstance g = detail::bigraph_of(file);
                int k = detail::k_of(file);
                bool ok = is_k_elementary(g, k);
                output["command"] =
                    json{{"verb", "bigraph"}, {"action", "check-k-elementary"}, {"k", k}, {"instance", instance_path}};
                output["k_elementary"] = ok;
                output["perfectly_matchable"] = perfectly_matchable(g);
                out << output.dump(2) << "\n";
                return ok ? 0 : 1;
            }
            if (realize_degrees) {
                if (!file.m_s || !file.m_t) throw std::invalid_argument("realize-degrees needs \"m_S\" and \"m_T\"");
                int k = detail::k_of(file);
                auto result = check_k_elementary_degrees(*file.m_s, *file.m_t, k);
                output["command"] =
                    json{{"verb", "bigraph"}, {"action", "realize-degrees"}, {"k", k}, {"instance", instance_path}};
                output["feasible"] = result.verdict.feasible;
                if (result.witness) {
                    output["bigraph"] = bigraph_to_json(*result.witness);
                    output["matching"] = result.matching;
                }
                if (result.verdict.certificate)
                    output["certificate"] = certificate_to_json(*result.verdict.certificate);
                out << output.dump(2) << "\n";
                return result.verdict.feasible ? 0 : 1;
            }
            throw std::invalid_argument("bigraph needs one of --to-digraph, --from-digraph, --check-k-elementary, --realize-degrees");
        }
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace ddf::cli
