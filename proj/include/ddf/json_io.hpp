#pragma once

// JSON instance format and serializers.  One self-contained file per
// instance: {"n": int, "arcs": [[t,h],...], "m_o": [...], "m_i": [...],
// "k": int}, each field optional per command; bigraph instances use
// "edges"/"m_S"/"m_T"; "family" carries a set family for covering checks and
// "F0" the arcs the augmenting digraph must not parallel.  Output objects use
// sorted keys and sorted arc lists so runs are byte-stable.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ddf/construct.hpp"
#include "ddf/digraph.hpp"
#include "ddf/verdict.hpp"

namespace ddf {

using json = nlohmann::json;

struct InstanceFile {
    int n = -1;
    std::optional<std::vector<Arc>> arcs;
    std::optional<std::vector<int>> m_o, m_i;
    std::optional<int> k;
    std::optional<std::vector<NodeMask>> family;
    std::optional<std::vector<Arc>> f0;
    std::optional<std::vector<std::pair<int, int>>> edges;
    std::optional<std::vector<int>> m_s, m_t;
};

namespace detail {

inline std::vector<Arc> parse_arc_list(const json& j, const char* what) {
    std::vector<Arc> arcs;
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of [tail, head] pairs");
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument(std::string(what) + " entries must be pairs");
        arcs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return arcs;
}

}  // namespace detail

inline InstanceFile parse_instance(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("instance must be a JSON object");
    InstanceFile inst;
    if (!j.contains("n")) throw std::invalid_argument("instance is missing \"n\"");
    inst.n = j.at("n").get<int>();
    if (inst.n < 0 || inst.n > kMaxNodes) throw std::invalid_argument("\"n\" must be in [0, 62]");
    if (j.contains("arcs")) inst.arcs = detail::parse_arc_list(j.at("arcs"), "\"arcs\"");
    if (j.contains("m_o")) inst.m_o = j.at("m_o").get<std::vector<int>>();
    if (j.contains("m_i")) inst.m_i = j.at("m_i").get<std::vector<int>>();
    if (j.contains("k")) inst.k = j.at("k").get<int>();
    if (j.contains("F0")) inst.f0 = detail::parse_arc_list(j.at("F0"), "\"F0\"");
    if (j.contains("family")) {
        inst.family = std::vector<NodeMask>{};
        for (const auto& set : j.at("family"))
            inst.family->push_back(nodes_to_mask(set.get<std::vector<int>>(), inst.n));
    }
    if (j.contains("edges")) {
        inst.edges = std::vector<std::pair<int, int>>{};
        for (const auto& e : detail::parse_arc_list(j.at("edges"), "\"edges\"")) inst.edges->push_back(e);
    }
    if (j.contains("m_S")) inst.m_s = j.at("m_S").get<std::vector<int>>();
    if (j.contains("m_T")) inst.m_t = j.at("m_T").get<std::vector<int>>();
    return inst;
}

inline json arcs_to_json(const std::vector<Arc>& arcs) {
    json out = json::array();
    auto sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    for (auto [u, v] : sorted) out.push_back(json::array({u, v}));
    return out;
}

inline json digraph_to_json(const Digraph& g) {
    return json{{"n", g.n()}, {"arcs", arcs_to_json(g.arcs())}};
}

inline json mask_to_json(NodeMask m) {
    json out = json::array();
    for (NodeId v : mask_to_nodes(m)) out.push_back(v);
    return out;
}

inline json biset_to_json(const BiSet& b) {
    return json{{"outer", mask_to_json(b.outer)}, {"inner", mask_to_json(b.inner)}};
}

inline json certificate_to_json(const Certificate& c) {
    json out{{"inequality", c.inequality}, {"relation", c.relation}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (c.x) out["X"] = mask_to_json(*c.x);
    if (c.z) out["Z"] = mask_to_json(*c.z);
    if (c.k_set) out["K"] = mask_to_json(*c.k_set);
    if (c.node) out["node"] = *c.node;
    if (c.family) {
        json fam = json::array();
        for (const auto& b : c.family->members) fam.push_back(biset_to_json(b));
        out["family"] = fam;
    }
    return out;
}

inline Certificate certificate_from_json(const json& j) {
    Certificate c;
    c.inequality = j.at("inequality").get<std::string>();
    c.relation = j.value("relation", "<=");
    c.lhs = j.at("lhs").get<int>();
    c.rhs = j.at("rhs").get<int>();
    auto mask_of = [&](const char* key) -> std::optional<NodeMask> {
        if (!j.contains(key)) return std::nullopt;
        NodeMask m = 0;
        for (int v : j.at(key).get<std::vector<int>>()) {
            if (v < 0 || v >= kMaxNodes) throw std::invalid_argument("certificate node id out of range");
            m |= bit(v);
        }
        return m;
    };
    c.x = mask_of("X");
    c.z = mask_of("Z");
    c.k_set = mask_of("K");
    if (j.contains("node")) c.node = j.at("node").get<int>();
    if (j.contains("family")) {
        BiSetFamily fam;
        for (const auto& b : j.at("family")) {
            NodeMask outer = 0, inner = 0;
            for (int v : b.at("outer").get<std::vector<int>>()) outer |= bit(v);
            for (int v : b.at("inner").get<std::vector<int>>()) inner |= bit(v);
            fam.members.emplace_back(outer, inner);
        }
        c.family = std::move(fam);
    }
    return c;
}

inline json verdict_to_json(const FeasibilityVerdict& v) {
    json out{{"feasible", v.feasible}};
    if (v.certificate) out["certificate"] = certificate_to_json(*v.certificate);
    return out;
}

inline json bigraph_to_json(const BipartiteInstance& g) {
    json edges = json::array();
    auto sorted = g.edges;
    std::sort(sorted.begin(), sorted.end());
    for (auto [s, t] : sorted) edges.push_back(json::array({s, t}));
    json out{{"n", g.n}, {"edges", edges}};
    if (!g.m_s.empty()) out["m_S"] = g.m_s;
    if (!g.m_t.empty()) out["m_T"] = g.m_t;
    return out;
}

}  // namespace ddf
