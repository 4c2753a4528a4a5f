#pragma once

// Verdicts and certificates.  An infeasible answer always carries the data
// needed to re-evaluate the violated inequality from graph/degree primitives:
// the subsets, the witnessing set or family, and both sides of the inequality.

#include <optional>
#include <string>

#include "ddf/bisets.hpp"
#include "ddf/digraph.hpp"

namespace ddf {

// inequality identifiers used in certificates
namespace ineq {
inline constexpr const char* simple_realization = "simple_realization";
inline constexpr const char* subgraph_realization = "subgraph_realization";
inline constexpr const char* loopless_point = "loopless_point";
inline constexpr const char* strong_pair = "strong_pair";
inline constexpr const char* cover_pair = "cover_pair";
inline constexpr const char* cut_indegree = "cut_indegree";
inline constexpr const char* cut_outdegree = "cut_outdegree";
inline constexpr const char* point_degree_in = "point_degree_in";
inline constexpr const char* point_degree_out = "point_degree_out";
inline constexpr const char* indegree_family = "indegree_family";
inline constexpr const char* outdegree_family = "outdegree_family";
inline constexpr const char* node_augment_family = "node_augment_family";
inline constexpr const char* strong_augment_pair = "strong_augment_pair";
inline constexpr const char* strong_augment_source_set = "strong_augment_source_set";
inline constexpr const char* strong_augment_blocked_pair = "strong_augment_blocked_pair";
inline constexpr const char* k_connected_pair = "k_connected_pair";
inline constexpr const char* bipartite_realization = "bipartite_realization";
inline constexpr const char* k_elementary_pair = "k_elementary_pair";
}  // namespace ineq

struct Certificate {
    std::string inequality;
    std::string relation = "<=";  // the inequality "lhs <= rhs" (or ">=") that the instance violates
    int lhs = 0;
    int rhs = 0;
    std::optional<NodeMask> x;
    std::optional<NodeMask> z;
    std::optional<NodeMask> k_set;
    std::optional<BiSetFamily> family;
    std::optional<NodeId> node;

    bool is_violation() const { return relation == "<=" ? lhs > rhs : lhs < rhs; }
};

struct FeasibilityVerdict {
    bool feasible = true;
    std::optional<Certificate> certificate;

    static FeasibilityVerdict ok() { return {}; }
    static FeasibilityVerdict fail(Certificate c) { return {false, std::move(c)}; }
};

struct RealizationResult {
    bool feasible = true;
    std::optional<Digraph> digraph;
    std::optional<Certificate> certificate;
};

}  // namespace ddf
