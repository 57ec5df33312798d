#pragma once

// Dual graphs of reducible fibers, multiplicities, and shape recognition.

#include "mwrat/scenario.hpp"

#include <optional>
#include <string>
#include <vector>

namespace mwrat {

struct GraphNode {
    std::string label;
    Int self_intersection;
};

struct GraphEdge {
    std::size_t a = 0;
    std::size_t b = 0;
    Int multiplicity;  ///< intersection number, >= 1
};

struct DualGraph {
    std::vector<GraphNode> nodes;
    std::vector<GraphEdge> edges;

    std::size_t size() const { return nodes.size(); }
    /// 0 when the nodes are not adjacent.
    Int weight(std::size_t a, std::size_t b) const;
    std::vector<std::size_t> neighbors(std::size_t v) const;
    std::size_t degree(std::size_t v) const { return neighbors(v).size(); }
    bool is_connected() const;
    bool is_tree() const;
};

/// One node per component, edges weighted by positive intersection numbers.
/// Throws InvalidComponentError on a negative cross-intersection.
DualGraph dual_graph(const std::vector<NamedClass>& components);
DualGraph dual_graph(const std::vector<DivisorClass>& components);

/// The unique positive integers m_k with Σ m_k Θ_k = F. Throws NotAFiberError otherwise.
std::vector<Int> fiber_multiplicities(const std::vector<DivisorClass>& components, const DivisorClass& fiber);

enum class ShapeKind {
    RulingChainA,             ///< A_{k+2}: (−1) − k×(−2) − (−1), all multiplicities 1
    RulingForkD,              ///< D_{k+1}: one (−1) of multiplicity 2, fork ending in two 1's
    Condition2a,              ///< the trivial-Mordell–Weil fiber of genus g
    Condition2bSubgraphOnly,  ///< contains the extended D_{4g+4} subgraph but is not Condition2a
    Other,
};

struct FiberShape {
    ShapeKind kind = ShapeKind::Other;
    std::vector<int> parameters;  ///< k for ruling shapes, g for the Condition2a/2b shapes

    std::string to_string() const;
    bool operator==(const FiberShape&) const = default;
};

/// Reference graphs, with their multiplicities.
struct WeightedGraph {
    DualGraph graph;
    std::vector<Int> multiplicities;
};
WeightedGraph condition2a_graph(int genus);
/// The Condition2a graph without its multiplicity-one end node (4g+4 nodes, no multiplicities).
DualGraph condition2b_graph(int genus);
WeightedGraph ruling_chain_graph(int k);
WeightedGraph ruling_fork_graph(int k);

/// Canonical code of a node-labelled tree (labels: self-intersection and multiplicity).
/// std::nullopt when the graph is not a tree.
std::optional<std::string> canonical_tree_code(const DualGraph& graph, const std::vector<Int>& multiplicities);

/// True when condition2b_graph(genus) embeds in `graph` as an induced subgraph
/// (matching self-intersections, all edges simple).
bool contains_condition2b(const DualGraph& graph, int genus);

/// `genus_hint` restricts the Condition2b subgraph search to one genus.
FiberShape classify_shape(const DualGraph& graph, const std::vector<Int>& multiplicities,
                          std::optional<int> genus_hint = std::nullopt);

/// ρ − 2 − Σ (v_t − 1).
int mw_rank_formula(int rho, const std::vector<int>& component_counts);

/// Graphviz export; nodes are labelled "m=<mult>, s=<self-int>".
std::string to_dot(const std::vector<WeightedGraph>& fibers, const std::string& name = "fibers");

}  // namespace mwrat
