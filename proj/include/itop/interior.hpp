#pragma once

#include <itop/graph.hpp>
#include <itop/poly.hpp>

#include <functional>
#include <optional>
#include <vector>

namespace itop {

/// Supplies the cycle used at each recursion step. Must return a cycle
/// whenever the graph has one (nullopt only for forests); find_cycle is the
/// default. Exists so tests can confirm the result is choice-independent.
using CycleChooser =
    std::function<std::optional<CycleWitness>(const SignedBipartiteGraph&)>;

/// Interior polynomial I' of a bipartite multigraph. Requires at least one
/// vertex and all edge signs positive (callers forget signs upstream).
///
/// Computed by cycle deletion with memoization: pick any cycle, let
/// eps_1..eps_n be every second edge around it (`alternation_offset` picks
/// which of the two classes); then
///   I'_G = sum_{nonempty S of {eps_i}} (-1)^{|S|-1} I'_{G minus S},
/// a connected forest contributes 1, and across connected components
///   I'_G = (1-x)^{k-1} * prod I'_{G_i}.
IntPolynomial interior_prime(const SignedBipartiteGraph& g,
                             const CycleChooser& chooser = nullptr,
                             int alternation_offset = 0);

/// Full computation tree of the recursion above (memoization disabled so the
/// tree is faithful). Refuses graphs with more than `max_edges` edges.
struct RecursionTrace {
  struct Node;
  struct Branch {
    std::vector<std::string> deleted_edge_ids;
    int sign = +1;  // (-1)^{|S|-1}
    std::vector<Node> child;  // exactly one; vector breaks the cyclic type
  };
  struct Node {
    SignedBipartiteGraph graph;
    bool forest = false;
    std::size_t component_count = 0;
    std::optional<CycleWitness> cycle;          // engaged on recursion nodes
    std::vector<std::string> alternate_edges;   // the eps_i deleted from
    std::vector<Branch> branches;
    IntPolynomial value;
  };
  Node root;
};

RecursionTrace recursion_trace(const SignedBipartiteGraph& g,
                               std::size_t max_edges = 12);

}  // namespace itop
