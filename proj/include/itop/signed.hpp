#pragma once

#include <itop/graph.hpp>
#include <itop/poly.hpp>

#include <string>
#include <utility>
#include <vector>

namespace itop {

/// Signed interior polynomial: the alternating sum, over all subsets S of
/// the negative edges, of (-1)^|S| times the plain interior polynomial of
/// the graph minus S with signs forgotten.
///
/// When `use_vanishing_shortcut` is set (the default) and the graph contains
/// a cycle with alternating edge signs, the result is returned as 0
/// immediately; the full sum is available with the flag off and the test
/// suite checks that the two always agree. The full sum is refused for more
/// than 20 negative edges; the shortcut still works above that size.
IntPolynomial signed_interior(const SignedBipartiteGraph& g,
                              bool use_vanishing_shortcut = true);

/// Term-by-term ledger of the full subset sum. Rows are emitted in Gray-code
/// order, so consecutive rows differ by adding or removing one edge id.
struct SignedInteriorTrace {
  struct Row {
    std::vector<std::string> deleted_edge_ids;  // subset of negative edges
    int sign = +1;                              // (-1)^|subset|
    IntPolynomial value;  // interior of the unsigned remainder
  };
  std::vector<Row> rows;  // 2^(negative edge count) rows
  IntPolynomial total;    // sum of sign * value over all rows
};

SignedInteriorTrace signed_interior_trace(const SignedBipartiteGraph& g);

/// Both sides of the one-edge resolution identity for a negative edge:
///   lhs = I+ of g
///   rhs = I+ of g with `edge_id` turned positive, minus I+ of g without
///         `edge_id`.
/// Both sides are computed independently by the full subset sum. Throws if
/// `edge_id` is unknown or not negative.
std::pair<IntPolynomial, IntPolynomial> skein_triple_identity_check(
    const SignedBipartiteGraph& g, const std::string& edge_id);

}  // namespace itop
