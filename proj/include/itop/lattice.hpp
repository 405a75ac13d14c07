#pragma once

#include <itop/graph.hpp>
#include <itop/ints.hpp>
#include <itop/poly.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace itop {

/// Nonnegative rational weights on the edges of a graph, summing to `total`.
/// A weight system with total s describes a point of the s-fold dilation of
/// the graph's edge polytope via its vertex marginal sums.
struct WeightSystem {
  std::map<std::string, Rat> weights;  // edge id -> weight, every edge listed
  Rat total = 0;
};

/// Builds a weight system over exactly the edges of `g`; ids missing from
/// `weights` get weight 0. Unknown ids or negative weights are errors.
WeightSystem make_weight_system(const SignedBipartiteGraph& g,
                                std::map<std::string, Rat> weights);

/// Sum of incident edge weights per vertex; every vertex of `g` (including
/// isolated ones) has an entry.
std::map<std::string, Rat> vertex_marginals(const SignedBipartiteGraph& g,
                                            const WeightSystem& w);

/// Adds delta to the weights at even cycle positions and subtracts it at odd
/// positions. Since the cycle alternates through its vertices, all vertex
/// marginals (and the total) are unchanged. Errors if a weight would become
/// negative.
WeightSystem cycle_change(const SignedBipartiteGraph& g, const WeightSystem& w,
                          const CycleWitness& cycle, const Rat& delta);

/// Integer point of the s-fold dilation of the edge polytope, recorded by
/// its two marginal vectors (one coordinate per vertex, summing to s each).
struct LatticePoint {
  std::map<std::string, long> e_coords;
  std::map<std::string, long> v_coords;
};

/// All integer points of the s-fold dilation: marginal pairs (a, b) with
/// coordinate sums s that are realized by some nonnegative edge weighting,
/// decided exactly by an integral max-flow feasibility check. Signs are
/// ignored. A graph with no edges has an empty polytope: no points for any
/// s, including s = 0.
std::vector<LatticePoint> lattice_points(const SignedBipartiteGraph& g,
                                         long s);

Int count_lattice_points(const SignedBipartiteGraph& g, long s);

/// Point counts of the dilations s = 0..degree_bound together with the
/// coefficients of the counting polynomial in the binomial basis
///   count(s) = sum_k basis_coeffs[k] * C(s + degree_bound - k, degree_bound)
/// where degree_bound = |vertices| - 2. The basis coefficients are solved
/// exactly and are always integers (asserted).
struct EhrhartData {
  long degree_bound = 0;
  std::vector<Int> counts;        // counts[s] for s = 0..degree_bound
  std::vector<Rat> basis_coeffs;  // a_0..a_degree_bound
};

/// Requires at least one edge (the binomial-basis normalization needs a
/// nonempty polytope); throws std::invalid_argument otherwise.
EhrhartData ehrhart_data(const SignedBipartiteGraph& g);

/// The basis coefficients of ehrhart_data read as a polynomial -- the
/// lattice-counting route to the same value interior_prime computes by
/// deletion recursion. A graph with no edges maps to (1-x)^(k-1) with k its
/// vertex count. Signs are ignored.
IntPolynomial interior_via_ehrhart(const SignedBipartiteGraph& g);

/// Truncated generating series of the dilation point counts. The constant
/// term is 1 by convention (also for graphs with no edges, whose higher
/// counts are all zero).
PowerSeriesTrunc ehrhart_series(const SignedBipartiteGraph& g,
                                std::size_t order);

/// Alternating sum of ehrhart_series(g minus S) over all subsets S of the
/// negative edges. Refused for more than 20 negative edges.
PowerSeriesTrunc signed_ehrhart_series(const SignedBipartiteGraph& g,
                                       std::size_t order);

/// Coefficient-level analogue of signed_ehrhart_series: the alternating sum
/// of the binomial-basis coefficient vectors over negative-edge subsets
/// (subsets whose deletion leaves no edge contribute zero). This equals the
/// signed interior polynomial when the graph has at least one positive and
/// one negative edge; outside that precondition it falls back to the
/// alternating sum of interior_via_ehrhart values, which is always correct.
/// Refused for more than 20 negative edges.
IntPolynomial signed_ehrhart_poly_coeffs(const SignedBipartiteGraph& g);

}  // namespace itop
