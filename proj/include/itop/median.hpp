#pragma once

#include <itop/graph.hpp>
#include <itop/knot.hpp>
#include <itop/poly.hpp>

#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace itop {

/// Plane embedding of a bipartite multigraph, given combinatorially: for
/// each vertex, the counterclockwise cyclic order of its incident edge ids.
struct PlaneEmbedding {
  std::map<std::string, std::vector<std::string>> rotation;
};

/// Checks that `emb` lists every vertex of `g` with exactly its incident
/// edges (each edge id once per endpoint, parallel edges individually;
/// entries may be omitted for isolated vertices) and that the rotation
/// system is planar: every component must trace to a sphere, i.e.
/// vertices - edges + traced faces = 2 per component with edges. Throws
/// std::invalid_argument otherwise. Returns the face count of the plane
/// drawing, all components sharing one unbounded face.
std::size_t validate_plane_embedding(const SignedBipartiteGraph& g,
                                     const PlaneEmbedding& emb);

/// The median link diagram of a plane signed bipartite graph: one crossing
/// per edge (same id, same sign), one Seifert circle per vertex. Circles of
/// E-class vertices run through their crossings in rotation order, V-class
/// circles in reverse rotation order; this orients the two classes
/// coherently in opposite senses. Arcs are named "<vertex>:<index>", so
/// seifert_decompose recovers the original vertex labels, signs and edge
/// ids exactly. Degree-0 vertices become free loops.
LinkDiagram median_construct(const SignedBipartiteGraph& g,
                             const PlaneEmbedding& emb);

/// Both sides of the correspondence between the top z-coefficient of the
/// link polynomial and the signed interior polynomial of the Seifert graph,
/// computed independently:
///   left  = coefficient of z^(crossings - circles + 1) in homfly(d)
///   right = v^exponent * I(v^2), I = signed interior of the Seifert graph,
///           exponent = positives - negatives - vertices + 1.
struct MainTheoremReport {
  LaurentPoly2 homfly_value;
  long bound = 0;               // crossings - circles + 1
  LaurentPoly2 left;            // coefficient of z^bound, polynomial in v
  SignedBipartiteGraph seifert_graph;
  long exponent = 0;
  IntPolynomial signed_interior_value;
  LaurentPoly2 right;
  bool equal = false;
};

MainTheoremReport verify_main_theorem(const LinkDiagram& d,
                                      std::size_t max_crossings = 16);

}  // namespace itop
