#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace itop {

struct EdgeRec {
  std::string id;
  std::string e;  // endpoint in the E class
  std::string v;  // endpoint in the V class
  int sign = +1;  // +1 or -1
  bool operator==(const EdgeRec& o) const = default;
};

/// Signed bipartite multigraph: labeled vertices in two color classes (E and
/// V) and labeled edges carrying a sign. Vertex labels are unique across both
/// classes and contain no whitespace. Values are immutable after
/// construction; all operations return new graphs.
class SignedBipartiteGraph {
 public:
  SignedBipartiteGraph() = default;  // graph with no vertices
  SignedBipartiteGraph(std::vector<std::string> e_vertices,
                       std::vector<std::string> v_vertices,
                       std::vector<EdgeRec> edges);

  const std::vector<std::string>& e_vertices() const { return e_; }
  const std::vector<std::string>& v_vertices() const { return v_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }

  std::size_t vertex_count() const { return e_.size() + v_.size(); }
  bool has_vertex(const std::string& label) const;
  bool is_e_vertex(const std::string& label) const;
  bool has_edge_id(const std::string& id) const;
  const EdgeRec& edge_by_id(const std::string& id) const;

  /// Indices into edges() of the edges at `vertex`, in declaration order.
  const std::vector<std::size_t>& incident_indices(
      const std::string& vertex) const;
  std::size_t degree(const std::string& vertex) const;

  std::size_t positive_edge_count() const;
  std::size_t negative_edge_count() const;
  std::vector<std::string> negative_edge_ids() const;
  bool all_positive() const { return negative_edge_count() == 0; }

  /// Order-insensitive structural equality: equal vertex label sets per
  /// class and equal edge records keyed by id.
  bool same_graph(const SignedBipartiteGraph& o) const;
  bool operator==(const SignedBipartiteGraph& o) const { return same_graph(o); }

 private:
  std::vector<std::string> e_, v_;
  std::vector<EdgeRec> edges_;
  std::map<std::string, bool> vclass_;           // label -> is E class
  std::map<std::string, std::size_t> edge_idx_;  // id -> index
  std::map<std::string, std::vector<std::size_t>> adj_;
  void validate_and_index();
};

/// The other endpoint of `e` as seen from `vertex`.
const std::string& other_endpoint(const EdgeRec& e, const std::string& vertex);

/// Closed walk witness: vertices[i] -- edge_ids[i] -- vertices[(i+1) % n].
/// Always a simple cycle of even length >= 2 with class-alternating vertices.
struct CycleWitness {
  std::vector<std::string> vertices;
  std::vector<std::string> edge_ids;
};

/// Connected components as full labeled subgraphs, ordered by their smallest
/// contained vertex label. Isolated vertices form their own components.
std::vector<SignedBipartiteGraph> components(const SignedBipartiteGraph& g);

std::size_t component_count(const SignedBipartiteGraph& g);

/// Removes the listed edges; endpoints stay behind as (possibly isolated)
/// vertices. Unknown ids are an error.
SignedBipartiteGraph delete_edges(const SignedBipartiteGraph& g,
                                  const std::vector<std::string>& ids);

/// All edge signs set to +1, ids preserved.
SignedBipartiteGraph forget_signs(const SignedBipartiteGraph& g);

/// One edge's sign replaced.
SignedBipartiteGraph with_edge_sign(const SignedBipartiteGraph& g,
                                    const std::string& id, int sign);

/// Removes a vertex of either class together with its incident edges.
SignedBipartiteGraph delete_vertex(const SignedBipartiteGraph& g,
                                   const std::string& label);

/// Removes `label` and its incident edges, then identifies its former
/// neighbours into a single vertex named by the smallest neighbour label.
/// (For an isolated vertex this equals delete_vertex.)
SignedBipartiteGraph contract_vertex(const SignedBipartiteGraph& g,
                                     const std::string& label);

/// Disjoint union; labels and edge ids are disambiguated by prefixing with
/// "1:" and "2:".
SignedBipartiteGraph disjoint_union(const SignedBipartiteGraph& a,
                                    const SignedBipartiteGraph& b);

/// Disjoint union with v1 (in a) and v2 (in b, same class) merged into one
/// vertex named "1:" + v1.
SignedBipartiteGraph block_sum(const SignedBipartiteGraph& a,
                               const SignedBipartiteGraph& b,
                               const std::string& v1, const std::string& v2);

/// A shortest cycle (2-cycles from parallel edges included), or nullopt for
/// forests. Deterministic for a fixed input ordering.
std::optional<CycleWitness> find_cycle(const SignedBipartiteGraph& g);

/// Same algorithm run under a seed-shuffled edge order; used to confirm that
/// downstream results do not depend on which cycle is picked.
std::optional<CycleWitness> find_cycle_seeded(const SignedBipartiteGraph& g,
                                              unsigned seed);

/// A cycle whose edge signs alternate around the cycle (a parallel +/- pair
/// is the smallest case), or nullopt if none exists. Exhaustive search.
std::optional<CycleWitness> find_alternating_cycle(
    const SignedBipartiteGraph& g);

bool is_forest(const SignedBipartiteGraph& g);

/// Canonical description string: equal for equal labeled graphs regardless
/// of declaration order; ignores edge ids (which never affect polynomial
/// values) but includes signs and isolated vertices.
std::string canonical_key(const SignedBipartiteGraph& g);

}  // namespace itop
