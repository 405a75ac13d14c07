#include <itop/interior.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itop {

namespace {

void validate_input(const SignedBipartiteGraph& g) {
  if (g.vertex_count() == 0)
    throw std::invalid_argument("interior polynomial: graph has no vertices");
  if (!g.all_positive())
    throw std::invalid_argument(
        "interior polynomial: all edges must be positive (strip or resolve "
        "signs first)");
}

/// Edge ids at cycle positions offset, offset+2, ... -- one endpoint class's
/// worth of "every second edge". Cycles always have even length here.
std::vector<std::string> every_second_edge(const CycleWitness& w, int offset) {
  std::vector<std::string> out;
  for (std::size_t i = static_cast<std::size_t>(offset & 1);
       i < w.edge_ids.size(); i += 2)
    out.push_back(w.edge_ids[i]);
  return out;
}

std::optional<CycleWitness> pick_cycle(const SignedBipartiteGraph& g,
                                       const CycleChooser& chooser) {
  return chooser ? chooser(g) : find_cycle(g);
}

/// Core recursion. Requires an all-positive graph with at least one vertex.
///
///   * split into connected components: value is (1-x)^(k-1) times the
///     product of the component values;
///   * a connected forest (a tree) is worth 1;
///   * otherwise pick a cycle, let eps be every second edge of it, and sum
///     (-1)^(|S|-1) times the value of the graph minus S over all nonempty
///     subsets S of eps.
///
/// Each deletion removes at least one edge, so the recursion terminates. The
/// memo is keyed by the canonical graph description, so isomorphic labeled
/// subgraphs reached along different deletion orders are computed once.
IntPolynomial rec(const SignedBipartiteGraph& g, const CycleChooser& chooser,
                  int offset, std::map<std::string, IntPolynomial>& memo) {
  std::string key = canonical_key(g);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  IntPolynomial result;
  auto comps = components(g);
  if (comps.size() > 1) {
    result = IntPolynomial::one_minus_x_pow(comps.size() - 1);
    for (const auto& c : comps) result = result * rec(c, chooser, offset, memo);
  } else {
    auto cycle = pick_cycle(g, chooser);
    if (!cycle) {
      result = IntPolynomial::one();
    } else {
      auto eps = every_second_edge(*cycle, offset);
      std::size_t n = eps.size();
      for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::string> del;
        for (std::size_t i = 0; i < n; ++i)
          if (mask & (std::size_t{1} << i)) del.push_back(eps[i]);
        IntPolynomial sub =
            rec(delete_edges(g, del), chooser, offset, memo);
        result = del.size() % 2 == 1 ? result + sub : result - sub;
      }
    }
  }
  memo.emplace(std::move(key), result);
  return result;
}

RecursionTrace::Node trace_node(const SignedBipartiteGraph& g) {
  RecursionTrace::Node node;
  node.graph = g;
  node.component_count = component_count(g);
  node.forest = is_forest(g);
  if (node.forest) {
    node.value = IntPolynomial::one_minus_x_pow(node.component_count - 1);
    return node;
  }
  node.cycle = find_cycle(g);
  node.alternate_edges = every_second_edge(*node.cycle, 0);
  std::size_t n = node.alternate_edges.size();
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    RecursionTrace::Branch br;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i))
        br.deleted_edge_ids.push_back(node.alternate_edges[i]);
    br.sign = br.deleted_edge_ids.size() % 2 == 1 ? +1 : -1;
    br.child.push_back(trace_node(delete_edges(g, br.deleted_edge_ids)));
    node.value = node.value + br.child[0].value.scaled(Int(br.sign));
    node.branches.push_back(std::move(br));
  }
  return node;
}

}  // namespace

IntPolynomial interior_prime(const SignedBipartiteGraph& g,
                             const CycleChooser& chooser,
                             int alternation_offset) {
  validate_input(g);
  std::map<std::string, IntPolynomial> memo;
  return rec(g, chooser, alternation_offset, memo);
}

RecursionTrace recursion_trace(const SignedBipartiteGraph& g,
                               std::size_t max_edges) {
  validate_input(g);
  if (g.edges().size() > max_edges)
    throw std::invalid_argument(
        "recursion trace: graph has " + std::to_string(g.edges().size()) +
        " edges, above the budget of " + std::to_string(max_edges) +
        " (the untruncated branch tree would be too large)");
  RecursionTrace t;
  t.root = trace_node(g);
  return t;
}

}  // namespace itop
