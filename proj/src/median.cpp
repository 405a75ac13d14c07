#include <itop/median.hpp>

#include <itop/signed.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itop {

namespace {

[[noreturn]] void bad_embedding(const std::string& what) {
  throw std::invalid_argument("plane embedding: " + what);
}

/// Rotation lists normalized to cover every vertex (missing entries are
/// allowed for isolated vertices only) and checked against the incidences.
std::map<std::string, std::vector<std::string>> checked_rotations(
    const SignedBipartiteGraph& g, const PlaneEmbedding& emb) {
  for (const auto& [vtx, list] : emb.rotation)
    if (!g.has_vertex(vtx))
      bad_embedding("rotation lists unknown vertex '" + vtx + "'");

  std::map<std::string, std::vector<std::string>> rot;
  for (const auto& vs : {g.e_vertices(), g.v_vertices()})
    for (const auto& vtx : vs) {
      std::vector<std::string> list;
      if (auto it = emb.rotation.find(vtx); it != emb.rotation.end())
        list = it->second;
      std::vector<std::string> want;
      for (auto i : g.incident_indices(vtx)) want.push_back(g.edges()[i].id);
      auto a = list, b = want;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b)
        bad_embedding("rotation at vertex '" + vtx +
                      "' does not list exactly the incident edge ids");
      rot[vtx] = std::move(list);
    }
  return rot;
}

/// Orbits of the face-successor permutation on darts. Each component with
/// edges traces its own full set of faces (so components do not share the
/// outer face here); isolated vertices trace nothing.
std::size_t count_face_orbits(
    const SignedBipartiteGraph& g,
    const std::map<std::string, std::vector<std::string>>& rot) {
  if (g.edges().empty()) return 0;

  // Position of each edge id within each endpoint's rotation.
  std::map<std::string, std::map<std::string, std::size_t>> pos;
  for (const auto& [vtx, list] : rot)
    for (std::size_t i = 0; i < list.size(); ++i) pos[vtx][list[i]] = i;

  // Darts are (edge index, direction); direction true = from E to V. The
  // face successor of a dart turns to the next edge counterclockwise around
  // the dart's head.
  const auto& edges = g.edges();
  std::set<std::pair<std::size_t, bool>> unseen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    unseen.insert({i, true});
    unseen.insert({i, false});
  }
  std::map<std::string, std::size_t> edge_index;
  for (std::size_t i = 0; i < edges.size(); ++i) edge_index[edges[i].id] = i;

  std::size_t faces = 0;
  while (!unseen.empty()) {
    auto start = *unseen.begin();
    ++faces;
    auto cur = start;
    do {
      unseen.erase(cur);
      const EdgeRec& e = edges[cur.first];
      const std::string& head = cur.second ? e.v : e.e;
      const auto& list = rot.at(head);
      std::size_t p = pos.at(head).at(e.id);
      const std::string& next_id = list[(p + 1) % list.size()];
      cur = {edge_index.at(next_id), g.is_e_vertex(head)};
    } while (cur != start);
  }
  return faces;
}

}  // namespace

std::size_t validate_plane_embedding(const SignedBipartiteGraph& g,
                                     const PlaneEmbedding& emb) {
  auto rot = checked_rotations(g, emb);
  std::size_t orbits = count_face_orbits(g, rot);

  // Every component must trace to a sphere. A component with edges
  // satisfies vertices - edges + faces = 2 exactly when its genus is zero;
  // an isolated vertex contributes one vertex and no darts.
  std::size_t isolated = 0;
  for (const auto& vs : {g.e_vertices(), g.v_vertices()})
    for (const auto& vtx : vs)
      if (g.degree(vtx) == 0) ++isolated;
  std::size_t edged_components = component_count(g) - isolated;
  long lhs = static_cast<long>(g.vertex_count()) -
             static_cast<long>(g.edges().size()) + static_cast<long>(orbits);
  long rhs = 2 * static_cast<long>(edged_components) +
             static_cast<long>(isolated);
  if (lhs != rhs)
    bad_embedding(
        "rotation system is not planar: vertices - edges + traced faces = " +
        std::to_string(lhs) + ", expected " + std::to_string(rhs));

  // Faces of the plane drawing: the components share one unbounded face.
  if (g.edges().empty()) return 1;
  return orbits - (edged_components - 1);
}

LinkDiagram median_construct(const SignedBipartiteGraph& g,
                             const PlaneEmbedding& emb) {
  validate_plane_embedding(g, emb);
  auto rot = checked_rotations(g, emb);

  // Visit order of each vertex circle through its crossings: rotation order
  // for the E class, reversed rotation order for the V class. Arc
  // "<vertex>:<i>" leaves the i-th visited crossing and enters the next.
  std::map<std::string, std::map<std::string, std::size_t>> visit_index;
  std::map<std::string, std::size_t> deg;
  for (const auto& [vtx, list] : rot) {
    std::vector<std::string> order = list;
    if (!g.is_e_vertex(vtx)) std::reverse(order.begin(), order.end());
    for (std::size_t i = 0; i < order.size(); ++i)
      visit_index[vtx][order[i]] = i;
    deg[vtx] = order.size();
  }

  auto in_arc = [&](const std::string& vtx, const std::string& edge_id) {
    std::size_t d = deg.at(vtx), i = visit_index.at(vtx).at(edge_id);
    return vtx + ":" + std::to_string((i + d - 1) % d);
  };
  auto out_arc = [&](const std::string& vtx, const std::string& edge_id) {
    return vtx + ":" + std::to_string(visit_index.at(vtx).at(edge_id));
  };

  std::vector<Crossing> crossings;
  for (const auto& e : g.edges()) {
    std::string a_in = in_arc(e.e, e.id), a_out = out_arc(e.e, e.id);
    std::string b_in = in_arc(e.v, e.id), b_out = out_arc(e.v, e.id);
    if (e.sign > 0)
      crossings.push_back(Crossing{e.id, {b_in, b_out, a_out, a_in}, +1});
    else
      crossings.push_back(Crossing{e.id, {a_in, b_in, b_out, a_out}, -1});
  }

  std::vector<FreeLoop> loops;
  for (const auto& vtx : g.e_vertices())
    if (g.degree(vtx) == 0) loops.push_back(FreeLoop{vtx, true});
  for (const auto& vtx : g.v_vertices())
    if (g.degree(vtx) == 0) loops.push_back(FreeLoop{vtx, false});

  return LinkDiagram(std::move(crossings), std::move(loops));
}

MainTheoremReport verify_main_theorem(const LinkDiagram& d,
                                      std::size_t max_crossings) {
  MainTheoremReport r;
  auto sd = seifert_decompose(d);
  r.seifert_graph = sd.graph;
  r.bound = static_cast<long>(d.crossings().size()) -
            static_cast<long>(sd.circle_count) + 1;
  r.homfly_value = homfly(d, max_crossings);
  r.left = r.homfly_value.coeff_of_z(r.bound);

  r.exponent = static_cast<long>(sd.graph.positive_edge_count()) -
               static_cast<long>(sd.graph.negative_edge_count()) -
               static_cast<long>(sd.graph.vertex_count()) + 1;
  r.signed_interior_value = signed_interior(sd.graph);

  std::vector<LaurentPoly2::Term> terms;
  const auto& coeffs = r.signed_interior_value.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0)
      terms.push_back({r.exponent + 2 * static_cast<long>(k), 0, coeffs[k]});
  r.right = LaurentPoly2::from_terms(std::move(terms));

  r.equal = (r.left == r.right);
  return r;
}

}  // namespace itop
