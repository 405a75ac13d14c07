#include <itop/knot.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace itop {

namespace {

int over_in_slot(const Crossing& c) { return c.sign > 0 ? 3 : 1; }
int over_out_slot(const Crossing& c) { return c.sign > 0 ? 1 : 3; }

[[noreturn]] void bad_diagram(const std::string& what) {
  throw std::invalid_argument("link diagram: " + what);
}

}  // namespace

LinkDiagram::LinkDiagram(std::vector<Crossing> crossings,
                         std::vector<FreeLoop> free_loops)
    : crossings_(std::move(crossings)), free_loops_(std::move(free_loops)) {
  validate_and_index();
}

void LinkDiagram::validate_and_index() {
  std::set<std::string> ids;
  for (const auto& c : crossings_) {
    if (c.id.empty()) bad_diagram("empty crossing id");
    if (!ids.insert(c.id).second)
      bad_diagram("duplicate crossing id '" + c.id + "'");
    if (c.sign != +1 && c.sign != -1)
      bad_diagram("crossing '" + c.id + "' has sign " +
                  std::to_string(c.sign) + ", expected +1 or -1");
    for (const auto& arc : c.s)
      if (arc.empty()) bad_diagram("crossing '" + c.id + "' has an empty arc");
  }

  // Each arc must occupy exactly one incoming and one outgoing slot, with
  // the roles determined by the declared signs.
  std::map<std::string, std::pair<int, int>> roles;  // arc -> (in, out)
  for (const auto& c : crossings_) {
    roles[c.s[0]].first++;
    roles[c.s[2]].second++;
    roles[c.s[over_in_slot(c)]].first++;
    roles[c.s[over_out_slot(c)]].second++;
  }
  for (const auto& [arc, r] : roles)
    if (r.first != 1 || r.second != 1)
      bad_diagram("arc '" + arc + "' is incoming at " +
                  std::to_string(r.first) + " and outgoing at " +
                  std::to_string(r.second) +
                  " slots; each arc needs exactly one of each");

  successor_.clear();
  for (const auto& c : crossings_) {
    successor_[c.s[0]] = c.s[2];
    successor_[c.s[over_in_slot(c)]] = c.s[over_out_slot(c)];
  }

  std::set<std::string> loop_labels;
  for (const auto& l : free_loops_) {
    if (l.label.empty()) bad_diagram("empty free loop label");
    if (!loop_labels.insert(l.label).second)
      bad_diagram("duplicate free loop label '" + l.label + "'");
    if (roles.count(l.label))
      bad_diagram("free loop label '" + l.label + "' is also an arc label");
  }
}

const Crossing& LinkDiagram::crossing_by_id(const std::string& id) const {
  for (const auto& c : crossings_)
    if (c.id == id) return c;
  bad_diagram("no crossing with id '" + id + "'");
}

std::vector<std::string> LinkDiagram::arcs() const {
  std::vector<std::string> out;
  for (const auto& [arc, nxt] : successor_) out.push_back(arc);
  return out;  // map iteration is already sorted
}

const std::string& LinkDiagram::successor(const std::string& arc) const {
  auto it = successor_.find(arc);
  if (it == successor_.end()) bad_diagram("no arc named '" + arc + "'");
  return it->second;
}

std::vector<std::vector<std::string>> LinkDiagram::strand_components() const {
  std::vector<std::vector<std::string>> out;
  std::set<std::string> visited;
  for (const auto& [start, nxt] : successor_) {
    if (visited.count(start)) continue;
    std::vector<std::string> comp;
    std::string cur = start;
    do {
      comp.push_back(cur);
      visited.insert(cur);
      cur = successor_.at(cur);
    } while (cur != start);
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t LinkDiagram::component_count() const {
  return strand_components().size() + free_loops_.size();
}

LinkDiagram switch_crossing(const LinkDiagram& d, const std::string& id) {
  std::vector<Crossing> cs = d.crossings();
  bool found = false;
  for (auto& c : cs) {
    if (c.id != id) continue;
    found = true;
    if (c.sign > 0)
      c = Crossing{c.id, {c.s[3], c.s[0], c.s[1], c.s[2]}, -1};
    else
      c = Crossing{c.id, {c.s[1], c.s[2], c.s[3], c.s[0]}, +1};
  }
  if (!found) bad_diagram("no crossing with id '" + id + "'");
  return LinkDiagram(std::move(cs), d.free_loops());
}

namespace {

/// Union-find over arc labels with the smallest label as representative.
class ArcClasses {
 public:
  const std::string& find(const std::string& a) {
    auto it = parent_.find(a);
    if (it == parent_.end() || it->second == a) {
      parent_.emplace(a, a);
      return parent_.find(a)->first;
    }
    const std::string& r = find(it->second);
    parent_[a] = r;
    return parent_.find(a)->second;
  }
  void unite(const std::string& a, const std::string& b) {
    std::string ra = find(a), rb = find(b);
    if (ra == rb) return;
    if (rb < ra) std::swap(ra, rb);
    parent_[rb] = ra;
  }

 private:
  std::map<std::string, std::string> parent_;
};

/// The two in/out arc pairs spliced together by the oriented smoothing.
std::array<std::pair<int, int>, 2> smoothing_pairs(const Crossing& c) {
  if (c.sign > 0) return {{{0, 1}, {3, 2}}};
  return {{{0, 3}, {1, 2}}};
}

}  // namespace

LinkDiagram smooth_crossing(const LinkDiagram& d, const std::string& id) {
  const Crossing& c = d.crossing_by_id(id);
  ArcClasses cls;
  for (auto [x, y] : smoothing_pairs(c)) cls.unite(c.s[x], c.s[y]);

  std::vector<Crossing> rest;
  std::set<std::string> present;
  for (const auto& o : d.crossings()) {
    if (o.id == id) continue;
    Crossing n = o;
    for (auto& arc : n.s) arc = cls.find(arc);
    for (const auto& arc : n.s) present.insert(arc);
    rest.push_back(std::move(n));
  }

  // A spliced strand with no crossing occurrence left closes into a loop.
  std::set<std::string> reps;
  for (const auto& arc : c.s) reps.insert(cls.find(arc));
  std::vector<FreeLoop> loops = d.free_loops();
  for (const auto& r : reps)
    if (!present.count(r)) loops.push_back(FreeLoop{r, true});
  return LinkDiagram(std::move(rest), std::move(loops));
}

namespace {

struct CircleClasses {
  ArcClasses cls;
  explicit CircleClasses(const LinkDiagram& d) {
    for (const auto& c : d.crossings())
      for (auto [x, y] : smoothing_pairs(c)) cls.unite(c.s[x], c.s[y]);
  }
};

std::size_t circle_count_of(const LinkDiagram& d) {
  CircleClasses cc(d);
  std::set<std::string> reps;
  for (const auto& arc : d.arcs()) reps.insert(cc.cls.find(arc));
  return reps.size() + d.free_loops().size();
}

std::string circle_label(const std::string& smallest_arc) {
  auto p = smallest_arc.rfind(':');
  return p == std::string::npos ? smallest_arc : smallest_arc.substr(0, p);
}

}  // namespace

SeifertDecomposition seifert_decompose(const LinkDiagram& d) {
  CircleClasses cc(d);

  std::map<std::string, std::vector<std::string>> members;
  for (const auto& arc : d.arcs()) members[cc.cls.find(arc)].push_back(arc);

  // Side rule: at a positive crossing the {slot2, slot3} circle is on the E
  // side and the {slot0, slot1} circle on the V side; at a negative crossing
  // the E side is {slot0, slot3} and the V side {slot1, slot2}.
  std::map<std::string, int> side;  // rep -> +1 (E) / -1 (V)
  auto assign = [&](const std::string& rep, int s, const std::string& at) {
    auto [it, fresh] = side.emplace(rep, s);
    if (!fresh && it->second != s)
      bad_diagram("crossing '" + at + "' puts circle of arc '" + rep +
                  "' on both sides of the bipartition");
  };
  for (const auto& c : d.crossings()) {
    const std::string& e_rep = cc.cls.find(c.sign > 0 ? c.s[2] : c.s[0]);
    const std::string& v_rep = cc.cls.find(c.sign > 0 ? c.s[0] : c.s[1]);
    if (e_rep == v_rep)
      bad_diagram("crossing '" + c.id + "' joins a circle to itself");
    assign(e_rep, +1, c.id);
    assign(v_rep, -1, c.id);
  }

  SeifertDecomposition out;
  std::map<std::string, std::string> label_of;
  auto claim_label = [&](const std::string& label) {
    if (out.circles.count(label))
      bad_diagram("two Seifert circles reduce to the same label '" + label +
                  "'");
  };
  std::vector<std::string> evs, vvs;
  for (const auto& [rep, arcs] : members) {
    std::string label = circle_label(arcs.front());
    claim_label(label);
    out.circles[label] = arcs;
    label_of[rep] = label;
    (side.at(rep) > 0 ? evs : vvs).push_back(label);
  }
  for (const auto& l : d.free_loops()) {
    claim_label(l.label);
    out.circles[l.label] = {};
    (l.e_class ? evs : vvs).push_back(l.label);
  }

  std::vector<EdgeRec> edges;
  for (const auto& c : d.crossings()) {
    const std::string& e_rep = cc.cls.find(c.sign > 0 ? c.s[2] : c.s[0]);
    const std::string& v_rep = cc.cls.find(c.sign > 0 ? c.s[0] : c.s[1]);
    edges.push_back(EdgeRec{c.id, label_of.at(e_rep), label_of.at(v_rep),
                            c.sign});
  }
  out.graph = SignedBipartiteGraph(std::move(evs), std::move(vvs),
                                   std::move(edges));
  out.circle_count = members.size() + d.free_loops().size();
  return out;
}

namespace {

LaurentPoly2 delta_poly() {
  return LaurentPoly2::from_terms({{-1, -1, 1}, {1, -1, -1}});
}

LaurentPoly2 delta_pow(std::size_t k) { return delta_poly().pow(k); }

/// Where each arc runs into a crossing, and whether it arrives underneath.
struct HeadIndex {
  std::map<std::string, std::pair<std::size_t, bool>> at;
  explicit HeadIndex(const LinkDiagram& d) {
    const auto& cs = d.crossings();
    for (std::size_t i = 0; i < cs.size(); ++i) {
      at[cs[i].s[0]] = {i, true};
      at[cs[i].s[over_in_slot(cs[i])]] = {i, false};
    }
  }
};

/// First crossing whose first encounter along the canonical traversal
/// (components by smallest arc, each walked from its smallest arc) happens
/// on the under-strand; nullopt when the diagram is descending.
std::optional<std::string> first_bad_crossing(const LinkDiagram& d) {
  HeadIndex heads(d);
  std::set<std::size_t> seen;
  for (const auto& comp : d.strand_components())
    for (const auto& arc : comp) {
      auto [ci, under] = heads.at.at(arc);
      if (seen.insert(ci).second && under) return d.crossings()[ci].id;
    }
  return std::nullopt;
}

/// Memo key: the crossing contents (order-insensitive) plus the number of
/// free loops.
std::string diagram_key(const LinkDiagram& d) {
  std::vector<std::string> parts;
  for (const auto& c : d.crossings())
    parts.push_back(c.s[0] + "|" + c.s[1] + "|" + c.s[2] + "|" + c.s[3] +
                    (c.sign > 0 ? "|+" : "|-"));
  std::sort(parts.begin(), parts.end());
  std::ostringstream os;
  for (const auto& p : parts) os << p << ";";
  os << "#" << d.free_loops().size();
  return os.str();
}

/// Skein recursion. Every call site guarantees at least one component.
/// Termination: switching the first bad crossing strictly advances the
/// position of the first bad crossing along the (unchanged) traversal, and
/// smoothing removes a crossing.
LaurentPoly2 homfly_eval(const LinkDiagram& d,
                         std::map<std::string, LaurentPoly2>& memo) {
  if (d.crossings().empty()) return delta_pow(d.component_count() - 1);
  std::string key = diagram_key(d);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  LaurentPoly2 res;
  auto bad = first_bad_crossing(d);
  if (!bad) {
    res = delta_pow(d.component_count() - 1);
  } else {
    const Crossing& c = d.crossing_by_id(*bad);
    LaurentPoly2 switched = homfly_eval(switch_crossing(d, *bad), memo);
    LaurentPoly2 smoothed = homfly_eval(smooth_crossing(d, *bad), memo);
    if (c.sign > 0)
      res = LaurentPoly2::monomial(1, 2, 0) * switched +
            LaurentPoly2::monomial(1, 1, 1) * smoothed;
    else
      res = LaurentPoly2::monomial(1, -2, 0) * switched -
            LaurentPoly2::monomial(1, -1, 1) * smoothed;
  }
  memo.emplace(std::move(key), res);
  return res;
}

}  // namespace

LaurentPoly2 homfly(const LinkDiagram& d, std::size_t max_crossings) {
  if (d.crossings().size() > max_crossings)
    throw std::invalid_argument(
        "homfly: diagram has " + std::to_string(d.crossings().size()) +
        " crossings, which exceeds the budget of " +
        std::to_string(max_crossings));
  if (d.component_count() == 0)
    throw std::invalid_argument("homfly: diagram has no strands");

  // Evaluate crossing-connected pieces independently; each split piece
  // (and each free loop) beyond the first contributes a delta factor.
  auto comps = d.strand_components();
  std::map<std::string, std::size_t> comp_of;
  for (std::size_t i = 0; i < comps.size(); ++i)
    for (const auto& arc : comps[i]) comp_of[arc] = i;

  std::vector<std::size_t> group(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) group[i] = i;
  std::function<std::size_t(std::size_t)> root = [&](std::size_t i) {
    return group[i] == i ? i : group[i] = root(group[i]);
  };
  for (const auto& c : d.crossings())
    for (const auto& arc : c.s) group[root(comp_of[c.s[0]])] = root(comp_of[arc]);

  std::map<std::size_t, std::vector<Crossing>> pieces;
  for (const auto& c : d.crossings())
    pieces[root(comp_of[c.s[0]])].push_back(c);

  std::map<std::string, LaurentPoly2> memo;
  LaurentPoly2 prod = LaurentPoly2::one();
  for (const auto& [r, cs] : pieces)
    prod = prod * homfly_eval(LinkDiagram(cs, {}), memo);
  std::size_t piece_count = pieces.size() + d.free_loops().size();
  return prod * delta_pow(piece_count - 1);
}

long morton_bound(const LinkDiagram& d) {
  return static_cast<long>(d.crossings().size()) -
         static_cast<long>(circle_count_of(d)) + 1;
}

LaurentPoly2 homfly_top(const LinkDiagram& d, std::size_t max_crossings) {
  return homfly(d, max_crossings).coeff_of_z(morton_bound(d));
}

}  // namespace itop
