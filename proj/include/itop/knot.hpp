#pragma once

#include <itop/graph.hpp>
#include <itop/poly.hpp>

#include <array>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace itop {

/// One crossing of an oriented link diagram. The four arc labels are listed
/// counterclockwise starting from the incoming under-arc:
///   slot 0: incoming under-arc          slot 2: outgoing under-arc
/// and the over-strand runs slot 3 -> slot 1 at a positive crossing,
/// slot 1 -> slot 3 at a negative one.
struct Crossing {
  std::string id;
  std::array<std::string, 4> s;
  int sign = +1;
  bool operator==(const Crossing& o) const = default;
};

/// Closed strand without any crossing. The class hint records on which side
/// of the Seifert bipartition the circle belongs; it only matters to
/// seifert_decompose.
struct FreeLoop {
  std::string label;
  bool e_class = true;
  bool operator==(const FreeLoop& o) const = default;
};

/// Oriented link diagram: crossings plus crossing-free loops. Construction
/// validates closedness (every arc label appears in exactly two slots) and
/// orientation consistency (each arc occupies exactly one incoming and one
/// outgoing slot role, as derived from the declared signs).
class LinkDiagram {
 public:
  LinkDiagram() = default;  // the empty diagram (no strands at all)
  LinkDiagram(std::vector<Crossing> crossings,
              std::vector<FreeLoop> free_loops);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const std::vector<FreeLoop>& free_loops() const { return free_loops_; }
  const Crossing& crossing_by_id(const std::string& id) const;

  /// All arc labels, sorted.
  std::vector<std::string> arcs() const;

  /// The arc that continues `arc` after it runs into its head crossing.
  const std::string& successor(const std::string& arc) const;

  /// Strand components among the arcs (each a cycle of the successor map,
  /// listed from its smallest arc), ordered by smallest arc label. Free
  /// loops are not included here.
  std::vector<std::vector<std::string>> strand_components() const;

  /// Strand components plus free loops.
  std::size_t component_count() const;

  bool operator==(const LinkDiagram& o) const = default;

 private:
  std::vector<Crossing> crossings_;
  std::vector<FreeLoop> free_loops_;
  std::map<std::string, std::string> successor_;
  void validate_and_index();
};

/// The same diagram with one crossing changed to the other over/under
/// choice. The crossing keeps its id; its slots are rotated so slot 0 is
/// again the incoming under-arc, and its sign flips.
LinkDiagram switch_crossing(const LinkDiagram& d, const std::string& id);

/// The oriented smoothing of one crossing: the crossing disappears and its
/// in/out arc pairs are spliced together. A spliced strand left without any
/// crossing becomes a free loop.
LinkDiagram smooth_crossing(const LinkDiagram& d, const std::string& id);

/// Seifert circles of a diagram together with the bipartite crossing graph
/// on them: one vertex per circle (E/V classes from the two circle sides),
/// one signed edge per crossing, edge id = crossing id. Circle labels are
/// the smallest member arc label truncated at its last ':' (free-loop labels
/// are used as-is); a label collision between circles is an error.
struct SeifertDecomposition {
  std::map<std::string, std::vector<std::string>> circles;  // label -> arcs
  SignedBipartiteGraph graph;
  std::size_t circle_count = 0;
};

SeifertDecomposition seifert_decompose(const LinkDiagram& d);

/// The two-variable link polynomial determined by the relation
///   v^-1 P(positive crossing) - v P(negative crossing) = z P(smoothed)
/// and P(unknot) = 1, evaluated by skein recursion on descending diagrams.
/// Refuses diagrams with more than `max_crossings` crossings.
LaurentPoly2 homfly(const LinkDiagram& d, std::size_t max_crossings = 16);

/// crossings - Seifert circles + 1: an upper bound for the z-degree of
/// homfly(d).
long morton_bound(const LinkDiagram& d);

/// The coefficient of z^morton_bound(d) in homfly(d), as a polynomial in v
/// (zero when the bound is not attained).
LaurentPoly2 homfly_top(const LinkDiagram& d, std::size_t max_crossings = 16);

}  // namespace itop
