#pragma once

// Hand-assembled link diagrams shared by the diagram test suites. Slot
// conventions: X[s0,s1,s2,s3] lists arcs counterclockwise from the incoming
// under-arc; the over-strand runs s3->s1 at positive and s1->s3 at negative
// crossings.

#include <itop/knot.hpp>

#include <string>
#include <vector>

namespace diagrams {

using itop::Crossing;
using itop::FreeLoop;
using itop::LinkDiagram;

inline Crossing X(std::string id, std::string a, std::string b, std::string c,
                  std::string d, int sign) {
  return Crossing{std::move(id),
                  {std::move(a), std::move(b), std::move(c), std::move(d)},
                  sign};
}

inline LinkDiagram unknot() { return LinkDiagram({}, {FreeLoop{"u", true}}); }

inline LinkDiagram unlink(int n) {
  std::vector<FreeLoop> loops;
  for (int i = 0; i < n; ++i)
    loops.push_back(FreeLoop{"u" + std::to_string(i), i % 2 == 0});
  return LinkDiagram({}, std::move(loops));
}

/// One-crossing unknot, curl crossing positive.
inline LinkDiagram positive_kink() {
  return LinkDiagram({X("k", "A", "A", "B", "B", +1)}, {});
}

/// One-crossing unknot, curl crossing negative.
inline LinkDiagram negative_kink() {
  return LinkDiagram({X("k", "B", "A", "A", "B", -1)}, {});
}

/// Hopf link, both crossings positive.
inline LinkDiagram hopf_positive() {
  return LinkDiagram({X("c1", "B0", "B1", "A0", "A1", +1),
                      X("c2", "B1", "B0", "A1", "A0", +1)},
                     {});
}

/// Hopf link, both crossings negative (mirror of hopf_positive).
inline LinkDiagram hopf_negative() {
  return LinkDiagram({X("c1", "A1", "B0", "B1", "A0", -1),
                      X("c2", "A0", "B1", "B0", "A1", -1)},
                     {});
}

/// Right-handed trefoil on three positive crossings.
inline LinkDiagram trefoil_right() {
  return LinkDiagram({X("P1", "w:2", "w:0", "u:0", "u:2", +1),
                      X("P2", "w:0", "w:1", "u:1", "u:0", +1),
                      X("P3", "w:1", "w:2", "u:2", "u:1", +1)},
                     {});
}

/// hopf_positive with an extra positive curl on arc A0 (same link).
inline LinkDiagram hopf_with_positive_kink() {
  return LinkDiagram({X("c1", "B0", "B1", "A0", "A1", +1),
                      X("c2", "B1", "B0", "A1", "A2", +1),
                      X("k", "A0", "A2", "L", "L", +1)},
                     {});
}

/// hopf_positive with an extra negative curl on arc A0 (same link).
inline LinkDiagram hopf_with_negative_kink() {
  return LinkDiagram({X("c1", "B0", "B1", "A0", "A1", +1),
                      X("c2", "B1", "B0", "A1", "A2", +1),
                      X("k", "A0", "L", "L", "A2", -1)},
                     {});
}

}  // namespace diagrams
