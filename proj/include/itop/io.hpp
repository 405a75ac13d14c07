#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include <itop/graph.hpp>
#include <itop/knot.hpp>
#include <itop/median.hpp>

namespace itop {

// Error raised by the text parsers, carrying a 1-based source position.
// what() is formatted as "line L, column C: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

// A parsed graph file: the signed bipartite graph plus, when the file
// contains `R` lines, a rotation system for a plane embedding.
struct GraphFile {
  SignedBipartiteGraph graph;
  bool has_rotations = false;
  PlaneEmbedding embedding;
};

// Graph text format, one directive per line ('#' starts a comment):
//   E label...            declare vertices of the edge class
//   V label...            declare vertices of the other class
//   + e v [id]            positive edge between declared vertices
//   - e v [id]            negative edge; omitted ids default to the
//                         edge's 1-based declaration index ("1", "2", ...)
//   R vertex: id id ...   rotation (counterclockwise edge order) at vertex
// Vertices must be declared before edges use them, and rotation lines may
// only name edge ids that already exist.
GraphFile parse_graph_text(const std::string& text);

// Link diagram text format, one directive per line ('#' starts a comment):
//   X a b c d +|- [id]    crossing with arc labels in slot order; omitted
//                         ids default to "x1", "x2", ...
//   O label [E|V]         crossing-free loop component (default class E)
// The assembled diagram is validated; structural problems are reported as
// ParseError with the position of the offending line when known.
LinkDiagram parse_pd_text(const std::string& text);

// True when the first significant token of the text is a link-diagram
// directive (X or O) rather than a graph directive.
bool looks_like_pd_text(const std::string& text);

}  // namespace itop
