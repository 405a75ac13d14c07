#include <itop/io.hpp>

#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace itop {

namespace {

struct Token {
  std::string text;
  std::size_t column = 0;  // 1-based offset of the first character
};

// Splits one line into whitespace-separated tokens, dropping '#' comments.
std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r' && line[i] != '#') {
      ++i;
    }
    out.push_back(Token{line.substr(start, i - start), start + 1});
  }
  return out;
}

std::vector<std::pair<std::size_t, std::vector<Token>>> significant_lines(
    const std::string& text) {
  std::vector<std::pair<std::size_t, std::vector<Token>>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto tokens = tokenize(line);
    if (!tokens.empty()) out.emplace_back(number, std::move(tokens));
  }
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {}

GraphFile parse_graph_text(const std::string& text) {
  std::vector<std::string> e_labels;
  std::vector<std::string> v_labels;
  std::set<std::string> seen_labels;
  std::set<std::string> e_set;
  std::set<std::string> v_set;
  std::vector<EdgeRec> edges;
  std::set<std::string> edge_ids;
  std::vector<std::pair<std::size_t, std::vector<Token>>> rotation_lines;
  std::size_t edge_count = 0;

  for (const auto& [line, tokens] : significant_lines(text)) {
    const std::string& head = tokens[0].text;
    if (head == "E" || head == "V") {
      if (tokens.size() < 2) {
        throw ParseError(line, tokens[0].column,
                         "'" + head + "' needs at least one vertex label");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const std::string& label = tokens[i].text;
        if (!seen_labels.insert(label).second) {
          throw ParseError(line, tokens[i].column,
                           "vertex '" + label + "' declared twice");
        }
        if (head == "E") {
          e_labels.push_back(label);
          e_set.insert(label);
        } else {
          v_labels.push_back(label);
          v_set.insert(label);
        }
      }
    } else if (head == "+" || head == "-") {
      if (tokens.size() != 3 && tokens.size() != 4) {
        throw ParseError(line, tokens[0].column,
                         "edge lines are '" + head + " e v [id]'");
      }
      const std::string& e = tokens[1].text;
      const std::string& v = tokens[2].text;
      if (!e_set.count(e)) {
        throw ParseError(line, tokens[1].column,
                         "'" + e + "' is not a declared E vertex");
      }
      if (!v_set.count(v)) {
        throw ParseError(line, tokens[2].column,
                         "'" + v + "' is not a declared V vertex");
      }
      ++edge_count;
      std::string id =
          tokens.size() == 4 ? tokens[3].text : std::to_string(edge_count);
      std::size_t id_column =
          tokens.size() == 4 ? tokens[3].column : tokens[0].column;
      if (!edge_ids.insert(id).second) {
        throw ParseError(line, id_column, "edge id '" + id + "' used twice");
      }
      edges.push_back(EdgeRec{id, e, v, head == "+" ? +1 : -1});
    } else if (head == "R") {
      if (tokens.size() < 2 || tokens[1].text.size() < 2 ||
          tokens[1].text.back() != ':') {
        throw ParseError(line, tokens.size() < 2 ? tokens[0].column
                                                 : tokens[1].column,
                         "rotation lines are 'R vertex: id id ...'");
      }
      rotation_lines.emplace_back(line, tokens);
    } else {
      throw ParseError(line, tokens[0].column,
                       "unknown directive '" + head + "'");
    }
  }

  GraphFile out{SignedBipartiteGraph(e_labels, v_labels, edges), false, {}};

  for (const auto& [line, tokens] : rotation_lines) {
    std::string vertex = tokens[1].text.substr(0, tokens[1].text.size() - 1);
    if (!out.graph.has_vertex(vertex)) {
      throw ParseError(line, tokens[1].column,
                       "'" + vertex + "' is not a declared vertex");
    }
    if (out.embedding.rotation.count(vertex)) {
      throw ParseError(line, tokens[1].column,
                       "rotation at '" + vertex + "' given twice");
    }
    std::vector<std::string> ids;
    for (std::size_t i = 2; i < tokens.size(); ++i) {
      if (!out.graph.has_edge_id(tokens[i].text)) {
        throw ParseError(line, tokens[i].column,
                         "'" + tokens[i].text + "' is not an edge id");
      }
      ids.push_back(tokens[i].text);
    }
    out.embedding.rotation.emplace(std::move(vertex), std::move(ids));
    out.has_rotations = true;
  }
  return out;
}

LinkDiagram parse_pd_text(const std::string& text) {
  std::vector<Crossing> crossings;
  std::vector<FreeLoop> loops;
  std::set<std::string> ids;
  std::size_t crossing_count = 0;
  std::size_t last_line = 1;

  for (const auto& [line, tokens] : significant_lines(text)) {
    last_line = line;
    const std::string& head = tokens[0].text;
    if (head == "X") {
      if (tokens.size() != 6 && tokens.size() != 7) {
        throw ParseError(line, tokens[0].column,
                         "crossing lines are 'X a b c d +|- [id]'");
      }
      const std::string& sign = tokens[5].text;
      if (sign != "+" && sign != "-") {
        throw ParseError(line, tokens[5].column,
                         "crossing sign must be '+' or '-'");
      }
      ++crossing_count;
      std::string id = tokens.size() == 7 ? tokens[6].text
                                          : "x" + std::to_string(crossing_count);
      std::size_t id_column =
          tokens.size() == 7 ? tokens[6].column : tokens[0].column;
      if (!ids.insert(id).second) {
        throw ParseError(line, id_column,
                         "crossing id '" + id + "' used twice");
      }
      crossings.push_back(Crossing{
          id,
          {tokens[1].text, tokens[2].text, tokens[3].text, tokens[4].text},
          sign == "+" ? +1 : -1});
    } else if (head == "O") {
      if (tokens.size() != 2 && tokens.size() != 3) {
        throw ParseError(line, tokens[0].column,
                         "loop lines are 'O label [E|V]'");
      }
      bool e_class = true;
      if (tokens.size() == 3) {
        if (tokens[2].text == "E") {
          e_class = true;
        } else if (tokens[2].text == "V") {
          e_class = false;
        } else {
          throw ParseError(line, tokens[2].column,
                           "loop class must be 'E' or 'V'");
        }
      }
      loops.push_back(FreeLoop{tokens[1].text, e_class});
    } else {
      throw ParseError(line, tokens[0].column,
                       "unknown directive '" + head + "'");
    }
  }

  try {
    return LinkDiagram(std::move(crossings), std::move(loops));
  } catch (const std::invalid_argument& e) {
    throw ParseError(last_line, 1, e.what());
  }
}

bool looks_like_pd_text(const std::string& text) {
  for (const auto& [line, tokens] : significant_lines(text)) {
    (void)line;
    return tokens[0].text == "X" || tokens[0].text == "O";
  }
  return false;
}

}  // namespace itop
