// Command-line front end: polynomial invariants of signed bipartite graphs
// and HOMFLY computations on link diagrams, with stable text/JSON output.
//
// Exit codes: 0 success, 2 bad input data (unreadable file, parse error,
// domain error), 3 verification mismatch, 64 command-line usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <itop/graph.hpp>
#include <itop/interior.hpp>
#include <itop/io.hpp>
#include <itop/knot.hpp>
#include <itop/lattice.hpp>
#include <itop/median.hpp>
#include <itop/poly.hpp>
#include <itop/signed.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using itop::Int;
using itop::Rat;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitUsage = 64;

// Exact integers serialize as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise, so arbitrarily large coefficients survive.
json int_json(const Int& n) {
  if (n >= Int(std::numeric_limits<std::int64_t>::min()) &&
      n <= Int(std::numeric_limits<std::int64_t>::max())) {
    return json(static_cast<std::int64_t>(n));
  }
  return json(n.str());
}

json rat_json(const Rat& r) {
  if (boost::multiprecision::denominator(r) == 1) {
    return int_json(Int(boost::multiprecision::numerator(r)));
  }
  return json(r.str());
}

json coeffs_json(const itop::IntPolynomial& p) {
  json out = json::array();
  for (const Int& c : p.coeffs()) out.push_back(int_json(c));
  return out;
}

json poly_json(const itop::IntPolynomial& p) {
  return json{{"coeffs", coeffs_json(p)}, {"text", p.to_string()}};
}

json laurent_json(const itop::LaurentPoly2& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) {
    terms.push_back(json{{"v", t.v}, {"z", t.z}, {"c", int_json(t.c)}});
  }
  return json{{"terms", terms}, {"text", p.to_string()}};
}

json graph_json(const itop::SignedBipartiteGraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) {
    edges.push_back(
        json{{"id", e.id}, {"e", e.e}, {"v", e.v}, {"sign", e.sign}});
  }
  return json{{"e_vertices", g.e_vertices()},
              {"v_vertices", g.v_vertices()},
              {"edges", edges}};
}

std::string pd_text_of(const itop::LinkDiagram& d) {
  std::ostringstream out;
  for (const auto& c : d.crossings()) {
    out << "X " << c.s[0] << ' ' << c.s[1] << ' ' << c.s[2] << ' ' << c.s[3]
        << ' ' << (c.sign > 0 ? '+' : '-') << ' ' << c.id << '\n';
  }
  for (const auto& l : d.free_loops()) {
    out << "O " << l.label << ' ' << (l.e_class ? 'E' : 'V') << '\n';
  }
  return out.str();
}

json diagram_json(const itop::LinkDiagram& d) {
  json crossings = json::array();
  for (const auto& c : d.crossings()) {
    crossings.push_back(json{{"id", c.id},
                             {"arcs", json{c.s[0], c.s[1], c.s[2], c.s[3]}},
                             {"sign", c.sign}});
  }
  json loops = json::array();
  for (const auto& l : d.free_loops()) {
    loops.push_back(json{{"label", l.label}, {"class", l.e_class ? "E" : "V"}});
  }
  return json{{"crossings", crossings}, {"free_loops", loops}};
}

struct Options {
  std::string file;
  bool json_only = false;
  bool no_shortcut = false;
  bool trace = false;
  long max_s = -1;  // -1: use the polynomial degree bound
  std::size_t order = 8;
  std::size_t max_crossings = 16;
  std::size_t max_edges = 12;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

itop::GraphFile load_graph(const std::string& path) {
  return itop::parse_graph_text(read_file(path));
}

itop::LinkDiagram load_pd(const std::string& path) {
  return itop::parse_pd_text(read_file(path));
}

// Attaches the JSON schema version and prints the report: human-readable
// lines first (unless suppressed), then the JSON document.
void emit(const Options& opt, const std::string& human, json doc) {
  doc["format"] = 1;
  if (!opt.json_only && !human.empty()) std::cout << human;
  std::cout << doc.dump(2) << '\n';
}

int cmd_interior(const Options& opt) {
  auto g = load_graph(opt.file).graph;
  itop::IntPolynomial p = itop::interior_prime(g);
  json doc{{"command", "interior"},
           {"coeffs", coeffs_json(p)},
           {"text", p.to_string()}};
  emit(opt, "interior polynomial: " + p.to_string() + "\n", doc);
  return kExitOk;
}

int cmd_signed_interior(const Options& opt) {
  auto g = load_graph(opt.file).graph;
  itop::IntPolynomial p = itop::signed_interior(g, !opt.no_shortcut);
  json doc{{"command", "signed-interior"},
           {"coeffs", coeffs_json(p)},
           {"text", p.to_string()}};
  std::ostringstream human;
  human << "signed interior polynomial: " << p.to_string() << '\n';
  if (opt.trace) {
    itop::SignedInteriorTrace t = itop::signed_interior_trace(g);
    json rows = json::array();
    for (const auto& row : t.rows) {
      rows.push_back(json{{"deleted", row.deleted_edge_ids},
                          {"sign", row.sign},
                          {"coeffs", coeffs_json(row.value)},
                          {"text", row.value.to_string()}});
      human << (row.sign > 0 ? "  + " : "  - ") << row.value.to_string()
            << "   deleted {";
      for (std::size_t i = 0; i < row.deleted_edge_ids.size(); ++i) {
        human << (i ? "," : "") << row.deleted_edge_ids[i];
      }
      human << "}\n";
    }
    doc["trace"] =
        json{{"rows", rows}, {"total", coeffs_json(t.total)}};
    human << "  = " << t.total.to_string() << '\n';
  }
  emit(opt, human.str(), doc);
  return kExitOk;
}

int cmd_ehrhart(const Options& opt) {
  auto g = load_graph(opt.file).graph;
  itop::EhrhartData data = itop::ehrhart_data(g);
  long max_s = opt.max_s >= 0 ? opt.max_s : data.degree_bound;
  json counts = json::array();
  for (long s = 0; s <= max_s; ++s) {
    counts.push_back(
        int_json(s <= data.degree_bound
                     ? data.counts[static_cast<std::size_t>(s)]
                     : itop::count_lattice_points(g, s)));
  }
  json basis = json::array();
  for (const Rat& c : data.basis_coeffs) basis.push_back(rat_json(c));
  itop::PowerSeriesTrunc series = itop::ehrhart_series(g, opt.order);
  json series_coeffs = json::array();
  for (const Rat& c : series.coeffs()) series_coeffs.push_back(rat_json(c));
  itop::IntPolynomial via = itop::interior_via_ehrhart(g);
  json doc{{"command", "ehrhart"},
           {"degree_bound", data.degree_bound},
           {"counts", counts},
           {"basis_coeffs", basis},
           {"series", json{{"order", opt.order}, {"coeffs", series_coeffs}}},
           {"interior", poly_json(via)}};
  std::ostringstream human;
  human << "dilation point counts (s = 0.." << max_s << "):";
  for (const auto& c : counts) human << ' ' << c.dump();
  human << "\ninterior polynomial via counting: " << via.to_string() << '\n';
  emit(opt, human.str(), doc);
  return kExitOk;
}

int cmd_homfly(const Options& opt) {
  itop::LinkDiagram d = load_pd(opt.file);
  itop::LaurentPoly2 p = itop::homfly(d, opt.max_crossings);
  long bound = itop::morton_bound(d);
  auto max_z = p.max_z_degree();
  json doc{{"command", "homfly"},
           {"homfly", laurent_json(p)},
           {"max_z_degree", max_z ? json(*max_z) : json(nullptr)},
           {"morton_bound", bound}};
  std::ostringstream human;
  human << "P = " << p.to_string() << '\n';
  if (max_z) {
    human << "max z-degree " << *max_z << ", bound " << bound
          << (*max_z < bound ? " (not sharp)" : " (sharp)") << '\n';
  } else {
    human << "P = 0; bound " << bound << '\n';
  }
  emit(opt, human.str(), doc);
  return kExitOk;
}

int cmd_seifert(const Options& opt) {
  itop::LinkDiagram d = load_pd(opt.file);
  itop::SeifertDecomposition sd = itop::seifert_decompose(d);
  json circles = json::object();
  for (const auto& [label, arcs] : sd.circles) circles[label] = arcs;
  json doc{{"command", "seifert"},
           {"circle_count", sd.circle_count},
           {"circles", circles},
           {"graph", graph_json(sd.graph)}};
  std::ostringstream human;
  human << sd.circle_count << " Seifert circles\n";
  for (const auto& [label, arcs] : sd.circles) {
    human << "  " << label << ':';
    for (const auto& a : arcs) human << ' ' << a;
    human << '\n';
  }
  emit(opt, human.str(), doc);
  return kExitOk;
}

int cmd_median(const Options& opt) {
  itop::GraphFile f = load_graph(opt.file);
  if (!f.has_rotations) {
    throw std::runtime_error(
        "'" + opt.file + "' has no R rotation lines; the median "
        "construction needs a plane embedding");
  }
  itop::LinkDiagram d = itop::median_construct(f.graph, f.embedding);
  std::string pd = pd_text_of(d);
  json doc{{"command", "median"},
           {"diagram", diagram_json(d)},
           {"pd_text", pd}};
  emit(opt, pd, doc);
  return kExitOk;
}

int cmd_verify(const Options& opt, int* exit_code) {
  std::string text = read_file(opt.file);
  itop::LinkDiagram d = [&] {
    if (itop::looks_like_pd_text(text)) return itop::parse_pd_text(text);
    itop::GraphFile f = itop::parse_graph_text(text);
    if (!f.has_rotations) {
      throw std::runtime_error(
          "'" + opt.file + "' has no R rotation lines; verification of a "
          "graph file needs a plane embedding");
    }
    return itop::median_construct(f.graph, f.embedding);
  }();
  itop::MainTheoremReport r = itop::verify_main_theorem(d, opt.max_crossings);
  json doc{{"command", "verify"},
           {"equal", r.equal},
           {"morton_bound", r.bound},
           {"homfly", laurent_json(r.homfly_value)},
           {"left", laurent_json(r.left)},
           {"seifert_graph", graph_json(r.seifert_graph)},
           {"exponent", r.exponent},
           {"signed_interior", poly_json(r.signed_interior_value)},
           {"right", laurent_json(r.right)}};
  std::ostringstream human;
  human << "coefficient of z^" << r.bound << " in P: " << r.left.to_string()
        << '\n'
        << "v^" << r.exponent
        << " * signed interior at v^2: " << r.right.to_string() << '\n'
        << (r.equal ? "EQUAL" : "MISMATCH") << '\n';
  emit(opt, human.str(), doc);
  *exit_code = r.equal ? kExitOk : kExitMismatch;
  return *exit_code;
}

json trace_node_json(const itop::RecursionTrace::Node& n) {
  json branches = json::array();
  for (const auto& b : n.branches) {
    branches.push_back(json{{"deleted", b.deleted_edge_ids},
                            {"sign", b.sign},
                            {"child", trace_node_json(b.child.at(0))}});
  }
  json cycle = nullptr;
  if (n.cycle) {
    cycle = json{{"vertices", n.cycle->vertices},
                 {"edge_ids", n.cycle->edge_ids}};
  }
  return json{{"graph", graph_json(n.graph)},
              {"forest", n.forest},
              {"component_count", n.component_count},
              {"cycle", cycle},
              {"alternate_edges", n.alternate_edges},
              {"value", poly_json(n.value)},
              {"branches", branches}};
}

void trace_node_human(const itop::RecursionTrace::Node& n, int depth,
                      std::ostream& out) {
  std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
  out << pad << (n.forest ? "forest" : "recurse") << " ("
      << n.graph.edges().size() << " edges) -> " << n.value.to_string()
      << '\n';
  for (const auto& b : n.branches) {
    out << pad << (b.sign > 0 ? "+ delete {" : "- delete {");
    for (std::size_t i = 0; i < b.deleted_edge_ids.size(); ++i) {
      out << (i ? "," : "") << b.deleted_edge_ids[i];
    }
    out << "}\n";
    trace_node_human(b.child.at(0), depth + 1, out);
  }
}

int cmd_recursion_trace(const Options& opt) {
  auto g = load_graph(opt.file).graph;
  itop::RecursionTrace t = itop::recursion_trace(g, opt.max_edges);
  json doc{{"command", "recursion-trace"},
           {"value", poly_json(t.root.value)},
           {"root", trace_node_json(t.root)}};
  std::ostringstream human;
  trace_node_human(t.root, 0, human);
  human << "total: " << t.root.value.to_string() << '\n';
  emit(opt, human.str(), doc);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Interior polynomials of signed bipartite graphs, HOMFLY polynomials "
      "of link diagrams, and the correspondence between them"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json-only", opt.json_only,
               "print only the JSON report, no human-readable text");

  auto add_file = [&](CLI::App* sub) {
    sub->fallthrough();  // lets global flags appear after the subcommand
    sub->add_option("file", opt.file, "input file")->required();
  };

  CLI::App* interior =
      app.add_subcommand("interior", "interior polynomial of a graph file");
  add_file(interior);

  CLI::App* signed_interior = app.add_subcommand(
      "signed-interior", "signed interior polynomial of a graph file");
  add_file(signed_interior);
  signed_interior->add_flag(
      "--no-shortcut", opt.no_shortcut,
      "always run the full alternating sum, even when an alternating "
      "cycle forces the answer to zero");
  signed_interior->add_flag("--trace", opt.trace,
                            "emit the term-by-term deletion ledger");

  CLI::App* ehrhart = app.add_subcommand(
      "ehrhart", "lattice-point counts of the graph's edge polytope");
  add_file(ehrhart);
  ehrhart->add_option("--max-s", opt.max_s,
                      "largest dilation factor to count (default: the "
                      "counting polynomial's degree bound)");
  ehrhart->add_option("--order", opt.order,
                      "truncation order of the generating series");

  CLI::App* homfly =
      app.add_subcommand("homfly", "HOMFLY polynomial of a diagram file");
  add_file(homfly);
  homfly->add_option("--max-crossings", opt.max_crossings,
                     "refuse diagrams with more crossings than this");

  CLI::App* seifert = app.add_subcommand(
      "seifert", "Seifert circles and Seifert graph of a diagram file");
  add_file(seifert);

  CLI::App* median = app.add_subcommand(
      "median", "median diagram of a graph file with R rotation lines");
  add_file(median);

  CLI::App* verify = app.add_subcommand(
      "verify",
      "check that the top of the HOMFLY polynomial equals the signed "
      "interior polynomial of the Seifert graph (diagram file, or graph "
      "file with R rotation lines)");
  add_file(verify);
  verify->add_option("--max-crossings", opt.max_crossings,
                     "refuse diagrams with more crossings than this");

  CLI::App* rec_trace = app.add_subcommand(
      "recursion-trace", "full deletion-recursion tree for a graph file");
  add_file(rec_trace);
  rec_trace->add_option("--max-edges", opt.max_edges,
                        "refuse graphs with more edges than this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the usage message
    return kExitUsage;
  }

  try {
    if (*interior) return cmd_interior(opt);
    if (*signed_interior) return cmd_signed_interior(opt);
    if (*ehrhart) return cmd_ehrhart(opt);
    if (*homfly) return cmd_homfly(opt);
    if (*seifert) return cmd_seifert(opt);
    if (*median) return cmd_median(opt);
    if (*verify) {
      int code = kExitOk;
      cmd_verify(opt, &code);
      return code;
    }
    if (*rec_trace) return cmd_recursion_trace(opt);
  } catch (const itop::ParseError& e) {
    std::cerr << opt.file << ": " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitUsage;
}
