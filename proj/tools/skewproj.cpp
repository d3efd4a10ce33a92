#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "skewproj/classify.hpp"
#include "skewproj/complex.hpp"
#include "skewproj/epsilon.hpp"
#include "skewproj/errors.hpp"
#include "skewproj/io.hpp"

namespace {

using namespace skewproj;

Graph load_graph(const std::string& path) {
  if (path == "-") return parse_graph(std::cin);
  std::ifstream file(path);
  if (!file) fail_input("cannot read '" + path + "'");
  return parse_graph(file);
}

EpsilonMatrix load_epsilon(const std::string& path) {
  if (path == "-") return parse_epsilon(std::cin);
  std::ifstream file(path);
  if (!file) fail_input("cannot read '" + path + "'");
  return parse_epsilon(file);
}

void require_distinct_stdin(const std::string& a, const std::string& b) {
  if (a == "-" && b == "-")
    fail_input("standard input can supply only one of the two graphs");
}

std::string edge_brace_string(const Graph& g) {
  std::string s = "{";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(u + 1) + "-" + std::to_string(v + 1);
  }
  return s + "}";
}

VertexSet set_from_labels(const std::vector<int>& labels, int n) {
  VertexSet s = 0;
  for (int v : labels) {
    if (v < 1 || v > n)
      fail_input("vertex " + std::to_string(v) + " out of range 1.." +
                 std::to_string(n));
    s = set_add(s, v - 1);
  }
  return s;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial invariants of (+/-1)-skew projective spaces"};
  app.require_subcommand(1);

  int exit_code = 0;
  std::ostringstream out;
  const char* kFileHelp = "input file, - for standard input";

  std::string graph_in = "-";
  auto* cmd_graph =
      app.add_subcommand("graph", "associated graph of a sign matrix");
  cmd_graph->add_option("file", graph_in, kFileHelp);
  cmd_graph->callback(
      [&] { out << format_graph(graph_of_epsilon(load_epsilon(graph_in))); });

  std::string eps_in = "-";
  auto* cmd_eps = app.add_subcommand("epsilon", "sign matrix of a graph");
  cmd_eps->add_option("file", eps_in, kFileHelp);
  cmd_eps->callback(
      [&] { out << format_epsilon(epsilon_of_graph(load_graph(eps_in))); });

  std::string mut_in;
  int mut_v = 0;
  auto* cmd_mut = app.add_subcommand("mutate", "mutation at one vertex");
  cmd_mut->add_option("file", mut_in, kFileHelp)->required();
  cmd_mut->add_option("vertex", mut_v, "1-based vertex")->required();
  cmd_mut->callback(
      [&] { out << format_graph(mutate(load_graph(mut_in), mut_v - 1)); });

  std::string swi_in;
  std::vector<int> swi_vertices;
  auto* cmd_swi = app.add_subcommand("switch", "switching at a vertex set");
  cmd_swi->add_option("file", swi_in, kFileHelp)->required();
  cmd_swi->add_option("vertices", swi_vertices, "1-based vertices of S");
  cmd_swi->callback([&] {
    Graph g = load_graph(swi_in);
    out << format_graph(
        switching(g, set_from_labels(swi_vertices, g.vertex_count())));
  });

  std::string swg_in = "-";
  auto* cmd_swg = app.add_subcommand("sw-graph", "switching graph (double cover)");
  cmd_swg->add_option("file", swg_in, kFileHelp);
  cmd_swg->callback(
      [&] { out << format_graph(switching_graph(load_graph(swg_in))); });

  std::string dbl_in = "-";
  auto* cmd_dbl =
      app.add_subcommand("double", "sign matrix of the doubled algebra");
  cmd_dbl->add_option("file", dbl_in, kFileHelp);
  cmd_dbl->callback(
      [&] { out << format_epsilon(doubled_algebra(load_epsilon(dbl_in))); });

  std::string fac_in = "-";
  auto* cmd_fac = app.add_subcommand("facets", "facets of the complex");
  cmd_fac->add_option("file", fac_in, kFileHelp);
  cmd_fac->callback([&] {
    for (VertexSet f : facets(load_graph(fac_in)).facets)
      out << format_set(f) << "\n";
  });

  std::string var_in = "-";
  bool var_json = false, var_unicode = false;
  auto* cmd_var =
      app.add_subcommand("variety", "point variety as a union of P(F)");
  cmd_var->add_option("file", var_in, kFileHelp);
  cmd_var->add_flag("--json", var_json, "JSON output");
  cmd_var->add_flag("--unicode-union", var_unicode,
                    "join components with the union sign instead of ' u '");
  cmd_var->callback([&] {
    Graph g = load_graph(var_in);
    FacetFamily fam = point_variety(g);
    if (var_json) {
      TypeVector t = g.vertex_count() >= 2 ? type_vector(g) : TypeVector{};
      out << variety_json(fam, t, dimension(g)).dump(2) << "\n";
    } else {
      out << format_variety(fam, var_unicode) << "\n";
    }
  });

  std::string type_in = "-";
  std::vector<int> type_parts;
  auto* cmd_type = app.add_subcommand("type", "type vector");
  cmd_type->add_option("file", type_in, kFileHelp);
  cmd_type->add_option("--parts", type_parts,
                       "orders of a disjoint union of complete graphs");
  cmd_type->callback([&] {
    if (!type_parts.empty()) {
      if (cmd_type->count("file") > 0)
        fail_input("give a graph file or --parts, not both");
      if (type_parts.size() == 1) {
        int r = type_parts[0];
        if (r < 1 || r > kMaxVertices)
          fail_input("part must be between 1 and " +
                     std::to_string(kMaxVertices));
        out << format_type(type_vector(complete_graph(r))) << "\n";
      } else {
        out << format_type(type_formula_complete_union(type_parts)) << "\n";
      }
    } else {
      out << format_type(type_vector(load_graph(type_in))) << "\n";
    }
  });

  std::string dim_in = "-";
  auto* cmd_dim = app.add_subcommand("dim", "dimension of the point variety");
  cmd_dim->add_option("file", dim_in, kFileHelp);
  cmd_dim->callback([&] { out << dimension(load_graph(dim_in)) << "\n"; });

  std::string sr_in = "-";
  auto* cmd_sr =
      app.add_subcommand("sr-ideal", "degree-3 Stanley-Reisner generators");
  cmd_sr->add_option("file", sr_in, kFileHelp);
  cmd_sr->callback([&] {
    for (VertexSet t : stanley_reisner_generators(load_graph(sr_in)))
      out << format_set(t) << "\n";
  });

  std::string eq_a, eq_b;
  int eq_limit = 12;
  auto* cmd_eq =
      app.add_subcommand("equivalent", "switching equivalence of two graphs");
  cmd_eq->add_option("file1", eq_a, kFileHelp)->required();
  cmd_eq->add_option("file2", eq_b, kFileHelp)->required();
  cmd_eq->add_option("--limit-n", eq_limit,
                     "vertex cap override, default 12 (unsupported above it)");
  cmd_eq->callback([&] {
    require_distinct_stdin(eq_a, eq_b);
    bool eq = switching_equivalent(load_graph(eq_a), load_graph(eq_b), eq_limit);
    out << (eq ? "equivalent" : "not equivalent") << "\n";
    if (!eq) exit_code = 1;
  });

  std::string cert_in = "-";
  int cert_limit = 12;
  auto* cmd_cert =
      app.add_subcommand("certificate", "switching-class certificate");
  cmd_cert->add_option("file", cert_in, kFileHelp);
  cmd_cert->add_option("--limit-n", cert_limit,
                       "vertex cap override, default 12 (unsupported above it)");
  cmd_cert->callback(
      [&] { out << certificate(load_graph(cert_in), cert_limit).hex() << "\n"; });

  std::string path_a, path_b;
  auto* cmd_path =
      app.add_subcommand("path", "mutation sequence joining two graphs");
  cmd_path->add_option("file1", path_a, kFileHelp)->required();
  cmd_path->add_option("file2", path_b, kFileHelp)->required();
  cmd_path->callback([&] {
    require_distinct_stdin(path_a, path_b);
    auto found = mutation_path(load_graph(path_a), load_graph(path_b));
    if (!found) {
      out << "not equivalent\n";
      exit_code = 1;
      return;
    }
    out << "mutations:";
    for (int v : found->vertices) out << " " << v + 1;
    out << "\nrelabeling:";
    for (int v : found->relabeling) out << " " << v + 1;
    out << "\n";
  });

  int enum_n = 0, enum_limit = 8;
  bool enum_json = false, enum_long = false;
  auto* cmd_enum =
      app.add_subcommand("enumerate", "catalog of switching classes");
  cmd_enum->add_option("n", enum_n, "vertex count")->required();
  cmd_enum->add_flag("--json", enum_json, "JSON output");
  cmd_enum->add_flag("--long", enum_long, "allow the n=8 long run");
  cmd_enum->add_option("--limit-n", enum_limit,
                       "vertex cap override, default 8 (unsupported above it)");
  cmd_enum->callback([&] {
    EnumerateOptions opts;
    opts.allow_long = enum_long;
    opts.limit_n = enum_limit;
    ClassCatalog catalog = enumerate_classes(enum_n, opts);
    if (enum_json) {
      out << catalog_json(catalog).dump(2) << "\n";
      return;
    }
    out << "n=" << catalog.n << " classes=" << catalog.classes.size() << "\n";
    int k = 0;
    for (const auto& rec : catalog.classes)
      out << "#" << ++k << " edges=" << edge_brace_string(rec.representative)
          << " labeled=" << rec.labeled_count << " type=" << format_type(rec.type)
          << " dim=" << rec.dimension
          << " components=" << format_variety(rec.components) << "\n";
  });

  int verify_n = 0;
  auto* cmd_verify =
      app.add_subcommand("verify", "check the classification biconditionals");
  cmd_verify->add_option("n", verify_n, "order 2..5; all four when omitted");
  cmd_verify->callback([&] {
    std::vector<int> orders =
        verify_n == 0 ? std::vector<int>{2, 3, 4, 5} : std::vector<int>{verify_n};
    bool all = true;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      TheoremReport report = verify_main_theorem(orders[i]);
      all = all && report.all_pass();
      out << report.to_text();
      if (i + 1 < orders.size()) out << "\n";
    }
    if (!all) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  std::cout << out.str();
  return exit_code;
}
