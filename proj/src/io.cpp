#include "skewproj/io.hpp"

#include <array>
#include <istream>
#include <sstream>

#include "skewproj/errors.hpp"

namespace skewproj {

namespace {

// Advances to the next line that still has tokens after comment stripping.
bool next_line(std::istream& in, std::istringstream& tokens, int& line_no) {
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string word;
    if (probe >> word) {
      tokens.clear();
      tokens.str(line);
      return true;
    }
  }
  return false;
}

int parse_int(const std::string& token, int line_no, const char* what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size())
    fail_input("line " + std::to_string(line_no) + ": " + what +
               " must be an integer, got '" + token + "'");
  return value;
}

int parse_count(std::istream& in, int& line_no) {
  std::istringstream tokens;
  if (!next_line(in, tokens, line_no)) fail_input("missing vertex count");
  std::string tok, extra;
  tokens >> tok;
  int n = parse_int(tok, line_no, "vertex count");
  if (tokens >> extra)
    fail_input("line " + std::to_string(line_no) +
               ": expected only the vertex count");
  if (n < 0 || n > kMaxVertices)
    fail_input("vertex count must be between 0 and " +
               std::to_string(kMaxVertices) + ", got " + std::to_string(n));
  return n;
}

nlohmann::json components_json(const FacetFamily& fam) {
  nlohmann::json components = nlohmann::json::array();
  for (VertexSet f : fam.facets) {
    nlohmann::json labels = nlohmann::json::array();
    for (int v : set_vertices(f)) labels.push_back(v + 1);
    components.push_back(labels);
  }
  return components;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  int line_no = 0;
  int n = parse_count(in, line_no);
  Graph g(n);
  std::istringstream tokens;
  while (next_line(in, tokens, line_no)) {
    std::string a, b, extra;
    tokens >> a;
    if (!(tokens >> b) || (tokens >> extra))
      fail_input("line " + std::to_string(line_no) +
                 ": expected an edge as two labels");
    int u = parse_int(a, line_no, "vertex label");
    int v = parse_int(b, line_no, "vertex label");
    for (int w : {u, v})
      if (w < 1 || w > n)
        fail_input("line " + std::to_string(line_no) + ": vertex " +
                   std::to_string(w) + " out of range 1.." + std::to_string(n));
    if (u == v)
      fail_input("line " + std::to_string(line_no) + ": loop at vertex " +
                 std::to_string(u));
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  return out;
}

EpsilonMatrix parse_epsilon(std::istream& in) {
  int line_no = 0;
  int n = parse_count(in, line_no);
  std::array<std::array<int, kMaxVertices>, kMaxVertices> sign{};
  std::istringstream tokens;
  for (int i = 0; i < n; ++i) {
    if (!next_line(in, tokens, line_no))
      fail_input("missing matrix row " + std::to_string(i + 1));
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(tokens >> tok))
        fail_input("line " + std::to_string(line_no) + ": expected " +
                   std::to_string(n) + " entries");
      if (tok == "+1" || tok == "1")
        sign[i][j] = +1;
      else if (tok == "-1")
        sign[i][j] = -1;
      else
        fail_input("line " + std::to_string(line_no) + ": entry (" +
                   std::to_string(i + 1) + "," + std::to_string(j + 1) +
                   ") must be +1 or -1, got '" + tok + "'");
    }
    if (tokens >> tok)
      fail_input("line " + std::to_string(line_no) + ": expected " +
                 std::to_string(n) + " entries per row");
  }
  if (next_line(in, tokens, line_no))
    fail_input("line " + std::to_string(line_no) +
               ": unexpected content after the matrix");
  for (int i = 0; i < n; ++i) {
    if (sign[i][i] != +1)
      fail_input("diagonal entry (" + std::to_string(i + 1) + "," +
                 std::to_string(i + 1) + ") must be +1");
    for (int j = i + 1; j < n; ++j)
      if (sign[i][j] != sign[j][i])
        fail_input("entries (" + std::to_string(i + 1) + "," +
                   std::to_string(j + 1) + ") and (" + std::to_string(j + 1) +
                   "," + std::to_string(i + 1) + ") disagree");
  }
  EpsilonMatrix e(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sign[i][j] < 0) e.set(i, j, -1);
  return e;
}

std::string format_epsilon(const EpsilonMatrix& e) {
  std::string out = std::to_string(e.size()) + "\n";
  for (int i = 0; i < e.size(); ++i) {
    for (int j = 0; j < e.size(); ++j) {
      if (j) out += " ";
      out += e.at(i, j) > 0 ? "+1" : "-1";
    }
    out += "\n";
  }
  return out;
}

std::string format_component(VertexSet f) {
  std::string out = "P(";
  bool first = true;
  for (int v : set_vertices(f)) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v + 1);
  }
  return out + ")";
}

std::string format_type(const TypeVector& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(t[i]);
  }
  return out + ")";
}

std::string format_variety(const FacetFamily& fam, bool unicode_union) {
  const char* sep = unicode_union ? " ∪ " : " u ";
  std::string out;
  for (std::size_t i = 0; i < fam.facets.size(); ++i) {
    if (i) out += sep;
    out += format_component(fam.facets[i]);
  }
  return out;
}

nlohmann::json variety_json(const FacetFamily& fam, const TypeVector& type,
                            int dimension) {
  return {{"components", components_json(fam)},
          {"dimension", dimension},
          {"n", fam.n},
          {"type", type}};
}

nlohmann::json catalog_json(const ClassCatalog& catalog) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& rec : catalog.classes) {
    nlohmann::json edges = nlohmann::json::array();
    for (auto [u, v] : rec.representative.edges())
      edges.push_back({u + 1, v + 1});
    classes.push_back({{"certificate_hex", rec.certificate.hex()},
                       {"components", components_json(rec.components)},
                       {"dimension", rec.dimension},
                       {"labeled_count", rec.labeled_count},
                       {"representative_edges", edges},
                       {"type", rec.type}});
  }
  return {{"class_count", int(catalog.classes.size())},
          {"classes", classes},
          {"n", catalog.n}};
}

}  // namespace skewproj
