#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "skewproj/errors.hpp"
#include "skewproj/io.hpp"
#include "test_helpers.hpp"

using namespace skewproj;
using namespace testutil;

namespace {

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

EpsilonMatrix parse_epsilon_text(const std::string& text) {
  std::istringstream in(text);
  return parse_epsilon(in);
}

std::string graph_error(const std::string& text) {
  try {
    parse_graph_text(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

std::string epsilon_error(const std::string& text) {
  try {
    parse_epsilon_text(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("graph text round trip") {
  Graph g = graph1(5, {{1, 2}, {2, 3}, {4, 5}});
  CHECK(parse_graph_text(format_graph(g)) == g);
  std::mt19937 rng(151);
  for (int trial = 0; trial < 100; ++trial) {
    Graph r = random_graph(1 + int(rng() % 12), rng);
    CHECK(parse_graph_text(format_graph(r)) == r);
  }
}

TEST_CASE("graph parser accepts comments and blank lines") {
  Graph g = parse_graph_text(
      "# five vertices\n\n5   # count\n1 2\n\n2 3  # an edge\n# done\n");
  CHECK(g == graph1(5, {{1, 2}, {2, 3}}));
  CHECK(parse_graph_text("0\n").vertex_count() == 0);
  CHECK(parse_graph_text("3").edge_count() == 0);
}

TEST_CASE("graph parser diagnostics") {
  CHECK(graph_error("") == "missing vertex count");
  CHECK(graph_error("x\n") == "line 1: vertex count must be an integer, got 'x'");
  CHECK(graph_error("17\n").find("between 0 and 16") != std::string::npos);
  CHECK(graph_error("3\n1\n") == "line 2: expected an edge as two labels");
  CHECK(graph_error("3\n1 2 3\n") ==
        "line 2: expected an edge as two labels");
  CHECK(graph_error("3\n1 4\n") == "line 2: vertex 4 out of range 1..3");
  CHECK(graph_error("3\n2 2\n") == "line 2: loop at vertex 2");
  CHECK(graph_error("3\n1 b\n") ==
        "line 2: vertex label must be an integer, got 'b'");
}

TEST_CASE("epsilon text round trip") {
  EpsilonMatrix e = epsilon_of_graph(graph1(3, {{1, 2}}));
  CHECK(format_epsilon(e) == "3\n+1 +1 -1\n+1 +1 -1\n-1 -1 +1\n");
  CHECK(parse_epsilon_text(format_epsilon(e)) == e);
  CHECK(parse_epsilon_text("2\n1 1\n1 1\n") ==
        epsilon_of_graph(complete(2)));
  std::mt19937 rng(157);
  for (int trial = 0; trial < 100; ++trial) {
    EpsilonMatrix r = epsilon_of_graph(random_graph(1 + int(rng() % 12), rng));
    CHECK(parse_epsilon_text(format_epsilon(r)) == r);
  }
}

TEST_CASE("epsilon parser diagnostics") {
  CHECK(epsilon_error("2\n+1 -1\n+1 +1\n") ==
        "entries (1,2) and (2,1) disagree");
  CHECK(epsilon_error("2\n+1 +1\n+1 -1\n") ==
        "diagonal entry (2,2) must be +1");
  CHECK(epsilon_error("2\n+1 +1\n+1\n").find("expected 2 entries") !=
        std::string::npos);
  CHECK(epsilon_error("2\n+1 +1 +1\n+1 +1\n").find("expected 2 entries") !=
        std::string::npos);
  CHECK(epsilon_error("2\n+1 0\n0 +1\n") ==
        "line 2: entry (1,2) must be +1 or -1, got '0'");
  CHECK(epsilon_error("1\n+1\n+1\n").find("after the matrix") !=
        std::string::npos);
  CHECK(epsilon_error("2\n+1 +1\n") == "missing matrix row 2");
}

TEST_CASE("component and type formatting") {
  CHECK(format_component(vs({1, 2, 4})) == "P(1,2,4)");
  CHECK(format_component(vs({3})) == "P(3)");
  CHECK(format_type(TypeVector{0, 2, 1}) == "(0,2,1)");
  CHECK(format_type(TypeVector{1}) == "(1)");
  CHECK(format_set(vs({1, 2, 4})) == "{1,2,4}");
  CHECK(format_set(0) == "{}");
}

TEST_CASE("variety formatting") {
  FacetFamily fam = facets(graph1(4, {{1, 2}}));
  CHECK(format_variety(fam) == "P(1,2,3) u P(1,2,4) u P(3,4)");
  CHECK(format_variety(fam, true) ==
        "P(1,2,3) ∪ P(1,2,4) ∪ P(3,4)");
  CHECK(format_variety(facets(complete(3))) == "P(1,2,3)");
}

TEST_CASE("variety json layout") {
  Graph g = graph1(4, {{1, 2}});
  nlohmann::json j = variety_json(facets(g), type_vector(g), dimension(g));
  CHECK(j["n"] == 4);
  CHECK(j["dimension"] == 2);
  CHECK(j["type"] == nlohmann::json::array({0, 2, 1}));
  nlohmann::json components = nlohmann::json::array(
      {{1, 2, 3}, {1, 2, 4}, {3, 4}});
  CHECK(j["components"] == components);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"components", "dimension", "n",
                                         "type"});
  CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}

TEST_CASE("catalog json layout") {
  nlohmann::json j = catalog_json(enumerate_classes(3));
  CHECK(j["n"] == 3);
  CHECK(j["class_count"] == 2);
  REQUIRE(j["classes"].size() == 2);
  std::vector<std::string> keys;
  for (auto it = j["classes"][0].begin(); it != j["classes"][0].end(); ++it)
    keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"certificate_hex", "components",
                                         "dimension", "labeled_count",
                                         "representative_edges", "type"});
  CHECK(j["classes"][0]["representative_edges"] ==
        nlohmann::json::array());  // empty graph comes first
  CHECK(j["classes"][0]["labeled_count"] == 4);
  CHECK(j["classes"][1]["labeled_count"] == 4);
  CHECK(nlohmann::json::parse(j.dump(2)).dump(2) == j.dump(2));
}
