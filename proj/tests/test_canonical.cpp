#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "skewproj/canonical.hpp"
#include "skewproj/codes.hpp"
#include "test_helpers.hpp"

using namespace skewproj;
using namespace testutil;

namespace {

// Minimum code over every vertex relabeling, evaluated literally.
AdjCode min_code_oracle(AdjCode code,
                        const std::vector<std::array<std::uint8_t, 64>>& maps) {
  AdjCode best = ~AdjCode(0);
  for (const auto& m : maps) best = std::min(best, permute_code(code, m));
  return best;
}

std::vector<std::array<std::uint8_t, 64>> perm_maps(int n) {
  std::vector<std::array<std::uint8_t, 64>> maps;
  for (const auto& p : all_perms(n)) maps.push_back(code_bit_permutation(n, p));
  return maps;
}

}  // namespace

TEST_CASE("canonical form equals the minimum over all relabelings") {
  for (int n = 1; n <= 5; ++n) {
    auto maps = perm_maps(n);
    for (AdjCode code = 0; code < (AdjCode(1) << pair_count(n)); ++code) {
      CanonicalForm want =
          CanonicalForm::from_code(n, min_code_oracle(code, maps));
      CHECK(canonical_form(decode(n, code)) == want);
    }
  }
  std::mt19937 rng(43);
  auto maps6 = perm_maps(6);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = random_graph(6, rng);
    CanonicalForm want =
        CanonicalForm::from_code(6, min_code_oracle(encode(g), maps6));
    CHECK(canonical_form(g) == want);
  }
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 12);
    Graph g = random_graph(n, rng);
    CHECK(canonical_form(relabel(g, random_perm(n, rng))) ==
          canonical_form(g));
  }
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = random_graph(16, rng);
    CHECK(canonical_form(relabel(g, random_perm(16, rng))) ==
          canonical_form(g));
  }
}

TEST_CASE("distinct canonical forms count the isomorphism classes") {
  const int want[] = {1, 2, 4, 11, 34, 156};  // n = 1..6
  for (int n = 1; n <= 6; ++n) {
    std::set<CanonicalForm> forms;
    for (AdjCode code = 0; code < (AdjCode(1) << pair_count(n)); ++code)
      forms.insert(canonical_form(decode(n, code)));
    CHECK(int(forms.size()) == want[n - 1]);
  }
}

TEST_CASE("canonical labeling achieves the canonical form") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(n, rng);
    auto [form, labeling] = canonical_labeling(g);
    CHECK(form == canonical_form(g));
    CHECK(CanonicalForm::from_code(n, encode(relabel(g, labeling))) == form);
  }
}

TEST_CASE("canonical form bytes") {
  CanonicalForm form = canonical_form(graph1(3, {{1, 2}}));
  CHECK(form.vertex_count() == 3);
  CHECK(form.hex().size() == 4);  // count byte + one bit byte
  CHECK(canonical_form(Graph(1)).hex() == "01");
}

TEST_CASE("isomorphism returns a checked witness") {
  std::mt19937 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + int(rng() % 10);
    Graph g = random_graph(n, rng);
    Graph h = relabel(g, random_perm(n, rng));
    auto p = isomorphism(g, h);
    REQUIRE(p.has_value());
    CHECK(relabel(g, *p) == h);
  }
  CHECK_FALSE(isomorphism(graph1(3, {{1, 2}}), complete(3)).has_value());
  CHECK_FALSE(is_isomorphic(Graph(3), Graph(4)));
}

TEST_CASE("form equality matches brute force isomorphism") {
  for (int n = 1; n <= 4; ++n) {
    auto perms = all_perms(n);
    AdjCode total = AdjCode(1) << pair_count(n);
    for (AdjCode a = 0; a < total; ++a)
      for (AdjCode b = a; b < total; ++b) {
        Graph g = decode(n, a), h = decode(n, b);
        bool brute = false;
        for (const auto& p : perms)
          if (relabel(g, p) == h) {
            brute = true;
            break;
          }
        CHECK(is_isomorphic(g, h) == brute);
        CHECK((canonical_form(g) == canonical_form(h)) == brute);
      }
  }
}

TEST_CASE("orbit membership at n=5") {
  std::mt19937 rng(61);
  auto perms = all_perms(5);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(5, rng);
    std::set<AdjCode> orbit;
    for (const auto& p : perms) orbit.insert(encode(relabel(g, p)));
    Graph h = random_graph(5, rng);
    CHECK(is_isomorphic(g, h) == (orbit.count(encode(h)) != 0));
  }
}
