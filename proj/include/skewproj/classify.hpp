#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewproj/canonical.hpp"
#include "skewproj/complex.hpp"
#include "skewproj/graph.hpp"

namespace skewproj {

// Minimum of canonical_form(switching(g, s)) over all s avoiding vertex 0
// (switching at s and at its complement agree, so this covers every switch).
// Equal certificates <=> switching equivalent up to relabeling. Same byte
// layout as CanonicalForm, but invariant under switching as well.
using ClassCertificate = CanonicalForm;

ClassCertificate certificate(const Graph& g, int limit_n = 12);

// Certificate route; for n <= 8 the double-cover isomorphism route runs too
// and a disagreement raises consistency_error. Vertex-count mismatch raises
// input_error.
bool switching_equivalent(const Graph& g, const Graph& h, int limit_n = 12);

struct ClassRecord {
  Graph representative;  // lexicographically minimal adjacency code
  ClassCertificate certificate;
  std::uint64_t labeled_count = 0;
  FacetFamily components;
  TypeVector type;  // empty when n < 2
  int dimension = 0;
};

struct ClassCatalog {
  int n = 0;
  std::vector<ClassRecord> classes;  // ascending representative code
  std::uint64_t labeled_total() const;
};

struct EnumerateOptions {
  bool allow_long = false;  // n == 8 scans 2^28 codes and needs opting in
  int threads = 0;          // 0 = SKEWPROJ_THREADS, then hardware count
  int limit_n = 8;          // soft cap; 11 is the physical code-width limit
};

// Switching classes of every labeled graph on n vertices. Walks the code
// space keeping one switch-minimal code per switching orbit (the cut masks
// act freely, so orbits have equal size), then joins orbits related by a
// vertex permutation via a transposition and an n-cycle, which generate the
// symmetric group.
ClassCatalog enumerate_classes(int n, const EnumerateOptions& opts = {});

struct MutationPath {
  std::vector<int> vertices;   // mutate g at these, in order
  std::vector<int> relabeling; // then relabel to land exactly on h
};

// Shortest mutation route from g to h up to isomorphism (breadth-first over
// canonical forms); absent when the graphs are not equivalent. Requires equal
// vertex counts and n <= 12.
std::optional<MutationPath> mutation_path(const Graph& g, const Graph& h);

struct TheoremCheck {
  std::string name;
  std::uint64_t pairs = 0;
  std::vector<std::string> counterexamples;
  bool pass() const { return counterexamples.empty(); }
};

struct TheoremReport {
  int n = 0;
  int class_count = 0;
  bool exhaustive_pairs = false;  // all labeled pairs (n <= 4) vs class reps
  std::vector<TheoremCheck> checks;
  bool all_pass() const;
  std::string to_text() const;  // one PASS/FAIL line per biconditional
};

// Evaluates, on every graph pair in scope, the chain: certificate equality
// <=> double-cover isomorphism <=> doubled-algebra isomorphism <=>
// facet-family isomorphism <=> mutation reachability. The scope is all
// labeled graphs for n <= 4 and the class representatives for n = 5.
// Violations become report entries, not exceptions. Requires 2 <= n <= 5.
TheoremReport verify_main_theorem(int n);

}  // namespace skewproj
