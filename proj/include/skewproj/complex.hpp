#pragma once

#include <optional>
#include <span>
#include <vector>

#include "skewproj/graph.hpp"

namespace skewproj {

// Facets of the complex attached to g, equivalently the coordinate sets of
// the irreducible components P(F) of the point variety. A set F is a face iff
// every 3-subset of F spans exactly 3 or exactly 1 edges; equivalently F is a
// disjoint union of two cliques with no edge between them (one possibly
// empty).
struct FacetFamily {
  int n = 0;
  // Descending cardinality, then ascending lexicographic on the sorted
  // 1-based label sequences.
  std::vector<VertexSet> facets;
};

// (t_{n-1}, ..., t_1): entry k counts facets of cardinality n-k, i.e.
// components of projective dimension n-1-k.
using TypeVector = std::vector<int>;

bool is_face(const Graph& g, VertexSet f);

// Every subset passing is_face, in ascending bitset order; downward closed
// and contains the empty set.
std::vector<VertexSet> faces_bruteforce(const Graph& g);

// For n <= 8 via projection of the maximal cliques of the switching graph
// (layer-swap pairing makes every projected image occur an even number of
// times, which is checked); for larger n via the face bitmap.
FacetFamily facets(const Graph& g);

// Identical facet data viewed as the components of the point variety.
FacetFamily point_variety(const Graph& g);

// The 3-subsets violating the face condition, ascending lexicographic; they
// generate the Stanley-Reisner ideal.
std::vector<VertexSet> stanley_reisner_generators(const Graph& g);

// Max facet cardinality minus 1; requires n >= 1. For n >= 2 this equals the
// clique number of the switching graph minus 1 (checked when n <= 8); at n=1
// the lone maximal clique of the double cover is a vertical pair, whose
// projection is smaller, so only the facet route is valid there.
int dimension(const Graph& g);

// Requires n >= 2 (facets then have cardinality 2..n).
TypeVector type_vector(const Graph& g);

// Type vector of a disjoint union of complete graphs K_{parts[0]}, ...;
// requires >= 2 parts, each >= 1, total <= 16. The facets are exactly the
// unions of two distinct summands, so t_i counts pairs a < b with
// parts[a] + parts[b] - 1 = i.
TypeVector type_formula_complete_union(std::span<const int> parts);

// Permutation p with p(facets of a) = facets of b as families, when one
// exists. Backtracking over vertices, pruned by per-vertex profiles of
// incident facet cardinalities and by partial facet compatibility.
std::optional<std::vector<int>> facet_family_isomorphism(const FacetFamily& a,
                                                         const FacetFamily& b);
bool facet_families_isomorphic(const FacetFamily& a, const FacetFamily& b);

}  // namespace skewproj
