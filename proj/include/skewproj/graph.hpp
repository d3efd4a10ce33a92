#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "skewproj/bits.hpp"

namespace skewproj {

inline constexpr int kMaxVertices = 16;

// Undirected simple graph on up to 16 vertices, one adjacency bitset per
// vertex. Vertices are 0-based in the API; text I/O uses 1-based labels.
class Graph {
public:
  Graph() = default;
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const {
    return u != v && set_contains(adj_[u], v);
  }
  int degree(int v) const { return set_size(adj_[v]); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;  // ascending (u,v), u < v

  void add_edge(int u, int v);
  void toggle_edge(int u, int v);  // pre: u != v, both in range

  bool operator==(const Graph&) const = default;

private:
  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// Graph from 0-based endpoint pairs; duplicate pairs collapse, loops and
// out-of-range endpoints raise input_error.
Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges);

// Vertex v of g becomes perm[v]; perm must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);

// Complements the edges incident to v.
Graph mutate(const Graph& g, int v);

// Complements the edges crossing the cut (s, V\s). Switching at s and at its
// complement give the same graph; switching at a singleton is a mutation.
Graph switching(const Graph& g, VertexSet s);

// Double cover on V x {0,1}: both layers copy g, cross pairs carry the
// complement, and every vertical pair (u,0)(u,1) is an edge. Vertex (u,layer)
// is numbered u + layer*n. Requires n <= 8.
Graph switching_graph(const Graph& g);

// All maximal cliques (Bron-Kerbosch with pivoting), sorted by cardinality
// then bitset value.
std::vector<VertexSet> maximal_cliques(const Graph& g);

// Maximum clique cardinality; 0 for the 0-vertex graph.
int clique_number(const Graph& g);

}  // namespace skewproj
