#include "skewproj/graph.hpp"

#include <algorithm>

#include "skewproj/errors.hpp"

namespace skewproj {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    fail_input("vertex count must be between 0 and 16, got " + std::to_string(n));
}

int Graph::edge_count() const {
  int total = 0;
  for (int v = 0; v < n_; ++v) total += set_size(adj_[v]);
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    VertexSet above = VertexSet(adj_[u] & ~full_set(u + 1));
    for (int v : set_vertices(above)) out.emplace_back(u, v);
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    fail_input("edge endpoint out of range: (" + std::to_string(u + 1) + "," +
               std::to_string(v + 1) + ") with n = " + std::to_string(n_));
  if (u == v)
    fail_input("loop at vertex " + std::to_string(u + 1) + " is not allowed");
  adj_[u] = set_add(adj_[u], v);
  adj_[v] = set_add(adj_[v], u);
}

void Graph::toggle_edge(int u, int v) {
  adj_[u] ^= VertexSet(1u << v);
  adj_[v] ^= VertexSet(1u << u);
}

Graph graph_from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  int n = g.vertex_count();
  Graph out(n);
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

Graph mutate(const Graph& g, int v) {
  int n = g.vertex_count();
  if (v < 0 || v >= n)
    fail_input("mutation vertex out of range: " + std::to_string(v + 1) +
               " with n = " + std::to_string(n));
  Graph out = g;
  for (int u = 0; u < n; ++u)
    if (u != v) out.toggle_edge(u, v);
  return out;
}

Graph switching(const Graph& g, VertexSet s) {
  if (s & ~g.vertices())
    fail_input("switch set contains vertices outside the graph");
  Graph out = g;
  VertexSet rest = VertexSet(g.vertices() & ~s);
  for (int u : set_vertices(s))
    for (int v : set_vertices(rest)) out.toggle_edge(u, v);
  return out;
}

Graph switching_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n > 8)
    fail_input("switching graph needs at most 8 vertices, got " + std::to_string(n));
  Graph out(2 * n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (g.has_edge(u, v)) {
        out.add_edge(u, v);
        out.add_edge(n + u, n + v);
      } else {
        out.add_edge(u, n + v);
        out.add_edge(v, n + u);
      }
    }
    out.add_edge(u, n + u);
  }
  return out;
}

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  for (VertexSet t = VertexSet(p | x); t; t &= VertexSet(t - 1)) {
    int u = set_first(t);
    int c = set_size(VertexSet(p & g.neighbors(u)));
    if (c > best) {
      best = c;
      pivot = u;
    }
  }
  VertexSet cand = VertexSet(p & ~g.neighbors(pivot));
  for (VertexSet t = cand; t; t &= VertexSet(t - 1)) {
    int v = set_first(t);
    bron_kerbosch(g, set_add(r, v), VertexSet(p & g.neighbors(v)),
                  VertexSet(x & g.neighbors(v)), out);
    p = set_remove(p, v);
    x = set_add(x, v);
  }
}

}  // namespace

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  if (g.vertex_count() == 0) return out;
  bron_kerbosch(g, 0, g.vertices(), 0, out);
  std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    int ca = set_size(a), cb = set_size(b);
    return ca != cb ? ca < cb : a < b;
  });
  return out;
}

int clique_number(const Graph& g) {
  int best = 0;
  for (VertexSet c : maximal_cliques(g)) best = std::max(best, set_size(c));
  return best;
}

}  // namespace skewproj
