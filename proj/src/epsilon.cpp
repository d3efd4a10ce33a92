#include "skewproj/epsilon.hpp"

#include "skewproj/canonical.hpp"
#include "skewproj/errors.hpp"

namespace skewproj {

EpsilonMatrix::EpsilonMatrix(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices)
    fail_input("matrix size must be between 0 and 16, got " + std::to_string(n));
}

void EpsilonMatrix::set(int i, int j, int sign) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_)
    fail_input("matrix entry (" + std::to_string(i + 1) + "," +
               std::to_string(j + 1) + ") out of range");
  if (sign != 1 && sign != -1)
    fail_input("matrix entries must be +1 or -1");
  if (i == j && sign == -1)
    fail_input("diagonal entry (" + std::to_string(i + 1) + "," +
               std::to_string(i + 1) + ") must be +1");
  if (sign == -1) {
    minus_[i] = set_add(minus_[i], j);
    minus_[j] = set_add(minus_[j], i);
  } else {
    minus_[i] = set_remove(minus_[i], j);
    minus_[j] = set_remove(minus_[j], i);
  }
}

Graph graph_of_epsilon(const EpsilonMatrix& e) {
  int n = e.size();
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (e.at(i, j) == 1) g.add_edge(i, j);
  return g;
}

EpsilonMatrix epsilon_of_graph(const Graph& g) {
  int n = g.vertex_count();
  EpsilonMatrix e(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!g.has_edge(i, j)) e.set(i, j, -1);
  return e;
}

EpsilonMatrix doubled_algebra(const EpsilonMatrix& e) {
  int n = e.size();
  if (n > 8)
    fail_input("doubling needs at most 8 generators, got " + std::to_string(n));
  EpsilonMatrix d(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) {
        d.set(i, j, e.at(i, j));
        d.set(n + i, n + j, e.at(i, j));
        d.set(i, n + j, -e.at(i, j));
      }
    }
  return d;
}

std::optional<std::vector<int>> algebra_isomorphism(const EpsilonMatrix& a,
                                                    const EpsilonMatrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  return isomorphism(graph_of_epsilon(a), graph_of_epsilon(b));
}

bool algebras_isomorphic(const EpsilonMatrix& a, const EpsilonMatrix& b) {
  return algebra_isomorphism(a, b).has_value();
}

}  // namespace skewproj
