#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "skewproj/graph.hpp"

namespace skewproj {

// Symmetric sign matrix with unit diagonal; entry (i,j) in {+1,-1} is the
// commutation sign between generators i and j.
class EpsilonMatrix {
public:
  EpsilonMatrix() = default;
  explicit EpsilonMatrix(int n);  // all entries +1

  int size() const { return n_; }
  int at(int i, int j) const { return (minus_[i] >> j) & 1u ? -1 : +1; }
  void set(int i, int j, int sign);  // keeps symmetry; diagonal must stay +1

  bool operator==(const EpsilonMatrix&) const = default;

private:
  int n_ = 0;
  std::array<std::uint16_t, kMaxVertices> minus_{};  // bit j of row i: entry -1
};

// Edge ij <=> entry (i,j) = +1 for i != j.
Graph graph_of_epsilon(const EpsilonMatrix& e);
EpsilonMatrix epsilon_of_graph(const Graph& g);

// The 2n x 2n matrix of the doubled algebra on generators x_1..x_n,y_1..y_n:
// both diagonal blocks copy e, the cross block negates off-diagonal entries
// and keeps +1 on its diagonal. Its graph is the switching graph of the graph
// of e, label for label. Requires n <= 8.
EpsilonMatrix doubled_algebra(const EpsilonMatrix& e);

// Permutation p with entry_b(p(i),p(j)) = entry_a(i,j) when one exists;
// decided through the associated graphs.
std::optional<std::vector<int>> algebra_isomorphism(const EpsilonMatrix& a,
                                                    const EpsilonMatrix& b);
bool algebras_isomorphic(const EpsilonMatrix& a, const EpsilonMatrix& b);

}  // namespace skewproj
