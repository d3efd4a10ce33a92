#include "skewproj/codes.hpp"

#include <algorithm>

#include "skewproj/errors.hpp"

namespace skewproj {

namespace {

void require_code_width(int n) {
  if (n < 0 || pair_count(n) > 64)
    fail_input("adjacency codes support at most 11 vertices, got " + std::to_string(n));
}

}  // namespace

AdjCode encode(const Graph& g) {
  int n = g.vertex_count();
  require_code_width(n);
  int bits = pair_count(n);
  AdjCode code = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has_edge(i, j)) code |= AdjCode(1) << (bits - 1 - pair_index(i, j));
  return code;
}

Graph decode(int n, AdjCode code) {
  require_code_width(n);
  int bits = pair_count(n);
  if (bits < 64 && (code >> bits))
    fail_input("adjacency code out of range for n = " + std::to_string(n));
  Graph g(n);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if ((code >> (bits - 1 - pair_index(i, j))) & 1) g.add_edge(i, j);
  return g;
}

std::vector<AdjCode> switching_masks(int n) {
  require_code_width(n);
  int bits = pair_count(n);
  std::vector<AdjCode> masks(std::size_t(1) << (n > 0 ? n - 1 : 0), 0);
  for (std::size_t s = 1; s < masks.size(); ++s) {
    VertexSet in = VertexSet(s << 1);
    AdjCode m = 0;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (set_contains(in, i) != set_contains(in, j))
          m |= AdjCode(1) << (bits - 1 - pair_index(i, j));
    masks[s] = m;
  }
  return masks;
}

std::array<std::uint8_t, 64> code_bit_permutation(int n, std::span<const int> perm) {
  require_code_width(n);
  int bits = pair_count(n);
  std::array<std::uint8_t, 64> map{};
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      int a = perm[i], b = perm[j];
      if (a > b) std::swap(a, b);
      map[bits - 1 - pair_index(i, j)] =
          std::uint8_t(bits - 1 - pair_index(a, b));
    }
  return map;
}

AdjCode permute_code(AdjCode code, const std::array<std::uint8_t, 64>& bit_map) {
  AdjCode out = 0;
  while (code) {
    int b = std::countr_zero(code);
    code &= code - 1;
    out |= AdjCode(1) << bit_map[b];
  }
  return out;
}

AdjCode permute_code(int n, AdjCode code, std::span<const int> perm) {
  return permute_code(code, code_bit_permutation(n, perm));
}

}  // namespace skewproj
