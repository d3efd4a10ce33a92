#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "skewproj/graph.hpp"

namespace skewproj {

// Upper-triangle adjacency code. Pairs run (0,1),(0,2),(1,2),(0,3),... and
// pair k of the C(n,2) total occupies bit C(n,2)-1-k, so the numeric order of
// codes equals the lexicographic order of their bit strings. Fits 64 bits for
// n <= 11.
using AdjCode = std::uint64_t;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Position of pair (i,j) in the sequence above; pre: i < j.
constexpr int pair_index(int i, int j) { return j * (j - 1) / 2 + i; }

AdjCode encode(const Graph& g);
Graph decode(int n, AdjCode code);

// Codes of the edge cuts (S, V\S) for every S avoiding vertex 0, indexed by
// the bitmask of S shifted down by one. Entry 0 is the zero mask; the rest
// are the 2^(n-1)-1 distinct nonzero switching masks (they form a GF(2)
// linear space, so XOR by a mask permutes each switching orbit freely).
std::vector<AdjCode> switching_masks(int n);

// Where each code bit lands when vertex v is relabeled to perm[v].
std::array<std::uint8_t, 64> code_bit_permutation(int n, std::span<const int> perm);

// Code of the relabeled graph.
AdjCode permute_code(AdjCode code, const std::array<std::uint8_t, 64>& bit_map);
AdjCode permute_code(int n, AdjCode code, std::span<const int> perm);

}  // namespace skewproj
