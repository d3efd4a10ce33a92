#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "skewproj/graph.hpp"

namespace skewproj {

// Canonical byte string of a graph: byte 0 is the vertex count, the remaining
// bytes pack the lexicographically minimal upper-triangle bit string over all
// vertex relabelings, MSB first. Equal forms <=> isomorphic graphs.
class CanonicalForm {
public:
  CanonicalForm() { data_[0] = 0; }

  // blocks[j] holds the j adjacency bits of the j-th vertex of the minimal
  // ordering toward its predecessors, earliest predecessor in the MSB.
  static CanonicalForm from_blocks(int n, std::span<const std::uint16_t> blocks);

  // Packs an adjacency code directly (n <= 11); the code must already be
  // minimal if the result is to be a canonical form.
  static CanonicalForm from_code(int n, std::uint64_t code);

  int vertex_count() const { return data_[0]; }
  std::span<const std::uint8_t> bytes() const { return {data_.data(), size_}; }
  std::string hex() const;  // lowercase, two digits per byte

  auto operator<=>(const CanonicalForm&) const = default;

private:
  std::uint8_t size_ = 1;
  std::array<std::uint8_t, 16> data_{};
};

CanonicalForm canonical_form(const Graph& g);

// Canonical form plus one relabeling that achieves it (vertex v of g becomes
// labeling[v] in the canonical graph).
struct CanonicalLabeling {
  CanonicalForm form;
  std::vector<int> labeling;
};

CanonicalLabeling canonical_labeling(const Graph& g);

// Permutation p with "uv edge of g <=> p[u]p[v] edge of h" when one exists.
std::optional<std::vector<int>> isomorphism(const Graph& g, const Graph& h);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace skewproj
