#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace skewproj {

// Set of vertex indices 0..15, one bit per vertex.
using VertexSet = std::uint16_t;

inline int set_size(VertexSet s) { return std::popcount(s); }

inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline VertexSet set_add(VertexSet s, int v) {
  return VertexSet(s | (1u << v));
}

inline VertexSet set_remove(VertexSet s, int v) {
  return VertexSet(s & ~(1u << v));
}

// Lowest vertex in s; s must be nonempty.
inline int set_first(VertexSet s) { return std::countr_zero(s); }

inline VertexSet full_set(int n) { return VertexSet((1u << n) - 1u); }

// Vertices of s in ascending order.
std::vector<int> set_vertices(VertexSet s);

// "{1,2,4}" with 1-based labels.
std::string format_set(VertexSet s);

}  // namespace skewproj
