#include "skewproj/bits.hpp"

namespace skewproj {

std::vector<int> set_vertices(VertexSet s) {
  std::vector<int> out;
  out.reserve(set_size(s));
  while (s) {
    out.push_back(set_first(s));
    s &= VertexSet(s - 1);
  }
  return out;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  for (int v : set_vertices(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(v + 1);
  }
  return out + "}";
}

}  // namespace skewproj
