#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "skewproj/classify.hpp"
#include "skewproj/complex.hpp"
#include "skewproj/epsilon.hpp"
#include "skewproj/graph.hpp"

namespace skewproj {

// Graph text format: the first meaningful line is the vertex count, each
// following line one edge "u v" with 1-based labels. Blank lines and text
// after '#' are ignored. Malformed input raises input_error naming the line.
Graph parse_graph(std::istream& in);
std::string format_graph(const Graph& g);

// Matrix text format: the first meaningful line is n, then n rows of n
// entries from {+1,-1,1}. Asymmetric or non-unit-diagonal input is rejected
// naming the offending (i,j).
EpsilonMatrix parse_epsilon(std::istream& in);
std::string format_epsilon(const EpsilonMatrix& e);

std::string format_component(VertexSet f);     // P(1,2,4)
std::string format_type(const TypeVector& t);  // (0,2,1)

// Components joined by " u ", or by the union sign when unicode_union is set.
std::string format_variety(const FacetFamily& fam, bool unicode_union = false);

// {"components": [[1,2,3],...], "dimension": d, "n": n, "type": [...]};
// object keys serialize alphabetically, so dumps round-trip byte for byte.
nlohmann::json variety_json(const FacetFamily& fam, const TypeVector& type,
                            int dimension);

// {"class_count": k, "classes": [{"certificate_hex", "components",
// "dimension", "labeled_count", "representative_edges", "type"}, ...], "n"}.
nlohmann::json catalog_json(const ClassCatalog& catalog);

}  // namespace skewproj
