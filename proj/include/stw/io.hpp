#ifndef STW_IO_HPP
#define STW_IO_HPP

#include <iosfwd>
#include <string>

#include "stw/hypergraph.hpp"

namespace stw {

/// Facet-list text format: optional header `# n=<int> d=<int>`, one facet
/// per line as ascending space-separated integers, `#` starts a comment.
FacetHypergraph readFacetsText(std::istream& in);
void writeFacetsText(std::ostream& out, const FacetHypergraph& K);

/// JSON format: {"n": <int>, "facets": [[...], ...]}.
FacetHypergraph readFacetsJson(std::istream& in);
void writeFacetsJson(std::ostream& out, const FacetHypergraph& K);

/// Load from a path, dispatching on extension (.json vs anything else).
FacetHypergraph readFacetsFile(const std::string& path);
void writeFacetsFile(const std::string& path, const FacetHypergraph& K);

}  // namespace stw

#endif  // STW_IO_HPP
