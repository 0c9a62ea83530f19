#ifndef ABGROW_SUBGRAPH_HPP
#define ABGROW_SUBGRAPH_HPP

#include "abgrow/abelian.hpp"

#include <string>
#include <vector>

namespace abgrow {

struct LabelledEdge {
    int tail = 0;   // vertex index
    int head = 0;   // vertex index
    int letter = 0; // alphabet index
};

// A finite connected labelled directed subgraph of the Cayley graph.
// Vertices are group elements; following an edge adds the letter image.
// A morphism into a ball is determined by the image of the base vertex,
// so counting morphisms reduces to counting base placements.
struct Subgraph {
    std::string name;
    std::vector<Element> vertices;
    std::vector<LabelledEdge> edges;
    int base = 0; // vertex index
};

Subgraph single_vertex(const AbelianStructure& g);
Subgraph subgraph_from_path(const AbelianStructure& g, const Word& letters);

// Accepts:
//   - "vertex"                      single vertex at the identity
//   - "path: a,b,c" or "path: abc"  directed path from the identity
//   - statement lines               `vertex <word>`, `edge <word> <letter> <word>`,
//                                   `base <word>` (newline/semicolon separated)
//   - JSON                          {"path": ["a","b","c"]} or
//                                   {"base": w, "vertices": [w...],
//                                    "edges": [[w, letter, w], ...]}
Subgraph parse_subgraph(const std::string& text, const AbelianStructure& g);

// nonempty, connected, edge-consistent, pairwise distinct vertex elements
void validate_subgraph(const AbelianStructure& g, const Subgraph& s);

// vertex positions relative to the base vertex
std::vector<Element> vertex_offsets(const AbelianStructure& g, const Subgraph& s);

// largest geodesic distance between two vertex positions
int subgraph_diameter(const AbelianStructure& g, const Subgraph& s);

} // namespace abgrow

#endif
