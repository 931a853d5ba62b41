#pragma once

#include <string>
#include <vector>

#include "toratlas/graph.hpp"

namespace toratlas {

struct ExpectedInvariants {
  int vertex_count = 0;
  int edge_count = 0;
  int girth = 0;
  bool is_cubic = false;
};

struct NamedGraph {
  std::string name;
  Graph graph;
  ExpectedInvariants expected;
};

const std::vector<std::string>& builtin_names();  // K33 K5 E42 F11 F12 F13 F14 G1
const NamedGraph& named_graph(const std::string& name);  // errc::catalog if unknown
Graph builtin(const std::string& name);

// K33 with one edge subdivided six times (internal vertices tagged "1".."6"
// along the path) plus the three chords joining tags (1,4), (2,5), (3,6).
Graph construct_f11();

// Subdivide each edge of a 4-cycle of K33 once, join midpoints of disjoint
// edges, subdivide both new edges once, join the two newest midpoints.
Graph construct_f14();

// Checks a catalog entry against its recorded invariants; throws errc::domain
// with the first mismatch.
void validate_catalog_entry(const NamedGraph& entry);

}  // namespace toratlas
