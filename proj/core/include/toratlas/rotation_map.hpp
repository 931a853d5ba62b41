#pragma once

#include <string>
#include <vector>

#include "toratlas/graph.hpp"

namespace toratlas {

// Combinatorial map of a graph embedding. Darts are numbered off the sorted
// edge list: edge k = (u,v) with u < v yields dart 2k based at u and dart
// 2k+1 based at v, so the mate involution is d ^ 1. sigma[d] is the next
// dart in the rotation at d's base vertex; faces are orbits of d -> sigma[mate(d)].
struct RotationMap {
  Graph graph;
  std::vector<int> sigma;
  std::vector<int> dart_vertex;

  int dart_count() const { return static_cast<int>(sigma.size()); }
  int mate(int d) const { return d ^ 1; }
  int vertex_of(int d) const { return dart_vertex[d]; }
  int head_of(int d) const { return dart_vertex[d ^ 1]; }
  int next_face_dart(int d) const { return sigma[d ^ 1]; }

  bool operator==(const RotationMap& other) const {
    return graph.n == other.graph.n && graph.edges == other.graph.edges &&
           sigma == other.sigma;
  }
};

int dart_of(const Graph& g, int from, int to);  // errc::domain if not an edge

// rotations[v] lists v's neighbors in cyclic order; each must be a cyclic
// arrangement of exactly v's neighbor set.
RotationMap from_rotations(const Graph& g, const std::vector<std::vector<int>>& rotations);

// Inverse of from_rotations; each vertex's cycle starts at its smallest dart.
std::vector<std::vector<int>> rotations_of(const RotationMap& m);

struct FaceWalk {
  std::vector<int> darts;  // orbit of sigma∘mate, starting at the smallest dart
  int length() const { return static_cast<int>(darts.size()); }
};

std::vector<FaceWalk> face_orbits(const RotationMap& m);
std::vector<int> face_signature(const RotationMap& m);  // sorted walk lengths

int genus_of_map(const RotationMap& m);  // connected graphs only (errc::domain)
int genus_sum(const RotationMap& m);     // sum of per-component genera

RotationMap mirror(const RotationMap& m);  // every rotation reversed

// Restriction to a subgraph h on the same vertex set: darts of absent edges
// are deleted from each rotation.
RotationMap submap(const RotationMap& m, const Graph& h);

RotationMap relabel(const RotationMap& m, const std::vector<int>& vertex_map);

// JSON form: {"graph": {"n": ..., "edges": [[u,v],...]}, "rotations": {"0": [...], ...}}
std::string map_to_json(const RotationMap& m);
RotationMap map_from_json(const std::string& text);

}  // namespace toratlas
