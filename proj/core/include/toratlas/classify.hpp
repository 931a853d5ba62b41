#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toratlas/rotation_map.hpp"

namespace toratlas {

// A highlighted feature carried along when comparing embeddings. The dart
// list holds: one dart (directed edge), a dart and its mate (edge), or the
// closed dart walk of a cycle (compared setwise).
struct Decoration {
  enum class Kind { none, directed_edge, edge, cycle };
  Kind kind = Kind::none;
  std::vector<int> darts;
};

Decoration directed_edge_decoration(const RotationMap& m, int dart);
Decoration edge_decoration(const RotationMap& m, int dart);
Decoration cycle_decoration(const RotationMap& m, const std::vector<int>& vertex_cycle);
void validate_decoration(const RotationMap& m, const Decoration& d);

struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalForm&) const = default;
  std::string hex() const;  // lowercase
};

// Minimal breadth-first dart-relabeling trace over all root darts, and over
// the reversed rotation as well when allow_reflection is set. Equal forms
// characterize equivalent (decorated) embeddings. Connected maps only.
CanonicalForm canonical_form(const RotationMap& m, const Decoration& d = {},
                             bool allow_reflection = true);

bool are_equivalent(const RotationMap& a, const Decoration& da, const RotationMap& b,
                    const Decoration& db, bool allow_reflection = true);
bool are_equivalent(const RotationMap& a, const RotationMap& b, bool allow_reflection = true);

// A self-equivalence: dart bijection conjugating sigma to sigma (or to
// sigma^-1 when reflecting) and commuting with the mate involution.
struct MapIsomorphism {
  std::vector<int> dart_map;
  bool reflecting = false;
};

std::vector<MapIsomorphism> symmetries(const RotationMap& m, bool allow_reflection = true);

// Direct search for an isomorphism (used to cross-check canonical_form):
// tries every root image and orientation, propagating the forced dart map.
std::optional<MapIsomorphism> find_isomorphism(const RotationMap& a, const Decoration& da,
                                               const RotationMap& b, const Decoration& db,
                                               bool allow_reflection = true);

// Vertex permutations induced by the map's symmetries (one per symmetry;
// distinct for simple graphs). Diagnostic helper.
std::vector<std::vector<int>> induced_vertex_automorphisms(const RotationMap& m,
                                                           bool allow_reflection = true);

struct EmbeddingClass {
  RotationMap representative;
  Decoration decoration;
  CanonicalForm canonical;
  std::vector<int> face_signature;
  std::uint64_t labelled_count = 0;
  std::uint64_t first_index = 0;  // index of the representative in the input stream
};

// Partitions the inputs by canonical form. Output is sorted by canonical
// bytes; the representative is the earliest input of its class, independent
// of the worker count.
std::vector<EmbeddingClass> classify(const std::vector<std::pair<RotationMap, Decoration>>& items,
                                     bool allow_reflection = true, int threads = 1);
std::vector<EmbeddingClass> classify(const std::vector<RotationMap>& maps,
                                     bool allow_reflection = true, int threads = 1);

// Orbits of the symmetry group acting on a closed family of decorations,
// as index lists into the input (each orbit listed by its smallest member).
std::vector<std::vector<int>> decoration_orbits(const RotationMap& m,
                                                const std::vector<Decoration>& decorations,
                                                bool allow_reflection = true);

// Equivalence invariants cheaper than the canonical form: the face-length
// multiset and the face-adjacency multigraph (faces as nodes, one link per
// shared edge), the latter canonicalized over length-preserving face
// permutations.
struct RefinedInvariants {
  std::vector<int> face_signature;
  std::vector<int> adjacency_code;

  bool operator==(const RefinedInvariants&) const = default;
};

RefinedInvariants refined_invariants(const RotationMap& m);

}  // namespace toratlas
