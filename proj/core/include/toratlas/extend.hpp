#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toratlas/classify.hpp"
#include "toratlas/rotation_map.hpp"

namespace toratlas {

// The angular position at vertex_of(dart) between the dart and its rotation
// successor. A corner lies on the face walk through that angle, which is the
// orbit containing sigma[dart]. When a vertex occurs twice on a walk its two
// corners there are distinct insertion positions.
struct FaceCorner {
  int dart = -1;

  bool operator==(const FaceCorner&) const = default;
};

using InsertionSite = std::pair<FaceCorner, FaceCorner>;

// All corner pairs (at u, at v) lying on a common face walk; the list length
// equals the sum over faces of (occurrences of u) * (occurrences of v).
std::vector<InsertionSite> insertion_sites(const RotationMap& m, int u, int v);

// Splices a new u-v edge into both rotations at the chosen corners. The
// chosen face splits in two (face count +1) and the genus is unchanged;
// both facts are checked on every call.
RotationMap insert_edge(const RotationMap& m, const InsertionSite& site);

// Replaces edge (u,v) by a path through a new vertex (id = vertex count),
// keeping both rotation positions.
RotationMap subdivide_map_edge(const RotationMap& m, int u, int v);

// Depth-first product over insertion_sites for each missing edge, in the
// given order; returns every completion, duplicates and all.
std::vector<RotationMap> extend_all(const RotationMap& m,
                                    const std::vector<std::pair<int, int>>& missing);

struct ReplayCase {
  EmbeddingClass subgraph_class;        // class of embeddings of the fixed subdivision
  std::uint64_t raw_completions = 0;    // completions from the class representative
};

struct ReplayResult {
  Graph subgraph;                       // the fixed K33 subdivision
  std::vector<std::pair<int, int>> missing_edges;  // edges the recipe adds, in order
  std::vector<ReplayCase> cases;        // one per subgraph embedding class
  std::vector<RotationMap> completions; // pooled over every genus-1 system of the subdivision
  std::vector<EmbeddingClass> classes;  // classification of the pooled completions
};

// Re-derives a catalog graph's toroidal classes by embedding its fixed K33
// subdivision every possible way and completing the missing edges (inserting
// midpoint vertices where the completion calls for them). The resulting
// class list must match the direct enumeration.
ReplayResult replay_cases(const std::string& name);  // F11 F12 F13 F14 G1
std::vector<EmbeddingClass> replay_classification(const std::string& name);

// Fine structure of the one F11 subdivision class that admits completions:
// sites of the middle chord (the one its symmetry keeps), with the number of
// full completions reachable from each site.
struct F11SiteBreakdown {
  std::size_t extending_classes = 0;           // how many subdivision classes admit completions
  std::vector<std::uint64_t> site_completions; // per middle-chord site, walk order
};

F11SiteBreakdown f11_site_breakdown();

// One polygon per face: the base vertices of its walk, in walk order.
std::vector<std::vector<int>> polygon_decomposition(const RotationMap& m);
std::string polygons_to_json(const RotationMap& m);

}  // namespace toratlas
