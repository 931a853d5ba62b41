#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "toratlas/classify.hpp"
#include "toratlas/rotation_map.hpp"

namespace toratlas {

inline constexpr std::uint64_t default_budget = 100'000'000ULL;

struct EnumerationOptions {
  std::uint64_t budget = default_budget;
  int threads = 1;
  // Fixes the rotation at the first maximum-degree vertex to a single
  // representative, cutting the space by (deg-1)!. Classes are unaffected
  // (tested against the full run); labelled counts shrink by that factor,
  // so contractual counts use the full space.
  bool fix_first_rotation = false;
};

// Number of rotation systems: product of (deg(v)-1)! over all vertices.
// errc::resource when the product exceeds the budget.
std::uint64_t rotation_system_count(const Graph& g, std::uint64_t budget = default_budget);

// Streams every rotation system exactly once in a fixed order: each vertex's
// sorted neighbor list is cycled with its first entry pinned and the rest
// permuted lexicographically; vertex 0 varies slowest.
void enumerate_rotation_systems(const Graph& g,
                                const std::function<void(std::uint64_t, const RotationMap&)>& fn,
                                const EnumerationOptions& opts = {});
RotationMap rotation_system_at(const Graph& g, std::uint64_t index,
                               bool fix_first_rotation = false);

// Classes of embeddings at a fixed genus. Disconnected graphs are classified
// by the multiset of per-component forms with reflection applied globally.
std::vector<EmbeddingClass> classes_at_genus(const Graph& g, int target_genus,
                                             const EnumerationOptions& opts = {});
std::vector<EmbeddingClass> toroidal_classes(const Graph& g, const EnumerationOptions& opts = {});

int genus(const Graph& g, std::uint64_t budget = default_budget);  // additive over components
std::vector<int> component_genera(const Graph& g, std::uint64_t budget = default_budget);
// A rotation system attaining the minimum genus on every component at once.
RotationMap genus_witness(const Graph& g, std::uint64_t budget = default_budget);
bool embeds_in_torus(const Graph& g, std::uint64_t budget = default_budget);

enum class DecorationKind { none, directed_edge, edge, cycle4 };

const char* decoration_kind_name(DecorationKind k);
DecorationKind parse_decoration_kind(const std::string& s);  // errc::parse

// Classes of (genus-1 system, decoration) pairs; decorations are all darts,
// all edges, or all 4-cycles of the graph.
std::vector<EmbeddingClass> decorated_classes(const Graph& g, DecorationKind kind,
                                              const EnumerationOptions& opts = {});

struct EnumerationReport {
  std::string graph_name;
  std::uint64_t total = 0;  // rotation systems examined (full space)
  std::map<int, std::uint64_t> genus_histogram;
  int target_genus = 1;
  DecorationKind decoration = DecorationKind::none;
  std::vector<EmbeddingClass> classes;
  double wall_ms = 0.0;
};

EnumerationReport enumerate_report(const Graph& g, const std::string& name, int target_genus,
                                   DecorationKind kind, const EnumerationOptions& opts = {});
std::string report_to_json(const EnumerationReport& r);
std::string report_to_text(const EnumerationReport& r);

}  // namespace toratlas
