#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace toratlas {

enum class errc {
  domain,             // malformed value or operation outside its contract
  catalog,            // unknown builtin graph name
  resource,           // search budget exceeded
  unsupported_input,  // valid input the operation declines (e.g. suppression would create a loop)
  parse,              // unreadable text/JSON input
  no_cycle,           // girth of a forest
};

class error : public std::runtime_error {
public:
  error(errc kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  errc kind() const { return kind_; }

private:
  errc kind_;
};

[[noreturn]] void fail(errc kind, const std::string& what);

// Undirected simple graph on vertices 0..n-1. Edges are kept normalized:
// u < v within each pair, list sorted ascending, no duplicates. Everything
// downstream (dart numbering in particular) relies on that normal form.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // optional construction tags; empty or size n

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // position in the sorted edge list, -1 if absent
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;  // ascending
  std::vector<int> degrees() const;
  std::vector<int> component_ids() const;  // vertex -> component index (0-based, by smallest vertex)
  int component_count() const;
  bool is_connected() const;  // at most one component (empty graph counts as connected)
  std::string label_of(int v) const;  // tag if present, else decimal vertex id
};

// Validates endpoints, rejects loops and parallel edges, sorts the edge list.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges,
                 std::vector<std::string> labels = {});

// Text format: first line "n m", then m lines "u v"; '#' starts a comment line.
Graph read_graph_text(std::istream& in);
Graph parse_graph_text(const std::string& text);
Graph load_graph_file(const std::string& path);
std::string write_graph_text(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& vertex_map);

// Replaces edge e by a path through k new degree-2 vertices (ids n..n+k-1 in
// path order from the smaller endpoint).
Graph subdivide(const Graph& g, std::pair<int, int> e, int k);

// Smooths every maximal chain of degree-2 vertices into a single edge.
// Surviving vertices keep their relative order (and labels) and are packed to 0..
Graph suppress_degree2(const Graph& g);

int girth(const Graph& g);  // errc::no_cycle on forests

// All distinct 4-cycles, one representative per rotation/reversal class,
// as vertex sequences (a, b, c, d) with a the smallest vertex and b < d.
std::vector<std::array<int, 4>> four_cycles(const Graph& g);

// Every adjacency-preserving vertex bijection; exhaustive backtracking,
// vertex_count <= 16 (errc::resource beyond).
std::vector<std::vector<int>> automorphisms(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

// A K33 subdivision inside a host graph: six branch vertices (three per side)
// and nine internally disjoint paths, paths[3*i+j] joining branch[i] to
// branch[3+j] as a full vertex sequence.
struct SubgraphModel {
  Graph host;
  std::array<int, 6> branch{};
  std::vector<std::vector<int>> paths;

  Graph path_union() const;  // the nine paths' subgraph, vertices packed to 0..
};

std::optional<SubgraphModel> contains_k33_subdivision(const Graph& g);

}  // namespace toratlas
