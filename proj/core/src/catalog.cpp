#include "toratlas/catalog.hpp"

#include <algorithm>
#include <map>

namespace toratlas {

namespace {

Graph k33() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) e.emplace_back(u, v);
  return make_graph(6, std::move(e));
}

Graph k5() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) e.emplace_back(u, v);
  return make_graph(5, std::move(e));
}

Graph e42() {
  std::vector<std::pair<int, int>> e;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) {
      e.emplace_back(u, v);
      e.emplace_back(u + 6, v + 6);
    }
  return make_graph(12, std::move(e));
}

// Common core of F12/F13: K33 with edges (1,3) and (2,3) subdivided once
// (vertices 6, 7) and edges (1,4) and (2,5) subdivided twice (8,9 and 10,11).
std::vector<std::pair<int, int>> f12_f13_core() {
  return {{0, 3}, {0, 4}, {0, 5},  {1, 5},  {2, 4},  {3, 6}, {1, 6},  {3, 7},
          {2, 7}, {1, 8}, {8, 9},  {4, 9},  {2, 10}, {10, 11}, {5, 11}};
}

Graph f12() {
  auto e = f12_f13_core();
  e.insert(e.end(), {{6, 11}, {7, 9}, {8, 10}});
  return make_graph(12, std::move(e));
}

Graph f13() {
  auto e = f12_f13_core();
  e.insert(e.end(), {{6, 10}, {7, 8}, {9, 11}});
  return make_graph(12, std::move(e));
}

Graph g1() {
  // K33 with edges (0,4) and (0,5) each subdivided twice (paths 0-6-7-4 and
  // 0-8-9-5) plus the matching (6,9), (7,8).
  std::vector<std::pair<int, int>> e = {{0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                                        {2, 4}, {2, 5}, {0, 6}, {6, 7}, {7, 4},
                                        {0, 8}, {8, 9}, {9, 5}, {6, 9}, {7, 8}};
  return make_graph(10, std::move(e));
}

std::map<std::string, NamedGraph> build_catalog() {
  std::map<std::string, NamedGraph> c;
  c["K33"] = {"K33", k33(), {6, 9, 4, true}};
  c["K5"] = {"K5", k5(), {5, 10, 3, false}};
  c["E42"] = {"E42", e42(), {12, 18, 4, true}};
  c["F11"] = {"F11", construct_f11(), {12, 18, 4, true}};
  c["F12"] = {"F12", f12(), {12, 18, 4, true}};
  c["F13"] = {"F13", f13(), {12, 18, 5, true}};
  c["F14"] = {"F14", construct_f14(), {12, 18, 5, true}};
  c["G1"] = {"G1", g1(), {10, 15, 4, true}};
  return c;
}

const std::map<std::string, NamedGraph>& catalog() {
  static const std::map<std::string, NamedGraph> c = build_catalog();
  return c;
}

}  // namespace

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"K33", "K5",  "E42", "F11",
                                                 "F12", "F13", "F14", "G1"};
  return names;
}

const NamedGraph& named_graph(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) fail(errc::catalog, "unknown graph name: " + name);
  return it->second;
}

Graph builtin(const std::string& name) { return named_graph(name).graph; }

Graph construct_f11() {
  Graph g = subdivide(k33(), {0, 3}, 6);  // path 0-6-7-8-9-10-11-3
  g.labels.assign(g.n, "");
  for (int i = 0; i < 6; ++i) g.labels[6 + i] = std::to_string(i + 1);
  auto e = g.edges;
  e.insert(e.end(), {{6, 9}, {7, 10}, {8, 11}});  // tags (1,4), (2,5), (3,6)
  return make_graph(g.n, std::move(e), std::move(g.labels));
}

Graph construct_f14() {
  // 4-cycle 0-3-1-4 of K33; midpoints 6,7,8,9 in edge order (0,3),(1,3),(1,4),(0,4).
  Graph g = k33();
  g = subdivide(g, {0, 3}, 1);
  g = subdivide(g, {1, 3}, 1);
  g = subdivide(g, {1, 4}, 1);
  g = subdivide(g, {0, 4}, 1);
  auto e = g.edges;
  e.insert(e.end(), {{6, 8}, {7, 9}});  // midpoints of disjoint cycle edges
  g = make_graph(g.n, std::move(e));
  g = subdivide(g, {6, 8}, 1);  // vertex 10
  g = subdivide(g, {7, 9}, 1);  // vertex 11
  e = g.edges;
  e.emplace_back(10, 11);
  return make_graph(g.n, std::move(e));
}

void validate_catalog_entry(const NamedGraph& entry) {
  const Graph& g = entry.graph;
  const ExpectedInvariants& x = entry.expected;
  auto mismatch = [&](const std::string& what) {
    fail(errc::domain, entry.name + ": " + what);
  };
  if (g.n != x.vertex_count) mismatch("vertex count");
  if (g.edge_count() != x.edge_count) mismatch("edge count");
  if (girth(g) != x.girth) mismatch("girth");
  auto deg = g.degrees();
  bool cubic = std::all_of(deg.begin(), deg.end(), [](int d) { return d == 3; });
  if (cubic != x.is_cubic) mismatch("cubic flag");
}

}  // namespace toratlas
