#include "toratlas/rotation_map.hpp"

#include <algorithm>
#include "json.hpp"

namespace toratlas {

namespace {

std::vector<int> dart_vertices(const Graph& g) {
  std::vector<int> dv(2 * g.edges.size());
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    dv[2 * k] = g.edges[k].first;
    dv[2 * k + 1] = g.edges[k].second;
  }
  return dv;
}

void check_face_identity(const RotationMap& m) {
  // Σ face lengths = 2E holds by construction (faces partition the darts);
  // cheap to keep as a live check on every trace.
  std::size_t total = 0;
  std::vector<bool> seen(m.sigma.size(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    int x = d;
    do {
      seen[x] = true;
      ++total;
      x = m.next_face_dart(x);
    } while (x != d);
  }
  if (total != m.sigma.size()) throw std::logic_error("face orbits do not partition the darts");
}

}  // namespace

int dart_of(const Graph& g, int from, int to) {
  int k = g.edge_index(from, to);
  if (k < 0)
    fail(errc::domain,
         "no edge (" + std::to_string(from) + "," + std::to_string(to) + ")");
  return from < to ? 2 * k : 2 * k + 1;
}

RotationMap from_rotations(const Graph& g, const std::vector<std::vector<int>>& rotations) {
  if (static_cast<int>(rotations.size()) != g.n)
    fail(errc::domain, "rotation list size mismatch");
  RotationMap m;
  m.graph = g;
  m.sigma.assign(2 * g.edges.size(), -1);
  m.dart_vertex = dart_vertices(g);
  for (int v = 0; v < g.n; ++v) {
    auto nbrs = g.neighbors(v);
    auto rot = rotations[v];
    auto sorted = rot;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != nbrs)
      fail(errc::domain, "rotation at vertex " + std::to_string(v) +
                             " is not a cyclic order of its neighbors");
    int deg = static_cast<int>(rot.size());
    for (int i = 0; i < deg; ++i) {
      int d = dart_of(g, v, rot[i]);
      int dn = dart_of(g, v, rot[(i + 1) % deg]);
      m.sigma[d] = dn;
    }
  }
  return m;
}

std::vector<std::vector<int>> rotations_of(const RotationMap& m) {
  const Graph& g = m.graph;
  std::vector<int> first(g.n, -1);
  for (int d = 0; d < m.dart_count(); ++d)
    if (first[m.vertex_of(d)] < 0) first[m.vertex_of(d)] = d;
  std::vector<std::vector<int>> rots(g.n);
  for (int v = 0; v < g.n; ++v) {
    if (first[v] < 0) continue;  // isolated vertex: empty rotation
    int d = first[v];
    do {
      rots[v].push_back(m.head_of(d));
      d = m.sigma[d];
    } while (d != first[v]);
  }
  return rots;
}

std::vector<FaceWalk> face_orbits(const RotationMap& m) {
  check_face_identity(m);
  std::vector<FaceWalk> walks;
  std::vector<bool> seen(m.sigma.size(), false);
  for (int d = 0; d < m.dart_count(); ++d) {
    if (seen[d]) continue;
    FaceWalk w;
    int x = d;
    do {
      seen[x] = true;
      w.darts.push_back(x);
      x = m.next_face_dart(x);
    } while (x != d);
    walks.push_back(std::move(w));
  }
  return walks;
}

std::vector<int> face_signature(const RotationMap& m) {
  std::vector<int> sig;
  for (const auto& w : face_orbits(m)) sig.push_back(w.length());
  std::sort(sig.begin(), sig.end());
  return sig;
}

int genus_of_map(const RotationMap& m) {
  if (!m.graph.is_connected()) fail(errc::domain, "genus of a disconnected map is per-component");
  if (m.graph.edges.empty()) return 0;  // a bare vertex sits on the sphere
  int v = m.graph.n;
  int e = m.graph.edge_count();
  int f = static_cast<int>(face_orbits(m).size());
  int doubled = 2 - v + e - f;
  if (doubled < 0 || doubled % 2 != 0) throw std::logic_error("Euler count is off");
  return doubled / 2;
}

int genus_sum(const RotationMap& m) {
  auto comp = m.graph.component_ids();
  int nc = m.graph.component_count();
  if (nc <= 1) return genus_of_map(m);
  std::vector<int> verts(nc, 0), edgecnt(nc, 0), faces(nc, 0);
  for (int v = 0; v < m.graph.n; ++v) ++verts[comp[v]];
  for (const auto& e : m.graph.edges) ++edgecnt[comp[e.first]];
  for (const auto& w : face_orbits(m)) ++faces[comp[m.vertex_of(w.darts[0])]];
  int total = 0;
  for (int c = 0; c < nc; ++c) {
    if (edgecnt[c] == 0) continue;
    int doubled = 2 - verts[c] + edgecnt[c] - faces[c];
    if (doubled < 0 || doubled % 2 != 0) throw std::logic_error("Euler count is off");
    total += doubled / 2;
  }
  return total;
}

RotationMap mirror(const RotationMap& m) {
  RotationMap r = m;
  for (int d = 0; d < m.dart_count(); ++d) r.sigma[m.sigma[d]] = d;
  return r;
}

RotationMap submap(const RotationMap& m, const Graph& h) {
  if (h.n != m.graph.n) fail(errc::domain, "submap requires the same vertex set");
  for (const auto& [u, v] : h.edges)
    if (!m.graph.has_edge(u, v))
      fail(errc::domain, "submap edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") not in the host map");
  auto rots = rotations_of(m);
  std::vector<std::vector<int>> kept(h.n);
  for (int v = 0; v < h.n; ++v)
    for (int w : rots[v])
      if (h.has_edge(v, w)) kept[v].push_back(w);
  return from_rotations(h, kept);
}

RotationMap relabel(const RotationMap& m, const std::vector<int>& vertex_map) {
  Graph g = relabel(m.graph, vertex_map);
  auto rots = rotations_of(m);
  std::vector<std::vector<int>> out(g.n);
  for (int v = 0; v < m.graph.n; ++v) {
    auto& r = out[vertex_map[v]];
    for (int w : rots[v]) r.push_back(vertex_map[w]);
  }
  return from_rotations(g, out);
}

std::string map_to_json(const RotationMap& m) {
  nlohmann::ordered_json j;
  j["graph"]["n"] = m.graph.n;
  auto& edges = j["graph"]["edges"] = nlohmann::ordered_json::array();
  for (const auto& [u, v] : m.graph.edges) edges.push_back({u, v});
  auto& rots = j["rotations"] = nlohmann::ordered_json::object();
  auto r = rotations_of(m);
  for (int v = 0; v < m.graph.n; ++v) rots[std::to_string(v)] = r[v];
  return j.dump(2) + "\n";
}

RotationMap map_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("bad JSON: ") + e.what());
  }
  try {
    if (!j.contains("graph") || !j.contains("rotations"))
      fail(errc::parse, "map JSON needs \"graph\" and \"rotations\"");
    int n = j["graph"].at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["graph"].at("edges")) {
      if (!e.is_array() || e.size() != 2) fail(errc::parse, "each edge must be a pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    Graph g = make_graph(n, std::move(edges));
    std::vector<std::vector<int>> rots(g.n);
    for (int v = 0; v < g.n; ++v) {
      auto key = std::to_string(v);
      if (!j["rotations"].contains(key))
        fail(errc::parse, "missing rotation for vertex " + key);
      rots[v] = j["rotations"][key].get<std::vector<int>>();
    }
    return from_rotations(g, rots);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse, std::string("bad map JSON: ") + e.what());
  } catch (const error& e) {
    if (e.kind() == errc::parse) throw;
    fail(errc::parse, std::string("bad map JSON: ") + e.what());
  }
}

}  // namespace toratlas
