#include "toratlas/extend.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"
#include "toratlas/catalog.hpp"
#include "toratlas/enumerate.hpp"

namespace toratlas {

namespace {

std::vector<int> sigma_inverse(const RotationMap& m) {
  std::vector<int> inv(m.sigma.size());
  for (int d = 0; d < m.dart_count(); ++d) inv[m.sigma[d]] = d;
  return inv;
}

std::vector<int> face_ids(const RotationMap& m, const std::vector<FaceWalk>& walks) {
  std::vector<int> id(m.dart_count(), -1);
  for (int i = 0; i < static_cast<int>(walks.size()); ++i)
    for (int d : walks[i].darts) id[d] = i;
  return id;
}

void insert_after(std::vector<int>& rotation, int anchor, int value) {
  auto it = std::find(rotation.begin(), rotation.end(), anchor);
  if (it == rotation.end()) throw std::logic_error("rotation lost an expected neighbor");
  rotation.insert(it + 1, value);
}

}  // namespace

std::vector<InsertionSite> insertion_sites(const RotationMap& m, int u, int v) {
  if (u < 0 || v < 0 || u >= m.graph.n || v >= m.graph.n)
    fail(errc::domain, "insertion endpoint out of range");
  if (u == v) fail(errc::domain, "insertion endpoints coincide");
  auto inv = sigma_inverse(m);
  std::vector<InsertionSite> sites;
  for (const auto& walk : face_orbits(m)) {
    // A walk passes the corner (x, sigma[x]) at the moment it departs along
    // sigma[x]; listing corners in walk order keeps the site order stable.
    std::vector<int> at_u, at_v;
    for (int e : walk.darts) {
      if (m.vertex_of(e) == u) at_u.push_back(inv[e]);
      if (m.vertex_of(e) == v) at_v.push_back(inv[e]);
    }
    for (int a : at_u)
      for (int b : at_v) sites.push_back({FaceCorner{a}, FaceCorner{b}});
  }
  return sites;
}

RotationMap insert_edge(const RotationMap& m, const InsertionSite& site) {
  int a = site.first.dart, b = site.second.dart;
  if (a < 0 || b < 0 || a >= m.dart_count() || b >= m.dart_count())
    fail(errc::domain, "corner dart out of range");
  int u = m.vertex_of(a), v = m.vertex_of(b);
  if (u == v) fail(errc::domain, "insertion endpoints coincide");
  auto walks = face_orbits(m);
  auto fid = face_ids(m, walks);
  if (fid[m.sigma[a]] != fid[m.sigma[b]])
    fail(errc::domain, "corners lie on different faces");

  auto rots = rotations_of(m);
  insert_after(rots[u], m.head_of(a), v);
  insert_after(rots[v], m.head_of(b), u);
  auto edges = m.graph.edges;
  edges.emplace_back(std::min(u, v), std::max(u, v));
  Graph g2 = make_graph(m.graph.n, std::move(edges), m.graph.labels);
  RotationMap out = from_rotations(g2, rots);

  if (face_orbits(out).size() != walks.size() + 1)
    throw std::logic_error("edge insertion must split one face into two");
  if (genus_sum(out) != genus_sum(m))
    throw std::logic_error("edge insertion must preserve genus");
  return out;
}

RotationMap subdivide_map_edge(const RotationMap& m, int u, int v) {
  if (!m.graph.has_edge(u, v)) fail(errc::domain, "subdivision needs an existing edge");
  int w = m.graph.n;
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : m.graph.edges)
    if (e != std::make_pair(std::min(u, v), std::max(u, v))) edges.push_back(e);
  edges.emplace_back(std::min(u, w), std::max(u, w));
  edges.emplace_back(std::min(v, w), std::max(v, w));
  auto labels = m.graph.labels;
  if (!labels.empty()) labels.emplace_back();
  Graph g2 = make_graph(w + 1, std::move(edges), std::move(labels));

  auto rots = rotations_of(m);
  std::replace(rots[u].begin(), rots[u].end(), v, w);
  std::replace(rots[v].begin(), rots[v].end(), u, w);
  rots.push_back({std::min(u, v), std::max(u, v)});
  return from_rotations(g2, rots);
}

std::vector<RotationMap> extend_all(const RotationMap& m,
                                    const std::vector<std::pair<int, int>>& missing) {
  std::vector<RotationMap> out;
  std::function<void(const RotationMap&, std::size_t)> dfs = [&](const RotationMap& cur,
                                                                 std::size_t step) {
    if (step == missing.size()) {
      out.push_back(cur);
      return;
    }
    auto [u, v] = missing[step];
    for (const auto& site : insertion_sites(cur, u, v)) dfs(insert_edge(cur, site), step + 1);
  };
  dfs(m, 0);
  return out;
}

namespace {

struct PlanStep {
  bool subdivide = false;
  int u = 0, v = 0;
};

struct Plan {
  Graph subdivision;                             // the fixed K33 subdivision
  std::vector<PlanStep> steps;                   // completion recipe
  std::vector<std::pair<int, int>> inserted;     // the edges the recipe adds
  std::pair<int, int> middle_chord{-1, -1};      // stabilized chord (F11 only)
};

Graph minus_edges(const Graph& g, const std::vector<std::pair<int, int>>& removed) {
  std::vector<std::pair<int, int>> keep;
  for (const auto& e : g.edges)
    if (std::find(removed.begin(), removed.end(), e) == removed.end()) keep.push_back(e);
  if (keep.size() + removed.size() != g.edges.size())
    throw std::logic_error("edge removal list does not match the graph");
  return make_graph(g.n, std::move(keep), g.labels);
}

std::vector<PlanStep> insert_steps(const std::vector<std::pair<int, int>>& edges) {
  std::vector<PlanStep> steps;
  for (auto [u, v] : edges) steps.push_back({false, u, v});
  return steps;
}

Plan plan_for(const std::string& name) {
  Plan p;
  if (name == "F11") {
    p.inserted = {{6, 9}, {7, 10}, {8, 11}};
    p.subdivision = minus_edges(builtin("F11"), p.inserted);
    p.steps = insert_steps(p.inserted);
    p.middle_chord = {7, 10};
    return p;
  }
  if (name == "F12") {
    p.inserted = {{6, 11}, {7, 9}, {8, 10}};
    p.subdivision = minus_edges(builtin("F12"), p.inserted);
    p.steps = insert_steps(p.inserted);
    return p;
  }
  if (name == "F13") {
    p.inserted = {{6, 10}, {7, 8}, {9, 11}};
    p.subdivision = minus_edges(builtin("F13"), p.inserted);
    p.steps = insert_steps(p.inserted);
    return p;
  }
  if (name == "F14") {
    p.subdivision = make_graph(
        10, {{0, 6}, {6, 3}, {3, 7}, {7, 1}, {1, 8}, {8, 4}, {4, 9}, {9, 0},
             {0, 5}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
    p.steps = {{false, 6, 8}, {true, 6, 8}, {false, 7, 9}, {true, 7, 9}, {false, 10, 11}};
    p.inserted = {{6, 8}, {7, 9}, {10, 11}};
    return p;
  }
  if (name == "G1") {
    p.subdivision = make_graph(
        10, {{0, 3}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
             {0, 6}, {6, 7}, {7, 4}, {0, 8}, {8, 9}, {9, 5}});
    p.steps = insert_steps({{6, 9}, {7, 8}});
    p.inserted = {{6, 9}, {7, 8}};
    return p;
  }
  fail(errc::catalog, "no completion recipe for " + name);
}

std::vector<RotationMap> run_plan(const RotationMap& start, const std::vector<PlanStep>& steps) {
  std::vector<RotationMap> layer{start};
  for (const auto& s : steps) {
    std::vector<RotationMap> next;
    for (const auto& m : layer) {
      if (s.subdivide) {
        next.push_back(subdivide_map_edge(m, s.u, s.v));
      } else {
        for (const auto& site : insertion_sites(m, s.u, s.v))
          next.push_back(insert_edge(m, site));
      }
    }
    layer = std::move(next);
  }
  return layer;
}

std::vector<RotationMap> toroidal_systems(const Graph& g) {
  std::vector<RotationMap> out;
  enumerate_rotation_systems(g, [&](std::uint64_t, const RotationMap& m) {
    if (genus_of_map(m) == 1) out.push_back(m);
  });
  return out;
}

}  // namespace

ReplayResult replay_cases(const std::string& name) {
  Plan plan = plan_for(name);
  Graph target = builtin(name);
  ReplayResult r;
  r.subgraph = plan.subdivision;
  r.missing_edges = plan.inserted;

  auto systems = toroidal_systems(plan.subdivision);
  for (const auto& cls : classify(systems, true, 1)) {
    auto completions = run_plan(cls.representative, plan.steps);
    for (const auto& c : completions)
      if (c.graph.n != target.n || c.graph.edges != target.edges)
        throw std::logic_error("completion recipe does not rebuild the target graph");
    r.cases.push_back({cls, completions.size()});
  }
  for (const auto& m : systems) {
    auto completions = run_plan(m, plan.steps);
    r.completions.insert(r.completions.end(), completions.begin(), completions.end());
  }
  r.classes = classify(r.completions, true, 1);
  return r;
}

std::vector<EmbeddingClass> replay_classification(const std::string& name) {
  return replay_cases(name).classes;
}

F11SiteBreakdown f11_site_breakdown() {
  Plan plan = plan_for("F11");
  auto systems = toroidal_systems(plan.subdivision);
  auto classes = classify(systems, true, 1);

  F11SiteBreakdown out;
  const EmbeddingClass* extending = nullptr;
  for (const auto& cls : classes)
    if (!run_plan(cls.representative, plan.steps).empty()) {
      ++out.extending_classes;
      extending = &cls;
    }
  if (!extending) return out;

  // Insert the stabilized chord first, then count full completions per site.
  auto [mu, mv] = plan.middle_chord;
  std::vector<std::pair<int, int>> rest;
  for (auto e : plan.inserted)
    if (e != plan.middle_chord) rest.push_back(e);
  for (const auto& site : insertion_sites(extending->representative, mu, mv)) {
    auto with_chord = insert_edge(extending->representative, site);
    out.site_completions.push_back(extend_all(with_chord, rest).size());
  }
  return out;
}

std::vector<std::vector<int>> polygon_decomposition(const RotationMap& m) {
  std::vector<std::vector<int>> polygons;
  for (const auto& walk : face_orbits(m)) {
    std::vector<int> verts;
    verts.reserve(walk.darts.size());
    for (int d : walk.darts) verts.push_back(m.vertex_of(d));
    polygons.push_back(std::move(verts));
  }
  return polygons;
}

std::string polygons_to_json(const RotationMap& m) {
  nlohmann::ordered_json j;
  auto& polys = j["polygons"] = nlohmann::ordered_json::array();
  for (const auto& cycle : polygon_decomposition(m)) {
    auto jc = nlohmann::ordered_json::array();
    for (int v : cycle) jc.push_back(m.graph.label_of(v));
    polys.push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

}  // namespace toratlas
