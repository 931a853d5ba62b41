#include "toratlas/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

namespace toratlas {

void fail(errc kind, const std::string& what) { throw error(kind, what); }

int Graph::edge_index(int u, int v) const {
  if (u == v) return -1;
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
  if (it == edges.end() || *it != std::make_pair(u, v)) return -1;
  return static_cast<int>(it - edges.begin());
}

int Graph::degree(int v) const {
  int d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n, 0);
  for (const auto& [a, b] : edges) {
    ++d[a];
    ++d[b];
  }
  return d;
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> adj(n);
  for (const auto& [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x])
        if (comp[y] < 0) {
          comp[y] = next;
          q.push(y);
        }
    }
    ++next;
  }
  return comp;
}

int Graph::component_count() const {
  auto c = component_ids();
  return c.empty() ? 0 : 1 + *std::max_element(c.begin(), c.end());
}

bool Graph::is_connected() const { return component_count() <= 1; }

std::string Graph::label_of(int v) const {
  if (!labels.empty() && !labels[v].empty()) return labels[v];
  return std::to_string(v);
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges, std::vector<std::string> labels) {
  if (n < 0) fail(errc::domain, "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) fail(errc::domain, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n)
      fail(errc::domain,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(errc::domain, "parallel edge");
  if (!labels.empty() && static_cast<int>(labels.size()) != n)
    fail(errc::domain, "label list size mismatch");
  Graph g;
  g.n = n;
  g.edges = std::move(edges);
  g.labels = std::move(labels);
  return g;
}

Graph read_graph_text(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next_data_line = [&](std::string& out) {
    while (std::getline(in, line)) {
      ++lineno;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      out = line;
      return true;
    }
    return false;
  };
  auto parse_fail = [&](const std::string& msg) {
    fail(errc::parse, "line " + std::to_string(lineno) + ": " + msg);
  };

  std::string data;
  if (!next_data_line(data)) fail(errc::parse, "empty input");
  std::istringstream head(data);
  int n = 0, m = 0;
  if (!(head >> n >> m)) parse_fail("expected \"n m\"");
  std::string extra;
  if (head >> extra) parse_fail("trailing content after \"n m\"");

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    if (!next_data_line(data)) fail(errc::parse, "line " + std::to_string(lineno) + ": expected " +
                                                     std::to_string(m) + " edges, got " +
                                                     std::to_string(i));
    std::istringstream es(data);
    int u = 0, v = 0;
    if (!(es >> u >> v)) parse_fail("expected \"u v\"");
    if (es >> extra) parse_fail("trailing content after edge");
    edges.emplace_back(u, v);
  }
  try {
    return make_graph(n, std::move(edges));
  } catch (const error& e) {
    fail(errc::parse, std::string("invalid graph: ") + e.what());
  }
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  return read_graph_text(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse, "cannot open " + path);
  return read_graph_text(in);
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream out;
  out << g.n << ' ' << g.edges.size() << '\n';
  for (const auto& [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

Graph relabel(const Graph& g, const std::vector<int>& vertex_map) {
  if (static_cast<int>(vertex_map.size()) != g.n) fail(errc::domain, "relabel size mismatch");
  std::vector<bool> seen(g.n, false);
  for (int x : vertex_map) {
    if (x < 0 || x >= g.n || seen[x]) fail(errc::domain, "relabel is not a permutation");
    seen[x] = true;
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.edges.size());
  for (const auto& [u, v] : g.edges) edges.emplace_back(vertex_map[u], vertex_map[v]);
  std::vector<std::string> labels;
  if (!g.labels.empty()) {
    labels.resize(g.n);
    for (int v = 0; v < g.n; ++v) labels[vertex_map[v]] = g.labels[v];
  }
  return make_graph(g.n, std::move(edges), std::move(labels));
}

Graph subdivide(const Graph& g, std::pair<int, int> e, int k) {
  if (k < 1) fail(errc::domain, "subdivision count must be >= 1");
  if (e.first > e.second) std::swap(e.first, e.second);
  if (g.edge_index(e.first, e.second) < 0)
    fail(errc::domain, "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                           ") not in graph");
  std::vector<std::pair<int, int>> edges;
  for (const auto& ed : g.edges)
    if (ed != e) edges.push_back(ed);
  int prev = e.first;
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(prev, g.n + i);
    prev = g.n + i;
  }
  edges.emplace_back(prev, e.second);
  std::vector<std::string> labels = g.labels;
  if (!labels.empty()) labels.resize(g.n + k);
  return make_graph(g.n + k, std::move(edges), std::move(labels));
}

Graph suppress_degree2(const Graph& g) {
  // Work on adjacency sets; smooth the lowest-numbered degree-2 vertex until
  // none remain, then pack surviving vertex ids.
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> gone(g.n, false);
  auto erase_from = [&](int at, int x) {
    auto& a = adj[at];
    a.erase(std::find(a.begin(), a.end(), x));
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (int v = 0; v < g.n; ++v) {
      if (gone[v] || adj[v].size() != 2) continue;
      int a = adj[v][0], b = adj[v][1];
      if (a == b) fail(errc::unsupported_input, "suppression would create a loop");
      if (std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end())
        fail(errc::unsupported_input, "suppression would create a parallel edge");
      erase_from(a, v);
      erase_from(b, v);
      adj[a].push_back(b);
      adj[b].push_back(a);
      adj[v].clear();
      gone[v] = true;
      changed = true;
    }
  }
  std::vector<int> newid(g.n, -1);
  int next = 0;
  for (int v = 0; v < g.n; ++v)
    if (!gone[v]) newid[v] = next++;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < g.n; ++v)
    if (!gone[v])
      for (int w : adj[v])
        if (v < w) edges.emplace_back(newid[v], newid[w]);
  std::vector<std::string> labels;
  if (!g.labels.empty()) {
    labels.resize(next);
    for (int v = 0; v < g.n; ++v)
      if (!gone[v]) labels[newid[v]] = g.labels[v];
  }
  return make_graph(next, std::move(edges), std::move(labels));
}

int girth(const Graph& g) {
  // BFS from every vertex; a non-tree edge at depth d closes a cycle of
  // length dist[x]+dist[y]+1, and the minimum over all roots is exact.
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  int best = -1;
  for (int s = 0; s < g.n; ++s) {
    std::vector<int> dist(g.n, -1), parent(g.n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (int y : adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          q.push(y);
        } else if (y != parent[x]) {
          int len = dist[x] + dist[y] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) fail(errc::no_cycle, "graph has no cycle");
  return best;
}

std::vector<std::array<int, 4>> four_cycles(const Graph& g) {
  // A 4-cycle is two opposite pairs; counting each once by making the first
  // diagonal the one holding the overall smallest vertex.
  std::vector<std::array<int, 4>> out;
  for (int a = 0; a < g.n; ++a)
    for (int c = a + 1; c < g.n; ++c) {
      std::vector<int> common;
      for (int x : g.neighbors(a))
        if (x != c && g.has_edge(x, c)) common.push_back(x);
      for (std::size_t i = 0; i < common.size(); ++i)
        for (std::size_t j = i + 1; j < common.size(); ++j) {
          int b = common[i], d = common[j];
          if (std::min(b, d) < a) continue;  // counted at the other diagonal
          out.push_back({a, b, c, d});
        }
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void automorphism_backtrack(const Graph& g, const std::vector<int>& deg,
                            const std::vector<std::vector<bool>>& adj, std::vector<int>& img,
                            std::vector<bool>& used, int v, std::vector<std::vector<int>>& out) {
  if (v == g.n) {
    out.push_back(img);
    return;
  }
  for (int w = 0; w < g.n; ++w) {
    if (used[w] || deg[w] != deg[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = (adj[v][u] == adj[w][img[u]]);
    if (!ok) continue;
    img[v] = w;
    used[w] = true;
    automorphism_backtrack(g, deg, adj, img, used, v + 1, out);
    used[w] = false;
  }
}

std::vector<std::vector<bool>> adjacency_matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.n, std::vector<bool>(g.n, false));
  for (const auto& [u, v] : g.edges) adj[u][v] = adj[v][u] = true;
  return adj;
}

}  // namespace

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  if (g.n > 16) fail(errc::resource, "automorphism search limited to 16 vertices");
  auto adj = adjacency_matrix(g);
  auto deg = g.degrees();
  std::vector<int> img(g.n, -1);
  std::vector<bool> used(g.n, false);
  std::vector<std::vector<int>> out;
  automorphism_backtrack(g, deg, adj, img, used, 0, out);
  return out;
}

namespace {

bool iso_backtrack(const Graph& a, const Graph& b, const std::vector<std::vector<bool>>& adja,
                   const std::vector<std::vector<bool>>& adjb, const std::vector<int>& dega,
                   const std::vector<int>& degb, std::vector<int>& img, std::vector<bool>& used,
                   int v) {
  if (v == a.n) return true;
  for (int w = 0; w < a.n; ++w) {
    if (used[w] || dega[v] != degb[w]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) ok = adja[v][u] == adjb[w][img[u]];
    if (!ok) continue;
    img[v] = w;
    used[w] = true;
    if (iso_backtrack(a, b, adja, adjb, dega, degb, img, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.n != b.n || a.edges.size() != b.edges.size()) return false;
  auto da = a.degrees(), db = b.degrees();
  auto sa = da, sb = db;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  auto adja = adjacency_matrix(a), adjb = adjacency_matrix(b);
  std::vector<int> img(a.n, -1);
  std::vector<bool> used(a.n, false);
  return iso_backtrack(a, b, adja, adjb, da, db, img, used, 0);
}

Graph SubgraphModel::path_union() const {
  std::vector<int> pack(host.n, -1);
  for (const auto& p : paths)
    for (int v : p) pack[v] = 0;
  int used = 0;
  for (int v = 0; v < host.n; ++v)
    if (pack[v] == 0) pack[v] = used++;
  std::vector<std::pair<int, int>> edges;
  for (const auto& p : paths)
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      edges.emplace_back(pack[p[i]], pack[p[i + 1]]);
  std::vector<std::string> labels;
  if (!host.labels.empty()) {
    labels.resize(used);
    for (int v = 0; v < host.n; ++v)
      if (pack[v] >= 0) labels[pack[v]] = host.labels[v];
  }
  return make_graph(used, std::move(edges), std::move(labels));
}

namespace {

// Vertex-disjoint path system search: for each of the nine K33 model edges in
// turn, enumerate simple host paths between the branch images whose interior
// avoids every vertex already claimed.
struct PathSearch {
  const Graph& g;
  std::vector<std::vector<int>> adj;
  std::array<int, 6> branch{};
  std::vector<bool> claimed;  // branch vertices and path interiors
  std::vector<std::vector<int>> paths;

  explicit PathSearch(const Graph& gr) : g(gr), adj(gr.n), claimed(gr.n, false) {
    for (const auto& [u, v] : gr.edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }

  bool connect(int k) {
    if (k == 9) return true;
    int from = branch[k / 3], to = branch[3 + k % 3];
    std::vector<int> walk{from};
    return dfs_path(from, to, walk, k);
  }

  bool dfs_path(int at, int to, std::vector<int>& walk, int k) {
    for (int y : adj[at]) {
      if (y == to) {
        walk.push_back(y);
        paths.push_back(walk);
        std::vector<int> interior(walk.begin() + 1, walk.end() - 1);
        for (int x : interior) claimed[x] = true;
        if (connect(k + 1)) return true;
        for (int x : interior) claimed[x] = false;
        paths.pop_back();
        walk.pop_back();
      } else if (!claimed[y]) {
        claimed[y] = true;
        walk.push_back(y);
        if (dfs_path(y, to, walk, k)) return true;
        walk.pop_back();
        claimed[y] = false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<SubgraphModel> contains_k33_subdivision(const Graph& g) {
  if (g.n > 16) fail(errc::resource, "subdivision search limited to 16 vertices");
  std::vector<int> candidates;
  auto deg = g.degrees();
  for (int v = 0; v < g.n; ++v)
    if (deg[v] >= 3) candidates.push_back(v);
  if (candidates.size() < 6) return std::nullopt;

  int c = static_cast<int>(candidates.size());
  // Choose six branch vertices, then split them three/three; requiring the
  // smallest picked vertex on the left avoids mirror-duplicate splits.
  std::optional<SubgraphModel> result;
  auto try_split = [&](const std::vector<int>& six) {
    std::array<int, 3> left{}, right{};
    for (int mask = 0; mask < (1 << 6) && !result; ++mask) {
      if (__builtin_popcount(static_cast<unsigned>(mask)) != 3 || !(mask & 1)) continue;
      int li = 0, ri = 0;
      for (int i = 0; i < 6; ++i)
        (mask >> i & 1) ? left[li++] = six[i] : right[ri++] = six[i];
      PathSearch search(g);
      for (int i = 0; i < 3; ++i) {
        search.branch[i] = left[i];
        search.branch[3 + i] = right[i];
      }
      for (int v : six) search.claimed[v] = true;
      if (search.connect(0)) {
        SubgraphModel model;
        model.host = g;
        model.branch = search.branch;
        model.paths = std::move(search.paths);
        result = std::move(model);
      }
    }
  };
  std::vector<int> six(6);
  auto choose = [&](auto&& self, int start, int got) -> void {
    if (result) return;
    if (got == 6) {
      try_split(six);
      return;
    }
    for (int i = start; i <= c - (6 - got); ++i) {
      six[got] = candidates[i];
      self(self, i + 1, got + 1);
    }
  };
  choose(choose, 0, 0);
  return result;
}

}  // namespace toratlas
