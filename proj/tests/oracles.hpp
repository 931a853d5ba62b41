#pragma once

// Reference implementations, deliberately naive and independent of the
// library's dart machinery. They work on plain neighbor-list data so that
// agreement between the two code paths is meaningful evidence.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// An embedding as per-vertex cyclic neighbor lists.
struct Embedding {
  int n = 0;
  std::vector<std::vector<int>> rot;
};

inline int successor(const std::vector<int>& rotation, int entry) {
  for (std::size_t i = 0; i < rotation.size(); ++i)
    if (rotation[i] == entry) return rotation[(i + 1) % rotation.size()];
  return -1;
}

// Face lengths by tracing directed edges: (u,v) -> (v, successor of u in v's
// rotation). Every directed edge lies on exactly one face walk.
inline std::vector<int> face_lengths(const Embedding& e) {
  std::set<std::pair<int, int>> seen;
  std::vector<int> lengths;
  for (int u = 0; u < e.n; ++u)
    for (int v : e.rot[u]) {
      if (seen.count({u, v})) continue;
      int len = 0, cu = u, cv = v;
      do {
        seen.insert({cu, cv});
        ++len;
        int w = successor(e.rot[cv], cu);
        cu = cv;
        cv = w;
      } while (!(cu == u && cv == v));
      lengths.push_back(len);
    }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

inline std::vector<int> component_of(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int root = 0; root < n; ++root) {
    if (comp[root] >= 0) continue;
    comp[root] = next;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (auto [a, b] : edges) {
        int other = a == u ? b : b == u ? a : -1;
        if (other >= 0 && comp[other] < 0) {
          comp[other] = next;
          stack.push_back(other);
        }
      }
    }
    ++next;
  }
  return comp;
}

// Euler genus summed per component: (2 - V + E - F) / 2 each.
inline int genus_of(const Embedding& e, const std::vector<std::pair<int, int>>& edges) {
  auto comp = component_of(e.n, edges);
  int components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  // Assign each face to the component of any vertex on it.
  std::vector<int> verts_in(components, 0), edges_in(components, 0), faces_in(components, 0);
  for (int v = 0; v < e.n; ++v) ++verts_in[comp[v]];
  for (auto [u, v] : edges) ++edges_in[comp[u]];
  std::set<std::pair<int, int>> seen;
  for (int u = 0; u < e.n; ++u)
    for (int v : e.rot[u]) {
      if (seen.count({u, v})) continue;
      int cu = u, cv = v;
      do {
        seen.insert({cu, cv});
        int w = successor(e.rot[cv], cu);
        cu = cv;
        cv = w;
      } while (!(cu == u && cv == v));
      ++faces_in[comp[u]];
    }
  int total = 0;
  for (int c = 0; c < components; ++c) {
    int chi = 2 - verts_in[c] + edges_in[c] - faces_in[c];
    total += chi / 2;
  }
  return total;
}

inline bool has_edge(const std::vector<std::pair<int, int>>& edges, int u, int v) {
  return std::find(edges.begin(), edges.end(),
                   std::make_pair(std::min(u, v), std::max(u, v))) != edges.end();
}

// All n! permutations tried directly; practical for n <= 8.
inline long automorphism_count(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  long count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!has_edge(edges, perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Distinct 4-cycles: every 4-subset admits three perfect pairings into
// opposite corners; each pairing that closes up is one cycle.
inline long four_cycle_count(int n, const std::vector<std::pair<int, int>>& edges) {
  long count = 0;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const int quad[3][4] = {{a, b, c, d}, {a, b, d, c}, {a, c, b, d}};
          for (const auto& q : quad)
            if (has_edge(edges, q[0], q[1]) && has_edge(edges, q[1], q[2]) &&
                has_edge(edges, q[2], q[3]) && has_edge(edges, q[3], q[0]))
              ++count;
        }
  return count;
}

inline bool isomorphic(int an, const std::vector<std::pair<int, int>>& ae, int bn,
                       const std::vector<std::pair<int, int>>& be) {
  if (an != bn || ae.size() != be.size()) return false;
  std::vector<int> perm(an);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : ae)
      if (!has_edge(be, perm[u], perm[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t s = 0; s < a.size(); ++s) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + s) % a.size()];
    if (ok) return true;
  }
  return false;
}

// Map equivalence by brute force over vertex bijections: pi carries each
// rotation onto the image vertex's rotation, cyclically; reflection reverses
// every rotation at once.
inline bool maps_equivalent(const Embedding& a, const Embedding& b, bool allow_reflection) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (int pass = 0; pass < (allow_reflection ? 2 : 1); ++pass) {
      bool ok = true;
      for (int u = 0; u < a.n && ok; ++u) {
        std::vector<int> image;
        for (int w : a.rot[u]) image.push_back(perm[w]);
        if (pass == 1) std::reverse(image.begin(), image.end());
        ok = cyclic_equal(image, b.rot[perm[u]]);
      }
      if (ok) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace oracle
