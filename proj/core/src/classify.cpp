#include "toratlas/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <thread>

namespace toratlas {

namespace {

// Trace entries are small ints with three negative markers; the byte form
// shifts by +3 so markers sort below labels and fit unsigned 16-bit.
constexpr int mark_directed = -1;
constexpr int mark_edge = -2;
constexpr int mark_cycle = -3;

std::vector<int> sigma_inverse(const RotationMap& m) {
  std::vector<int> inv(m.sigma.size());
  for (int d = 0; d < m.dart_count(); ++d) inv[m.sigma[d]] = d;
  return inv;
}

struct TraceContext {
  const RotationMap& m;
  const std::vector<int>& forward;
  std::vector<int> backward;

  explicit TraceContext(const RotationMap& map)
      : m(map), forward(map.sigma), backward(sigma_inverse(map)) {}
  const std::vector<int>& next(bool reflected) const { return reflected ? backward : forward; }
};

// Breadth-first dart relabeling from a root: repeatedly visit the rotation
// successor and the mate of each discovered dart. label/order are outputs.
void bfs_labels(const std::vector<int>& next, int root, std::vector<int>& label,
                std::vector<int>& order) {
  label.assign(next.size(), -1);
  order.clear();
  order.reserve(next.size());
  label[root] = 0;
  order.push_back(root);
  for (std::size_t qi = 0; qi < order.size(); ++qi) {
    int d = order[qi];
    for (int nd : {next[d], d ^ 1}) {
      if (label[nd] < 0) {
        label[nd] = static_cast<int>(order.size());
        order.push_back(nd);
      }
    }
  }
}

void append_decoration(std::vector<int>& trace, const Decoration& deco,
                       const std::vector<int>& label) {
  switch (deco.kind) {
    case Decoration::Kind::none:
      break;
    case Decoration::Kind::directed_edge:
      trace.push_back(mark_directed);
      trace.push_back(label[deco.darts[0]]);
      break;
    case Decoration::Kind::edge: {
      trace.push_back(mark_edge);
      int d = deco.darts[0];
      trace.push_back(std::min(label[d], label[d ^ 1]));
      break;
    }
    case Decoration::Kind::cycle: {
      trace.push_back(mark_cycle);
      std::vector<int> marks;
      for (int d : deco.darts) marks.push_back(std::min(label[d], label[d ^ 1]));
      std::sort(marks.begin(), marks.end());
      trace.insert(trace.end(), marks.begin(), marks.end());
      break;
    }
  }
}

std::vector<int> trace_from(const TraceContext& ctx, int root, bool reflected,
                            const Decoration& deco) {
  const auto& next = ctx.next(reflected);
  std::vector<int> label, order;
  bfs_labels(next, root, label, order);
  if (order.size() != next.size())
    fail(errc::domain, "map is disconnected; canonical trace needs one component");
  std::vector<int> trace;
  trace.reserve(2 * order.size() + 8);
  for (int d : order) {
    trace.push_back(label[next[d]]);
    trace.push_back(label[d ^ 1]);
  }
  append_decoration(trace, deco, label);
  return trace;
}

std::vector<std::uint8_t> encode_trace(const std::vector<int>& trace) {
  std::vector<std::uint8_t> bytes;
  bytes.reserve(trace.size() * 2);
  for (int x : trace) {
    auto u = static_cast<std::uint16_t>(x + 3);
    bytes.push_back(static_cast<std::uint8_t>(u >> 8));
    bytes.push_back(static_cast<std::uint8_t>(u & 0xff));
  }
  return bytes;
}

}  // namespace

Decoration directed_edge_decoration(const RotationMap& m, int dart) {
  Decoration d{Decoration::Kind::directed_edge, {dart}};
  validate_decoration(m, d);
  return d;
}

Decoration edge_decoration(const RotationMap& m, int dart) {
  Decoration d{Decoration::Kind::edge, {std::min(dart, dart ^ 1), std::max(dart, dart ^ 1)}};
  validate_decoration(m, d);
  return d;
}

Decoration cycle_decoration(const RotationMap& m, const std::vector<int>& vertex_cycle) {
  Decoration d;
  d.kind = Decoration::Kind::cycle;
  int k = static_cast<int>(vertex_cycle.size());
  for (int i = 0; i < k; ++i)
    d.darts.push_back(dart_of(m.graph, vertex_cycle[i], vertex_cycle[(i + 1) % k]));
  validate_decoration(m, d);
  return d;
}

void validate_decoration(const RotationMap& m, const Decoration& deco) {
  for (int d : deco.darts)
    if (d < 0 || d >= m.dart_count()) fail(errc::domain, "decoration dart out of range");
  switch (deco.kind) {
    case Decoration::Kind::none:
      if (!deco.darts.empty()) fail(errc::domain, "bare decoration with darts");
      break;
    case Decoration::Kind::directed_edge:
      if (deco.darts.size() != 1) fail(errc::domain, "directed edge is one dart");
      break;
    case Decoration::Kind::edge:
      if (deco.darts.size() != 2 || deco.darts[0] != (deco.darts[1] ^ 1))
        fail(errc::domain, "edge decoration is a dart and its mate");
      break;
    case Decoration::Kind::cycle: {
      if (deco.darts.size() < 3) fail(errc::domain, "cycle too short");
      std::set<int> verts;
      int k = static_cast<int>(deco.darts.size());
      for (int i = 0; i < k; ++i) {
        int d = deco.darts[i], e = deco.darts[(i + 1) % k];
        if (m.head_of(d) != m.vertex_of(e)) fail(errc::domain, "cycle walk is not closed");
        if (!verts.insert(m.vertex_of(d)).second)
          fail(errc::domain, "cycle repeats a vertex");
      }
      break;
    }
  }
}

CanonicalForm canonical_form(const RotationMap& m, const Decoration& deco, bool allow_reflection) {
  if (!m.graph.is_connected()) fail(errc::domain, "canonical form needs a connected map");
  validate_decoration(m, deco);
  if (m.dart_count() == 0) return {};
  TraceContext ctx(m);
  std::vector<int> best;
  for (int reflected = 0; reflected < (allow_reflection ? 2 : 1); ++reflected)
    for (int root = 0; root < m.dart_count(); ++root) {
      auto t = trace_from(ctx, root, reflected != 0, deco);
      if (best.empty() || t < best) best = std::move(t);
    }
  return {encode_trace(best)};
}

std::string CanonicalForm::hex() const {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

bool are_equivalent(const RotationMap& a, const Decoration& da, const RotationMap& b,
                    const Decoration& db, bool allow_reflection) {
  return canonical_form(a, da, allow_reflection) == canonical_form(b, db, allow_reflection);
}

bool are_equivalent(const RotationMap& a, const RotationMap& b, bool allow_reflection) {
  return are_equivalent(a, {}, b, {}, allow_reflection);
}

std::vector<MapIsomorphism> symmetries(const RotationMap& m, bool allow_reflection) {
  if (!m.graph.is_connected()) fail(errc::domain, "symmetries need a connected map");
  std::vector<MapIsomorphism> out;
  if (m.dart_count() == 0) return {{{}, false}};
  TraceContext ctx(m);
  Decoration none;
  auto base = trace_from(ctx, 0, false, none);
  std::vector<int> base_label, base_order;
  bfs_labels(ctx.next(false), 0, base_label, base_order);
  for (int reflected = 0; reflected < (allow_reflection ? 2 : 1); ++reflected)
    for (int root = 0; root < m.dart_count(); ++root) {
      if (trace_from(ctx, root, reflected != 0, none) != base) continue;
      std::vector<int> label, order;
      bfs_labels(ctx.next(reflected != 0), root, label, order);
      MapIsomorphism iso;
      iso.reflecting = reflected != 0;
      iso.dart_map.resize(m.dart_count());
      for (int d = 0; d < m.dart_count(); ++d) iso.dart_map[d] = order[base_label[d]];
      out.push_back(std::move(iso));
    }
  return out;
}

namespace {

std::set<int> decoration_edge_marks(const Decoration& d) {
  std::set<int> s;
  for (int x : d.darts) s.insert(std::min(x, x ^ 1));
  return s;
}

bool decoration_matches(const Decoration& da, const std::vector<int>& dart_map,
                        const Decoration& db) {
  if (da.kind != db.kind) return false;
  switch (da.kind) {
    case Decoration::Kind::none:
      return true;
    case Decoration::Kind::directed_edge:
      return dart_map[da.darts[0]] == db.darts[0];
    case Decoration::Kind::edge: {
      int img = dart_map[da.darts[0]];
      return std::min(img, img ^ 1) == db.darts[0];
    }
    case Decoration::Kind::cycle: {
      std::set<int> img;
      for (int x : da.darts) {
        int y = dart_map[x];
        img.insert(std::min(y, y ^ 1));
      }
      return img == decoration_edge_marks(db);
    }
  }
  return false;
}

}  // namespace

std::optional<MapIsomorphism> find_isomorphism(const RotationMap& a, const Decoration& da,
                                               const RotationMap& b, const Decoration& db,
                                               bool allow_reflection) {
  if (a.dart_count() != b.dart_count()) return std::nullopt;
  if (!a.graph.is_connected() || !b.graph.is_connected())
    fail(errc::domain, "isomorphism search needs connected maps");
  if (a.dart_count() == 0) return MapIsomorphism{{}, false};
  auto binv = sigma_inverse(b);
  for (int reflected = 0; reflected < (allow_reflection ? 2 : 1); ++reflected) {
    const std::vector<int>& bnext = reflected ? binv : b.sigma;
    for (int root = 0; root < b.dart_count(); ++root) {
      // Propagate the forced dart map from a's dart 0 -> root.
      std::vector<int> img(a.dart_count(), -1);
      std::vector<bool> hit(b.dart_count(), false);
      std::vector<int> queue{0};
      img[0] = root;
      hit[root] = true;
      bool ok = true;
      for (std::size_t qi = 0; qi < queue.size() && ok; ++qi) {
        int d = queue[qi];
        std::pair<int, int> steps[2] = {{a.sigma[d], bnext[img[d]]},
                                        {d ^ 1, img[d] ^ 1}};
        for (auto [nd, ne] : steps) {
          if (img[nd] < 0) {
            if (hit[ne]) {
              ok = false;
              break;
            }
            img[nd] = ne;
            hit[ne] = true;
            queue.push_back(nd);
          } else if (img[nd] != ne) {
            ok = false;
            break;
          }
        }
      }
      if (!ok || static_cast<int>(queue.size()) != a.dart_count()) continue;
      // The propagation enforced conjugation along discovery edges; verify it
      // globally before accepting.
      bool valid = true;
      for (int d = 0; d < a.dart_count() && valid; ++d)
        valid = img[a.sigma[d]] == bnext[img[d]] && img[d ^ 1] == (img[d] ^ 1);
      if (!valid) continue;
      if (!decoration_matches(da, img, db)) continue;
      return MapIsomorphism{img, reflected != 0};
    }
  }
  return std::nullopt;
}

std::vector<std::vector<int>> induced_vertex_automorphisms(const RotationMap& m,
                                                           bool allow_reflection) {
  std::vector<int> some_dart(m.graph.n, -1);
  for (int d = 0; d < m.dart_count(); ++d)
    if (some_dart[m.vertex_of(d)] < 0) some_dart[m.vertex_of(d)] = d;
  std::vector<std::vector<int>> out;
  for (const auto& sym : symmetries(m, allow_reflection)) {
    std::vector<int> perm(m.graph.n, -1);
    for (int v = 0; v < m.graph.n; ++v)
      if (some_dart[v] >= 0) perm[v] = m.vertex_of(sym.dart_map[some_dart[v]]);
    out.push_back(std::move(perm));
  }
  return out;
}

namespace {

struct ClassAccumulator {
  struct Entry {
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
  };
  std::map<std::vector<std::uint8_t>, Entry> buckets;

  void add(std::vector<std::uint8_t> key, std::uint64_t index) {
    auto [it, fresh] = buckets.try_emplace(std::move(key));
    ++it->second.count;
    if (fresh || index < it->second.first_index) it->second.first_index = index;
  }

  void merge(const ClassAccumulator& other) {
    for (const auto& [key, e] : other.buckets) {
      auto [it, fresh] = buckets.try_emplace(key);
      it->second.count += e.count;
      if (fresh || e.first_index < it->second.first_index)
        it->second.first_index = e.first_index;
    }
  }
};

}  // namespace

std::vector<EmbeddingClass> classify(const std::vector<std::pair<RotationMap, Decoration>>& items,
                                     bool allow_reflection, int threads) {
  if (threads < 1) fail(errc::domain, "thread count must be positive");
  std::size_t count = items.size();
  int workers = std::min<std::size_t>(threads, std::max<std::size_t>(count, 1));
  std::vector<ClassAccumulator> parts(workers);
  auto run = [&](int w) {
    std::size_t lo = count * w / workers, hi = count * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i)
      parts[w].add(canonical_form(items[i].first, items[i].second, allow_reflection).bytes, i);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  ClassAccumulator all;
  for (const auto& p : parts) all.merge(p);
  std::vector<EmbeddingClass> classes;
  for (auto& [key, e] : all.buckets) {
    EmbeddingClass c;
    c.representative = items[e.first_index].first;
    c.decoration = items[e.first_index].second;
    c.canonical = {key};
    c.face_signature = face_signature(c.representative);
    c.labelled_count = e.count;
    c.first_index = e.first_index;
    classes.push_back(std::move(c));
  }
  return classes;  // std::map iteration is already canonical-byte order
}

std::vector<EmbeddingClass> classify(const std::vector<RotationMap>& maps, bool allow_reflection,
                                     int threads) {
  std::vector<std::pair<RotationMap, Decoration>> items;
  items.reserve(maps.size());
  for (const auto& m : maps) items.emplace_back(m, Decoration{});
  return classify(items, allow_reflection, threads);
}

std::vector<std::vector<int>> decoration_orbits(const RotationMap& m,
                                                const std::vector<Decoration>& decorations,
                                                bool allow_reflection) {
  // Normalized identity of a decoration, independent of walk direction.
  auto key_of = [](const Decoration& d) {
    std::vector<int> key{static_cast<int>(d.kind)};
    switch (d.kind) {
      case Decoration::Kind::none:
        break;
      case Decoration::Kind::directed_edge:
        key.push_back(d.darts[0]);
        break;
      case Decoration::Kind::edge:
        key.push_back(d.darts[0]);
        break;
      case Decoration::Kind::cycle: {
        auto s = decoration_edge_marks(d);
        key.insert(key.end(), s.begin(), s.end());
        break;
      }
    }
    return key;
  };
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < decorations.size(); ++i) {
    validate_decoration(m, decorations[i]);
    if (!index.emplace(key_of(decorations[i]), static_cast<int>(i)).second)
      fail(errc::domain, "duplicate decoration in orbit input");
  }
  std::vector<int> parent(decorations.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int x, int y) { parent[find(x)] = find(y); };

  for (const auto& sym : symmetries(m, allow_reflection)) {
    for (std::size_t i = 0; i < decorations.size(); ++i) {
      const Decoration& d = decorations[i];
      std::vector<int> image_key{static_cast<int>(d.kind)};
      switch (d.kind) {
        case Decoration::Kind::none:
          break;
        case Decoration::Kind::directed_edge:
          image_key.push_back(sym.dart_map[d.darts[0]]);
          break;
        case Decoration::Kind::edge: {
          int img = sym.dart_map[d.darts[0]];
          image_key.push_back(std::min(img, img ^ 1));
          break;
        }
        case Decoration::Kind::cycle: {
          std::set<int> s;
          for (int x : d.darts) {
            int y = sym.dart_map[x];
            s.insert(std::min(y, y ^ 1));
          }
          image_key.insert(image_key.end(), s.begin(), s.end());
          break;
        }
      }
      auto it = index.find(image_key);
      if (it == index.end())
        fail(errc::domain, "decoration family is not closed under the map's symmetries");
      unite(static_cast<int>(i), it->second);
    }
  }
  std::map<int, std::vector<int>> groups;
  for (std::size_t i = 0; i < decorations.size(); ++i)
    groups[find(static_cast<int>(i))].push_back(static_cast<int>(i));
  std::vector<std::vector<int>> orbits;
  for (auto& [root, members] : groups) orbits.push_back(std::move(members));
  std::sort(orbits.begin(), orbits.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return orbits;
}

namespace {

// Iterated neighborhood refinement of face colors, starting from lengths.
std::vector<int> refine_face_colors(const std::vector<int>& lengths,
                                    const std::vector<std::vector<int>>& mult) {
  int f = static_cast<int>(lengths.size());
  std::vector<int> color(f);
  {
    std::map<int, int> ranks;
    for (int x : lengths) ranks[x] = 0;
    int r = 0;
    for (auto& [k, v] : ranks) v = r++;
    for (int i = 0; i < f; ++i) color[i] = ranks[lengths[i]];
  }
  for (int round = 0; round < f; ++round) {
    std::map<std::vector<int>, int> ranks;
    std::vector<std::vector<int>> sigs(f);
    for (int i = 0; i < f; ++i) {
      std::vector<int> sig{color[i]};
      std::vector<std::pair<int, int>> nb;
      for (int j = 0; j < f; ++j)
        if (mult[i][j] > 0) nb.emplace_back(color[j], mult[i][j]);
      std::sort(nb.begin(), nb.end());
      for (auto [c, k] : nb) {
        sig.push_back(c);
        sig.push_back(k);
      }
      sigs[i] = std::move(sig);
      ranks[sigs[i]] = 0;
    }
    int r = 0;
    for (auto& [k, v] : ranks) v = r++;
    std::vector<int> next(f);
    for (int i = 0; i < f; ++i) next[i] = ranks[sigs[i]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

}  // namespace

RefinedInvariants refined_invariants(const RotationMap& m) {
  auto walks = face_orbits(m);
  int f = static_cast<int>(walks.size());
  std::vector<int> face_id(m.dart_count(), -1);
  std::vector<int> lengths(f);
  for (int i = 0; i < f; ++i) {
    lengths[i] = walks[i].length();
    for (int d : walks[i].darts) face_id[d] = i;
  }
  std::vector<std::vector<int>> mult(f, std::vector<int>(f, 0));
  for (int k = 0; k < m.graph.edge_count(); ++k) {
    int a = face_id[2 * k], b = face_id[2 * k + 1];
    ++mult[a][b];
    if (a != b) ++mult[b][a];
  }

  RefinedInvariants out;
  out.face_signature = lengths;
  std::sort(out.face_signature.begin(), out.face_signature.end());

  // Canonical flattening: order faces by refined color, then minimize over
  // permutations within color classes (classes are tiny for these maps).
  auto color = refine_face_colors(lengths, mult);
  std::vector<int> order(f);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::make_pair(color[a], a) < std::make_pair(color[b], b);
  });
  std::uint64_t arrangements = 1;
  {
    std::size_t i = 0;
    while (i < order.size()) {
      std::size_t j = i;
      while (j < order.size() && color[order[j]] == color[order[i]]) ++j;
      for (std::uint64_t k = 2; k <= j - i; ++k) arrangements *= k;
      i = j;
    }
  }
  if (arrangements > 40320) fail(errc::resource, "face adjacency canonicalization too large");

  auto flatten = [&](const std::vector<int>& perm) {
    std::vector<int> v;
    v.reserve(f + f * (f + 1) / 2);
    for (int i = 0; i < f; ++i) v.push_back(lengths[perm[i]]);
    for (int i = 0; i < f; ++i)
      for (int j = i; j < f; ++j) v.push_back(mult[perm[i]][perm[j]]);
    return v;
  };
  std::vector<int> best = flatten(order);
  // Enumerate permutations block-by-block via next_permutation on the suffix
  // structure: simplest is to permute the whole order but skip arrangements
  // that mix colors.
  std::vector<int> perm = order;
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  {
    std::size_t i = 0;
    while (i < perm.size()) {
      std::size_t j = i;
      while (j < perm.size() && color[perm[j]] == color[perm[i]]) ++j;
      blocks.emplace_back(i, j);
      i = j;
    }
  }
  std::function<void(std::size_t)> walk_blocks = [&](std::size_t b) {
    if (b == blocks.size()) {
      auto v = flatten(perm);
      if (v < best) best = std::move(v);
      return;
    }
    auto [lo, hi] = blocks[b];
    std::sort(perm.begin() + lo, perm.begin() + hi);
    do {
      walk_blocks(b + 1);
    } while (std::next_permutation(perm.begin() + lo, perm.begin() + hi));
  };
  walk_blocks(0);
  out.adjacency_code = std::move(best);
  return out;
}

}  // namespace toratlas
