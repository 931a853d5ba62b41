#include "toratlas/enumerate.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <thread>

#include "json.hpp"

namespace toratlas {

namespace {

// Per-vertex rotation choices: the sorted neighbor list with its first entry
// pinned and the remainder permuted lexicographically. Pinning one entry per
// vertex quotients out the cyclic relabeling of each rotation.
std::vector<std::vector<std::vector<int>>> rotation_choices(const Graph& g,
                                                            bool fix_first_rotation) {
  std::vector<std::vector<std::vector<int>>> choices(g.n);
  int fixed_vertex = -1;
  if (fix_first_rotation) {
    int best = -1;
    for (int v = 0; v < g.n; ++v)
      if (g.degree(v) > best) {
        best = g.degree(v);
        fixed_vertex = v;
      }
  }
  for (int v = 0; v < g.n; ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() <= 1 || v == fixed_vertex) {
      choices[v] = {nb};
      continue;
    }
    std::vector<int> rest(nb.begin() + 1, nb.end());
    do {
      std::vector<int> rot{nb.front()};
      rot.insert(rot.end(), rest.begin(), rest.end());
      choices[v].push_back(std::move(rot));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return choices;
}

std::uint64_t space_size(const std::vector<std::vector<std::vector<int>>>& choices,
                         std::uint64_t budget) {
  std::uint64_t total = 1;
  for (const auto& c : choices) {
    total *= static_cast<std::uint64_t>(c.size());
    if (total > budget)
      fail(errc::resource, "rotation system space exceeds the enumeration budget");
  }
  return total;
}

std::vector<std::size_t> digits_at(const std::vector<std::vector<std::vector<int>>>& choices,
                                   std::uint64_t index) {
  std::vector<std::size_t> d(choices.size(), 0);
  for (std::size_t v = choices.size(); v-- > 0;) {
    auto radix = choices[v].size();
    d[v] = index % radix;
    index /= radix;
  }
  return d;
}

RotationMap map_at(const Graph& g, const std::vector<std::vector<std::vector<int>>>& choices,
                   const std::vector<std::size_t>& digits) {
  std::vector<std::vector<int>> rots(g.n);
  for (int v = 0; v < g.n; ++v) rots[v] = choices[v][digits[v]];
  return from_rotations(g, rots);
}

// Walks indices [lo, hi); fn returning true stops the walk early.
void odometer_run(const Graph& g, const std::vector<std::vector<std::vector<int>>>& choices,
                  std::uint64_t lo, std::uint64_t hi,
                  const std::function<bool(std::uint64_t, const RotationMap&)>& fn) {
  if (lo >= hi) return;
  auto digits = digits_at(choices, lo);
  for (std::uint64_t i = lo; i < hi; ++i) {
    if (fn(i, map_at(g, choices, digits))) return;
    for (std::size_t v = choices.size(); v-- > 0;) {
      if (++digits[v] < choices[v].size()) break;
      digits[v] = 0;
    }
  }
}

RotationMap extract_component(const RotationMap& m, const std::vector<int>& comp, int which) {
  std::vector<int> old_to_new(m.graph.n, -1);
  std::vector<int> verts;
  for (int v = 0; v < m.graph.n; ++v)
    if (comp[v] == which) {
      old_to_new[v] = static_cast<int>(verts.size());
      verts.push_back(v);
    }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : m.graph.edges)
    if (comp[u] == which) edges.emplace_back(old_to_new[u], old_to_new[v]);
  Graph sub = make_graph(static_cast<int>(verts.size()), edges);
  if (!m.graph.labels.empty())
    for (std::size_t i = 0; i < verts.size(); ++i) sub.labels[i] = m.graph.labels[verts[i]];
  auto rots = rotations_of(m);
  std::vector<std::vector<int>> sub_rots(sub.n);
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (int w : rots[verts[i]]) sub_rots[i].push_back(old_to_new[w]);
  return from_rotations(sub, sub_rots);
}

Graph component_subgraph(const Graph& g, const std::vector<int>& comp, int which) {
  std::vector<int> old_to_new(g.n, -1);
  int k = 0;
  for (int v = 0; v < g.n; ++v)
    if (comp[v] == which) old_to_new[v] = k++;
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges)
    if (comp[u] == which) edges.emplace_back(old_to_new[u], old_to_new[v]);
  return make_graph(k, edges);
}

// Multiset of per-component orientation-preserving forms, with and without a
// global mirror; the smaller length-prefixed concatenation is the class key.
std::vector<std::uint8_t> disconnected_key(const RotationMap& m, const std::vector<int>& comp,
                                           int components) {
  auto pack = [](std::vector<std::vector<std::uint8_t>> forms) {
    std::sort(forms.begin(), forms.end());
    std::vector<std::uint8_t> out;
    for (const auto& f : forms) {
      auto len = static_cast<std::uint32_t>(f.size());
      for (int s = 24; s >= 0; s -= 8) out.push_back(static_cast<std::uint8_t>(len >> s));
      out.insert(out.end(), f.begin(), f.end());
    }
    return out;
  };
  std::vector<std::vector<std::uint8_t>> plain, mirrored;
  for (int c = 0; c < components; ++c) {
    RotationMap mc = extract_component(m, comp, c);
    plain.push_back(canonical_form(mc, {}, false).bytes);
    mirrored.push_back(canonical_form(mirror(mc), {}, false).bytes);
  }
  return std::min(pack(std::move(plain)), pack(std::move(mirrored)));
}

int component_genus_lower_bound(const Graph& g) {
  if (g.edge_count() == 0) return 0;
  int gir;
  try {
    gir = girth(g);
  } catch (const error& e) {
    if (e.kind() == errc::no_cycle) return 0;
    throw;
  }
  // Euler bound: every face needs at least girth edges, so F <= 2E/girth.
  long long num = static_cast<long long>(gir) * (2 - g.n + g.edge_count()) -
                  2LL * g.edge_count();
  long long den = 2LL * gir;
  if (num <= 0) return 0;
  return static_cast<int>((num + den - 1) / den);
}

nlohmann::ordered_json rotations_json(const RotationMap& m) {
  auto rots = rotations_of(m);
  auto j = nlohmann::ordered_json::object();
  for (int v = 0; v < m.graph.n; ++v) j[std::to_string(v)] = rots[v];
  return j;
}

}  // namespace

std::uint64_t rotation_system_count(const Graph& g, std::uint64_t budget) {
  return space_size(rotation_choices(g, false), budget);
}

void enumerate_rotation_systems(const Graph& g,
                                const std::function<void(std::uint64_t, const RotationMap&)>& fn,
                                const EnumerationOptions& opts) {
  if (opts.threads < 1) fail(errc::domain, "thread count must be positive");
  auto choices = rotation_choices(g, opts.fix_first_rotation);
  std::uint64_t total = space_size(choices, opts.budget);
  auto visit = [&fn](std::uint64_t i, const RotationMap& m) {
    fn(i, m);
    return false;
  };
  if (opts.threads == 1 || total < 2) {
    odometer_run(g, choices, 0, total, visit);
    return;
  }
  // With several workers the callback runs concurrently; callers that need
  // ordered results shard by index instead.
  int workers = static_cast<int>(std::min<std::uint64_t>(opts.threads, total));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
      odometer_run(g, choices, lo, hi, visit);
    });
  for (auto& t : pool) t.join();
}

RotationMap rotation_system_at(const Graph& g, std::uint64_t index, bool fix_first_rotation) {
  auto choices = rotation_choices(g, fix_first_rotation);
  std::uint64_t total = 1;
  for (const auto& c : choices) total *= static_cast<std::uint64_t>(c.size());
  if (index >= total) fail(errc::domain, "rotation system index out of range");
  return map_at(g, choices, digits_at(choices, index));
}

std::vector<EmbeddingClass> classes_at_genus(const Graph& g, int target_genus,
                                             const EnumerationOptions& opts) {
  if (target_genus < 0) fail(errc::domain, "genus must be non-negative");
  if (g.is_connected()) {
    std::vector<RotationMap> matching;
    enumerate_rotation_systems(
        g,
        [&](std::uint64_t, const RotationMap& m) {
          if (genus_of_map(m) == target_genus) matching.push_back(m);
        },
        {opts.budget, 1, opts.fix_first_rotation});
    return classify(matching, true, opts.threads);
  }

  auto comp = g.component_ids();
  int components = g.component_count();
  struct Bucket {
    RotationMap representative;
    std::uint64_t count = 0;
    std::uint64_t first_index = 0;
  };
  std::map<std::vector<std::uint8_t>, Bucket> buckets;
  enumerate_rotation_systems(
      g,
      [&](std::uint64_t i, const RotationMap& m) {
        if (genus_sum(m) != target_genus) return;
        auto key = disconnected_key(m, comp, components);
        auto [it, fresh] = buckets.try_emplace(std::move(key));
        if (fresh || i < it->second.first_index) {
          if (fresh) it->second.representative = m;
          it->second.first_index = i;
        }
        ++it->second.count;
      },
      {opts.budget, 1, opts.fix_first_rotation});
  std::vector<EmbeddingClass> classes;
  for (auto& [key, b] : buckets) {
    EmbeddingClass c;
    c.representative = b.representative;
    c.canonical = {key};
    c.face_signature = face_signature(b.representative);
    c.labelled_count = b.count;
    c.first_index = b.first_index;
    classes.push_back(std::move(c));
  }
  return classes;
}

std::vector<EmbeddingClass> toroidal_classes(const Graph& g, const EnumerationOptions& opts) {
  return classes_at_genus(g, 1, opts);
}

namespace {

// Minimum genus over a connected graph's systems plus one attaining map;
// stops as soon as the Euler lower bound is reached.
std::pair<int, RotationMap> component_minimum(const Graph& sub, std::uint64_t budget) {
  auto choices = rotation_choices(sub, false);
  std::uint64_t space = space_size(choices, budget);
  int lower = component_genus_lower_bound(sub);
  int best = -1;
  RotationMap witness;
  odometer_run(sub, choices, 0, space, [&](std::uint64_t, const RotationMap& m) {
    int gm = genus_of_map(m);
    if (best < 0 || gm < best) {
      best = gm;
      witness = m;
    }
    return best == lower;
  });
  return {best, witness};
}

}  // namespace

std::vector<int> component_genera(const Graph& g, std::uint64_t budget) {
  auto comp = g.component_ids();
  std::vector<int> genera;
  for (int c = 0; c < g.component_count(); ++c)
    genera.push_back(component_minimum(component_subgraph(g, comp, c), budget).first);
  return genera;
}

int genus(const Graph& g, std::uint64_t budget) {
  int total = 0;
  for (int k : component_genera(g, budget)) total += k;
  return total;
}

RotationMap genus_witness(const Graph& g, std::uint64_t budget) {
  auto comp = g.component_ids();
  std::vector<std::vector<int>> rots(g.n);
  for (int c = 0; c < g.component_count(); ++c) {
    std::vector<int> new_to_old;
    for (int v = 0; v < g.n; ++v)
      if (comp[v] == c) new_to_old.push_back(v);
    auto [k, witness] = component_minimum(component_subgraph(g, comp, c), budget);
    auto sub_rots = rotations_of(witness);
    for (std::size_t i = 0; i < new_to_old.size(); ++i)
      for (int w : sub_rots[i]) rots[new_to_old[i]].push_back(new_to_old[w]);
  }
  return from_rotations(g, rots);
}

bool embeds_in_torus(const Graph& g, std::uint64_t budget) { return genus(g, budget) <= 1; }

const char* decoration_kind_name(DecorationKind k) {
  switch (k) {
    case DecorationKind::none:
      return "none";
    case DecorationKind::directed_edge:
      return "directed-edge";
    case DecorationKind::edge:
      return "edge";
    case DecorationKind::cycle4:
      return "cycle4";
  }
  return "none";
}

DecorationKind parse_decoration_kind(const std::string& s) {
  if (s == "none") return DecorationKind::none;
  if (s == "directed-edge") return DecorationKind::directed_edge;
  if (s == "edge") return DecorationKind::edge;
  if (s == "cycle4") return DecorationKind::cycle4;
  fail(errc::parse, "unknown decoration kind: " + s);
}

std::vector<EmbeddingClass> decorated_classes(const Graph& g, DecorationKind kind,
                                              const EnumerationOptions& opts) {
  if (kind == DecorationKind::none) return toroidal_classes(g, opts);
  if (!g.is_connected()) fail(errc::domain, "decorated classes need a connected graph");
  auto cycles = kind == DecorationKind::cycle4 ? four_cycles(g) : std::vector<std::array<int, 4>>{};
  std::vector<std::pair<RotationMap, Decoration>> items;
  enumerate_rotation_systems(
      g,
      [&](std::uint64_t, const RotationMap& m) {
        if (genus_of_map(m) != 1) return;
        switch (kind) {
          case DecorationKind::directed_edge:
            for (int d = 0; d < m.dart_count(); ++d)
              items.emplace_back(m, directed_edge_decoration(m, d));
            break;
          case DecorationKind::edge:
            for (int k = 0; k < m.graph.edge_count(); ++k)
              items.emplace_back(m, edge_decoration(m, 2 * k));
            break;
          case DecorationKind::cycle4:
            for (const auto& c : cycles)
              items.emplace_back(m, cycle_decoration(m, {c.begin(), c.end()}));
            break;
          case DecorationKind::none:
            break;
        }
      },
      {opts.budget, 1, opts.fix_first_rotation});
  return classify(items, true, opts.threads);
}

EnumerationReport enumerate_report(const Graph& g, const std::string& name, int target_genus,
                                   DecorationKind kind, const EnumerationOptions& opts) {
  auto t0 = std::chrono::steady_clock::now();
  EnumerationReport r;
  r.graph_name = name;
  r.target_genus = target_genus;
  r.decoration = kind;
  bool connected = g.is_connected();
  enumerate_rotation_systems(
      g,
      [&](std::uint64_t, const RotationMap& m) {
        ++r.total;
        ++r.genus_histogram[connected ? genus_of_map(m) : genus_sum(m)];
      },
      {opts.budget, 1, false});
  if (kind == DecorationKind::none) {
    r.classes = classes_at_genus(g, target_genus, opts);
  } else {
    if (target_genus != 1)
      fail(errc::unsupported_input, "decorated reports cover genus 1 only");
    r.classes = decorated_classes(g, kind, opts);
  }
  r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                  .count();
  return r;
}

std::string report_to_json(const EnumerationReport& r) {
  nlohmann::ordered_json j;
  j["graph"] = r.graph_name;
  j["total"] = r.total;
  auto& hist = j["genus_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [genus_value, count] : r.genus_histogram)
    hist[std::to_string(genus_value)] = count;
  auto& classes = j["classes"] = nlohmann::ordered_json::array();
  for (const auto& c : r.classes) {
    nlohmann::ordered_json jc;
    jc["signature"] = c.face_signature;
    jc["labelled_count"] = c.labelled_count;
    jc["canonical"] = c.canonical.hex();
    jc["rotations"] = rotations_json(c.representative);
    classes.push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

std::string report_to_text(const EnumerationReport& r) {
  std::string out;
  out += "graph: " + r.graph_name + "\n";
  out += "rotation systems: " + std::to_string(r.total) + "\n";
  out += "genus histogram:\n";
  for (const auto& [genus_value, count] : r.genus_histogram)
    out += "  " + std::to_string(genus_value) + ": " + std::to_string(count) + "\n";
  out += "classes at genus " + std::to_string(r.target_genus) +
         " (decoration: " + decoration_kind_name(r.decoration) +
         "): " + std::to_string(r.classes.size()) + "\n";
  int idx = 0;
  for (const auto& c : r.classes) {
    out += "  [" + std::to_string(++idx) + "] faces";
    for (int f : c.face_signature) out += " " + std::to_string(f);
    out += "  labelled " + std::to_string(c.labelled_count);
    out += "  canonical " + c.canonical.hex().substr(0, 16) + "...\n";
    auto rots = rotations_of(c.representative);
    for (int v = 0; v < c.representative.graph.n; ++v) {
      out += "      " + std::to_string(v) + ":";
      for (int w : rots[v]) out += " " + std::to_string(w);
      out += "\n";
    }
  }
  return out;
}

}  // namespace toratlas
