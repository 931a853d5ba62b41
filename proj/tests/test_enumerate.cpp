#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "json.hpp"
#include "oracles.hpp"
#include "toratlas/catalog.hpp"
#include "toratlas/enumerate.hpp"

using namespace toratlas;

namespace {

errc kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a library error");
}

std::uint64_t factorial(int k) {
  std::uint64_t r = 1;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

std::map<int, std::uint64_t> histogram_of(const Graph& g,
                                          const EnumerationOptions& opts = {}) {
  std::map<int, std::uint64_t> h;
  enumerate_rotation_systems(
      g,
      [&](std::uint64_t, const RotationMap& m) {
        ++h[g.is_connected() ? genus_of_map(m) : genus_sum(m)];
      },
      opts);
  return h;
}

std::multiset<std::uint64_t> labelled_counts(const std::vector<EmbeddingClass>& classes) {
  std::multiset<std::uint64_t> s;
  for (const auto& c : classes) s.insert(c.labelled_count);
  return s;
}

}  // namespace

TEST_CASE("rotation system counts follow the degree formula") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const Graph g = builtin(name);
    std::uint64_t expect = 1;
    for (int v = 0; v < g.n; ++v) expect *= factorial(g.degree(v) - 1);
    CHECK(rotation_system_count(g) == expect);
  }
  CHECK(rotation_system_count(builtin("K33")) == 64);
  CHECK(rotation_system_count(builtin("K5")) == 7776);
  CHECK(rotation_system_count(builtin("E42")) == 4096);
  CHECK(rotation_system_count(builtin("F11")) == 4096);
  CHECK(rotation_system_count(make_graph(2, {{0, 1}})) == 1);
}

TEST_CASE("the stream is exhaustive, duplicate-free, and starts ascending") {
  const Graph g = builtin("K33");
  std::vector<RotationMap> maps;
  std::vector<std::uint64_t> indices;
  enumerate_rotation_systems(g, [&](std::uint64_t i, const RotationMap& m) {
    indices.push_back(i);
    maps.push_back(m);
  });
  REQUIRE(maps.size() == 64);
  for (std::uint64_t i = 0; i < 64; ++i) CHECK(indices[i] == i);

  std::set<std::vector<int>> sigmas;
  for (const auto& m : maps) sigmas.insert(m.sigma);
  CHECK(sigmas.size() == 64);

  auto first = rotations_of(maps[0]);
  for (int v = 0; v < g.n; ++v) CHECK(first[v] == g.neighbors(v));
}

TEST_CASE("random access agrees with the stream") {
  const Graph g = builtin("K5");
  std::map<std::uint64_t, RotationMap> sampled;
  enumerate_rotation_systems(g, [&](std::uint64_t i, const RotationMap& m) {
    if (i == 0 || i == 1 || i == 500 || i == 3888 || i == 7775) sampled.emplace(i, m);
  });
  REQUIRE(sampled.size() == 5);
  for (const auto& [i, m] : sampled) CHECK(rotation_system_at(g, i) == m);
  CHECK(kind_of([&] { rotation_system_at(g, 7776); }) == errc::domain);
}

TEST_CASE("budgets stop oversized spaces up front") {
  const Graph g = builtin("K5");
  CHECK(kind_of([&] { rotation_system_count(g, 100); }) == errc::resource);
  EnumerationOptions small;
  small.budget = 100;
  CHECK(kind_of([&] {
          enumerate_rotation_systems(g, [](std::uint64_t, const RotationMap&) {}, small);
        }) == errc::resource);
  CHECK(kind_of([&] { toroidal_classes(g, small); }) == errc::resource);
  CHECK(kind_of([&] { genus(g, 100); }) == errc::resource);
  CHECK_NOTHROW(rotation_system_count(builtin("K33"), 64));
}

TEST_CASE("genus histograms: oracle on K33, recorded values beyond") {
  const Graph k33 = builtin("K33");
  std::map<int, std::uint64_t> oracle_hist;
  enumerate_rotation_systems(k33, [&](std::uint64_t, const RotationMap& m) {
    ++oracle_hist[oracle::genus_of({k33.n, rotations_of(m)}, k33.edges)];
  });
  CHECK(histogram_of(k33) == oracle_hist);
  CHECK(histogram_of(k33) == std::map<int, std::uint64_t>{{1, 40}, {2, 24}});
  CHECK(histogram_of(builtin("K5")) ==
        std::map<int, std::uint64_t>{{1, 462}, {2, 4974}, {3, 2340}});
}

TEST_CASE("toroidal class counts and labelled sizes across the catalog") {
  struct Row {
    const char* name;
    std::multiset<std::uint64_t> labelled;
  };
  const Row rows[] = {
      {"K33", {36, 4}},
      {"K5", {120, 120, 60, 120, 12, 30}},
      {"F11", {32, 32}},
      {"F12", {4, 4, 8, 8}},
      {"F13", {18, 6}},
      {"F14", {16, 8}},
      {"G1", {24, 24}},
  };
  for (const auto& row : rows) {
    CAPTURE(row.name);
    auto classes = toroidal_classes(builtin(row.name));
    CHECK(labelled_counts(classes) == row.labelled);
    std::set<CanonicalForm> forms;
    for (const auto& c : classes) {
      forms.insert(c.canonical);
      CHECK(genus_of_map(c.representative) == 1);
      CHECK(face_signature(c.representative) == c.face_signature);
    }
    CHECK(forms.size() == classes.size());
  }
}

TEST_CASE("pinning the first rotation shrinks the space, not the classes") {
  const Graph g = builtin("K33");
  EnumerationOptions pin;
  pin.fix_first_rotation = true;
  std::uint64_t seen = 0;
  enumerate_rotation_systems(g, [&](std::uint64_t, const RotationMap&) { ++seen; }, pin);
  CHECK(seen == 32);  // 64 / (3-1)!
  CHECK(histogram_of(g, pin) == std::map<int, std::uint64_t>{{1, 20}, {2, 12}});

  auto full = toroidal_classes(g);
  auto pinned = toroidal_classes(g, pin);
  REQUIRE(full.size() == 2);
  REQUIRE(pinned.size() == 2);
  for (std::size_t i = 0; i < full.size(); ++i)
    CHECK(full[i].canonical == pinned[i].canonical);
  CHECK(labelled_counts(pinned) == std::multiset<std::uint64_t>{18, 2});
}

TEST_CASE("a disconnected graph classifies by component multisets") {
  const Graph e42 = builtin("E42");
  CHECK(toroidal_classes(e42).empty());
  auto classes = classes_at_genus(e42, 2);
  REQUIRE(classes.size() == 3);
  CHECK(labelled_counts(classes) == std::multiset<std::uint64_t>{1296, 288, 16});
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    total += c.labelled_count;
    CHECK(genus_sum(c.representative) == 2);
    // the face multiset of the pair is a union of the two component multisets,
    // each one hexagonal or mixed
    auto sig = c.face_signature;
    std::multiset<int> faces(sig.begin(), sig.end());
    std::multiset<int> hexagonal{6, 6, 6};
    std::multiset<int> mixed{4, 4, 10};
    bool both_hex = faces == std::multiset<int>{6, 6, 6, 6, 6, 6};
    std::multiset<int> mix_hex = mixed;
    mix_hex.insert(hexagonal.begin(), hexagonal.end());
    std::multiset<int> mix_mix = mixed;
    mix_mix.insert(mixed.begin(), mixed.end());
    CHECK((both_hex || faces == mix_hex || faces == mix_mix));
  }
  CHECK(total == 1600);  // 40 * 40 toroidal pairs
}

TEST_CASE("genus across the catalog, additive over components") {
  CHECK(genus(builtin("K33")) == 1);
  CHECK(genus(builtin("K5")) == 1);
  CHECK(genus(builtin("E42")) == 2);
  CHECK(genus(builtin("F11")) == 1);
  CHECK(genus(builtin("G1")) == 1);
  CHECK(component_genera(builtin("E42")) == std::vector<int>{1, 1});
  CHECK(component_genera(builtin("K33")) == std::vector<int>{1});
  CHECK(genus(make_graph(4, {{0, 1}, {1, 2}})) == 0);

  CHECK(embeds_in_torus(builtin("K33")));
  CHECK(embeds_in_torus(builtin("K5")));
  CHECK_FALSE(embeds_in_torus(builtin("E42")));
}

TEST_CASE("the genus witness attains the minimum on its own graph") {
  for (const char* name : {"K33", "K5", "E42", "G1"}) {
    CAPTURE(name);
    const Graph g = builtin(name);
    RotationMap w = genus_witness(g);
    CHECK(w.graph.n == g.n);
    CHECK(w.graph.edges == g.edges);
    CHECK(genus_sum(w) == genus(g));
  }
}

TEST_CASE("decorated classification of the K33 torus embeddings") {
  const Graph g = builtin("K33");
  auto directed = decorated_classes(g, DecorationKind::directed_edge);
  auto edges = decorated_classes(g, DecorationKind::edge);
  auto cycles = decorated_classes(g, DecorationKind::cycle4);
  CHECK(directed.size() == 6);
  CHECK(edges.size() == 5);
  CHECK(cycles.size() == 5);

  auto total = [](const std::vector<EmbeddingClass>& cs) {
    std::uint64_t t = 0;
    for (const auto& c : cs) t += c.labelled_count;
    return t;
  };
  CHECK(total(directed) == 40 * 18);
  CHECK(total(edges) == 40 * 9);
  CHECK(total(cycles) == 40 * 9);
  for (const auto& c : directed) CHECK(c.decoration.kind == Decoration::Kind::directed_edge);
  for (const auto& c : cycles) CHECK(c.decoration.darts.size() == 4);

  CHECK(decorated_classes(g, DecorationKind::none).size() == 2);
}

TEST_CASE("decoration kinds parse and print") {
  CHECK(parse_decoration_kind("none") == DecorationKind::none);
  CHECK(parse_decoration_kind("directed-edge") == DecorationKind::directed_edge);
  CHECK(parse_decoration_kind("edge") == DecorationKind::edge);
  CHECK(parse_decoration_kind("cycle4") == DecorationKind::cycle4);
  CHECK(decoration_kind_name(DecorationKind::cycle4) == std::string("cycle4"));
  CHECK(kind_of([] { parse_decoration_kind("squiggle"); }) == errc::parse);
}

TEST_CASE("reports carry the full result in both formats") {
  const Graph g = builtin("K33");
  EnumerationReport r = enumerate_report(g, "K33", 1, DecorationKind::none);
  CHECK(r.total == 64);
  CHECK(r.genus_histogram == std::map<int, std::uint64_t>{{1, 40}, {2, 24}});
  CHECK(r.classes.size() == 2);

  auto j = nlohmann::json::parse(report_to_json(r));
  CHECK(j["graph"] == "K33");
  CHECK(j["total"] == 64);
  CHECK(j["genus_histogram"]["1"] == 40);
  CHECK(j["genus_histogram"]["2"] == 24);
  REQUIRE(j["classes"].size() == 2);
  std::uint64_t hist_total = 0;
  for (const auto& [key, value] : j["genus_histogram"].items())
    hist_total += value.get<std::uint64_t>();
  CHECK(hist_total == j["total"].get<std::uint64_t>());
  for (const auto& jc : j["classes"]) {
    CHECK(jc.contains("signature"));
    CHECK(jc.contains("labelled_count"));
    CHECK(jc.contains("canonical"));
    CHECK(jc.contains("rotations"));
    CHECK(jc["rotations"].is_object());
    CHECK(jc["rotations"].size() == 6);
  }

  std::string text = report_to_text(r);
  CHECK(text.find("graph: K33") != std::string::npos);
  CHECK(text.find("rotation systems: 64") != std::string::npos);
  CHECK(text.find("1: 40") != std::string::npos);
  CHECK(text.find("classes at genus 1 (decoration: none): 2") != std::string::npos);

  CHECK(kind_of([&] { enumerate_report(g, "K33", 2, DecorationKind::edge); }) ==
        errc::unsupported_input);
}

TEST_CASE("enumeration is thread-count independent end to end") {
  const Graph g = builtin("F12");
  EnumerationOptions four;
  four.threads = 4;
  auto seq = toroidal_classes(g);
  auto par = toroidal_classes(g, four);
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].canonical == par[i].canonical);
    CHECK(seq[i].labelled_count == par[i].labelled_count);
    CHECK(seq[i].first_index == par[i].first_index);
    CHECK(seq[i].representative == par[i].representative);
  }
  EnumerationReport r1 = enumerate_report(g, "F12", 1, DecorationKind::none);
  EnumerationReport r4 = enumerate_report(g, "F12", 1, DecorationKind::none, four);
  CHECK(report_to_json(r1) == report_to_json(r4));
}
