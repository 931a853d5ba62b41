#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>
#include <set>

#include "oracles.hpp"
#include "toratlas/catalog.hpp"
#include "toratlas/graph.hpp"

using namespace toratlas;

namespace {

Graph cycle(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return make_graph(n, edges);
}

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return make_graph(n, edges);
}

errc kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const error& e) {
    return e.kind();
  }
  throw std::logic_error("expected a library error");
}

}  // namespace

TEST_CASE("edge lists are normalized and validated") {
  Graph g = make_graph(4, {{3, 1}, {0, 2}, {1, 0}});
  CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}});
  CHECK(g.edge_index(2, 0) == 1);
  CHECK(g.edge_index(2, 3) == -1);
  CHECK(g.has_edge(3, 1));
  CHECK(g.degree(0) == 2);
  CHECK(g.neighbors(1) == std::vector<int>{0, 3});

  CHECK(kind_of([] { make_graph(3, {{0, 0}}); }) == errc::domain);
  CHECK(kind_of([] { make_graph(3, {{0, 1}, {1, 0}}); }) == errc::domain);
  CHECK(kind_of([] { make_graph(3, {{0, 5}}); }) == errc::domain);
  CHECK(kind_of([] { make_graph(-1, {}); }) == errc::domain);
}

TEST_CASE("components are tracked") {
  const Graph e42 = builtin("E42");
  CHECK_FALSE(e42.is_connected());
  CHECK(e42.component_count() == 2);
  auto comp = e42.component_ids();
  CHECK(comp[0] == 0);
  CHECK(comp[5] == 0);
  CHECK(comp[6] == 1);
  CHECK(comp[11] == 1);
  CHECK(builtin("K33").is_connected());
  CHECK(make_graph(0, {}).is_connected());
}

TEST_CASE("text graph format round-trips") {
  const Graph g = builtin("K33");
  Graph back = parse_graph_text(write_graph_text(g));
  CHECK(back.n == g.n);
  CHECK(back.edges == g.edges);
}

TEST_CASE("graph parse errors carry line numbers") {
  try {
    parse_graph_text("3 2\n0 1\nbogus\n");
    FAIL("expected a parse error");
  } catch (const error& e) {
    CHECK(e.kind() == errc::parse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK(kind_of([] { parse_graph_text(""); }) == errc::parse);
  CHECK(kind_of([] { parse_graph_text("2 1\n"); }) == errc::parse);
  Graph commented = parse_graph_text("# header\n3 1\n# note\n0 2\n");
  CHECK(commented.edges == std::vector<std::pair<int, int>>{{0, 2}});
}

TEST_CASE("relabeling preserves adjacency") {
  const Graph g = builtin("K33");
  std::vector<int> perm{5, 4, 3, 2, 1, 0};
  Graph h = relabel(g, perm);
  CHECK(h.edge_count() == g.edge_count());
  for (auto [u, v] : g.edges) CHECK(h.has_edge(perm[u], perm[v]));
}

TEST_CASE("subdividing an edge inserts a labeled-order path") {
  const Graph g = builtin("K33");
  Graph s = subdivide(g, {0, 3}, 6);
  CHECK(s.n == 12);
  CHECK(s.edge_count() == 9 - 1 + 7);
  CHECK_FALSE(s.has_edge(0, 3));
  CHECK(s.has_edge(0, 6));
  for (int w = 6; w < 11; ++w) CHECK(s.has_edge(w, w + 1));
  CHECK(s.has_edge(11, 3));
  for (int w = 6; w < 12; ++w) CHECK(s.degree(w) == 2);
}

TEST_CASE("suppression undoes subdivision") {
  const Graph g = builtin("K33");
  Graph s = subdivide(subdivide(g, {0, 3}, 3), {1, 4}, 2);
  Graph back = suppress_degree2(s);
  CHECK(back.n == 6);
  CHECK(isomorphic(back, g));
  CHECK(oracle::isomorphic(back.n, back.edges, g.n, g.edges));
}

TEST_CASE("suppression declines to create loops or parallel edges") {
  CHECK(kind_of([] { suppress_degree2(cycle(3)); }) == errc::unsupported_input);
  CHECK(kind_of([] { suppress_degree2(cycle(5)); }) == errc::unsupported_input);
  Graph p = suppress_degree2(path(4));
  CHECK(p.n == 2);
  CHECK(p.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("girth detects shortest cycles and forests") {
  CHECK(girth(builtin("K5")) == 3);
  CHECK(girth(builtin("K33")) == 4);
  CHECK(girth(cycle(7)) == 7);
  CHECK(kind_of([] { girth(path(5)); }) == errc::no_cycle);
  CHECK(kind_of([] { girth(make_graph(3, {})); }) == errc::no_cycle);
}

TEST_CASE("four-cycle listing matches the brute count") {
  for (const char* name : {"K33", "K5", "G1"}) {
    const Graph g = builtin(name);
    CAPTURE(name);
    CHECK(four_cycles(g).size() ==
          static_cast<std::size_t>(oracle::four_cycle_count(g.n, g.edges)));
  }
  CHECK(oracle::four_cycle_count(6, builtin("K33").edges) == 9);
  CHECK(four_cycles(cycle(4)).size() == 1);
  CHECK(four_cycles(builtin("F14")).empty());
  CHECK(four_cycles(builtin("F12")).size() == 2);
}

TEST_CASE("four-cycle representatives are in normal form") {
  for (const auto& c : four_cycles(builtin("K33"))) {
    CHECK(c[0] == *std::min_element(c.begin(), c.end()));
    CHECK(c[1] < c[3]);
    const Graph g = builtin("K33");
    for (int i = 0; i < 4; ++i) CHECK(g.has_edge(c[i], c[(i + 1) % 4]));
  }
}

TEST_CASE("automorphism search agrees with the factorial oracle") {
  struct Case {
    Graph g;
    const char* tag;
  };
  const Case cases[] = {{builtin("K33"), "K33"},
                        {builtin("K5"), "K5"},
                        {cycle(4), "C4"},
                        {cycle(6), "C6"},
                        {path(4), "P4"},
                        {make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}), "star"}};
  for (const auto& c : cases) {
    CAPTURE(c.tag);
    CHECK(automorphisms(c.g).size() ==
          static_cast<std::size_t>(oracle::automorphism_count(c.g.n, c.g.edges)));
  }
}

TEST_CASE("automorphism groups of the catalog graphs") {
  CHECK(automorphisms(builtin("K33")).size() == 72);
  CHECK(automorphisms(builtin("K5")).size() == 120);
  CHECK(automorphisms(builtin("F11")).size() == 64);
  CHECK(automorphisms(builtin("F12")).size() == 16);
  CHECK(automorphisms(builtin("F13")).size() == 18);
  CHECK(automorphisms(builtin("F14")).size() == 16);
  CHECK(automorphisms(builtin("G1")).size() == 48);
  CHECK(automorphisms(builtin("E42")).size() == 72 * 72 * 2);
}

TEST_CASE("every automorphism returned is one") {
  const Graph g = builtin("F13");
  for (const auto& a : automorphisms(g)) {
    std::set<int> image(a.begin(), a.end());
    CHECK(image.size() == static_cast<std::size_t>(g.n));
    for (auto [u, v] : g.edges) CHECK(g.has_edge(a[u], a[v]));
  }
}

TEST_CASE("graph isomorphism agrees with the permutation oracle") {
  const Graph k33 = builtin("K33");
  Graph shuffled = relabel(k33, {2, 4, 0, 5, 1, 3});
  CHECK(isomorphic(k33, shuffled));
  CHECK(oracle::isomorphic(k33.n, k33.edges, shuffled.n, shuffled.edges));
  Graph prism = make_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                               {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(isomorphic(k33, prism));
  CHECK_FALSE(oracle::isomorphic(k33.n, k33.edges, prism.n, prism.edges));
}

TEST_CASE("subdivision containment finds models exactly when present") {
  for (const char* name : {"K33", "E42", "F11", "F12", "F13", "F14", "G1"}) {
    CAPTURE(name);
    auto model = contains_k33_subdivision(builtin(name));
    REQUIRE(model.has_value());
    // Branch vertices split into two sides; each path joins opposite sides
    // and runs through the host's edges.
    const Graph& host = model->host;
    REQUIRE(model->paths.size() == 9);
    std::set<int> interior_seen;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const auto& pth = model->paths[3 * i + j];
        REQUIRE(pth.size() >= 2);
        CHECK(pth.front() == model->branch[i]);
        CHECK(pth.back() == model->branch[3 + j]);
        for (std::size_t s = 0; s + 1 < pth.size(); ++s)
          CHECK(host.has_edge(pth[s], pth[s + 1]));
        for (std::size_t s = 1; s + 1 < pth.size(); ++s)
          CHECK(interior_seen.insert(pth[s]).second);  // interiors are disjoint
      }
    Graph core = suppress_degree2(model->path_union());
    CHECK(isomorphic(core, builtin("K33")));
  }
  CHECK_FALSE(contains_k33_subdivision(builtin("K5")).has_value());
  CHECK_FALSE(contains_k33_subdivision(cycle(8)).has_value());
  CHECK_FALSE(contains_k33_subdivision(path(6)).has_value());
}

TEST_CASE("catalog entries carry their recorded invariants") {
  CHECK(builtin_names().size() == 8);
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    const NamedGraph& entry = named_graph(name);
    CHECK(entry.name == name);
    CHECK_NOTHROW(validate_catalog_entry(entry));
  }
  CHECK(kind_of([] { named_graph("Q7"); }) == errc::catalog);
  CHECK(kind_of([] { builtin(""); }) == errc::catalog);
}

TEST_CASE("catalog girths") {
  CHECK(girth(builtin("K33")) == 4);
  CHECK(girth(builtin("K5")) == 3);
  CHECK(girth(builtin("E42")) == 4);
  CHECK(girth(builtin("F11")) == 4);
  CHECK(girth(builtin("F12")) == 4);
  CHECK(girth(builtin("F13")) == 5);
  CHECK(girth(builtin("F14")) == 5);
  CHECK(girth(builtin("G1")) == 4);
}

TEST_CASE("construction helpers agree with the catalog") {
  CHECK(construct_f11().edges == builtin("F11").edges);
  CHECK(construct_f14().edges == builtin("F14").edges);
  const Graph f11 = builtin("F11");
  CHECK(f11.label_of(6) == "1");
  CHECK(f11.label_of(11) == "6");
  CHECK(f11.label_of(0) == "0");
  CHECK(f11.has_edge(6, 9));
  CHECK(f11.has_edge(7, 10));
  CHECK(f11.has_edge(8, 11));
}

TEST_CASE("every catalog graph except K5 contains a K33 subdivision") {
  for (const auto& name : builtin_names()) {
    CAPTURE(name);
    if (name == "K5")
      CHECK_FALSE(contains_k33_subdivision(builtin(name)).has_value());
    else
      CHECK(contains_k33_subdivision(builtin(name)).has_value());
  }
}
