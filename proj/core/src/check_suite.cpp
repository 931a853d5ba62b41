#include "toratlas/check_suite.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "toratlas/catalog.hpp"
#include "toratlas/classify.hpp"
#include "toratlas/enumerate.hpp"
#include "toratlas/extend.hpp"

namespace toratlas {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string signature_str(const std::vector<int>& sig) { return "[" + join_ints(sig) + "]"; }

std::string signatures_str(std::vector<std::vector<int>> sigs) {
  std::sort(sigs.begin(), sigs.end());
  std::string out;
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    if (i) out += " ";
    out += signature_str(sigs[i]);
  }
  return out;
}

std::vector<int> orbit_sizes(const std::vector<std::vector<int>>& orbits) {
  std::vector<int> sizes;
  for (const auto& o : orbits) sizes.push_back(static_cast<int>(o.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  auto edges = a.edges;
  for (auto [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
  return make_graph(a.n + b.n, std::move(edges));
}

std::set<std::string> canonical_set(const std::vector<EmbeddingClass>& classes) {
  std::set<std::string> s;
  for (const auto& c : classes) s.insert(c.canonical.hex());
  return s;
}

struct ClassCountCheck {
  const char* name;
  std::size_t expected;
};

CheckResult check_classification_counts(int threads) {
  CheckResult r;
  r.id = "classification-counts";
  const ClassCountCheck want[] = {{"E42", 0}, {"F11", 2}, {"F12", 4},
                                  {"F13", 2}, {"F14", 2}, {"G1", 2}};
  std::string expected, observed;
  bool ok = true;
  for (const auto& w : want) {
    auto classes = toroidal_classes(builtin(w.name), {default_budget, threads});
    if (!expected.empty()) {
      expected += " ";
      observed += " ";
    }
    expected += std::string(w.name) + ":" + std::to_string(w.expected);
    observed += std::string(w.name) + ":" + std::to_string(classes.size());
    ok = ok && classes.size() == w.expected;
  }
  r.expected = expected;
  r.observed = observed;
  r.pass = ok;
  return r;
}

CheckResult check_baselines(int threads) {
  CheckResult r;
  r.id = "baselines";
  auto k33 = toroidal_classes(builtin("K33"), {default_budget, threads});
  auto k5 = toroidal_classes(builtin("K5"), {default_budget, threads});
  r.expected = "K33:2 K5:6";
  r.observed = "K33:" + std::to_string(k33.size()) + " K5:" + std::to_string(k5.size());
  r.pass = k33.size() == 2 && k5.size() == 6;
  return r;
}

CheckResult check_face_signatures(int threads) {
  CheckResult r;
  r.id = "face-signatures";
  const std::map<std::string, std::vector<std::vector<int>>> want = {
      {"K33", {{4, 4, 10}, {6, 6, 6}}},
      {"F11", {{4, 4, 4, 4, 10, 10}, {4, 4, 4, 4, 10, 10}}},
      {"F12", {{4, 4, 6, 6, 8, 8}, {4, 4, 7, 7, 7, 7}, {5, 5, 5, 5, 8, 8}, {5, 5, 5, 5, 8, 8}}},
      {"F13", {{5, 5, 5, 6, 6, 9}, {5, 5, 5, 7, 7, 7}}},
      {"F14", {{5, 5, 5, 5, 6, 10}, {5, 5, 6, 6, 6, 8}}},
      {"G1", {{4, 4, 6, 6, 10}, {4, 4, 6, 6, 10}}},
  };
  bool ok = true;
  std::string expected, observed;
  for (const auto& [name, sigs] : want) {
    std::vector<std::vector<int>> got;
    for (const auto& c : toroidal_classes(builtin(name), {default_budget, threads}))
      got.push_back(c.face_signature);
    std::string e = signatures_str(sigs), o = signatures_str(got);
    if (!expected.empty()) {
      expected += "  ";
      observed += "  ";
    }
    expected += name + ":" + e;
    observed += name + ":" + o;
    ok = ok && e == o;
  }
  r.expected = expected;
  r.observed = observed;
  r.pass = ok;
  return r;
}

CheckResult check_decorated_counts(int threads) {
  CheckResult r;
  r.id = "decorated-counts";
  const Graph k33 = builtin("K33");
  auto directed = decorated_classes(k33, DecorationKind::directed_edge, {default_budget, threads});
  auto edged = decorated_classes(k33, DecorationKind::edge, {default_budget, threads});
  auto cycled = decorated_classes(k33, DecorationKind::cycle4, {default_budget, threads});
  r.expected = "directed-edge:6 edge:5 cycle4:5";
  r.observed = "directed-edge:" + std::to_string(directed.size()) +
               " edge:" + std::to_string(edged.size()) +
               " cycle4:" + std::to_string(cycled.size());
  r.pass = directed.size() == 6 && edged.size() == 5 && cycled.size() == 5;
  return r;
}

CheckResult check_orbit_structure(int threads) {
  CheckResult r;
  r.id = "orbit-structure";
  const Graph k33 = builtin("K33");
  auto classes = toroidal_classes(k33, {default_budget, threads});
  const RotationMap* quad = nullptr;  // the [4,4,10] embedding
  const RotationMap* hex = nullptr;   // the [6,6,6] embedding
  for (const auto& c : classes) {
    if (c.face_signature == std::vector<int>{4, 4, 10}) quad = &c.representative;
    if (c.face_signature == std::vector<int>{6, 6, 6}) hex = &c.representative;
  }
  if (!quad || !hex) {
    r.expected = "both K33 embeddings present";
    r.observed = "missing";
    r.pass = false;
    return r;
  }
  auto orbit_profile = [](const RotationMap& m) {
    std::vector<Decoration> darts, cycles;
    for (int d = 0; d < m.dart_count(); ++d) darts.push_back(directed_edge_decoration(m, d));
    for (const auto& c : four_cycles(m.graph))
      cycles.push_back(cycle_decoration(m, {c.begin(), c.end()}));
    return std::make_tuple(symmetries(m).size(), orbit_sizes(decoration_orbits(m, darts)),
                           orbit_sizes(decoration_orbits(m, cycles)));
  };
  auto [qsym, qdir, qcyc] = orbit_profile(*quad);
  auto [hsym, hdir, hcyc] = orbit_profile(*hex);
  r.expected = "quad sym:4 dir:[2,4,4,4,4] cyc:[1,2,2,4]  hex sym:36 dir:[18] cyc:[9]";
  r.observed = "quad sym:" + std::to_string(qsym) + " dir:" + signature_str(qdir) +
               " cyc:" + signature_str(qcyc) + "  hex sym:" + std::to_string(hsym) +
               " dir:" + signature_str(hdir) + " cyc:" + signature_str(hcyc);
  r.pass = qsym == 4 && qdir == std::vector<int>{2, 4, 4, 4, 4} &&
           qcyc == std::vector<int>{1, 2, 2, 4} && hsym == 36 &&
           hdir == std::vector<int>{18} && hcyc == std::vector<int>{9};
  return r;
}

CheckResult check_replay_equivalence(int threads) {
  CheckResult r;
  r.id = "replay-equivalence";
  bool ok = true;
  std::string observed;
  for (const char* name : {"F11", "F12", "F13", "F14", "G1"}) {
    auto replayed = canonical_set(replay_classification(name));
    auto direct = canonical_set(toroidal_classes(builtin(name), {default_budget, threads}));
    bool same = replayed == direct;
    ok = ok && same;
    if (!observed.empty()) observed += " ";
    observed += std::string(name) + ":" + (same ? "match" : "MISMATCH");
  }
  auto breakdown = f11_site_breakdown();
  std::vector<std::uint64_t> nonzero;
  for (auto c : breakdown.site_completions)
    if (c) nonzero.push_back(c);
  bool f11_fine = breakdown.extending_classes == 1 && nonzero.size() == 2 &&
                  std::all_of(nonzero.begin(), nonzero.end(),
                              [](std::uint64_t c) { return c == 4; });
  ok = ok && f11_fine;
  observed += " F11-sites:";
  for (std::size_t i = 0; i < breakdown.site_completions.size(); ++i)
    observed += (i ? "," : "") + std::to_string(breakdown.site_completions[i]);
  observed += " extending:" + std::to_string(breakdown.extending_classes);
  r.expected =
      "F11:match F12:match F13:match F14:match G1:match; one extending case, "
      "each admitting site completes exactly 4 ways, all other cases 0";
  r.observed = observed;
  r.pass = ok;
  return r;
}

CheckResult check_genus_facts(int) {
  CheckResult r;
  r.id = "genus-facts";
  const Graph k33 = builtin("K33");
  const Graph k5 = builtin("K5");
  const Graph e42 = builtin("E42");
  int g_k33 = genus(k33);
  int g_e42 = genus(e42);
  int g_mixed = genus(disjoint_union(k33, k5));
  int g_k5 = genus(k5);
  r.expected = "K33:1 E42:2 K33+K33:2 K33+K5:sum";
  r.observed = "K33:" + std::to_string(g_k33) + " E42:" + std::to_string(g_e42) +
               " K33+K5:" + std::to_string(g_mixed) + " (parts " + std::to_string(g_k33) + "+" +
               std::to_string(g_k5) + ")";
  r.pass = g_k33 == 1 && g_e42 == 2 && g_e42 == 2 * g_k33 && g_mixed == g_k33 + g_k5;
  return r;
}

CheckResult check_structural_properties(int threads) {
  CheckResult r;
  r.id = "structural-properties";
  bool euler_ok = true;
  for (const char* name : {"K33", "K5"}) {
    const Graph g = builtin(name);
    enumerate_rotation_systems(g, [&](std::uint64_t, const RotationMap& m) {
      int sum = 0;
      for (const auto& w : face_orbits(m)) sum += w.length();
      euler_ok = euler_ok && sum == 2 * g.edge_count();
    });
  }

  // insert_edge's face/genus postconditions are asserted inside every call;
  // replay exercises them across every completion path.
  bool insert_ok = true;
  try {
    replay_cases("G1");
  } catch (const std::exception&) {
    insert_ok = false;
  }

  bool relabel_ok = true;
  std::mt19937 rng(20240817);
  for (const auto& name : builtin_names()) {
    const Graph g = builtin(name);
    int target = g.is_connected() ? 1 : 2;
    auto classes = classes_at_genus(g, target, {default_budget, threads});
    for (const auto& c : classes) {
      if (!c.representative.graph.is_connected()) continue;  // per-component forms differ
      for (int trial = 0; trial < 100 && relabel_ok; ++trial) {
        std::vector<int> perm(g.n);
        for (int i = 0; i < g.n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        auto shuffled = relabel(c.representative, perm);
        relabel_ok = canonical_form(shuffled) == c.canonical;
      }
    }
  }

  bool threads_ok = true;
  for (const char* name : {"K5", "F12"}) {
    auto one = toroidal_classes(builtin(name), {default_budget, 1});
    auto many = toroidal_classes(builtin(name), {default_budget, 4});
    bool same = one.size() == many.size();
    for (std::size_t i = 0; same && i < one.size(); ++i)
      same = one[i].canonical == many[i].canonical &&
             one[i].labelled_count == many[i].labelled_count &&
             one[i].first_index == many[i].first_index;
    threads_ok = threads_ok && same;
  }

  auto word = [](bool b) { return b ? std::string("ok") : std::string("FAIL"); };
  r.expected = "euler:ok insertion:ok relabeling:ok threads:ok";
  r.observed = "euler:" + word(euler_ok) + " insertion:" + word(insert_ok) +
               " relabeling:" + word(relabel_ok) + " threads:" + word(threads_ok);
  r.pass = euler_ok && insert_ok && relabel_ok && threads_ok;
  return r;
}

CheckResult check_catalog_integrity(int) {
  CheckResult r;
  r.id = "catalog-integrity";
  bool entries_ok = true;
  std::string bad;
  for (const auto& name : builtin_names()) {
    try {
      validate_catalog_entry(named_graph(name));
    } catch (const std::exception&) {
      entries_ok = false;
      bad += (bad.empty() ? "" : ",") + name;
    }
  }
  // Dropping the distinguished edge from each of the two girth-5 entries must
  // leave graphs that smooth to the same cubic core.
  auto drop = [](const Graph& g, int u, int v) {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : g.edges)
      if (e != std::make_pair(std::min(u, v), std::max(u, v))) edges.push_back(e);
    return make_graph(g.n, std::move(edges));
  };
  Graph a = suppress_degree2(drop(builtin("F12"), 8, 10));
  Graph b = suppress_degree2(drop(builtin("F13"), 9, 11));
  bool cross_ok = isomorphic(a, b);
  r.expected = "all entries valid; reduced cores isomorphic";
  r.observed = std::string(entries_ok ? "entries valid" : ("invalid: " + bad)) +
               (cross_ok ? "; cores isomorphic" : "; cores differ");
  r.pass = entries_ok && cross_ok;
  return r;
}

}  // namespace

SuiteReport run_check_suite(int threads) {
  struct Entry {
    const char* id;
    CheckResult (*run)(int);
  };
  const Entry entries[] = {
      {"classification-counts", check_classification_counts},
      {"baselines", check_baselines},
      {"face-signatures", check_face_signatures},
      {"decorated-counts", check_decorated_counts},
      {"orbit-structure", check_orbit_structure},
      {"replay-equivalence", check_replay_equivalence},
      {"genus-facts", check_genus_facts},
      {"structural-properties", check_structural_properties},
      {"catalog-integrity", check_catalog_integrity},
  };
  SuiteReport report;
  report.overall = true;
  for (const auto& entry : entries) {
    auto t0 = std::chrono::steady_clock::now();
    CheckResult r;
    try {
      r = entry.run(threads);
    } catch (const std::exception& e) {
      r.id = entry.id;
      r.pass = false;
      r.observed = std::string("exception: ") + e.what();
    }
    r.runtime_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.overall = report.overall && r.pass;
    report.checks.push_back(std::move(r));
  }
  return report;
}

std::string suite_to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["expected"] = c.expected;
    jc["observed"] = c.observed;
    jc["pass"] = c.pass;
    jc["runtime_ms"] = c.runtime_ms;
    checks.push_back(std::move(jc));
  }
  j["overall"] = report.overall;
  return j.dump(2) + "\n";
}

std::string suite_to_text(const SuiteReport& report) {
  std::ostringstream out;
  for (const auto& c : report.checks) {
    out << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " (" << c.runtime_ms << " ms)\n";
    out << "       expected: " << c.expected << "\n";
    out << "       observed: " << c.observed << "\n";
  }
  out << (report.overall ? "overall: PASS" : "overall: FAIL") << "\n";
  return out.str();
}

}  // namespace toratlas
