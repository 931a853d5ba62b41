#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "toratlas/catalog.hpp"
#include "toratlas/check_suite.hpp"
#include "toratlas/enumerate.hpp"
#include "toratlas/extend.hpp"
#include "toratlas/render.hpp"

namespace {

using namespace toratlas;

std::uint64_t budget_from_env() {
  const char* s = std::getenv("TORATLAS_BUDGET");
  if (!s) return default_budget;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s, s + std::char_traits<char>::length(s), value);
  if (ec != std::errc{} || *ptr != '\0' || value == 0)
    fail(errc::parse, "TORATLAS_BUDGET must be a positive integer");
  return value;
}

struct InputSelector {
  std::string graph_name;
  std::string file_path;

  std::string display() const { return graph_name.empty() ? file_path : graph_name; }
  Graph load() const {
    if (graph_name.empty() == file_path.empty())
      fail(errc::parse, "exactly one of --graph and --file is required");
    return graph_name.empty() ? load_graph_file(file_path) : builtin(graph_name);
  }
};

void add_input_flags(CLI::App* cmd, InputSelector& in) {
  cmd->add_option("--graph", in.graph_name, "builtin graph name (K33 K5 E42 F11 F12 F13 F14 G1)");
  cmd->add_option("--file", in.file_path, "graph file: first line 'n m', then one 'u v' per edge");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::parse, "cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(errc::unsupported_input, "cannot write file: " + path);
  out << content;
}

std::string rotations_text(const RotationMap& m, const char* indent) {
  std::string out;
  auto rots = rotations_of(m);
  for (int v = 0; v < m.graph.n; ++v) {
    out += indent + std::to_string(v) + ":";
    for (int w : rots[v]) out += " " + std::to_string(w);
    out += "\n";
  }
  return out;
}

int run_genus(const InputSelector& in, const std::string& format) {
  Graph g = in.load();
  std::uint64_t budget = budget_from_env();
  auto genera = component_genera(g, budget);
  RotationMap witness = genus_witness(g, budget);
  int total = 0;
  for (int k : genera) total += k;
  if (format == "json") {
    nlohmann::ordered_json j;
    j["graph"] = in.display();
    j["genus"] = total;
    j["components"] = genera;
    j["rotations"] = nlohmann::ordered_json::parse(map_to_json(witness))["rotations"];
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "graph: " << in.display() << "\n";
    std::cout << "genus: " << total << "\n";
    std::cout << "components: ";
    for (std::size_t i = 0; i < genera.size(); ++i)
      std::cout << (i ? "+" : "") << genera[i];
    std::cout << "\n";
    std::cout << "witness rotations:\n" << rotations_text(witness, "  ");
  }
  return 0;
}

int run_catalog(const InputSelector& in, int target_genus, const std::string& decoration,
                const std::string& format, int threads, const std::string& svg_path) {
  Graph g = in.load();
  EnumerationOptions opts{budget_from_env(), threads};
  DecorationKind kind = parse_decoration_kind(decoration);
  EnumerationReport report = enumerate_report(g, in.display(), target_genus, kind, opts);
  std::cout << (format == "json" ? report_to_json(report) : report_to_text(report));
  if (!svg_path.empty()) {
    std::vector<RotationMap> reps;
    std::vector<std::string> captions;
    for (std::size_t i = 0; i < report.classes.size(); ++i) {
      const auto& c = report.classes[i];
      reps.push_back(c.representative);
      std::string cap = "class " + std::to_string(i + 1) + ": faces";
      for (int f : c.face_signature) cap += " " + std::to_string(f);
      cap += ", labelled " + std::to_string(c.labelled_count);
      captions.push_back(std::move(cap));
    }
    write_file(svg_path, maps_to_svg(reps, captions));
  }
  return 0;
}

int run_verify(const std::string& format, int threads) {
  SuiteReport report = run_check_suite(threads);
  std::cout << (format == "json" ? suite_to_json(report) : suite_to_text(report));
  return report.overall ? 0 : 1;
}

int run_render(const std::string& file_path, const std::string& format,
               const std::string& svg_path) {
  RotationMap m = map_from_json(read_file(file_path));
  if (format == "json") {
    std::cout << polygons_to_json(m);
    if (!svg_path.empty()) write_file(svg_path, map_to_svg(m));
    return 0;
  }
  std::string svg = map_to_svg(m);
  if (svg_path.empty())
    std::cout << svg;
  else
    write_file(svg_path, svg);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"atlas of rotation systems and toroidal embeddings for small graphs"};
  app.require_subcommand(1);

  InputSelector genus_in, catalog_in;
  std::string genus_format = "text", catalog_format = "text", verify_format = "text",
              render_format = "text";
  std::string catalog_decoration = "none", catalog_svg, render_file, render_svg;
  int catalog_genus = 1, catalog_threads = 1, verify_threads = 1;

  CLI::App* genus_cmd =
      app.add_subcommand("genus", "minimum genus with a witness rotation system");
  add_input_flags(genus_cmd, genus_in);
  genus_cmd->add_option("--format", genus_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI::App* catalog_cmd =
      app.add_subcommand("catalog", "classify embeddings at a fixed genus");
  add_input_flags(catalog_cmd, catalog_in);
  catalog_cmd->add_option("--genus", catalog_genus, "target genus (default 1)");
  catalog_cmd->add_option("--decoration", catalog_decoration,
                          "none, directed-edge, edge, or cycle4");
  catalog_cmd->add_option("--format", catalog_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  catalog_cmd->add_option("--threads", catalog_threads, "worker threads")
      ->check(CLI::PositiveNumber);
  catalog_cmd->add_option("--svg", catalog_svg, "write class representatives as SVG");

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the built-in result checks");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--threads", verify_threads, "worker threads")
      ->check(CLI::PositiveNumber);

  CLI::App* render_cmd =
      app.add_subcommand("render", "draw a map's polygon decomposition");
  render_cmd->add_option("--file", render_file, "map JSON file")->required();
  render_cmd->add_option("--format", render_format, "text (SVG) or json (polygon list)")
      ->check(CLI::IsMember({"text", "json"}));
  render_cmd->add_option("--svg", render_svg, "write the SVG here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (genus_cmd->parsed()) return run_genus(genus_in, genus_format);
    if (catalog_cmd->parsed())
      return run_catalog(catalog_in, catalog_genus, catalog_decoration, catalog_format,
                         catalog_threads, catalog_svg);
    if (verify_cmd->parsed()) return run_verify(verify_format, verify_threads);
    if (render_cmd->parsed()) return run_render(render_file, render_format, render_svg);
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == errc::resource ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
