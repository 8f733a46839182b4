// coxlab: build complexes, emit presentations, verify, enumerate.
#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "coxlab/complex.hpp"
#include "coxlab/enumerate.hpp"
#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/json_io.hpp"
#include "coxlab/presentation.hpp"
#include "coxlab/verify.hpp"

namespace {

using namespace coxlab;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

DegenerationComplex load_complex(const std::string& path) {
  if (path.empty()) return fixtures::load_paper_labeling();
  DegenerationComplex c = complex_from_json(read_json_file(path));
  c.validate();
  return c;
}

int cmd_build(std::optional<int> rows, std::optional<int> cols, bool paper, const std::string& out) {
  if (paper == (rows.has_value() || cols.has_value())) {
    throw InvalidInput("give either --paper-fixture or both --rows and --cols");
  }
  if (!paper && !(rows && cols)) throw InvalidInput("--rows and --cols go together");
  const DegenerationComplex c = paper ? fixtures::load_paper_labeling() : build_torus_triangulation(*rows, *cols);
  if (!out.empty()) write_json_file(out, to_json(c));
  const DualGraph g = dual_graph(c);
  std::cout << c.points.size() << " points, " << c.lines.size() << " lines, " << c.planes.size() << " planes\n"
            << "euler characteristic " << c.euler_characteristic() << ", dual graph "
            << (g.is_regular(3) ? "3-regular" : "irregular") << ", " << (g.is_connected() ? "connected" : "disconnected")
            << ", cycle rank " << g.cycle_rank() << '\n';
  return kOk;
}

int cmd_present(const std::string& complex_path, const std::string& variant, const std::string& out) {
  const DegenerationComplex c = load_complex(complex_path);
  const Presentation p = generate(dual_graph(c), hexagon_links(c), variant_from_string(variant));
  if (!out.empty()) write_json_file(out, to_json(p));
  std::cout << p.generator_count << " generators, " << p.relators.size() << " relators:";
  for (auto k : {RelatorKind::square, RelatorKind::commutation, RelatorKind::braid, RelatorKind::fork,
                 RelatorKind::cycle}) {
    std::cout << ' ' << p.count(k) << ' ' << to_string(k);
  }
  std::cout << '\n';
  if (out.empty()) std::cout << to_json(p).dump() << '\n';
  return kOk;
}

int cmd_verify(const std::string& complex_path, const std::string& suite, bool as_json, unsigned threads) {
  const Suite s = suite_from_string(suite);
  const DegenerationComplex c = load_complex(complex_path);
  const Report r = run_suite(c, s, threads);
  if (as_json) {
    std::cout << r.to_json().dump(2) << '\n';
  } else {
    std::cout << r.summary();
  }
  return r.failed() ? kFailed : kOk;
}

int cmd_enumerate(const std::string& path, const std::string& bundled, const std::string& subgroup,
                  std::size_t capacity, bool as_json, const std::string& table_out) {
  if (path.empty() == bundled.empty()) throw InvalidInput("give exactly one of --presentation and --bundled");
  const RawPresentation p =
      path.empty() ? fixtures::bundled_presentation(bundled) : raw_presentation_from_json(read_json_file(path));
  std::vector<Word> sub;
  if (!subgroup.empty()) {
    const json j = parse_json(subgroup, "--subgroup");
    if (!j.is_array()) throw InvalidInput("--subgroup must be a JSON array of words");
    for (const auto& w : j) sub.push_back(word_from_json(w));
  }
  const EnumerationResult e = enumerate_cosets(p.generators, p.relators, sub, capacity);
  const json out = {{"index", e.status == EnumerationStatus::complete ? json(e.index) : json(nullptr)},
                    {"table_size", e.table_size},
                    {"status", e.status == EnumerationStatus::complete ? "complete" : "inconclusive"}};
  if (as_json) {
    std::cout << out.dump() << '\n';
  } else if (e.status == EnumerationStatus::complete) {
    std::cout << "index " << e.index << " (" << e.table_size << " cosets defined)\n";
  } else {
    std::cout << "inconclusive: capacity " << capacity << " exceeded\n";
  }
  if (!table_out.empty() && e.status == EnumerationStatus::complete) {
    json rows = json::array();
    for (std::size_t c = 1; c <= e.table.size(); ++c) rows.push_back(e.table.rows[c]);
    write_json_file(table_out, {{"generators", e.table.generators}, {"rows", rows}});
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coxlab: Coxeter quotients of torus triangulations"};
  app.require_subcommand(1);

  std::optional<int> rows;
  std::optional<int> cols;
  bool paper = false;
  std::string out;
  auto* build = app.add_subcommand("build", "Build a triangulated torus and write it as JSON");
  build->add_option("--rows", rows, "Grid rows (>= 3)");
  build->add_option("--cols", cols, "Grid columns (>= 3)");
  build->add_flag("--paper-fixture", paper, "Use the shipped 3x3 labeling");
  build->add_option("--out", out, "Output file");

  std::string complex_path;
  std::string variant = "quotient";
  auto* present = app.add_subcommand("present", "Emit a Coxeter-type presentation");
  present->add_option("--complex", complex_path, "Complex JSON (default: shipped labeling)");
  present->add_option("--variant", variant, "plain, fork or quotient")
      ->check(CLI::IsMember({"plain", "fork", "quotient"}));
  present->add_option("--out", out, "Output file");

  std::string suite = "all";
  bool as_json = false;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--complex", complex_path, "Complex JSON (default: shipped labeling)");
  verify->add_option("--suite", suite, "relators, ax, tables, center, structure or all")
      ->check(CLI::IsMember({"relators", "ax", "tables", "center", "structure", "all"}));
  verify->add_flag("--json", as_json, "Machine-readable report");
  verify->add_option("--threads", threads, "Worker threads (0: all cores)");

  std::string presentation;
  std::string bundled;
  std::string subgroup;
  std::size_t capacity = kDefaultCapacity;
  std::string table_out;
  auto* enumerate = app.add_subcommand("enumerate", "Todd-Coxeter coset enumeration");
  enumerate->add_option("--presentation", presentation, "Presentation JSON {generators, relators}");
  enumerate->add_option("--bundled", bundled, "A shipped presentation: s4_remark, hexagon_quotient, hexagon_affine");
  enumerate->add_option("--subgroup", subgroup, "Subgroup generators as a JSON array of words");
  enumerate->add_option("--capacity", capacity, "Maximum cosets defined")->check(CLI::PositiveNumber);
  enumerate->add_flag("--json", as_json, "Machine-readable result");
  enumerate->add_option("--table", table_out, "Write the coset table here");

  std::string dir;
  auto* exporter = app.add_subcommand("export-fixtures", "Write the shipped fixtures to a directory");
  exporter->add_option("--dir", dir, "Target directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*build) return cmd_build(rows, cols, paper, out);
    if (*present) return cmd_present(complex_path, variant, out);
    if (*verify) return cmd_verify(complex_path, suite, as_json, threads);
    if (*enumerate) return cmd_enumerate(presentation, bundled, subgroup, capacity, as_json, table_out);
    if (*exporter) {
      fixtures::export_all(dir);
      std::cout << "wrote " << fixtures::names().size() << " fixtures to " << dir << '\n';
      return kOk;
    }
  } catch (const CorruptFixture& e) {
    std::cerr << "corrupt fixture: " << e.what() << '\n';
    return kFailed;
  } catch (const FixtureInconsistency& e) {
    std::cerr << "fixture inconsistency: " << e.what() << '\n';
    return kFailed;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
