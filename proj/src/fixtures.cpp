#include "coxlab/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab::fixtures {

namespace embedded {
extern const std::string_view kTt33;
extern const std::string_view kAxRelations;
extern const std::string_view kNonrelPairs;
extern const std::string_view kS4Remark;
extern const std::string_view kHexagonQuotient;
extern const std::string_view kHexagonAffine;
}  // namespace embedded

namespace {

const std::map<std::string, std::string_view, std::less<>>& table() {
  static const std::map<std::string, std::string_view, std::less<>> t{
      {"tt33", embedded::kTt33},
      {"ax_relations", embedded::kAxRelations},
      {"nonrel_pairs", embedded::kNonrelPairs},
      {"s4_remark", embedded::kS4Remark},
      {"hexagon_quotient", embedded::kHexagonQuotient},
      {"hexagon_affine", embedded::kHexagonAffine},
  };
  return t;
}

json parsed(std::string_view name) { return parse_json(text(name), std::string(name) + ".json"); }

std::set<int> hexagon_set(const HexagonLink& link) { return {link.cycle.begin(), link.cycle.end()}; }

std::set<int> letter_set(const Word& w) {
  std::set<int> s;
  for (int l : w) s.insert(l < 0 ? -l : l);
  return s;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> n = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : table()) v.push_back(k);
    return v;
  }();
  return n;
}

std::string text(std::string_view name) {
  auto it = table().find(name);
  if (it == table().end()) throw InvalidInput("unknown fixture '" + std::string(name) + "'");
  if (const char* dir = std::getenv("COXLAB_FIXTURES"); dir != nullptr && *dir != '\0') {
    const auto path = std::filesystem::path(dir) / (std::string(name) + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInput("cannot read fixture " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return std::string(it->second);
}

DegenerationComplex paper_complex_unchecked() { return complex_from_json(parsed("tt33")); }
AxFixture ax_relations() { return ax_fixture_from_json(parsed("ax_relations")); }
NonRelTable nonrel_pairs() { return nonrel_from_json(parsed("nonrel_pairs")); }

RawPresentation bundled_presentation(std::string_view name) {
  if (name == "tt33" || name == "ax_relations" || name == "nonrel_pairs") {
    throw InvalidInput("fixture '" + std::string(name) + "' is not a presentation");
  }
  return raw_presentation_from_json(parsed(name));
}

void check_paper_labeling(const DegenerationComplex& complex, const NonRelTable& nonrel, const AxFixture& ax) {
  auto fail = [](const std::string& what) { throw CorruptFixture("reference labeling: " + what); };
  try {
    complex.validate();
    if (complex.rows != 3 || complex.cols != 3) fail("not a 3x3 complex");
    const DualGraph graph = dual_graph(complex);
    if (!graph.is_connected() || !graph.is_regular(3)) fail("dual graph is not connected and 3-regular");
    (void)spanning_data(graph, complex.chords);
    if (complex.chords.size() != 10) fail("expected 10 chords");

    const auto links = hexagon_links(complex);
    auto link = [&](int point) -> const HexagonLink& { return links.at(static_cast<std::size_t>(point - 1)); };
    const std::set<int> v1{1, 2, 4, 6, 13, 22};
    const std::set<int> v4{4, 5, 8, 11, 15, 19};
    const std::set<int> v9{22, 23, 24, 25, 26, 27};
    if (hexagon_set(link(1)) != v1) fail("hexagon of V1");
    if (hexagon_set(link(4)) != v4) fail("hexagon of V4");
    if (hexagon_set(link(9)) != v9) fail("hexagon of V9");
    // The four direct hexagon relations name their points' lines exactly.
    if (letter_set(ax["AX1"]) != v1 || letter_set(ax["AX3"]) != v4 || letter_set(ax["AX2"]) != v9) {
      fail("direct hexagon relations disagree with the hexagons of V1, V4, V9");
    }
    if (hexagon_set(link(6)) != letter_set(ax["AX4"])) fail("hexagon of V6");
    if (link(6).role(Role::a) != 12 || link(6).role(Role::b) != 25 || link(5).role(Role::d) != 12) {
      fail("role anchors a6 = 12, b6 = 25, d5 = 12");
    }
    for (const auto& [i, j] : nonrel.pairs) {
      if (i < 1 || j < 1 || i > 27 || j > 27 || i == j) fail("bad generator pair in the non-relation table");
    }
    std::set<std::pair<int, int>> distinct;
    for (auto [i, j] : nonrel.pairs) distinct.insert(unordered_pair(i, j));
    if (distinct.size() != 43 || nonrel.pairs.size() != 43) fail("non-relation table must list 43 distinct pairs");
    (void)classify_missing(nonrel, links);
    if (ax.relations.size() != 25) fail("expected 25 miscellaneous relations");
    for (const auto& [label, w] : ax.relations) {
      if (label == "AX9") fail("AX9 is not a relation label");
      check_letters(w, 27);
    }
  } catch (const CorruptFixture&) {
    throw;
  } catch (const Error& e) {
    throw CorruptFixture(std::string("reference labeling: ") + e.what());
  }
}

DegenerationComplex load_paper_labeling() {
  DegenerationComplex c;
  AxFixture ax;
  NonRelTable nonrel;
  try {
    c = paper_complex_unchecked();
    ax = ax_relations();
    nonrel = nonrel_pairs();
  } catch (const Error& e) {
    throw CorruptFixture(e.what());
  }
  check_paper_labeling(c, nonrel, ax);
  return c;
}

std::vector<Chord> paper_chords() { return load_paper_labeling().chords; }

bool is_paper_labeling(const DegenerationComplex& complex) {
  const DegenerationComplex paper = load_paper_labeling();
  if (complex.rows != paper.rows || complex.cols != paper.cols) return false;
  if (complex.lines.size() != paper.lines.size() || complex.planes.size() != paper.planes.size()) return false;
  for (std::size_t i = 0; i < paper.lines.size(); ++i) {
    const Line& a = complex.lines[i];
    const Line& b = paper.lines[i];
    if (a.id != b.id || a.kind != b.kind || a.points != b.points) return false;
    auto pa = a.planes;
    auto pb = b.planes;
    std::sort(pa.begin(), pa.end());
    std::sort(pb.begin(), pb.end());
    if (pa != pb) return false;
  }
  return true;
}

void export_all(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  for (const auto& name : names()) {
    const auto path = dir / (name + ".json");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + path.string());
    out << text(name);
  }
}

}  // namespace coxlab::fixtures
