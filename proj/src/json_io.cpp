#include "coxlab/json_io.hpp"

#include <fstream>
#include <sstream>

#include "coxlab/error.hpp"
#include "coxlab/heisenberg.hpp"

namespace coxlab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput("malformed JSON: " + what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < INT32_MIN || v > INT32_MAX) bad(std::string(what) + " out of range");
  return static_cast<int>(v);
}

std::int64_t as_int64(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x, what));
  return out;
}

template <std::size_t N>
std::array<int, N> int_array(const json& j, const char* what) {
  const auto v = int_list(j, what);
  if (v.size() != N) bad(std::string(what) + " must have " + std::to_string(N) + " entries");
  std::array<int, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

json pair_list(const PairSet& s) {
  json out = json::array();
  for (auto [i, j] : s) out.push_back({i, j});
  return out;
}

}  // namespace

json parse_json(std::string_view text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidInput(what + ": " + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path.string());
}

void write_json_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path.string());
  out << j.dump(2) << '\n';
  if (!out) throw InvalidInput("write failed for " + path.string());
}

json to_json(const Permutation& p) { return p.images(); }

Permutation permutation_from_json(const json& j) { return Permutation::from_images(int_list(j, "permutation")); }

json to_json(const Word& w) { return json(w); }

Word word_from_json(const json& j) {
  Word w = int_list(j, "word");
  for (int l : w) {
    if (l == 0) bad("word letters must be nonzero");
  }
  return w;
}

json to_json(const CleanReport& r) {
  json misc = json::array();
  for (const auto& m : r.misc) misc.push_back(m.word());
  return {{"squares", json(std::vector<int>(r.squares.begin(), r.squares.end()))},
          {"commutations", pair_list(r.commutations)},
          {"braids", pair_list(r.braids)},
          {"misc", misc},
          {"passes", r.passes}};
}

json to_json(const DegenerationComplex& c) {
  json lines = json::array();
  for (const auto& l : c.lines) {
    lines.push_back({{"id", l.id}, {"kind", to_string(l.kind)}, {"points", l.points}, {"planes", l.planes}});
  }
  json planes = json::array();
  for (const auto& p : c.planes) planes.push_back({{"id", p.id}, {"lines", p.lines}});
  json out = {{"rows", c.rows}, {"cols", c.cols}, {"points", c.points}, {"lines", lines}, {"planes", planes}};
  if (!c.chords.empty()) {
    json chords = json::array();
    for (const auto& ch : c.chords) {
      chords.push_back({{"label", ch.label}, {"line", ch.line}, {"tail", ch.tail}, {"head", ch.head}});
    }
    out["chords"] = chords;
  }
  return out;
}

DegenerationComplex complex_from_json(const json& j) {
  DegenerationComplex c;
  c.rows = as_int(field(j, "rows"), "rows");
  c.cols = as_int(field(j, "cols"), "cols");
  c.points = int_list(field(j, "points"), "points");
  const json& lines = field(j, "lines");
  if (!lines.is_array()) bad("lines must be an array");
  for (const auto& l : lines) {
    Line line;
    line.id = as_int(field(l, "id"), "line id");
    const json& kind = field(l, "kind");
    if (!kind.is_string()) bad("line kind must be a string");
    line.kind = line_kind_from_string(kind.get<std::string>());
    line.points = int_array<2>(field(l, "points"), "line points");
    line.planes = int_array<2>(field(l, "planes"), "line planes");
    c.lines.push_back(line);
  }
  const json& planes = field(j, "planes");
  if (!planes.is_array()) bad("planes must be an array");
  for (const auto& p : planes) {
    c.planes.push_back({as_int(field(p, "id"), "plane id"), int_array<3>(field(p, "lines"), "plane lines")});
  }
  if (auto it = j.find("chords"); it != j.end()) {
    if (!it->is_array()) bad("chords must be an array");
    for (const auto& ch : *it) {
      c.chords.push_back({as_int(field(ch, "label"), "chord label"), as_int(field(ch, "line"), "chord line"),
                          as_int(field(ch, "tail"), "chord tail"), as_int(field(ch, "head"), "chord head")});
    }
  }
  return c;
}

json to_json(const Presentation& p) {
  json rels = json::array();
  json kinds = json::array();
  for (const auto& r : p.relators) {
    rels.push_back(r.word);
    kinds.push_back(to_string(r.kind));
  }
  return {{"generators", p.generator_count}, {"variant", to_string(p.variant)}, {"relators", rels}, {"kinds", kinds}};
}

RawPresentation raw_presentation_from_json(const json& j) {
  RawPresentation p;
  p.generators = as_int(field(j, "generators"), "generators");
  if (p.generators < 1) bad("generators must be positive");
  const json& rels = field(j, "relators");
  if (!rels.is_array()) bad("relators must be an array");
  for (const auto& r : rels) {
    Word w = word_from_json(r);
    check_letters(w, p.generators);
    p.relators.push_back(std::move(w));
  }
  return p;
}

AxFixture ax_fixture_from_json(const json& j) {
  AxFixture ax;
  const json& rels = field(j, "relations");
  if (!rels.is_array()) bad("relations must be an array");
  for (const auto& r : rels) {
    const json& label = field(r, "label");
    if (!label.is_string()) bad("relation label must be a string");
    ax.relations.emplace_back(label.get<std::string>(), word_from_json(field(r, "word")));
  }
  return ax;
}

json to_json(const AxFixture& ax) {
  json rels = json::array();
  for (const auto& [label, w] : ax.relations) rels.push_back({{"label", label}, {"word", w}});
  return {{"relations", rels}};
}

NonRelTable nonrel_from_json(const json& j) {
  NonRelTable t;
  const json& pairs = field(j, "pairs");
  if (!pairs.is_array()) bad("pairs must be an array");
  for (const auto& p : pairs) {
    const auto a = int_array<2>(p, "pair");
    t.pairs.emplace_back(a[0], a[1]);
  }
  return t;
}

json to_json(const NonRelTable& t) {
  json pairs = json::array();
  for (auto [i, j] : t.pairs) pairs.push_back({i, j});
  return {{"pairs", pairs}};
}

json to_json(const ReducedElement& x) {
  return {{"c", x.c}, {"a", x.a}, {"b", x.b}, {"zeta", x.zeta}};
}

ReducedElement reduced_element_from_json(const json& j) {
  const json& c = field(j, "c");
  const json& a = field(j, "a");
  const json& b = field(j, "b");
  if (!c.is_array() || c.size() != 8) bad("c must have 8 entries");
  if (!a.is_array() || !b.is_array() || a.size() != b.size() || a.empty()) bad("a and b must be equal-length arrays");
  ReducedElement x(a.size());
  for (std::size_t k = 0; k < 8; ++k) x.c[k] = as_int64(c[k], "c");
  for (std::size_t i = 0; i < a.size(); ++i) {
    x.a[i] = as_int64(a[i], "a");
    x.b[i] = as_int64(b[i], "b");
  }
  x.zeta = as_int64(field(j, "zeta"), "zeta");
  return x;
}

}  // namespace coxlab
