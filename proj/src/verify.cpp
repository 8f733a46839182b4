#include "coxlab/verify.hpp"

#include <algorithm>
#include <sstream>
#include <thread>

#include "coxlab/enumerate.hpp"
#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/heisenberg.hpp"
#include "coxlab/presentation.hpp"
#include "coxlab/semidirect.hpp"
#include "coxlab/smith.hpp"
#include "coxlab/structure.hpp"

namespace coxlab {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
  }
  return "?";
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [s](const ReportEntry& e) { return e.status == s; }));
}

void Report::add(std::string name, bool ok, std::string value, std::string anchor) {
  entries.push_back({std::move(name), ok ? Status::pass : Status::fail, std::move(value), std::move(anchor)});
}

json Report::to_json() const {
  json list = json::array();
  for (const auto& e : entries) {
    list.push_back({{"name", e.name}, {"status", to_string(e.status)}, {"value", e.value}, {"anchor", e.anchor}});
  }
  return {{"command", command},
          {"suite", suite},
          {"entries", list},
          {"summary",
           {{"pass", count(Status::pass)}, {"fail", count(Status::fail)}, {"inconclusive", count(Status::inconclusive)}}}};
}

std::string Report::summary() const {
  std::ostringstream out;
  for (const auto& e : entries) {
    if (e.status != Status::pass) out << to_string(e.status) << ": " << e.name << " = " << e.value << '\n';
  }
  out << suite << ": " << count(Status::pass) << " pass, " << count(Status::fail) << " fail, "
      << count(Status::inconclusive) << " inconclusive\n";
  return out.str();
}

Suite suite_from_string(const std::string& s) {
  if (s == "relators") return Suite::relators;
  if (s == "ax") return Suite::ax;
  if (s == "tables") return Suite::tables;
  if (s == "center") return Suite::center;
  if (s == "structure") return Suite::structure;
  if (s == "all") return Suite::all;
  throw InvalidInput("unknown suite '" + s + "'");
}

std::string to_string(Suite s) {
  switch (s) {
    case Suite::relators: return "relators";
    case Suite::ax: return "ax";
    case Suite::tables: return "tables";
    case Suite::center: return "center";
    case Suite::structure: return "structure";
    case Suite::all: return "all";
  }
  return "?";
}

namespace {

struct Context {
  DegenerationComplex complex;
  DualGraph graph;
  std::vector<HexagonLink> links;
  bool paper = false;
  std::optional<SemidirectModel> model;
  unsigned threads = 1;
};

template <class F>
void parallel_for(std::size_t n, unsigned threads, F&& f) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += threads) f(i);
    });
  }
}

std::string value_of(const MElement& g) {
  if (g.sigma.is_identity()) return to_string(g.x);
  return g.sigma.cycle_string() + " " + to_string(g.x);
}

void relators_suite(const Context& ctx, Report& r) {
  const Presentation p = generate(ctx.graph, ctx.links, Variant::quotient);
  const std::size_t n = p.relators.size();
  std::vector<ReportEntry> out(n);
  parallel_for(n, ctx.threads, [&](std::size_t i) {
    const auto& pr = p.relators[i];
    ReportEntry& e = out[i];
    e.name = to_string(pr.kind) + " " + to_string(pr.word);
    e.anchor = to_string(pr.kind) + " relation";
    if (ctx.paper) {
      const MElement v = rho(ctx.model->evaluate(pr.word));
      e.status = v.is_identity() ? Status::pass : Status::fail;
      e.value = value_of(v);
    } else {
      const Permutation v = ctx.model->evaluate_permutation(pr.word);
      e.status = v.is_identity() ? Status::pass : Status::fail;
      e.value = v.cycle_string();
    }
  });
  for (auto& e : out) r.entries.push_back(std::move(e));

  for (const auto& link : ctx.links) {
    const std::vector<int> cycle(link.cycle.begin(), link.cycle.end());
    const std::string at = "V" + std::to_string(link.point);
    const SemidirectElement before = ctx.model->evaluate(cycle_relator(cycle).word());
    r.add("cycle " + at + " nontrivial before reduction", before.sigma.is_identity() && !before.f.is_identity(),
          before.f.is_identity() ? "trivial" : "nontrivial", "hexagon relations lie in the kernel of the reduction");
    if (!ctx.paper) continue;
    std::set<std::string> values;
    for (const auto& num : cycle_numerations(cycle)) {
      values.insert(value_of(rho(ctx.model->evaluate(cycle_relator(num).word()))));
    }
    r.add("cycle " + at + " all 12 numerations agree", values.size() == 1 && *values.begin() == "1",
          std::to_string(values.size()) + " distinct value(s)", "any numeration of a cycle gives the same relation");
  }
}

void ax_suite(const Context& ctx, Report& r) {
  const AxFixture ax = fixtures::ax_relations();
  for (const auto& [label, w] : ax.relations) {
    const MElement v = rho(ctx.model->evaluate(w));
    r.add(label + " " + to_string(w), v.is_identity(), value_of(v), label);
  }
}

RoleTable expected_roles() {
  using enum RolePair;
  const std::set<RolePair> all{ab, de, bd, ea, ad, be};
  return {{1, {de, bd, ea, ad, be}}, {2, all},
          {3, {de, bd, ea, ad}},     {4, {bd, ea, ad, be}},
          {5, all},                  {6, {bd, ea, ad, be}},
          {7, {ab, bd, ea, ad}},     {8, {ab, de, bd, ea, ad}},
          {9, {ab, bd, ea, ad, be}}};
}

std::string roles_string(const std::set<RolePair>& s) {
  std::string out;
  for (auto p : kRolePairs) {
    if (s.contains(p)) out += (out.empty() ? "" : " ") + to_string(p);
  }
  return out.empty() ? "-" : out;
}

void tables_suite(const Context& ctx, Report& r) {
  const NonRelTable table = fixtures::nonrel_pairs();
  const Presentation plain = generate(ctx.graph, ctx.links, Variant::plain);
  const CoverageReport cov = coverage_counts(plain, table);
  auto show = [](std::size_t a, std::size_t b) { return std::to_string(a) + " + " + std::to_string(b); };
  r.add("generator pairs disjoint + adjacent", cov.disjoint == 297 && cov.adjacent == 54 && cov.total_pairs == 351,
        show(cov.disjoint, cov.adjacent) + " = " + std::to_string(cov.total_pairs), "351 pairs of 27 generators");
  r.add("given commutation + braid relations", cov.disjoint_given == 264 && cov.adjacent_given == 44,
        show(cov.disjoint_given, cov.adjacent_given), "264 commutations and 44 triple relations");
  r.add("pairs without a given order relation", cov.missing == 43 && cov.total_pairs - 308 == cov.missing,
        std::to_string(cov.missing), "351 - 308 = 43");
  r.add("missing pairs disjoint + adjacent", cov.missing_disjoint == 33 && cov.missing_adjacent == 10 && cov.consistent,
        show(cov.missing_disjoint, cov.missing_adjacent), "missing order relations");

  const RoleTable expected = expected_roles();
  RoleTable got;
  std::string error;
  try {
    got = classify_missing(table, ctx.links);
  } catch (const Error& e) {
    error = e.what();
  }
  r.add("missing pairs avoid roles c and f", error.empty(), error.empty() ? "ok" : error,
        "missing relations involve only a, b, d, e");
  for (const auto& [point, roles] : expected) {
    const auto it = got.find(point);
    const std::set<RolePair> have = it == got.end() ? std::set<RolePair>{} : it->second;
    r.add("missing role pairs at V" + std::to_string(point), have == roles, roles_string(have),
          "order relations not given in advance");
  }

  // Cleaning the miscellaneous relations against the graph relations keeps all of them.
  std::vector<Word> words;
  for (const auto& pr : plain.relators) {
    if (pr.kind != RelatorKind::square) words.push_back(pr.word);
  }
  const AxFixture ax = fixtures::ax_relations();
  for (const auto& [label, w] : ax.relations) words.push_back(w);
  const CleanReport cleaned = clean(words);
  std::set<Word> misc;
  for (const auto& m : cleaned.misc) misc.insert(m.canonical());
  std::size_t kept = 0;
  for (const auto& [label, w] : ax.relations) kept += misc.contains(canonical_relator(w).canonical());
  r.add("miscellaneous relations survive cleaning", kept == 25 && misc.size() == 25,
        std::to_string(kept) + " of 25, " + std::to_string(misc.size()) + " misc", "25 miscellaneous relations");
}

void center_suite(const Context& ctx, Report& r) {
  const std::array<std::pair<int, int>, 4> expected{{{2, 7}, {7, 10}, {1, 7}, {1, 3}}};
  CenterWitness w;
  try {
    w = center_witness(*ctx.model);
  } catch (const FixtureInconsistency& e) {
    r.add("center witness", false, e.what(), "the center is generated by [t1.1, t3^-1 (t4.4) t3]");
    return;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const auto t = w.tau_images[k].as_transposition();
    r.add("tau" + std::to_string(k + 1) + " image", t && *t == expected[k], w.tau_images[k].cycle_string(),
          "transposition images of the witness factors");
  }
  r.add("center witness", true, value_of(w.value), "the last commutator is z");
  const CenterReport c = center_check(*ctx.model, 0);
  r.add("z commutes with every generator image", c.generators == 27 && c.ok(),
        std::to_string(c.generators_commuting_with_z) + " of " + std::to_string(c.generators), "z is central");
}

void structure_suite(const Context& ctx, Report& r) {
  try {
    const IntMatrix m = kernel_relation_matrix(18);
    const AbelianGroup g = abelianization(m, 35);
    std::string torsion;
    for (auto t : g.torsion) torsion += " " + std::to_string(t);
    r.add("kernel abelianization", g.free_rank == 34 && g.torsion.empty(),
          "Z^" + std::to_string(g.free_rank) + (torsion.empty() ? "" : " torsion" + torsion),
          "central extension of Z^34 by Z");
  } catch (const ArithmeticOverflow& e) {
    r.add("kernel abelianization", false, e.what(), "central extension of Z^34 by Z");
  }
  const NilpotencyReport nil = nilpotency_class_check(200);
  r.add("kernel nilpotent of class 2", nil.class_two(),
        std::to_string(nil.samples) + " triples, " + std::to_string(nil.commutators_outside_z) + " commutators outside <z>, " +
            std::to_string(nil.nontrivial_double_commutators) + " nontrivial double commutators",
        "virtually nilpotent");
  const CenterReport c = center_check(*ctx.model, 200);
  r.add("center is <z>", c.ok(),
        std::to_string(c.generators_commuting_with_z) + "/" + std::to_string(c.generators) + " generators commute with z, " +
            std::to_string(c.samples_not_central) + "/" + std::to_string(c.samples) + " kernel samples not central",
        "<z> is the center");
}

// The bundled small presentations, so that suite `all` covers every fixture.
void bundled_suite(Report& r) {
  struct Case {
    const char* name;
    std::size_t capacity;
    std::size_t order;  // 0: expected to exceed capacity
    const char* anchor;
  };
  const std::array<Case, 3> cases{{{"s4_remark", 10'000, 24, "homomorphic image of S4"},
                                   {"hexagon_quotient", 100'000, 720, "homomorphic image of S6"},
                                   {"hexagon_affine", 100'000, 0, "affine type A5 is infinite"}}};
  for (const auto& c : cases) {
    const RawPresentation p = fixtures::bundled_presentation(c.name);
    const EnumerationResult e = enumerate_cosets(p.generators, p.relators, {}, c.capacity);
    const bool ok = c.order == 0 ? e.status == EnumerationStatus::capacity_exceeded
                                 : e.status == EnumerationStatus::complete && e.index == c.order;
    const std::string value =
        e.status == EnumerationStatus::complete ? "order " + std::to_string(e.index) : "capacity exceeded";
    r.add(std::string("enumerate ") + c.name, ok, value, c.anchor);
  }
}

}  // namespace

Report run_suite(const DegenerationComplex& complex, Suite suite, unsigned threads) {
  Context ctx;
  ctx.complex = complex;
  complex.validate();
  ctx.graph = dual_graph(complex);
  ctx.links = hexagon_links(complex);
  ctx.paper = fixtures::is_paper_labeling(complex);
  ctx.threads = threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : threads;
  if (!ctx.paper && suite != Suite::relators) {
    throw InvalidInput("suite '" + to_string(suite) +
                       "' needs the reference labeling (build --paper-fixture); this complex only supports 'relators'");
  }
  if (ctx.paper) {
    const DegenerationComplex paper = fixtures::load_paper_labeling();
    ctx.model.emplace(ctx.graph, spanning_data(ctx.graph, paper.chords));
  } else {
    ctx.model.emplace(ctx.graph, spanning_data(ctx.graph, SpanningMode::canonical));
  }

  Report r;
  r.command = "verify";
  r.suite = to_string(suite);
  const bool all = suite == Suite::all;
  if (all || suite == Suite::relators) relators_suite(ctx, r);
  if (all || suite == Suite::ax) ax_suite(ctx, r);
  if (all || suite == Suite::tables) tables_suite(ctx, r);
  if (all || suite == Suite::center) center_suite(ctx, r);
  if (all || suite == Suite::structure) structure_suite(ctx, r);
  if (all) bundled_suite(r);
  return r;
}

}  // namespace coxlab
