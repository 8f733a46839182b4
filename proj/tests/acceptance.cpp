// One line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "coxlab/complex.hpp"
#include "coxlab/enumerate.hpp"
#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/heisenberg.hpp"
#include "coxlab/perm.hpp"
#include "coxlab/presentation.hpp"
#include "coxlab/semidirect.hpp"
#include "coxlab/smith.hpp"
#include "coxlab/structure.hpp"
#include "oracles.hpp"

using namespace coxlab;

namespace {

struct Check {
  std::ostringstream detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Check&)>& body) {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.ok = false;
    c.detail << " [exception: " << e.what() << "]";
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (s >= limit_s) {
    c.ok = false;
    c.detail << " [over time limit " << limit_s << " s]";
  }
  if (!c.ok) ++failures;
  std::printf("criterion %d %-28s %s (%.3f s)%s\n", id, title, c.ok ? "PASS" : "FAIL", s, c.detail.str().c_str());
}

// Two lines meet in a plane iff their plane pairs intersect.
bool share_plane(const Line& x, const Line& y) {
  for (int p : x.planes) {
    if (p == y.planes[0] || p == y.planes[1]) return true;
  }
  return false;
}

void complex_counts(Check& c, const DegenerationComplex& x, const std::vector<Chord>& chords, const char* name) {
  const std::string n = name;
  c.expect(x.points.size() == 9 && x.lines.size() == 27 && x.planes.size() == 18, n + " counts");
  c.expect(x.euler_characteristic() == 0, n + " euler characteristic");
  const DualGraph g = dual_graph(x);
  c.expect(g.is_regular(3) && g.is_connected(), n + " dual graph 3-regular connected");
  c.expect(g.cycle_rank() == 10, n + " cycle rank");
  const SpanningData s = chords.empty() ? spanning_data(g, SpanningMode::canonical) : spanning_data(g, chords);
  c.expect(s.tree_edges.size() == 17 && s.chords.size() == 10, n + " spanning tree 17 + 10 chords");
  c.detail << ' ' << name << ": " << x.points.size() << '/' << x.lines.size() << '/' << x.planes.size()
           << " chi=" << x.euler_characteristic() << " rank=" << g.cycle_rank() << " tree=" << s.tree_edges.size()
           << ';';
}

}  // namespace

int main() {
  criterion(1, "complex counts", 0.1, [](Check& c) {
    const DegenerationComplex paper = fixtures::load_paper_labeling();
    complex_counts(c, paper, paper.chords, "paper");
    complex_counts(c, build_torus_triangulation(3, 3), {}, "generated");
  });

  criterion(2, "pair accounting", 0.1, [](Check& c) {
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const NonRelTable table = fixtures::nonrel_pairs();
    std::size_t disjoint = 0, adjacent = 0;
    for (const auto& u : x.lines) {
      for (const auto& v : x.lines) {
        if (u.id < v.id) ++(share_plane(u, v) ? adjacent : disjoint);
      }
    }
    c.expect(disjoint == 297 && adjacent == 54 && disjoint + adjacent == 351, "297 + 54 = 351");
    std::size_t missing_disjoint = 0, missing_adjacent = 0;
    bool diagonal_member = false;
    bool unshared = false;
    for (auto [i, j] : table.pairs) {
      const Line& u = x.line(i);
      const Line& v = x.line(j);
      ++(share_plane(u, v) ? missing_adjacent : missing_disjoint);
      diagonal_member |= u.kind == LineKind::diagonal || v.kind == LineKind::diagonal;
      std::set<int> pu(u.points.begin(), u.points.end());
      unshared |= !pu.contains(v.points[0]) && !pu.contains(v.points[1]);
    }
    c.expect(table.pairs.size() == 43 && 351 - 308 == 43, "43 missing pairs");
    c.expect(missing_disjoint == 33 && missing_adjacent == 10, "33 + 10 split");
    c.expect(!diagonal_member, "no diagonal (role c/f) member");
    c.expect(!unshared, "every pair shares a point");
    const CoverageReport cov = coverage_counts(generate(dual_graph(x), hexagon_links(x), Variant::plain), table);
    c.expect(cov.disjoint_given == 264 && cov.adjacent_given == 44 && cov.consistent, "264 + 44 given");

    using enum RolePair;
    const std::set<RolePair> all{ab, de, bd, ea, ad, be};
    const RoleTable expected{{1, {de, bd, ea, ad, be}}, {2, all}, {3, {de, bd, ea, ad}}, {4, {bd, ea, ad, be}},
                             {5, all}, {6, {bd, ea, ad, be}}, {7, {ab, bd, ea, ad}}, {8, {ab, de, bd, ea, ad}},
                             {9, {ab, bd, ea, ad, be}}};
    c.expect(classify_missing(table, hexagon_links(x)) == expected, "role table row-for-row");
    c.detail << " disjoint/adjacent " << disjoint << '/' << adjacent << ", missing " << missing_disjoint << '+'
             << missing_adjacent << ", given " << cov.disjoint_given << '+' << cov.adjacent_given << ';';
  });

  criterion(3, "relator suite", 2.0, [](Check& c) {
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const DualGraph g = dual_graph(x);
    const auto links = hexagon_links(x);
    const SemidirectModel model(g, spanning_data(g, x.chords));
    const Presentation p = generate(g, links, Variant::quotient);
    c.expect(p.count(RelatorKind::square) == 27 && p.count(RelatorKind::commutation) == 297 &&
                 p.count(RelatorKind::braid) == 54 && p.count(RelatorKind::fork) == 54 &&
                 p.count(RelatorKind::cycle) == 9,
             "27 + 297 + 54 + 54 + 9 relators");
    std::size_t trivial = 0;
    for (const auto& r : p.relators) trivial += rho(model.evaluate(r.word)).is_identity();
    c.expect(trivial == p.relators.size(), "all quotient relators trivial under rho o Phi");
    std::size_t ax_trivial = 0;
    const AxFixture ax = fixtures::ax_relations();
    for (const auto& [label, w] : ax.relations) ax_trivial += rho(model.evaluate(w)).is_identity();
    c.expect(ax.relations.size() == 25 && ax_trivial == 25, "25 AX relations trivial");
    std::size_t nontrivial_before = 0;
    std::size_t agreeing = 0;
    for (const auto& link : links) {
      const std::vector<int> cycle(link.cycle.begin(), link.cycle.end());
      const SemidirectElement v = model.evaluate(cycle_relator(cycle).word());
      nontrivial_before += v.sigma.is_identity() && !v.f.is_identity();
      std::set<std::string> values;
      for (const auto& num : cycle_numerations(cycle)) {
        const MElement m = rho(model.evaluate(cycle_relator(num).word()));
        values.insert(m.sigma.cycle_string() + to_string(m.x));
      }
      agreeing += values.size() == 1 && cycle_numerations(cycle).size() == 12;
    }
    c.expect(nontrivial_before == 9, "9 cycles nontrivial before rho");
    c.expect(agreeing == 9, "12 numerations agree per hexagon");
    c.detail << ' ' << trivial << '/' << p.relators.size() << " relators, " << ax_trivial << "/25 AX, "
             << nontrivial_before << "/9 cycles nontrivial in F*, " << agreeing << "/9 hexagons orientation-stable;";
  });

  criterion(4, "finite quotients", 5.0, [](Check& c) {
    const RawPresentation s4 = fixtures::bundled_presentation("s4_remark");
    const EnumerationResult e4 = enumerate_cosets(s4.generators, s4.relators);
    c.expect(e4.status == EnumerationStatus::complete && e4.index == 24, "order 24");

    const RawPresentation hq = fixtures::bundled_presentation("hexagon_quotient");
    const EnumerationResult e6 = enumerate_cosets(hq.generators, hq.relators);
    c.expect(e6.status == EnumerationStatus::complete && e6.index == 720, "order 720");
    // Lower bound: u_k ↦ (k k+1) on the six planes of a hexagon (indices mod 6)
    // satisfies every relator and generates a group of order 6! = 720.
    std::vector<oracle::Images> gens;
    for (int k = 0; k < 6; ++k) {
      oracle::Images t{0, 1, 2, 3, 4, 5};
      std::swap(t[static_cast<std::size_t>(k)], t[static_cast<std::size_t>((k + 1) % 6)]);
      gens.push_back(t);
    }
    bool satisfied = true;
    for (const auto& r : hq.relators) {
      oracle::Images acc{0, 1, 2, 3, 4, 5};
      for (int l : r) acc = oracle::compose(acc, gens[static_cast<std::size_t>(std::abs(l) - 1)]);
      satisfied &= acc == oracle::Images{0, 1, 2, 3, 4, 5};
    }
    const std::size_t image = oracle::group_order(gens, 6);
    c.expect(satisfied && image == 720, "surjection onto S6");

    const RawPresentation ha = fixtures::bundled_presentation("hexagon_affine");
    const EnumerationResult ea = enumerate_cosets(ha.generators, ha.relators, {}, 100'000);
    c.expect(ea.status == EnumerationStatus::capacity_exceeded, "affine presentation exceeds capacity 1e5");
    c.detail << " |trivia| = " << e4.index << ", |hexagon + cycle| = " << e6.index << " >= |S6 image| = " << image
             << ", affine: " << to_string(ea.status) << ';';
  });

  criterion(5, "kernel structure", 1.0, [](Check& c) {
    const AbelianGroup ab = abelianization(kernel_relation_matrix(18), 35);
    c.expect(ab.free_rank == 34 && ab.torsion.empty(), "Z^34, torsion-free");
    const NilpotencyReport nil = nilpotency_class_check(128, 7);
    c.expect(nil.samples >= 100 && nil.class_two(), "class exactly 2");
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const DualGraph g = dual_graph(x);
    const SemidirectModel model(g, spanning_data(g, x.chords));
    const CenterReport cr = center_check(model, 128, 11);
    c.expect(cr.generators == 27 && cr.generators_commuting_with_z == 27, "z commutes with 27 generator images");
    c.expect(cr.samples >= 100 && cr.samples_not_central == cr.samples, "sampled kernel elements not central");
    c.detail << " rank " << ab.free_rank << ", torsion " << ab.torsion.size() << ", " << nil.samples
             << " triples class 2, z central among " << cr.generators_commuting_with_z << " generators, "
             << cr.samples_not_central << '/' << cr.samples << " samples non-central;";
  });

  criterion(6, "center witness", 0.1, [](Check& c) {
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const DualGraph g = dual_graph(x);
    const SemidirectModel model(g, spanning_data(g, x.chords));
    const CenterWitness w = center_witness(model);
    const std::array<Permutation, 4> expected{
        Permutation::transposition(2, 7, 18), Permutation::transposition(7, 10, 18),
        Permutation::transposition(1, 7, 18), Permutation::transposition(1, 3, 18)};
    for (std::size_t k = 0; k < 4; ++k) c.expect(w.tau_images[k] == expected[k], "tau image");
    const MElement zed{Permutation(18), ReducedElement::z()};
    c.expect(w.value == zed || w.value == zed.inverse(), "value z^{+-1}");
    c.detail << " tau images";
    for (const auto& t : w.tau_images) c.detail << ' ' << t.cycle_string();
    c.detail << ", value " << to_string(w.value.x) << " (sign " << (w.sign > 0 ? "+" : "-") << "1);";
  });

  criterion(7, "derivation replays", 30.0, [](Check& c) {
    const RawPresentation s4 = fixtures::bundled_presentation("s4_remark");
    // xyzyx = zyxyz, i.e. xyzyx·(zyxyz)⁻¹ = 1
    const Derivation trivia = derive_bounded(s4.relators, Word{1, 2, 3, 2, 1, 3, 2, 1, 2, 3}, 40);
    c.expect(trivia.found, "xyzyx = zyxyz");
    c.detail << " trivia " << (trivia.found ? "found" : "not found") << " in " << trivia.chain.size() - 1
             << " steps;";

    const DegenerationComplex x = fixtures::load_paper_labeling();
    const auto links = hexagon_links(x);
    const NonRelTable table = fixtures::nonrel_pairs();
    std::set<std::pair<int, int>> missing;
    for (auto [i, j] : table.pairs) missing.insert(unordered_pair(i, j));
    const AxFixture ax = fixtures::ax_relations();
    struct Case {
      int point;
      const char* ax;
      int rotation;  // numeration starts at role a (0) or d (3)
    };
    for (const Case& k : {Case{1, "AX1", 3}, Case{4, "AX3", 0}, Case{6, "AX4", 0}, Case{9, "AX2", 0}}) {
      const HexagonLink& link = links[static_cast<std::size_t>(k.point - 1)];
      std::vector<Word> known;
      for (std::size_t i = 0; i < 6; ++i) {
        const int u = link.cycle[i];
        known.push_back({u, u});
        for (std::size_t j = i + 1; j < 6; ++j) {
          const int v = link.cycle[j];
          if (missing.contains(unordered_pair(u, v))) continue;
          if (share_plane(x.line(u), x.line(v))) {
            known.push_back({u, v, u, v, u, v});
          } else {
            known.push_back({u, v, u, v});
          }
        }
      }
      known.push_back(ax[k.ax]);
      std::vector<int> cycle;
      for (std::size_t i = 0; i < 6; ++i) cycle.push_back(link.cycle[(i + static_cast<std::size_t>(k.rotation)) % 6]);
      const Derivation d = derive_bounded(known, cycle_relator(cycle).word(), 40);
      c.expect(d.found, std::string("hexagon V") + std::to_string(k.point));
      c.detail << " V" << k.point << ' ' << (d.found ? "found" : "not found") << " (" << d.states_explored
               << " states);";
    }
  });

  std::printf("%s\n", failures == 0 ? "all acceptance criteria pass" : "acceptance FAILED");
  return failures == 0 ? 0 : 1;
}
