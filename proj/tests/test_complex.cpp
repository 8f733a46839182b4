#include <doctest.h>

#include <map>
#include <set>

#include "coxlab/complex.hpp"
#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/perm.hpp"

using namespace coxlab;

namespace {

std::set<int> line_set(const HexagonLink& l) { return {l.cycle.begin(), l.cycle.end()}; }

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("grid counts") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{3, 3}, {4, 3}, {3, 5}, {6, 4}}) {
      const DegenerationComplex x = build_torus_triangulation(m, n);
      CHECK(x.points.size() == static_cast<std::size_t>(m * n));
      CHECK(x.lines.size() == static_cast<std::size_t>(3 * m * n));
      CHECK(x.planes.size() == static_cast<std::size_t>(2 * m * n));
      CHECK(x.euler_characteristic() == 0);
      // Brute-force: count incidences line↔plane from the plane side.
      std::map<int, int> seen;
      for (const auto& p : x.planes) {
        for (int l : p.lines) ++seen[l];
      }
      for (const auto& l : x.lines) CHECK(seen[l.id] == 2);
      const DualGraph g = dual_graph(x);
      CHECK(g.edges().size() * 2 == 3 * x.planes.size());
      CHECK(g.is_regular(3));
      CHECK(g.is_connected());
    }
    const DegenerationComplex x = build_torus_triangulation(4, 3);
    CHECK(x.points.size() == 12);
    CHECK(x.lines.size() == 36);
    CHECK(x.planes.size() == 24);
  }

  TEST_CASE("small grids are rejected") {
    CHECK_THROWS_AS(build_torus_triangulation(2, 3), UnsupportedGrid);
    CHECK_THROWS_AS(build_torus_triangulation(3, 1), UnsupportedGrid);
  }

  TEST_CASE("reference labeling anchors") {
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const auto links = hexagon_links(x);
    CHECK(line_set(links[0]) == std::set<int>{1, 2, 4, 6, 13, 22});
    CHECK(line_set(links[8]) == std::set<int>{22, 23, 24, 25, 26, 27});
    CHECK(line_set(links[3]) == std::set<int>{4, 5, 8, 11, 15, 19});
    CHECK(links[5].role(Role::a) == 12);
    CHECK(links[5].role(Role::b) == 25);
    CHECK(links[4].role(Role::d) == 12);
    const DualGraph g = dual_graph(x);
    CHECK(g.vertices().size() == 18);
    CHECK(g.edges().size() == 27);
    CHECK(g.is_regular(3));
  }

  TEST_CASE("hexagon links are 6-cycles with geometric roles") {
    for (const auto& x : {fixtures::load_paper_labeling(), build_torus_triangulation(3, 4)}) {
      const DualGraph g = dual_graph(x);
      for (const auto& link : hexagon_links(x)) {
        for (std::size_t i = 0; i < 6; ++i) {
          for (std::size_t j = i + 1; j < 6; ++j) {
            const bool consecutive = j == i + 1 || (i == 0 && j == 5);
            CHECK(g.adjacent(link.cycle[i], link.cycle[j]) == consecutive);
          }
        }
        CHECK(x.line(link.role(Role::a)).kind == LineKind::horizontal);
        CHECK(x.line(link.role(Role::d)).kind == LineKind::horizontal);
        CHECK(x.line(link.role(Role::b)).kind == LineKind::vertical);
        CHECK(x.line(link.role(Role::e)).kind == LineKind::vertical);
        CHECK(x.line(link.role(Role::c)).kind == LineKind::diagonal);
        CHECK(x.line(link.role(Role::f)).kind == LineKind::diagonal);
        // The six transpositions generate the symmetric group on the six planes.
        std::set<int> planes;
        for (int l : link.cycle) planes.insert(x.line(l).planes.begin(), x.line(l).planes.end());
        CHECK(planes.size() == 6);
        std::map<int, int> local;
        for (int p : planes) local.emplace(p, static_cast<int>(local.size()) + 1);
        std::vector<Permutation> ts;
        for (int l : link.cycle) {
          ts.push_back(Permutation::transposition(local[x.line(l).planes[0]], local[x.line(l).planes[1]], 6));
        }
        CHECK(generates_full_symmetric(ts));
      }
    }
  }

  TEST_CASE("spanning data") {
    const DegenerationComplex x = fixtures::load_paper_labeling();
    const DualGraph g = dual_graph(x);
    const SpanningData paper = spanning_data(g, SpanningMode::paper_fixture);
    CHECK(paper.tree_edges.size() == 17);
    CHECK(paper.chords.size() == 10);
    CHECK(g.cycle_rank() == 10);
    const SpanningData a = spanning_data(g, SpanningMode::canonical);
    const SpanningData b = spanning_data(g, SpanningMode::canonical);
    CHECK(a.tree_edges == b.tree_edges);
    CHECK(a.chords.size() == 10);
    for (std::size_t i = 0; i < a.chords.size(); ++i) {
      CHECK(a.chords[i].line == b.chords[i].line);
      CHECK(a.chords[i].tail < a.chords[i].head);
    }

    // A tree has no chords.
    const DualGraph path({1, 2, 3}, {{1, 1, 2}, {2, 2, 3}});
    CHECK(spanning_data(path, SpanningMode::canonical).chords.empty());
    const DualGraph split({1, 2, 3, 4}, {{1, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(split.is_connected());
    CHECK_THROWS_AS(spanning_data(split, SpanningMode::canonical), InvalidInput);
    // A chord table that disagrees with the graph is rejected.
    std::vector<Chord> bad = x.chords;
    bad[0].line = 1 + (bad[0].line % 27);
    CHECK_THROWS(spanning_data(g, bad));
  }

  TEST_CASE("validation catches broken incidences") {
    DegenerationComplex x = build_torus_triangulation(3, 3);
    x.lines[4].planes[1] = x.lines[4].planes[0];
    CHECK_THROWS_AS(x.validate(), InvalidInput);
  }
}
