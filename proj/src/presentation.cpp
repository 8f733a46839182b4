#include "coxlab/presentation.hpp"

#include <algorithm>

#include "coxlab/error.hpp"

namespace coxlab {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::plain: return "plain";
    case Variant::fork: return "fork";
    case Variant::quotient: return "quotient";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "plain") return Variant::plain;
  if (s == "fork") return Variant::fork;
  if (s == "quotient") return Variant::quotient;
  throw InvalidInput("unknown variant '" + s + "'");
}

std::string to_string(RelatorKind k) {
  switch (k) {
    case RelatorKind::square: return "square";
    case RelatorKind::commutation: return "commutation";
    case RelatorKind::braid: return "braid";
    case RelatorKind::fork: return "fork";
    case RelatorKind::cycle: return "cycle";
    case RelatorKind::other: return "other";
  }
  return "?";
}

std::size_t Presentation::count(RelatorKind k) const {
  return static_cast<std::size_t>(
      std::count_if(relators.begin(), relators.end(), [k](const PresentedRelator& r) { return r.kind == k; }));
}

std::vector<Word> Presentation::words() const {
  std::vector<Word> out;
  out.reserve(relators.size());
  for (const auto& r : relators) out.push_back(r.word);
  return out;
}

std::set<Word> Presentation::canonical_forms() const {
  std::set<Word> out;
  for (const auto& r : relators) out.insert(canonical_cyclic_form(r.word));
  return out;
}

Relator cycle_relator(const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw InvalidInput("a cycle needs at least 3 edges");
  Word w(cycle.begin(), cycle.end() - 1);
  // (u₂⋯u_m)⁻¹ = u_m⋯u₂ for involutions
  for (auto it = cycle.rbegin(); it != cycle.rend() - 1; ++it) w.push_back(*it);
  return Relator(w);
}

std::vector<std::vector<int>> cycle_numerations(const std::vector<int>& cycle) {
  std::vector<std::vector<int>> out;
  const std::size_t m = cycle.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t k = 0; k < m; ++k) {
      std::vector<int> c(m);
      for (std::size_t i = 0; i < m; ++i) {
        c[i] = dir == 0 ? cycle[(k + i) % m] : cycle[(k + m - i) % m];
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

Presentation generate(const DualGraph& graph, const std::vector<HexagonLink>& links, Variant variant) {
  Presentation p;
  p.variant = variant;
  p.generator_count = static_cast<int>(graph.edges().size());
  const int n = p.generator_count;
  for (int u = 1; u <= n; ++u) p.relators.push_back({Word{u, u}, RelatorKind::square});
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (graph.adjacent(u, v)) {
        p.relators.push_back({Word{u, v, u, v, u, v}, RelatorKind::braid});
      } else {
        p.relators.push_back({Word{u, v, u, v}, RelatorKind::commutation});
      }
    }
  }
  if (variant == Variant::plain) return p;

  for (int vertex : graph.vertices()) {
    const auto& es = graph.incident(vertex);
    if (es.size() > 3) {
      throw InvalidInput("fork relators need vertex degree at most 3; vertex " + std::to_string(vertex) +
                         " has degree " + std::to_string(es.size()));
    }
    if (es.size() < 3) continue;
    for (std::size_t k = 0; k < 3; ++k) {
      const int u = es[k];
      const int v = es[(k + 1) % 3];
      const int w = es[(k + 2) % 3];
      const int lo = std::min(v, w);
      const int hi = std::max(v, w);
      // [u, hi·lo·hi] = u · hi lo hi · u · hi lo hi
      p.relators.push_back({Word{u, hi, lo, hi, u, hi, lo, hi}, RelatorKind::fork});
    }
  }
  if (variant == Variant::fork) return p;

  for (const auto& link : links) {
    std::vector<int> cycle(link.cycle.begin(), link.cycle.end());
    p.relators.push_back({cycle_relator(cycle).word(), RelatorKind::cycle, link.point});
  }
  return p;
}

const Word& AxFixture::operator[](const std::string& label) const {
  for (const auto& [l, w] : relations) {
    if (l == label) return w;
  }
  throw InvalidInput("no relation labelled " + label);
}

std::string to_string(RolePair p) {
  switch (p) {
    case RolePair::ab: return "ab";
    case RolePair::de: return "de";
    case RolePair::bd: return "bd";
    case RolePair::ea: return "ea";
    case RolePair::ad: return "ad";
    case RolePair::be: return "be";
  }
  return "?";
}

namespace {

std::optional<RolePair> role_pair(Role x, Role y) {
  auto is = [&](Role p, Role q) { return (x == p && y == q) || (x == q && y == p); };
  if (is(Role::a, Role::b)) return RolePair::ab;
  if (is(Role::d, Role::e)) return RolePair::de;
  if (is(Role::b, Role::d)) return RolePair::bd;
  if (is(Role::e, Role::a)) return RolePair::ea;
  if (is(Role::a, Role::d)) return RolePair::ad;
  if (is(Role::b, Role::e)) return RolePair::be;
  return std::nullopt;
}

}  // namespace

RoleTable classify_missing(const NonRelTable& table, const std::vector<HexagonLink>& links) {
  RoleTable out;
  for (const auto& link : links) out[link.point];
  for (auto [i, j] : table.pairs) {
    const std::string name = "pair (" + std::to_string(i) + " " + std::to_string(j) + ")";
    int hits = 0;
    for (const auto& link : links) {
      auto ri = link.role_of(i);
      auto rj = link.role_of(j);
      if (!ri || !rj) continue;
      ++hits;
      auto rp = role_pair(*ri, *rj);
      if (!rp) {
        throw FixtureInconsistency(name + " at point " + std::to_string(link.point) + " has roles " +
                                   std::string{role_name(*ri), role_name(*rj)} + ", outside {a,b,d,e}");
      }
      out[link.point].insert(*rp);
    }
    if (hits == 0) throw FixtureInconsistency(name + " does not share a point");
  }
  return out;
}

CoverageReport coverage_counts(const Presentation& presentation, const NonRelTable& table) {
  CoverageReport r;
  PairSet disjoint;
  PairSet adjacent;
  for (const auto& pr : presentation.relators) {
    std::pair<int, int> p;
    if (pr.kind == RelatorKind::commutation && is_commutation_form(pr.word, &p)) disjoint.insert(p);
    if (pr.kind == RelatorKind::braid && is_braid_form(pr.word, &p)) adjacent.insert(p);
  }
  const auto n = static_cast<std::size_t>(presentation.generator_count);
  r.total_pairs = n * (n - 1) / 2;
  r.disjoint = disjoint.size();
  r.adjacent = adjacent.size();
  PairSet missing;
  for (auto [i, j] : table.pairs) missing.insert(unordered_pair(i, j));
  r.missing = missing.size();
  for (const auto& p : missing) {
    if (disjoint.contains(p)) ++r.missing_disjoint;
    if (adjacent.contains(p)) ++r.missing_adjacent;
  }
  r.disjoint_given = r.disjoint - r.missing_disjoint;
  r.adjacent_given = r.adjacent - r.missing_adjacent;
  r.consistent = r.disjoint + r.adjacent == r.total_pairs && r.missing == table.pairs.size() &&
                 r.missing_disjoint + r.missing_adjacent == r.missing;
  return r;
}

}  // namespace coxlab
