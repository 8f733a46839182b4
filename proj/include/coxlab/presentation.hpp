#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/complex.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

enum class Variant { plain, fork, quotient };
std::string to_string(Variant v);
Variant variant_from_string(const std::string& s);

enum class RelatorKind { square, commutation, braid, fork, cycle, other };
std::string to_string(RelatorKind k);

/// Kept verbatim: squares u·u are relators of the presentation even though
/// they reduce to the empty word.
struct PresentedRelator {
  Word word;
  RelatorKind kind = RelatorKind::other;
  /// For cycle relators, the point whose hexagon produced it.
  int point = 0;
};

/// An involutive presentation: every generator squares to the identity.
struct Presentation {
  int generator_count = 0;
  std::vector<PresentedRelator> relators;
  Variant variant = Variant::plain;

  std::size_t count(RelatorKind k) const;
  std::vector<Word> words() const;
  std::set<Word> canonical_forms() const;
};

/// Coxeter-type presentation of a graph.
///
/// plain: a square per edge, a commutation per disjoint pair, a braid per
/// adjacent pair. fork: adds [u, wvw] for every vertex with three edges,
/// one relator per choice of u. quotient: adds one cyclic relator per link.
/// Throws InvalidInput for fork/quotient when a vertex has degree above 3.
Presentation generate(const DualGraph& graph, const std::vector<HexagonLink>& links, Variant variant);

/// u₁⋯u_{m−1}·(u₂⋯u_m)⁻¹ for the edge cycle u₁..u_m. Throws InvalidInput if m < 3.
Relator cycle_relator(const std::vector<int>& cycle);

/// All 2m numerations (rotations of both directions) of a cycle.
std::vector<std::vector<int>> cycle_numerations(const std::vector<int>& cycle);

/// The miscellaneous relations of the cleaned presentation, by label (AX1..AX26, no AX9).
struct AxFixture {
  std::vector<std::pair<std::string, Word>> relations;
  const Word& operator[](const std::string& label) const;
};

/// Generator pairs whose order is not given by the cleaned presentation.
struct NonRelTable {
  std::vector<std::pair<int, int>> pairs;
};

enum class RolePair { ab, de, bd, ea, ad, be };
inline constexpr std::array<RolePair, 6> kRolePairs{RolePair::ab, RolePair::de, RolePair::bd,
                                                    RolePair::ea, RolePair::ad, RolePair::be};
std::string to_string(RolePair p);

/// point id → role pairs whose order relation is missing there.
using RoleTable = std::map<int, std::set<RolePair>>;

/// Localizes every table pair at the point the two lines share.
/// Throws FixtureInconsistency for pairs with no common point or with a
/// diagonal (role c or f) member.
RoleTable classify_missing(const NonRelTable& table, const std::vector<HexagonLink>& links);

struct CoverageReport {
  std::size_t total_pairs = 0;
  std::size_t disjoint = 0;
  std::size_t adjacent = 0;
  std::size_t missing = 0;
  std::size_t disjoint_given = 0;
  std::size_t adjacent_given = 0;
  std::size_t missing_disjoint = 0;
  std::size_t missing_adjacent = 0;
  bool consistent = false;
};

/// Splits generator pairs by the commutation/braid relators of `presentation`
/// and removes the table's pairs.
CoverageReport coverage_counts(const Presentation& presentation, const NonRelTable& table);

}  // namespace coxlab
