#pragma once

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxlab {

/// Signed generator indices; a negative letter is the formal inverse.
/// Inside presentations of involutive groups every letter is positive.
using Word = std::vector<int>;

/// Unordered pairs of generators stored as (min, max).
using PairSet = std::set<std::pair<int, int>>;

inline std::pair<int, int> unordered_pair(int i, int j) {
  return i < j ? std::pair{i, j} : std::pair{j, i};
}

/// Throws InvalidInput if a letter is 0 or exceeds the alphabet.
void check_letters(std::span<const int> w, int alphabet_size);

std::string to_string(std::span<const int> w);

/// Normalizes signs to positive and cancels adjacent equal letters until none remain.
Word free_reduce_involutive(std::span<const int> w);

/// Fixpoint of {uu -> ε, u_i u_j u_i -> u_j when (i,j) ∈ comm}.
Word reduce_with_commutations(std::span<const int> w, const PairSet& comm);

/// As reduce_with_commutations, but on the cyclic word: rewrites may span
/// the seam. The result is conjugate to the input.
Word cyclically_reduce(std::span<const int> w, const PairSet& comm = {});

/// Minimum over all rotations of w and of its reversal.
Word canonical_cyclic_form(std::span<const int> w);

/// A relator of an involutive presentation, kept with its canonical form.
class Relator {
 public:
  /// Reduces `w` involutively and cyclically. Throws TrivialRelator if nothing remains.
  explicit Relator(std::span<const int> w);

  const Word& word() const { return word_; }
  const Word& canonical() const { return canonical_; }
  std::size_t length() const { return word_.size(); }

  friend bool operator==(const Relator& a, const Relator& b) { return a.canonical_ == b.canonical_; }
  friend bool operator<(const Relator& a, const Relator& b) { return a.canonical_ < b.canonical_; }

 private:
  Word word_;
  Word canonical_;
};

inline Relator canonical_relator(std::span<const int> w) { return Relator(w); }

/// True if w = x y x y with x != y; fills the pair.
bool is_commutation_form(std::span<const int> w, std::pair<int, int>* pair = nullptr);
/// True if w = x y x y x y with x != y; fills the pair.
bool is_braid_form(std::span<const int> w, std::pair<int, int>* pair = nullptr);

struct CleanReport {
  std::set<int> squares;
  PairSet commutations;
  PairSet braids;
  std::vector<Relator> misc;
  int passes = 0;
};

/// Classifies relators by the cleaning procedure: squares are dropped,
/// commutations are discovered and used as rewriting rules until no new
/// one appears, braids are recorded (never used for rewriting), and the
/// rest are reduced and deduplicated up to rotation and reversal.
CleanReport clean(std::span<const Word> relators);

/// Relators equivalent to the report (squares, commutations, braids, misc).
std::vector<Word> relators_of(const CleanReport& report);

struct DerivationStep {
  Word word;
  std::string rule;
};

struct Derivation {
  bool found = false;
  /// From the target to the empty word or a known relator; empty if not found.
  std::vector<DerivationStep> chain;
  std::size_t states_explored = 0;
  bool budget_exhausted = false;
};

struct DeriveOptions {
  /// A substitution may lengthen the word by at most this many letters.
  std::size_t max_growth = 0;
  std::size_t max_states = 2'000'000;
};

/// Breadth-first search for a proof that `target` is trivial given `known`.
///
/// States are cyclic words (conjugation preserves triviality). A move replaces
/// a cyclic subword s by t⁻¹ where st is a rotation or reversal of a known
/// relator, then reduces involutively. The search stops at the empty word or
/// at a word whose canonical form is that of a known relator. A negative
/// answer only means nothing was found within the bounds.
/// Throws InvalidInput if max_len < |target| or target is empty.
Derivation derive_bounded(std::span<const Word> known, const Word& target, std::size_t max_len,
                          const DeriveOptions& options = {});

}  // namespace coxlab
