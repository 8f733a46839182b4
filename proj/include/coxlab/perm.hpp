#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxlab {

/// A bijection on {1..n} in one-line notation.
///
/// Composition follows (p * q)(i) = p(q(i)): the right factor acts first.
/// Word evaluation multiplies letter images left to right under this rule.
class Permutation {
 public:
  explicit Permutation(std::size_t degree = 0);

  /// Validates that `images` is a bijection on 1..images.size().
  static Permutation from_images(std::vector<int> images);

  /// The transposition (a b) on n points. Throws InvalidTransposition.
  static Permutation transposition(int a, int b, std::size_t n);

  std::size_t degree() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// The moved pair if this is a transposition.
  std::optional<std::pair<int, int>> as_transposition() const;

  /// Cycle notation, e.g. "(2 7)" or "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// (p ∘ q)(i) = p(q(i)). Throws DegreeMismatch.
Permutation compose(const Permutation& p, const Permutation& q);

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// True iff the transpositions generate the full symmetric group, i.e. the
/// graph with one edge per transposition is connected on {1..n}.
/// Throws InvalidInput for non-transpositions or mixed degrees.
bool generates_full_symmetric(std::span<const Permutation> gens);

}  // namespace coxlab
