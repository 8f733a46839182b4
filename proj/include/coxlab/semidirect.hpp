#pragma once

#include <vector>

#include "coxlab/complex.hpp"
#include "coxlab/perm.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

/// A reduced word in a free group; letter ±k is the k-th chord generator or its inverse.
using FreeWord = std::vector<int>;

FreeWord free_reduce(const FreeWord& w);
/// Concatenate and reduce at the seam (inputs assumed reduced).
FreeWord free_mul(const FreeWord& u, const FreeWord& v);
FreeWord free_inverse(const FreeWord& w);

/// n-tuple of free words: the direct product of n copies of a free group.
class FreeTuple {
 public:
  FreeTuple() = default;
  explicit FreeTuple(std::size_t n) : coords_(n) {}
  explicit FreeTuple(std::vector<FreeWord> coords);

  std::size_t size() const { return coords_.size(); }
  /// 1-based.
  const FreeWord& operator[](int i) const { return coords_.at(static_cast<std::size_t>(i - 1)); }
  void set(int i, FreeWord w);
  const std::vector<FreeWord>& coords() const { return coords_; }

  bool is_identity() const;
  FreeTuple inverse() const;
  /// (f^τ)_i = f_{τ(i)}.
  FreeTuple acted(const Permutation& tau) const;

  friend FreeTuple operator*(const FreeTuple& f, const FreeTuple& g);
  friend bool operator==(const FreeTuple&, const FreeTuple&) = default;

 private:
  std::vector<FreeWord> coords_;
};

/// Element of S_n ⋉ F★: (σ,f)(τ,g) = (σ∘τ, f^τ·g).
struct SemidirectElement {
  Permutation sigma;
  FreeTuple f;

  static SemidirectElement identity(int n) { return {Permutation(n), FreeTuple(static_cast<std::size_t>(n))}; }
  bool is_identity() const { return sigma.is_identity() && f.is_identity(); }
  SemidirectElement inverse() const;

  friend SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y);
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
};

/// Φ for a fixed dual graph and spanning data: a tree edge between planes
/// α, β goes to ((α β), 1); a chord x from α to β goes to ((α β), f) with
/// f_α = x, f_β = x⁻¹ and every other coordinate empty.
class SemidirectModel {
 public:
  SemidirectModel(const DualGraph& graph, const SpanningData& span);

  int degree() const { return degree_; }
  int chord_count() const { return static_cast<int>(span_.chords.size()); }
  int generator_count() const { return static_cast<int>(images_.size()); }
  const SpanningData& spanning() const { return span_; }

  /// Throws InvalidInput for an edge not in the graph.
  const SemidirectElement& phi(int edge) const;
  /// ψ: the permutation part of Φ.
  const Permutation& psi(int edge) const { return phi(edge).sigma; }
  /// Left-to-right product of Φ over the letters; negative letters use inverses.
  SemidirectElement evaluate(std::span<const int> w) const;
  Permutation evaluate_permutation(std::span<const int> w) const;

 private:
  int degree_ = 0;
  SpanningData span_;
  std::vector<SemidirectElement> images_;
};

}  // namespace coxlab
