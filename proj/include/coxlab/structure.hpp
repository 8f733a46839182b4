#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "coxlab/heisenberg.hpp"
#include "coxlab/semidirect.hpp"
#include "coxlab/smith.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

/// The generator of the center, [τ₁·1, τ₃⁻¹(τ₄·4)τ₃], built from
/// σ₁ = 21·19·8·6, τ₁ = σ₁⁻¹·14·σ₁, σ₂ = 20·24·25·16·11·5,
/// τ₂ = 19·21·14·21·19, τ₃ = σ₂⁻¹τ₂σ₂, τ₄ = σ₂⁻¹·8·σ₂.
struct CenterWitness {
  std::array<Word, 4> tau_words;
  std::array<Permutation, 4> tau_images;
  Word word;
  MElement value;
  /// +1 for z, −1 for z⁻¹.
  int sign = 0;
};

/// Evaluates through ρ∘Φ. Throws FixtureInconsistency unless the value is z^±1
/// with identity permutation part.
CenterWitness center_witness(const SemidirectModel& model);

/// Images ρ(Φ(u)) of all generators, in edge order.
std::vector<MElement> generator_images(const SemidirectModel& model);

/// Random kernel element: c = 0, Σa = Σb = 0, entries in [−bound, bound].
/// `nonzero_ab` forces a ≠ 0 or b ≠ 0.
ReducedElement random_kernel_element(std::uint64_t& state, std::size_t n, std::int64_t bound, bool nonzero_ab);

struct NilpotencyReport {
  std::size_t samples = 0;
  std::size_t commutators_outside_z = 0;
  std::size_t nontrivial_double_commutators = 0;
  /// A sampled pair with [g,h] ≠ 1, showing the class is not 1.
  bool noncommuting_pair_found = false;
  bool class_two() const {
    return commutators_outside_z == 0 && nontrivial_double_commutators == 0 && noncommuting_pair_found;
  }
};

/// Samples triples (g,h,k) of kernel elements deterministically from `seed`.
NilpotencyReport nilpotency_class_check(std::size_t sample_size, std::uint64_t seed = 1);

struct CenterReport {
  std::size_t generators = 0;
  std::size_t generators_commuting_with_z = 0;
  std::size_t samples = 0;
  /// Sampled kernel elements with a ≠ 0 or b ≠ 0 that fail to commute with some transposition.
  std::size_t samples_not_central = 0;
  bool ok() const { return generators_commuting_with_z == generators && samples_not_central == samples; }
};

CenterReport center_check(const SemidirectModel& model, std::size_t sample_size, std::uint64_t seed = 2);

/// Relation matrix of the abelianization of the kernel K = Ker(ab) ∩ H.
/// Columns: u_i = p_i p_n⁻¹ (i < n), v_i = q_i q_n⁻¹ (i < n), z. One row per
/// generator pair, carrying the z-exponent of their commutator.
IntMatrix kernel_relation_matrix(std::size_t n = 18);

}  // namespace coxlab
