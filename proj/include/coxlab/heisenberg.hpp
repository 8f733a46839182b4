#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "coxlab/perm.hpp"
#include "coxlab/semidirect.hpp"

namespace coxlab {

/// Index into the central block: y4, y5, y9, y10, y78, y68, y31, y21.
enum class CentralY { y4, y5, y9, y10, y78, y68, y31, y21 };

/// Normal form c·p^a·q^b·z^ζ in M = ℤ⁸ × H, where H is generated by p_i, q_i
/// (i = 1..n) and z with [p_i, q_i] = z central and all other pairs commuting.
/// Commutators are [g,h] = g⁻¹h⁻¹gh; hence q_i p_i = p_i q_i z⁻¹ and
///   (c,a,b,ζ)(c′,a′,b′,ζ′) = (c+c′, a+a′, b+b′, ζ+ζ′ − Σ b_i a′_i).
struct ReducedElement {
  std::array<std::int64_t, 8> c{};
  std::vector<std::int64_t> a;
  std::vector<std::int64_t> b;
  std::int64_t zeta = 0;

  explicit ReducedElement(std::size_t n = 18) : a(n, 0), b(n, 0) {}

  static ReducedElement p(int i, std::size_t n = 18);
  static ReducedElement q(int i, std::size_t n = 18);
  static ReducedElement z(std::size_t n = 18);
  static ReducedElement y(CentralY k, std::size_t n = 18);

  std::size_t degree() const { return a.size(); }
  bool is_identity() const;
  bool is_central_power() const;  // c = a = b = 0

  friend bool operator==(const ReducedElement&, const ReducedElement&) = default;
};

/// Throws ArithmeticOverflow instead of wrapping.
ReducedElement heisenberg_mul(const ReducedElement& u, const ReducedElement& v);
ReducedElement heisenberg_inverse(const ReducedElement& u);
ReducedElement heisenberg_pow(const ReducedElement& u, std::int64_t k);
/// g⁻¹h⁻¹gh.
ReducedElement commutator(const ReducedElement& g, const ReducedElement& h);
/// x^τ: a_i, b_i ← a_{τ(i)}, b_{τ(i)}; c and ζ fixed.
ReducedElement act(const ReducedElement& x, const Permutation& tau);

std::string to_string(const ReducedElement& x);

/// Element of S_n ⋉ M, same convention as the free model: (σ,x)(τ,y) = (στ, x^τ y).
struct MElement {
  Permutation sigma;
  ReducedElement x;

  static MElement identity(std::size_t n = 18) { return {Permutation(n), ReducedElement(n)}; }
  bool is_identity() const { return sigma.is_identity() && x.is_identity(); }
  MElement inverse() const;
  friend MElement operator*(const MElement& g, const MElement& h);
  friend bool operator==(const MElement&, const MElement&) = default;
};

MElement commutator(const MElement& g, const MElement& h);

/// ρ on one chord letter at coordinate i (chords labelled as in the shipped
/// fixture): x4,x5,x9,x10 ↦ y; x7 ↦ y78·q_i, x6 ↦ y68·q_i, x3 ↦ y31·p_i,
/// x2 ↦ y21·p_i, x1 ↦ p_i, x8 ↦ q_i.
ReducedElement rho_letter(int chord, int i, std::size_t n = 18);

/// Substitutes coordinatewise and collects. Needs 10 chord letters.
ReducedElement rho(const FreeTuple& f);
MElement rho(const SemidirectElement& g);

/// Exponent vector over e1..e10.
using AbImage = std::array<std::int64_t, 10>;
AbImage ab_image(const ReducedElement& x);
AbImage ab_image_letter(int chord);
bool kernel_member(const ReducedElement& x);

}  // namespace coxlab
