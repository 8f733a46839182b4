#include "coxlab/heisenberg.hpp"

#include <algorithm>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) throw ArithmeticOverflow("int64 addition overflow");
  return r;
}

std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw ArithmeticOverflow("int64 subtraction overflow");
  return r;
}

std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("int64 multiplication overflow");
  return r;
}

void check_index(int i, std::size_t n) {
  if (i < 1 || static_cast<std::size_t>(i) > n) throw InvalidInput("index " + std::to_string(i) + " out of range");
}

}  // namespace

ReducedElement ReducedElement::p(int i, std::size_t n) {
  check_index(i, n);
  ReducedElement x(n);
  x.a[static_cast<std::size_t>(i - 1)] = 1;
  return x;
}

ReducedElement ReducedElement::q(int i, std::size_t n) {
  check_index(i, n);
  ReducedElement x(n);
  x.b[static_cast<std::size_t>(i - 1)] = 1;
  return x;
}

ReducedElement ReducedElement::z(std::size_t n) {
  ReducedElement x(n);
  x.zeta = 1;
  return x;
}

ReducedElement ReducedElement::y(CentralY k, std::size_t n) {
  ReducedElement x(n);
  x.c[static_cast<std::size_t>(k)] = 1;
  return x;
}

bool ReducedElement::is_identity() const { return zeta == 0 && is_central_power(); }

bool ReducedElement::is_central_power() const {
  auto zero = [](std::int64_t v) { return v == 0; };
  return std::all_of(c.begin(), c.end(), zero) && std::all_of(a.begin(), a.end(), zero) &&
         std::all_of(b.begin(), b.end(), zero);
}

ReducedElement heisenberg_mul(const ReducedElement& u, const ReducedElement& v) {
  if (u.degree() != v.degree()) throw DegreeMismatch("Heisenberg degree mismatch");
  ReducedElement r(u.degree());
  for (std::size_t k = 0; k < 8; ++k) r.c[k] = add(u.c[k], v.c[k]);
  std::int64_t cross = 0;
  for (std::size_t i = 0; i < u.degree(); ++i) {
    r.a[i] = add(u.a[i], v.a[i]);
    r.b[i] = add(u.b[i], v.b[i]);
    cross = add(cross, mul(u.b[i], v.a[i]));
  }
  r.zeta = sub(add(u.zeta, v.zeta), cross);
  return r;
}

ReducedElement heisenberg_inverse(const ReducedElement& u) {
  ReducedElement r(u.degree());
  for (std::size_t k = 0; k < 8; ++k) r.c[k] = sub(0, u.c[k]);
  std::int64_t cross = 0;
  for (std::size_t i = 0; i < u.degree(); ++i) {
    r.a[i] = sub(0, u.a[i]);
    r.b[i] = sub(0, u.b[i]);
    cross = add(cross, mul(u.b[i], u.a[i]));
  }
  // u·u⁻¹ = ζ + ζ′ + Σ b_i a_i = 0
  r.zeta = sub(sub(0, u.zeta), cross);
  return r;
}

ReducedElement heisenberg_pow(const ReducedElement& u, std::int64_t k) {
  ReducedElement base = k < 0 ? heisenberg_inverse(u) : u;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
  ReducedElement acc(u.degree());
  while (e > 0) {
    if (e & 1U) acc = heisenberg_mul(acc, base);
    e >>= 1U;
    if (e > 0) base = heisenberg_mul(base, base);
  }
  return acc;
}

ReducedElement commutator(const ReducedElement& g, const ReducedElement& h) {
  return heisenberg_mul(heisenberg_mul(heisenberg_inverse(g), heisenberg_inverse(h)), heisenberg_mul(g, h));
}

ReducedElement act(const ReducedElement& x, const Permutation& tau) {
  if (tau.degree() != x.degree()) throw DegreeMismatch("action degree mismatch");
  ReducedElement r = x;
  for (std::size_t i = 0; i < x.degree(); ++i) {
    const auto j = static_cast<std::size_t>(tau(static_cast<int>(i) + 1) - 1);
    r.a[i] = x.a[j];
    r.b[i] = x.b[j];
  }
  return r;
}

std::string to_string(const ReducedElement& x) {
  static constexpr std::array<const char*, 8> names{"y4", "y5", "y9", "y10", "y78", "y68", "y31", "y21"};
  std::ostringstream out;
  bool first = true;
  auto term = [&](const std::string& sym, std::int64_t e) {
    if (e == 0) return;
    if (!first) out << ' ';
    first = false;
    out << sym;
    if (e != 1) out << '^' << e;
  };
  for (std::size_t k = 0; k < 8; ++k) term(names[k], x.c[k]);
  for (std::size_t i = 0; i < x.degree(); ++i) term("p" + std::to_string(i + 1), x.a[i]);
  for (std::size_t i = 0; i < x.degree(); ++i) term("q" + std::to_string(i + 1), x.b[i]);
  term("z", x.zeta);
  return first ? "1" : out.str();
}

MElement MElement::inverse() const {
  const Permutation si = sigma.inverse();
  return {si, act(heisenberg_inverse(x), si)};
}

MElement operator*(const MElement& g, const MElement& h) {
  return {compose(g.sigma, h.sigma), heisenberg_mul(act(g.x, h.sigma), h.x)};
}

MElement commutator(const MElement& g, const MElement& h) { return g.inverse() * h.inverse() * g * h; }

ReducedElement rho_letter(int chord, int i, std::size_t n) {
  using enum CentralY;
  switch (chord) {
    case 1: return ReducedElement::p(i, n);
    case 2: return heisenberg_mul(ReducedElement::y(y21, n), ReducedElement::p(i, n));
    case 3: return heisenberg_mul(ReducedElement::y(y31, n), ReducedElement::p(i, n));
    case 4: return ReducedElement::y(y4, n);
    case 5: return ReducedElement::y(y5, n);
    case 6: return heisenberg_mul(ReducedElement::y(y68, n), ReducedElement::q(i, n));
    case 7: return heisenberg_mul(ReducedElement::y(y78, n), ReducedElement::q(i, n));
    case 8: return ReducedElement::q(i, n);
    case 9: return ReducedElement::y(y9, n);
    case 10: return ReducedElement::y(y10, n);
    default: throw InvalidInput("the reduction is defined on chords 1..10 only, got " + std::to_string(chord));
  }
}

ReducedElement rho(const FreeTuple& f) {
  const std::size_t n = f.size();
  // Different coordinates commute in M as well, so their order is irrelevant.
  ReducedElement acc(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int l : f.coords()[i]) {
      const ReducedElement g = rho_letter(l < 0 ? -l : l, static_cast<int>(i) + 1, n);
      acc = heisenberg_mul(acc, l < 0 ? heisenberg_inverse(g) : g);
    }
  }
  return acc;
}

MElement rho(const SemidirectElement& g) { return {g.sigma, rho(g.f)}; }

AbImage ab_image_letter(int chord) {
  if (chord < 1 || chord > 10) throw InvalidInput("chord letter out of range");
  AbImage e{};
  e[static_cast<std::size_t>(chord - 1)] = 1;
  return e;
}

AbImage ab_image(const ReducedElement& x) {
  AbImage e{};
  auto at = [&](int k) -> std::int64_t& { return e[static_cast<std::size_t>(k - 1)]; };
  using enum CentralY;
  auto c = [&](CentralY k) { return x.c[static_cast<std::size_t>(k)]; };
  at(4) = add(at(4), c(y4));
  at(5) = add(at(5), c(y5));
  at(9) = add(at(9), c(y9));
  at(10) = add(at(10), c(y10));
  at(7) = add(at(7), c(y78));
  at(8) = sub(at(8), c(y78));
  at(6) = add(at(6), c(y68));
  at(8) = sub(at(8), c(y68));
  at(3) = add(at(3), c(y31));
  at(1) = sub(at(1), c(y31));
  at(2) = add(at(2), c(y21));
  at(1) = sub(at(1), c(y21));
  for (std::size_t i = 0; i < x.degree(); ++i) {
    at(1) = add(at(1), x.a[i]);
    at(8) = add(at(8), x.b[i]);
  }
  return e;
}

bool kernel_member(const ReducedElement& x) {
  const AbImage e = ab_image(x);
  return std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace coxlab
