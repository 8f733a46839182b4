#include <doctest.h>

#include <random>

#include "coxlab/error.hpp"
#include "coxlab/fixtures.hpp"
#include "coxlab/heisenberg.hpp"
#include "coxlab/semidirect.hpp"
#include "oracles.hpp"

using namespace coxlab;

namespace {

struct Paper {
  DegenerationComplex x = fixtures::load_paper_labeling();
  DualGraph g = dual_graph(x);
  SpanningData span = spanning_data(g, x.chords);
  SemidirectModel model{g, span};
};

SemidirectElement random_semidirect(std::mt19937& rng, int n, int t) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  std::vector<FreeWord> coords(static_cast<std::size_t>(n));
  for (auto& c : coords) {
    c.resize(rng() % 4);
    for (int& l : c) l = (1 + static_cast<int>(rng() % static_cast<unsigned>(t))) * (rng() % 2 ? 1 : -1);
  }
  return {Permutation::from_images(images), FreeTuple(coords)};
}

ReducedElement random_reduced(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> d(-4, 4);
  ReducedElement x(n);
  for (auto& v : x.c) v = d(rng);
  for (auto& v : x.a) v = d(rng);
  for (auto& v : x.b) v = d(rng);
  x.zeta = d(rng);
  return x;
}

std::vector<std::int64_t> ab_vec(const ReducedElement& x) {
  const AbImage e = ab_image(x);
  return {e.begin(), e.end()};
}

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("semidirect multiplication is associative") {
    std::mt19937 rng(1);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_semidirect(rng, 6, 3);
      const auto b = random_semidirect(rng, 6, 3);
      const auto c = random_semidirect(rng, 6, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * a.inverse()).is_identity());
      CHECK((a.inverse() * a).is_identity());
    }
  }

  TEST_CASE("phi: tree edges, chords, involutions") {
    const Paper p;
    std::set<int> chords;
    for (const auto& c : p.span.chords) chords.insert(c.line);
    for (int e = 1; e <= 27; ++e) {
      const SemidirectElement& x = p.model.phi(e);
      const auto t = x.sigma.as_transposition();
      REQUIRE(t);
      const auto& planes = p.x.line(e).planes;
      CHECK(*t == unordered_pair(planes[0], planes[1]));
      CHECK((x * x).is_identity());
      CHECK(x.f.is_identity() == !chords.contains(e));
    }
    const Chord& x4 = p.span.chords[3];
    const SemidirectElement& v = p.model.phi(x4.line);
    CHECK(v.f[x4.tail] == FreeWord{4});
    CHECK(v.f[x4.head] == FreeWord{-4});
    CHECK_THROWS_AS(p.model.phi(28), InvalidInput);
    CHECK_THROWS_AS(p.model.evaluate(Word{1, 0}), InvalidInput);
    CHECK(p.model.evaluate(Word{}).is_identity());
  }

  TEST_CASE("free words") {
    CHECK(free_mul({1, 2}, {-2, 3}) == FreeWord{1, 3});
    CHECK(free_mul({1, 2}, {-2, -1}).empty());
    CHECK(free_inverse({1, -2, 3}) == FreeWord{-3, 2, -1});
    CHECK(free_reduce({1, 2, -2, -1, 3}) == FreeWord{3});
  }

  TEST_CASE("reduction of chord letters") {
    for (int i = 1; i <= 18; ++i) {
      FreeTuple f(18);
      f.set(i, {7, -8});
      CHECK(rho(f) == ReducedElement::y(CentralY::y78));
      FreeTuple g(18);
      g.set(i, {6, -8});
      CHECK(rho(g) == ReducedElement::y(CentralY::y68));
      FreeTuple h(18);
      h.set(i, {3, -1});
      CHECK(rho(h) == ReducedElement::y(CentralY::y31));
    }
    // [p7, q7] = p7⁻¹ q7⁻¹ p7 q7 = z
    FreeTuple c(18);
    c.set(7, {-1, -8, 1, 8});
    CHECK(rho(c) == ReducedElement::z());
    CHECK_THROWS_AS(rho_letter(11, 1), InvalidInput);
  }

  TEST_CASE("Heisenberg product") {
    const auto p1 = ReducedElement::p(1), q1 = ReducedElement::q(1), z = ReducedElement::z();
    CHECK(heisenberg_mul(p1, q1) == heisenberg_mul(heisenberg_mul(q1, p1), z));
    CHECK(commutator(p1, q1) == z);
    CHECK(commutator(p1, ReducedElement::q(2)).is_identity());
    ReducedElement u, v;
    u.c = {1, 2, 3, 4, 5, 6, 7, 8};
    u.zeta = 3;
    v.c = {8, 7, 6, 5, 4, 3, 2, 1};
    v.zeta = -1;
    const ReducedElement w = heisenberg_mul(u, v);
    for (auto x : w.c) CHECK(x == 9);
    CHECK(w.zeta == 2);

    std::mt19937 rng(4);
    for (int t = 0; t < 200; ++t) {
      const auto a = random_reduced(rng, 5), b = random_reduced(rng, 5), c = random_reduced(rng, 5);
      CHECK(heisenberg_mul(heisenberg_mul(a, b), c) == heisenberg_mul(a, heisenberg_mul(b, c)));
      CHECK(heisenberg_mul(a, heisenberg_inverse(a)).is_identity());
      CHECK(heisenberg_mul(a, ReducedElement::z(5)) == heisenberg_mul(ReducedElement::z(5), a));
    }
  }

  TEST_CASE("Heisenberg product matches the rewriting oracle") {
    std::mt19937 rng(9);
    const std::size_t n = 4;
    for (int t = 0; t < 500; ++t) {
      std::vector<oracle::Letter> word(rng() % 9);
      ReducedElement acc(n);
      for (auto& l : word) {
        l = {static_cast<int>(rng() % 3), static_cast<int>(rng() % n), rng() % 2 ? 1 : -1};
        ReducedElement g = l.kind == 0 ? ReducedElement::p(l.index + 1, n)
                           : l.kind == 1 ? ReducedElement::q(l.index + 1, n)
                                         : ReducedElement::z(n);
        if (l.sign < 0) g = heisenberg_inverse(g);
        acc = heisenberg_mul(acc, g);
      }
      const oracle::Collected o = oracle::collect(word, n);
      CHECK(acc.a == o.a);
      CHECK(acc.b == o.b);
      CHECK(acc.zeta == o.zeta);
    }
  }

  TEST_CASE("overflow is an error") {
    ReducedElement big;
    big.zeta = INT64_MAX;
    CHECK_THROWS_AS(heisenberg_mul(big, ReducedElement::z()), ArithmeticOverflow);
    ReducedElement a = ReducedElement::p(1), b = ReducedElement::q(1);
    a.a[0] = INT64_MAX / 2;
    b.b[0] = 4;
    CHECK_THROWS_AS(heisenberg_mul(b, a), ArithmeticOverflow);
    CHECK(heisenberg_pow(ReducedElement::z(), INT64_MIN).zeta == INT64_MIN);
    const ReducedElement z2 = heisenberg_mul(ReducedElement::z(), ReducedElement::z());
    CHECK_THROWS_AS(heisenberg_pow(z2, INT64_MAX / 2 + 1), ArithmeticOverflow);
  }

  TEST_CASE("ab map and kernel") {
    using V = std::vector<std::int64_t>;
    CHECK(ab_vec(ReducedElement::z()) == V(10, 0));
    for (int i = 1; i <= 18; ++i) CHECK(ab_vec(ReducedElement::p(i)) == V{1, 0, 0, 0, 0, 0, 0, 0, 0, 0});
    CHECK(ab_vec(ReducedElement::y(CentralY::y78)) == V{0, 0, 0, 0, 0, 0, 1, -1, 0, 0});
    CHECK(kernel_member(ReducedElement::z()));
    CHECK(kernel_member(heisenberg_mul(ReducedElement::p(1), heisenberg_inverse(ReducedElement::p(2)))));
    CHECK_FALSE(kernel_member(ReducedElement::p(1)));

    // ab is additive, and ab∘ρ agrees with counting chord letters.
    std::mt19937 rng(2);
    for (int t = 0; t < 200; ++t) {
      const auto u = random_reduced(rng, 18), v = random_reduced(rng, 18);
      V sum = ab_vec(u);
      const V w = ab_vec(v);
      for (std::size_t k = 0; k < 10; ++k) sum[k] += w[k];
      CHECK(ab_vec(heisenberg_mul(u, v)) == sum);
      CHECK(kernel_member(u) == (ab_vec(u) == V(10, 0)));
    }
    for (int chord = 1; chord <= 10; ++chord) {
      for (int i = 1; i <= 18; ++i) {
        const AbImage e = ab_image(rho_letter(chord, i));
        CHECK(e == ab_image_letter(chord));
      }
    }
  }

  TEST_CASE("the action permutes indices and respects ab") {
    std::mt19937 rng(6);
    for (int t = 0; t < 100; ++t) {
      const auto x = random_reduced(rng, 18), y = random_reduced(rng, 18);
      std::vector<int> im(18);
      std::iota(im.begin(), im.end(), 1);
      std::shuffle(im.begin(), im.end(), rng);
      const Permutation s = Permutation::from_images(im);
      const ReducedElement ax = act(x, s);
      CHECK(ax.c == x.c);
      CHECK(ax.zeta == x.zeta);
      for (int i = 1; i <= 18; ++i) CHECK(ax.a[static_cast<std::size_t>(i - 1)] == x.a[static_cast<std::size_t>(s(i) - 1)]);
      CHECK(ab_image(ax) == ab_image(x));
      CHECK(act(heisenberg_mul(x, y), s) == heisenberg_mul(act(x, s), act(y, s)));
    }
  }

  TEST_CASE("reduction is compatible with the product on generator images") {
    const Paper p;
    std::mt19937 rng(12);
    for (int t = 0; t < 100; ++t) {
      Word u(rng() % 10), v(rng() % 10);
      for (int& l : u) l = 1 + static_cast<int>(rng() % 27);
      for (int& l : v) l = 1 + static_cast<int>(rng() % 27);
      Word uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(rho(p.model.evaluate(uv)) == rho(p.model.evaluate(u)) * rho(p.model.evaluate(v)));
    }
  }
}
