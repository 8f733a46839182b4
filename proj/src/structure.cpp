#include "coxlab/structure.hpp"

#include <random>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

Word concat(std::initializer_list<Word> parts) {
  Word w;
  for (const auto& p : parts) w.insert(w.end(), p.begin(), p.end());
  return w;
}

// Formal inverse over involutions: the reversed word.
Word rev(const Word& w) { return Word(w.rbegin(), w.rend()); }

}  // namespace

CenterWitness center_witness(const SemidirectModel& model) {
  const Word sigma1{21, 19, 8, 6};
  const Word sigma2{20, 24, 25, 16, 11, 5};
  const Word tau1 = concat({rev(sigma1), {14}, sigma1});
  const Word tau2{19, 21, 14, 21, 19};
  const Word tau3 = concat({rev(sigma2), tau2, sigma2});
  const Word tau4 = concat({rev(sigma2), {8}, sigma2});
  const Word g = concat({tau1, {1}});
  const Word h = concat({rev(tau3), tau4, {4}, tau3});
  // [g,h] = g⁻¹h⁻¹gh
  const Word comm = concat({rev(g), rev(h), g, h});

  CenterWitness w;
  w.tau_words = {tau1, tau2, tau3, tau4};
  for (std::size_t k = 0; k < 4; ++k) w.tau_images[k] = model.evaluate_permutation(w.tau_words[k]);
  w.word = comm;
  w.value = rho(model.evaluate(comm));
  if (!w.value.sigma.is_identity() || !w.value.x.is_central_power() || (w.value.x.zeta != 1 && w.value.x.zeta != -1)) {
    throw FixtureInconsistency("center witness evaluates to " + w.value.sigma.cycle_string() + " · " +
                               to_string(w.value.x) + ", not z^±1");
  }
  w.sign = static_cast<int>(w.value.x.zeta);
  return w;
}

std::vector<MElement> generator_images(const SemidirectModel& model) {
  std::vector<MElement> out;
  for (int e = 1; e <= model.generator_count(); ++e) out.push_back(rho(model.phi(e)));
  return out;
}

ReducedElement random_kernel_element(std::uint64_t& state, std::size_t n, std::int64_t bound, bool nonzero_ab) {
  std::mt19937_64 rng(state);
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  ReducedElement x(n);
  for (;;) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      x.a[i] = d(rng);
      x.b[i] = d(rng);
    }
    std::int64_t sa = 0;
    std::int64_t sb = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      sa += x.a[i];
      sb += x.b[i];
    }
    x.a[n - 1] = -sa;
    x.b[n - 1] = -sb;
    x.zeta = d(rng);
    if (!nonzero_ab || !x.is_central_power()) break;
  }
  state = rng();
  return x;
}

NilpotencyReport nilpotency_class_check(std::size_t sample_size, std::uint64_t seed) {
  NilpotencyReport r;
  std::uint64_t state = seed;
  for (std::size_t s = 0; s < sample_size; ++s) {
    const ReducedElement g = random_kernel_element(state, 18, 5, false);
    const ReducedElement h = random_kernel_element(state, 18, 5, false);
    const ReducedElement k = random_kernel_element(state, 18, 5, false);
    const ReducedElement gh = commutator(g, h);
    ++r.samples;
    if (!gh.is_central_power()) ++r.commutators_outside_z;
    if (!gh.is_identity()) r.noncommuting_pair_found = true;
    if (!commutator(gh, k).is_identity()) ++r.nontrivial_double_commutators;
  }
  return r;
}

CenterReport center_check(const SemidirectModel& model, std::size_t sample_size, std::uint64_t seed) {
  CenterReport r;
  const auto n = static_cast<std::size_t>(model.degree());
  const MElement z{Permutation(n), ReducedElement::z(n)};
  for (const auto& g : generator_images(model)) {
    ++r.generators;
    if (g * z == z * g) ++r.generators_commuting_with_z;
  }
  std::vector<MElement> transpositions;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      transpositions.push_back({Permutation::transposition(i, j, n), ReducedElement(n)});
    }
  }
  std::uint64_t state = seed;
  for (std::size_t s = 0; s < sample_size; ++s) {
    const MElement x{Permutation(n), random_kernel_element(state, n, 5, true)};
    ++r.samples;
    for (const auto& t : transpositions) {
      if (!(x * t == t * x)) {
        ++r.samples_not_central;
        break;
      }
    }
  }
  return r;
}

IntMatrix kernel_relation_matrix(std::size_t n) {
  if (n < 2) throw InvalidInput("kernel needs n >= 2");
  std::vector<ReducedElement> gens;
  for (int i = 1; i < static_cast<int>(n); ++i) {
    gens.push_back(heisenberg_mul(ReducedElement::p(i, n), heisenberg_inverse(ReducedElement::p(static_cast<int>(n), n))));
  }
  for (int i = 1; i < static_cast<int>(n); ++i) {
    gens.push_back(heisenberg_mul(ReducedElement::q(i, n), heisenberg_inverse(ReducedElement::q(static_cast<int>(n), n))));
  }
  gens.push_back(ReducedElement::z(n));
  const std::size_t cols = gens.size();
  IntMatrix m;
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = i + 1; j < cols; ++j) {
      const ReducedElement c = commutator(gens[i], gens[j]);
      if (!c.is_central_power()) throw InvalidInput("kernel commutator left the center");
      std::vector<std::int64_t> row(cols, 0);
      row[cols - 1] = c.zeta;
      m.push_back(std::move(row));
    }
  }
  return m;
}

}  // namespace coxlab
