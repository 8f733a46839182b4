#include "coxlab/semidirect.hpp"

#include <algorithm>

#include "coxlab/error.hpp"

namespace coxlab {

FreeWord free_reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (int l : w) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

FreeWord free_mul(const FreeWord& u, const FreeWord& v) {
  std::size_t k = 0;
  while (k < u.size() && k < v.size() && u[u.size() - 1 - k] == -v[k]) ++k;
  FreeWord out(u.begin(), u.end() - static_cast<std::ptrdiff_t>(k));
  out.insert(out.end(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return out;
}

FreeWord free_inverse(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& l : out) l = -l;
  return out;
}

FreeTuple::FreeTuple(std::vector<FreeWord> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c = free_reduce(c);
}

void FreeTuple::set(int i, FreeWord w) { coords_.at(static_cast<std::size_t>(i - 1)) = free_reduce(w); }

bool FreeTuple::is_identity() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const FreeWord& w) { return w.empty(); });
}

FreeTuple FreeTuple::inverse() const {
  FreeTuple out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) out.coords_[i] = free_inverse(coords_[i]);
  return out;
}

FreeTuple FreeTuple::acted(const Permutation& tau) const {
  if (tau.degree() != coords_.size()) throw DegreeMismatch("action degree mismatch");
  FreeTuple out(coords_.size());
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    out.coords_[i] = coords_[static_cast<std::size_t>(tau(static_cast<int>(i) + 1) - 1)];
  }
  return out;
}

FreeTuple operator*(const FreeTuple& f, const FreeTuple& g) {
  if (f.size() != g.size()) throw DegreeMismatch("tuple length mismatch");
  FreeTuple out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.coords_[i] = free_mul(f.coords_[i], g.coords_[i]);
  return out;
}

SemidirectElement SemidirectElement::inverse() const {
  // (σ,f)⁻¹ = (σ⁻¹, (f⁻¹)^{σ⁻¹})
  const Permutation si = sigma.inverse();
  return {si, f.inverse().acted(si)};
}

SemidirectElement operator*(const SemidirectElement& x, const SemidirectElement& y) {
  return {compose(x.sigma, y.sigma), x.f.acted(y.sigma) * y.f};
}

SemidirectModel::SemidirectModel(const DualGraph& graph, const SpanningData& span)
    : degree_(graph.max_vertex()), span_(span) {
  if (static_cast<std::size_t>(degree_) != graph.vertices().size()) {
    throw InvalidInput("plane ids must run 1..n");
  }
  std::vector<const Chord*> chord_of(graph.edges().size() + 1, nullptr);
  for (const auto& c : span_.chords) {
    if (!graph.has_edge(c.line)) throw InvalidInput("chord on unknown line " + std::to_string(c.line));
    chord_of[static_cast<std::size_t>(c.line)] = &c;
  }
  for (const auto& e : graph.edges()) {
    SemidirectElement x = SemidirectElement::identity(degree_);
    x.sigma = Permutation::transposition(e.u, e.v, degree_);
    if (const Chord* c = chord_of[static_cast<std::size_t>(e.id)]) {
      x.f.set(c->tail, {c->label});
      x.f.set(c->head, {-c->label});
    }
    images_.push_back(std::move(x));
  }
}

const SemidirectElement& SemidirectModel::phi(int edge) const {
  if (edge < 1 || edge > generator_count()) throw InvalidInput("edge " + std::to_string(edge) + " not in graph");
  return images_[static_cast<std::size_t>(edge - 1)];
}

SemidirectElement SemidirectModel::evaluate(std::span<const int> w) const {
  SemidirectElement acc = SemidirectElement::identity(degree_);
  for (int l : w) {
    const auto& g = phi(l < 0 ? -l : l);
    acc = l < 0 ? acc * g.inverse() : acc * g;
  }
  return acc;
}

Permutation SemidirectModel::evaluate_permutation(std::span<const int> w) const {
  Permutation acc(degree_);
  for (int l : w) acc = compose(acc, psi(l < 0 ? -l : l));
  return acc;
}

}  // namespace coxlab
