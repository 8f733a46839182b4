#include "coxlab/perm.hpp"

#include <numeric>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const auto n = images.size();
  std::vector<bool> seen(n + 1, false);
  for (int x : images) {
    if (x < 1 || static_cast<std::size_t>(x) > n || seen[static_cast<std::size_t>(x)]) {
      throw InvalidInput("permutation images are not a bijection on 1.." + std::to_string(n));
    }
    seen[static_cast<std::size_t>(x)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(int a, int b, std::size_t n) {
  const auto in_range = [n](int x) { return x >= 1 && static_cast<std::size_t>(x) <= n; };
  if (a == b || !in_range(a) || !in_range(b)) {
    throw InvalidTransposition("invalid transposition (" + std::to_string(a) + " " +
                               std::to_string(b) + ") on " + std::to_string(n) + " points");
  }
  Permutation p(n);
  p.images_[static_cast<std::size_t>(a - 1)] = b;
  p.images_[static_cast<std::size_t>(b - 1)] = a;
  return p;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    r.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  }
  return r;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> Permutation::as_transposition() const {
  std::vector<int> moved;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i + 1)) moved.push_back(static_cast<int>(i + 1));
  }
  if (moved.size() != 2 || (*this)(moved[0]) != moved[1]) return std::nullopt;
  return std::pair{moved[0], moved[1]};
}

std::string Permutation::cycle_string() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size() + 1, false);
  bool any = false;
  for (int start = 1; start <= static_cast<int>(images_.size()); ++start) {
    if (done[static_cast<std::size_t>(start)] || (*this)(start) == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      first = false;
      done[static_cast<std::size_t>(x)] = true;
      x = (*this)(x);
    } while (x != start);
    out << ')';
  }
  if (!any) out << "()";
  return out.str();
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) {
    throw DegreeMismatch("cannot compose permutations of degree " + std::to_string(p.degree()) +
                         " and " + std::to_string(q.degree()));
  }
  std::vector<int> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<int>(i + 1)));
  return Permutation::from_images(std::move(images));
}

bool generates_full_symmetric(std::span<const Permutation> gens) {
  if (gens.empty()) return false;
  const std::size_t n = gens.front().degree();
  // union-find over points
  std::vector<std::size_t> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const auto& g : gens) {
    if (g.degree() != n) throw InvalidInput("generators have mixed degrees");
    auto t = g.as_transposition();
    if (!t) throw InvalidInput("generator " + g.cycle_string() + " is not a transposition");
    auto a = find(static_cast<std::size_t>(t->first));
    auto b = find(static_cast<std::size_t>(t->second));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

}  // namespace coxlab
