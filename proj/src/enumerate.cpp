#include "coxlab/enumerate.hpp"

#include <deque>
#include <numeric>

#include "coxlab/error.hpp"

namespace coxlab {

std::string to_string(EnumerationStatus s) {
  return s == EnumerationStatus::complete ? "complete" : "capacity_exceeded";
}

int CosetTable::trace(int coset, std::span<const int> w) const {
  for (int l : w) {
    if (coset == 0) return 0;
    coset = act(coset, l < 0 ? -l : l);
  }
  return coset;
}

namespace {

struct CapacityExceeded {};

class Enumerator {
 public:
  Enumerator(int gens, std::size_t capacity) : gens_(gens), capacity_(capacity) {
    table_.emplace_back(static_cast<std::size_t>(gens), 0);  // row 0 unused
    parent_.push_back(0);
    new_coset();
  }

  std::size_t allocated() const { return table_.size() - 1; }
  bool live(int c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  int& entry(int c, int g) { return table_[static_cast<std::size_t>(c)][static_cast<std::size_t>(g - 1)]; }

  int new_coset() {
    if (allocated() >= capacity_) throw CapacityExceeded{};
    const int c = static_cast<int>(table_.size());
    table_.emplace_back(static_cast<std::size_t>(gens_), 0);
    parent_.push_back(c);
    return c;
  }

  void define(int c, int g) {
    const int d = new_coset();
    entry(c, g) = d;
    entry(d, g) = c;
  }

  void scan_and_fill(int c, const Word& w) {
    if (w.empty()) return;
    int f = c;
    int b = c;
    std::ptrdiff_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (i <= j && entry(f, w[static_cast<std::size_t>(i)]) != 0) f = entry(f, w[static_cast<std::size_t>(i++)]);
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && entry(b, w[static_cast<std::size_t>(j)]) != 0) b = entry(b, w[static_cast<std::size_t>(j--)]);
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        const int g = w[static_cast<std::size_t>(i)];
        entry(f, g) = b;
        entry(b, g) = f;
        return;
      }
      define(f, w[static_cast<std::size_t>(i)]);
    }
  }

  int rep(int c) {
    int r = c;
    while (parent_[static_cast<std::size_t>(r)] != r) r = parent_[static_cast<std::size_t>(r)];
    while (parent_[static_cast<std::size_t>(c)] != r) {
      const int next = parent_[static_cast<std::size_t>(c)];
      parent_[static_cast<std::size_t>(c)] = r;
      c = next;
    }
    return r;
  }

  void merge(int k, int l, std::deque<int>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (k > l) std::swap(k, l);
    parent_[static_cast<std::size_t>(l)] = k;
    queue.push_back(l);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      const int e = queue.front();
      queue.pop_front();
      for (int g = 1; g <= gens_; ++g) {
        const int f = entry(e, g);
        if (f == 0) continue;
        entry(e, g) = 0;
        if (entry(f, g) == e) entry(f, g) = 0;
        const int e1 = rep(e);
        const int f1 = rep(f);
        if (entry(e1, g) != 0) {
          merge(f1, entry(e1, g), queue);
        } else {
          entry(e1, g) = f1;
        }
        if (entry(f1, g) != 0) {
          merge(e1, entry(f1, g), queue);
        } else {
          entry(f1, g) = e1;
        }
      }
    }
  }

  CosetTable standardized() {
    std::vector<int> rename(table_.size(), 0);
    std::vector<int> order{1};
    rename[1] = 1;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int g = 1; g <= gens_; ++g) {
        const int d = entry(order[k], g);
        if (d != 0 && rename[static_cast<std::size_t>(d)] == 0) {
          order.push_back(d);
          rename[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        }
      }
    }
    CosetTable t;
    t.generators = gens_;
    t.rows.assign(order.size() + 1, std::vector<int>(static_cast<std::size_t>(gens_), 0));
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (int g = 1; g <= gens_; ++g) {
        const int d = entry(order[k], g);
        t.rows[k + 1][static_cast<std::size_t>(g - 1)] = d == 0 ? 0 : rename[static_cast<std::size_t>(d)];
      }
    }
    return t;
  }

 private:
  int gens_;
  std::size_t capacity_;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
};

Word involutive(const Word& w, int gens) {
  Word out;
  for (int l : w) {
    const int a = l < 0 ? -l : l;
    if (a == 0 || a > gens) throw InvalidInput("letter " + std::to_string(l) + " outside the alphabet");
    out.push_back(a);
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_cosets(int generators, const std::vector<Word>& relators, const std::vector<Word>& subgroup,
                                   std::size_t capacity) {
  if (capacity == 0) throw InvalidInput("capacity must be at least 1");
  if (generators < 0) throw InvalidInput("negative generator count");
  std::vector<Word> rels;
  for (int g = 1; g <= generators; ++g) rels.push_back({g, g});
  for (const auto& r : relators) rels.push_back(involutive(r, generators));
  std::vector<Word> sub;
  for (const auto& s : subgroup) sub.push_back(involutive(s, generators));

  EnumerationResult result;
  try {
    Enumerator en(generators, capacity);
    for (const auto& s : sub) en.scan_and_fill(1, s);
    for (int c = 1; c <= static_cast<int>(en.allocated()); ++c) {
      for (const auto& r : rels) {
        if (!en.live(c)) break;
        en.scan_and_fill(c, r);
      }
      for (int g = 1; g <= generators && en.live(c); ++g) {
        if (en.entry(c, g) == 0) en.define(c, g);
      }
    }
    result.table_size = en.allocated();
    result.table = en.standardized();
  } catch (const CapacityExceeded&) {
    result.status = EnumerationStatus::capacity_exceeded;
    result.table_size = capacity;
    return result;
  }

  // Post-hoc: closed, relators hold at every coset, subgroup fixes coset 1.
  const CosetTable& t = result.table;
  for (std::size_t c = 1; c <= t.size(); ++c) {
    for (int g = 1; g <= generators; ++g) {
      if (t.act(static_cast<int>(c), g) == 0) throw std::logic_error("coset table not closed");
    }
    for (const auto& r : rels) {
      if (t.trace(static_cast<int>(c), r) != static_cast<int>(c)) throw std::logic_error("coset table violates a relator");
    }
  }
  for (const auto& s : sub) {
    if (t.trace(1, s) != 1) throw std::logic_error("subgroup generator moves the base coset");
  }
  result.status = EnumerationStatus::complete;
  result.index = t.size();
  return result;
}

}  // namespace coxlab
