#include "coxlab/words.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

void check_letters(std::span<const int> w, int alphabet_size) {
  for (int x : w) {
    if (x == 0 || std::abs(x) > alphabet_size) {
      throw InvalidInput("letter " + std::to_string(x) + " outside alphabet of size " +
                         std::to_string(alphabet_size));
    }
  }
}

std::string to_string(std::span<const int> w) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
  out << ']';
  return out.str();
}

Word free_reduce_involutive(std::span<const int> w) {
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    const int u = std::abs(x);
    if (!out.empty() && out.back() == u) {
      out.pop_back();
    } else {
      out.push_back(u);
    }
  }
  return out;
}

Word reduce_with_commutations(std::span<const int> w, const PairSet& comm) {
  // Every rewrite shortens the word and happens at the top of the stack, so
  // the prefix below the top is always irreducible.
  Word out;
  out.reserve(w.size());
  for (int x : w) {
    out.push_back(std::abs(x));
    for (;;) {
      const auto n = out.size();
      if (n >= 2 && out[n - 1] == out[n - 2]) {
        out.resize(n - 2);
        continue;
      }
      if (n >= 3 && out[n - 1] == out[n - 3] && comm.contains(unordered_pair(out[n - 1], out[n - 2]))) {
        const int middle = out[n - 2];
        out.resize(n - 3);
        out.push_back(middle);
        continue;
      }
      break;
    }
  }
  return out;
}

namespace {

Word rotated(std::span<const int> w, std::size_t k) {
  Word r(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) r[i] = w[(i + k) % w.size()];
  return r;
}

}  // namespace

Word cyclically_reduce(std::span<const int> w, const PairSet& comm) {
  Word cur = reduce_with_commutations(w, comm);
  bool shrunk = true;
  while (shrunk && !cur.empty()) {
    shrunk = false;
    for (std::size_t k = 1; k < cur.size(); ++k) {
      Word r = reduce_with_commutations(rotated(cur, k), comm);
      if (r.size() < cur.size()) {
        cur = std::move(r);
        shrunk = true;
        break;
      }
    }
  }
  return cur;
}

Word canonical_cyclic_form(std::span<const int> w) {
  if (w.empty()) return {};
  Word best(w.begin(), w.end());
  Word rev(w.rbegin(), w.rend());
  for (std::size_t k = 0; k < w.size(); ++k) {
    Word a = rotated(w, k);
    if (a < best) best = std::move(a);
    Word b = rotated(rev, k);
    if (b < best) best = std::move(b);
  }
  return best;
}

Relator::Relator(std::span<const int> w) : word_(cyclically_reduce(w)) {
  if (word_.empty()) throw TrivialRelator("relator " + to_string(w) + " reduces to the empty word");
  canonical_ = canonical_cyclic_form(word_);
}

bool is_commutation_form(std::span<const int> w, std::pair<int, int>* pair) {
  if (w.size() != 4 || w[0] == w[1] || w[0] != w[2] || w[1] != w[3]) return false;
  if (pair) *pair = unordered_pair(w[0], w[1]);
  return true;
}

bool is_braid_form(std::span<const int> w, std::pair<int, int>* pair) {
  if (w.size() != 6 || w[0] == w[1]) return false;
  for (std::size_t i = 2; i < 6; ++i) {
    if (w[i] != w[i % 2]) return false;
  }
  if (pair) *pair = unordered_pair(w[0], w[1]);
  return true;
}

CleanReport clean(std::span<const Word> relators) {
  CleanReport report;
  PairSet& comm = report.commutations;

  for (const auto& w : relators) {
    if (w.size() == 2 && std::abs(w[0]) == std::abs(w[1])) report.squares.insert(std::abs(w[0]));
    std::pair<int, int> p;
    if (is_commutation_form(cyclically_reduce(w), &p)) comm.insert(p);
  }

  bool discovered = true;
  while (discovered) {
    discovered = false;
    ++report.passes;
    for (const auto& w : relators) {
      std::pair<int, int> p;
      if (is_commutation_form(cyclically_reduce(w, comm), &p) && comm.insert(p).second) {
        discovered = true;
      }
    }
  }

  // canonical form -> (smallest original word, its reduction)
  std::map<Word, std::pair<Word, Word>> misc;
  for (const auto& w : relators) {
    Word r = cyclically_reduce(w, comm);
    if (r.empty() || is_commutation_form(r)) continue;
    std::pair<int, int> p;
    if (is_braid_form(r, &p) && !comm.contains(p)) {
      report.braids.insert(p);
      continue;
    }
    Word key = canonical_cyclic_form(r);
    auto it = misc.find(key);
    if (it == misc.end()) {
      misc.emplace(std::move(key), std::pair{w, std::move(r)});
    } else if (w < it->second.first) {
      it->second = {w, std::move(r)};
    }
  }
  for (auto& [key, entry] : misc) report.misc.emplace_back(entry.second);
  return report;
}

std::vector<Word> relators_of(const CleanReport& report) {
  std::vector<Word> out;
  for (int s : report.squares) out.push_back({s, s});
  for (auto [i, j] : report.commutations) out.push_back({i, j, i, j});
  for (auto [i, j] : report.braids) out.push_back({i, j, i, j, i, j});
  for (const auto& r : report.misc) out.push_back(r.word());
  return out;
}

}  // namespace coxlab
