#include "coxlab/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

#include "coxlab/error.hpp"

namespace coxlab {
namespace {

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = w.size();
    for (int x : w) h = h * 1000003u ^ static_cast<std::size_t>(x);
    return h;
  }
};

struct Rule {
  Word lhs;
  Word rhs;
  std::size_t relator;
};

struct Node {
  Word word;
  std::size_t parent;
  std::string rule;
};

constexpr std::size_t kRoot = static_cast<std::size_t>(-1);

Word cyclic_free_reduce(std::span<const int> w) { return cyclically_reduce(w, {}); }

std::vector<Rule> substitution_rules(const std::vector<Word>& relators, std::size_t max_growth) {
  std::map<std::pair<Word, Word>, std::size_t> unique;
  for (std::size_t idx = 0; idx < relators.size(); ++idx) {
    const Word& r = relators[idx];
    const std::size_t len = r.size();
    for (int dir = 0; dir < 2; ++dir) {
      Word base = r;
      if (dir == 1) std::reverse(base.begin(), base.end());
      for (std::size_t k = 0; k < len; ++k) {
        Word rot(len);
        for (std::size_t i = 0; i < len; ++i) rot[i] = base[(i + k) % len];
        // rot = s t with |s| = cut; s = t⁻¹ and letters are involutions
        for (std::size_t cut = 1; cut <= len; ++cut) {
          const std::size_t tail = len - cut;
          if (tail > cut + max_growth) continue;
          Word lhs(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(cut));
          Word rhs(rot.rbegin(), rot.rbegin() + static_cast<std::ptrdiff_t>(tail));
          unique.try_emplace({std::move(lhs), std::move(rhs)}, idx);
        }
      }
    }
  }
  std::vector<Rule> rules;
  for (auto& [key, idx] : unique) rules.push_back({key.first, key.second, idx});
  return rules;
}

}  // namespace

Derivation derive_bounded(std::span<const Word> known, const Word& target, std::size_t max_len,
                          const DeriveOptions& options) {
  if (target.empty()) throw InvalidInput("derive_bounded: empty target");
  if (max_len < target.size()) {
    throw InvalidInput("derive_bounded: bound " + std::to_string(max_len) + " is below target length " +
                       std::to_string(target.size()));
  }

  std::vector<Word> relators;
  std::unordered_map<Word, std::size_t, WordHash> known_forms;
  for (const auto& k : known) {
    Word r = cyclic_free_reduce(k);
    if (r.empty()) continue;
    known_forms.try_emplace(canonical_cyclic_form(r), relators.size());
    relators.push_back(std::move(r));
  }
  const auto rules = substitution_rules(relators, options.max_growth);

  Derivation result;
  std::vector<Node> nodes;
  std::unordered_map<Word, std::size_t, WordHash> seen;
  std::deque<std::size_t> queue;

  auto trace = [&](std::size_t last) {
    std::vector<DerivationStep> chain;
    for (std::size_t i = last; i != kRoot; i = nodes[i].parent) chain.push_back({nodes[i].word, nodes[i].rule});
    std::reverse(chain.begin(), chain.end());
    return chain;
  };
  // Each step records the rule that produced it from the previous step.
  auto goal = [&](const Word& canon, std::size_t node) -> bool {
    if (canon.empty()) {
      result.chain = trace(node);
    } else if (auto it = known_forms.find(canon); it != known_forms.end()) {
      result.chain = trace(node);
      result.chain.push_back({Word{}, "rotation or reversal of known relator #" + std::to_string(it->second + 1)});
    } else {
      return false;
    }
    result.found = true;
    result.states_explored = seen.size();
    return true;
  };

  Word start = canonical_cyclic_form(cyclic_free_reduce(target));
  nodes.push_back({start, kRoot, "target"});
  seen.emplace(start, 0);
  if (goal(start, 0)) return result;
  queue.push_back(0);

  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    const Word w = nodes[cur].word;
    const std::size_t n = w.size();
    for (const auto& rule : rules) {
      const std::size_t m = rule.lhs.size();
      if (m > n) continue;
      for (std::size_t i = 0; i < n; ++i) {
        if (w[i] != rule.lhs[0]) continue;
        bool match = true;
        for (std::size_t j = 1; j < m && match; ++j) match = w[(i + j) % n] == rule.lhs[j];
        if (!match) continue;
        Word next = rule.rhs;
        for (std::size_t j = m; j < n; ++j) next.push_back(w[(i + j) % n]);
        next = cyclic_free_reduce(next);
        if (next.size() > max_len) continue;
        Word canon = canonical_cyclic_form(next);
        if (seen.contains(canon)) continue;
        if (seen.size() >= options.max_states) {
          result.budget_exhausted = true;
          result.states_explored = seen.size();
          return result;
        }
        const std::size_t id = nodes.size();
        nodes.push_back({canon, cur,
                         "replace " + to_string(rule.lhs) + " by " + to_string(rule.rhs) + " (relator #" +
                             std::to_string(rule.relator + 1) + ")"});
        seen.emplace(canon, id);
        if (goal(canon, id)) return result;
        queue.push_back(id);
        if (m == n) break;
      }
    }
  }
  result.states_explored = seen.size();
  return result;
}

}  // namespace coxlab
