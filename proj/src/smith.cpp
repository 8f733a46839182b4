#include "coxlab/smith.hpp"

#include <cstdlib>
#include <numeric>
#include <utility>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

std::int64_t checked_mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) throw ArithmeticOverflow("Smith normal form: multiplication overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) throw ArithmeticOverflow("Smith normal form: subtraction overflow");
  return r;
}

std::int64_t checked_abs(std::int64_t x) {
  if (x == INT64_MIN) throw ArithmeticOverflow("Smith normal form: |INT64_MIN|");
  return x < 0 ? -x : x;
}

// row[i] -= k * row[j]
void row_axpy(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < m[i].size(); ++c) m[i][c] = checked_sub(m[i][c], checked_mul(k, m[j][c]));
}

void col_axpy(IntMatrix& m, std::size_t i, std::size_t j, std::int64_t k) {
  if (k == 0) return;
  for (auto& row : m) row[i] = checked_sub(row[i], checked_mul(k, row[j]));
}

}  // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  out.rows = m.size();
  out.cols = m.empty() ? 0 : m.front().size();
  for (const auto& row : m) {
    if (row.size() != out.cols) throw InvalidInput("ragged matrix");
  }
  const std::size_t R = out.rows;
  const std::size_t C = out.cols;

  for (std::size_t t = 0; t < std::min(R, C); ++t) {
    // Pivot: smallest nonzero |entry| in the remaining block.
    std::size_t pr = R;
    std::size_t pc = C;
    std::int64_t best = 0;
    for (std::size_t i = t; i < R; ++i) {
      for (std::size_t j = t; j < C; ++j) {
        if (m[i][j] != 0 && (best == 0 || checked_abs(m[i][j]) < best)) {
          best = checked_abs(m[i][j]);
          pr = i;
          pc = j;
        }
      }
    }
    if (best == 0) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < R; ++i) {
        row_axpy(m, i, t, m[i][t] / m[t][t]);
        if (m[i][t] != 0) {
          clean = false;
          std::swap(m[t], m[i]);
        }
      }
      for (std::size_t j = t + 1; j < C; ++j) {
        col_axpy(m, j, t, m[t][j] / m[t][t]);
        if (m[t][j] != 0) {
          clean = false;
          for (auto& row : m) std::swap(row[t], row[j]);
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t i = t + 1; i < R && divides; ++i) {
        for (std::size_t j = t + 1; j < C; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t c = t; c < C; ++c) m[t][c] = checked_sub(m[t][c], checked_mul(-1, m[i][c]));
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    out.invariants.push_back(checked_abs(m[t][t]));
  }
  return out;
}

AbelianGroup abelianization(const IntMatrix& relations, std::size_t cols) {
  for (const auto& row : relations) {
    if (row.size() != cols) throw InvalidInput("relation row has wrong length");
  }
  const SmithForm s = smith_normal_form(relations);
  AbelianGroup g;
  g.free_rank = cols - s.invariants.size();
  for (auto d : s.invariants) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

}  // namespace coxlab
