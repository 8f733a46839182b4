#pragma once

#include <cstdint>
#include <vector>

namespace coxlab {

/// Row-major; every row has the same length.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

struct SmithForm {
  /// Nonzero invariant factors d₁ | d₂ | …, all positive.
  std::vector<std::int64_t> invariants;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

/// Exact over int64; throws ArithmeticOverflow rather than wrap.
SmithForm smith_normal_form(IntMatrix m);

/// ℤ^cols modulo the row span: free rank and torsion coefficients (> 1).
struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<std::int64_t> torsion;
  bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
};

/// `cols` is needed when the matrix has no rows.
AbelianGroup abelianization(const IntMatrix& relations, std::size_t cols);

}  // namespace coxlab
