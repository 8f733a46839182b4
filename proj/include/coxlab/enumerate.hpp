#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/words.hpp"

namespace coxlab {

inline constexpr std::size_t kDefaultCapacity = 1'000'000;

enum class EnumerationStatus { complete, capacity_exceeded };
std::string to_string(EnumerationStatus s);

/// Coset action table; cosets and generators are 1-based, row 0 unused.
/// Generators are involutions, so a column is its own inverse.
struct CosetTable {
  int generators = 0;
  std::vector<std::vector<int>> rows;
  std::size_t size() const { return rows.empty() ? 0 : rows.size() - 1; }
  int act(int coset, int gen) const { return rows[static_cast<std::size_t>(coset)][static_cast<std::size_t>(gen - 1)]; }
  /// Coset reached from `coset` by reading `w` left to right.
  int trace(int coset, std::span<const int> w) const;
};

struct EnumerationResult {
  EnumerationStatus status = EnumerationStatus::capacity_exceeded;
  /// Subgroup index; 0 unless complete.
  std::size_t index = 0;
  /// Rows allocated during the run (live and dead).
  std::size_t table_size = 0;
  /// Standardized, closed, relator-consistent table; empty unless complete.
  CosetTable table;
};

/// Hasse–Lundberg–Todd–Coxeter enumeration of the cosets of ⟨subgroup⟩ in
/// ⟨1..generators | g², relators⟩. Letter signs are ignored. Capacity bounds
/// the number of rows ever allocated; running out is an inconclusive outcome,
/// not an error. Throws InvalidInput for capacity 0 or bad letters.
EnumerationResult enumerate_cosets(int generators, const std::vector<Word>& relators,
                                   const std::vector<Word>& subgroup = {}, std::size_t capacity = kDefaultCapacity);

}  // namespace coxlab
