#pragma once

#include <string>
#include <vector>

#include "coxlab/complex.hpp"
#include "coxlab/json_io.hpp"

namespace coxlab {

enum class Status { pass, fail, inconclusive };
std::string to_string(Status s);

struct ReportEntry {
  std::string name;
  Status status = Status::pass;
  std::string value;
  /// Which claim the check restates.
  std::string anchor;
};

struct Report {
  std::string command;
  std::string suite;
  std::vector<ReportEntry> entries;

  std::size_t count(Status s) const;
  bool failed() const { return count(Status::fail) > 0; }
  void add(std::string name, bool ok, std::string value, std::string anchor);
  /// Canonical form: entries in insertion order, no timestamps.
  json to_json() const;
  std::string summary() const;
};

enum class Suite { relators, ax, tables, center, structure, all };
Suite suite_from_string(const std::string& s);
std::string to_string(Suite s);

/// Runs a suite against `complex`. Every suite but `relators` needs the reference
/// labeling and throws InvalidInput otherwise; on other complexes `relators`
/// checks that each relator has trivial permutation image. `threads` = 0
/// picks the hardware concurrency.
Report run_suite(const DegenerationComplex& complex, Suite suite, unsigned threads = 0);

}  // namespace coxlab
