#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "coxlab/complex.hpp"
#include "coxlab/perm.hpp"
#include "coxlab/presentation.hpp"
#include "coxlab/words.hpp"

namespace coxlab {

using nlohmann::json;

struct ReducedElement;

/// Parses a file or string; throws InvalidInput on I/O or syntax errors.
json read_json_file(const std::filesystem::path& path);
json parse_json(std::string_view text, const std::string& what);
/// Two-space indent plus trailing newline; byte-stable for equal values.
void write_json_file(const std::filesystem::path& path, const json& j);

json to_json(const Permutation& p);
Permutation permutation_from_json(const json& j);

json to_json(const Word& w);
Word word_from_json(const json& j);

json to_json(const CleanReport& r);

json to_json(const DegenerationComplex& c);
/// Shape and type checks only; callers run validate() for semantics.
DegenerationComplex complex_from_json(const json& j);

/// {generators, variant, relators:[[...]], kinds:[...]}.
json to_json(const Presentation& p);

/// Bare {generators, relators} as consumed by the enumerator.
struct RawPresentation {
  int generators = 0;
  std::vector<Word> relators;
};
RawPresentation raw_presentation_from_json(const json& j);

AxFixture ax_fixture_from_json(const json& j);
json to_json(const AxFixture& ax);
NonRelTable nonrel_from_json(const json& j);
json to_json(const NonRelTable& t);

json to_json(const ReducedElement& x);
ReducedElement reduced_element_from_json(const json& j);

}  // namespace coxlab
