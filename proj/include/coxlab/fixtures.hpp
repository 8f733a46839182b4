#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "coxlab/complex.hpp"
#include "coxlab/json_io.hpp"
#include "coxlab/presentation.hpp"

// Shipped data. Every loader reads $COXLAB_FIXTURES/<name>.json when that
// variable is set and the copy compiled into the library otherwise.
namespace coxlab::fixtures {

/// tt33, ax_relations, nonrel_pairs, s4_remark, hexagon_quotient, hexagon_affine.
const std::vector<std::string>& names();

/// Raw text of a fixture. Throws InvalidInput for unknown names or unreadable overrides.
std::string text(std::string_view name);

/// Parsed and shape-checked, no consistency oracle.
DegenerationComplex paper_complex_unchecked();
AxFixture ax_relations();
NonRelTable nonrel_pairs();
RawPresentation bundled_presentation(std::string_view name);

/// The anchors the (3,3) labeling must satisfy simultaneously. Throws CorruptFixture.
void check_paper_labeling(const DegenerationComplex& complex, const NonRelTable& table, const AxFixture& ax);

/// The reference (3,3) labeling after the consistency oracle. Throws CorruptFixture.
DegenerationComplex load_paper_labeling();
std::vector<Chord> paper_chords();

/// True if `complex` has exactly the reference labeling's lines and planes.
bool is_paper_labeling(const DegenerationComplex& complex);

/// Writes every fixture as <dir>/<name>.json.
void export_all(const std::filesystem::path& dir);

}  // namespace coxlab::fixtures
