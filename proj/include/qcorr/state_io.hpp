#pragma once

#include <optional>
#include <string>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Hand-editable JSON description of one input state. Exactly one of the
// two payloads is present:
//   {"bell_diagonal": [c_x, c_y, c_z], "label": "..."}
//   {"matrix": [[[re, im] x4] x4], "label": "..."}
struct StateFile {
  std::optional<BellVector> bell_diagonal;
  std::optional<ComplexMatrix> matrix;
  std::string label;
};

// Parse failures throw InputError carrying the offending field or parse
// position; origin names the source in diagnostics.
StateFile parse_state_text(const std::string& text, const std::string& origin);
StateFile load_state_file(const std::string& path);

// Validates and classifies; unphysical payloads propagate their rejection.
TwoQubitState to_state(const StateFile& file);

}  // namespace qcorr
