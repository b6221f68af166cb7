#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/degeneracy.hpp"
#include "qcorr/frameworks.hpp"
#include "qcorr/state_io.hpp"

namespace qcorr {

// Everything one analysis run produces; renderers below keep key names and
// ordering stable so identical inputs and seeds give byte-identical output.
struct AnalysisReport {
  StateFile input;
  StateTag tag{StateTag::general};
  std::array<double, 4> eigenvalues{};
  OptimizerSettings settings;
  double scan_tolerance{};
  std::vector<CorrelationTriple> triples;
  DegeneracyReport degeneracy;
  AmbiguityWitness witness;
  // present when the input is Bell-diagonal
  std::optional<BellVector> bell;
  std::optional<ClosedFormReference> closed_form;
};

AnalysisReport analyze_state(const StateFile& input, const OptimizerSettings& settings,
                             double scan_tolerance);

// key = value lines; floats carry 17 significant digits except in the
// human-oriented summary block.
std::string render_text(const AnalysisReport& report);
std::string render_json(const AnalysisReport& report);

std::string render_degeneracy_text(const DegeneracyReport& report);
std::string render_degeneracy_json(const DegeneracyReport& report);

}  // namespace qcorr
