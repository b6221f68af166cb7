#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qcorr/frameworks.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

struct VerificationFailure {
  BellVector vector;
  std::string check;
  double expected{};
  double actual{};
  double tolerance{};
};

struct VerificationResult {
  std::size_t states_checked{};
  std::vector<VerificationFailure> failures;
  bool passed() const noexcept { return failures.empty(); }
};

// Reference generator under test; substituting a corrupted one must make
// run_verification fail, which is itself tested.
using ClosedFormFn = std::function<ClosedFormReference(const BellVector&)>;

// Samples n_states physical correlation vectors by rejection from the cube
// [-1,1]^3 and checks, per state:
//   |minimized quantum correlation - reference q| <= 1e-6
//   |maximized classical correlation - reference c| <= 1e-6
//   |numeric closest-product distance - reference c_prime| <= 1e-4
// The last check pits the exact expression against the 6-parameter search.
VerificationResult run_verification(std::size_t n_states, std::uint64_t seed,
                                    const OptimizerSettings& settings,
                                    const ClosedFormFn& closed_form = closed_form_bell);

std::string render_verification(const VerificationResult& result);

}  // namespace qcorr
