#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qcorr/frameworks.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Classical-correlation spread beyond this marks the state ambiguous: far
// above numerical noise, far below any physically meaningful plateau.
inline constexpr double kAmbiguityThreshold = 1e-4;

// Default width of the band around the Q optimum that counts as degenerate.
inline constexpr double kDegeneracyBandTol = 1e-7;

// Outcome of scanning the measurement hemisphere for directions that all
// reach the minimal quantum correlation. Where that set is larger than a
// point, the classical correlation may vary across it; c_spread measures
// how much, and is_ambiguous flags a spread above kAmbiguityThreshold.
struct DegeneracyReport {
  double q_optimum{};
  double tolerance{};
  std::vector<Direction> degenerate_directions;
  double c_min{};
  double c_max{};
  double c_spread{};
  bool is_ambiguous{};
  // every 1-in-k subsample of (direction, classical value) over the
  // degenerate set, at most 64 entries, for reporting
  std::vector<std::pair<Direction, double>> sampled_pairs;
  Direction c_min_direction;
  Direction c_max_direction;
  std::size_t scan_lattice_size{};
};

// Dense hemisphere scan at 4x the optimizer lattice density. Collects every
// lattice direction whose quantum correlation lies within tol of the global
// minimum (the refined optimizer direction is always a member), then
// evaluates the classical correlation across the set.
DegeneracyReport scan_degenerate_directions(const TwoQubitState& rho,
                                            const OptimizerSettings& settings,
                                            double tol);

// Classical correlation along the phi = 0 meridian of the (c, c, 0) family,
// as (n_z, value) pairs over n_z in [-1, 1]; the values track
// c sqrt(1 - n_z^2).
std::vector<std::pair<double, double>> c_profile(double rho_star_c,
                                                 std::size_t n_z_samples);

struct AmbiguityWitness {
  bool is_ambiguous{};
  double c_spread{};
  Direction low;
  Direction high;
  std::string summary;
};

// Condenses a finished scan into a yes/no answer naming the extreme
// directions.
AmbiguityWitness summarize(const DegeneracyReport& report);

// Runs the degeneracy scan at the default band width and condenses it.
AmbiguityWitness ambiguity_witness(const TwoQubitState& rho,
                                   const OptimizerSettings& settings);

}  // namespace qcorr
