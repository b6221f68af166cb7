#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/measurement.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

struct OptimizerSettings {
  std::size_t grid_points = 2000;
  double refine_tol = 1e-10;
  std::size_t refine_max_iters = 200;
  std::uint64_t seed = 0;
};

// grid_points >= 16 and refine_tol > 0, else InputError.
void validate(const OptimizerSettings& settings);

// The three ways of pairing a quantum and a classical correlation value:
//  - measurement_based_a / _b share one measurement direction between Q and
//    C (a: the Q-minimizing direction, b: the C-maximizing one); under
//    degenerate optima these depend on the optimizer tie-break,
//  - measurement_independent derives everything from the closest classical
//    state (exact for Bell-diagonal input only),
//  - independent_optimization optimizes Q and C separately with no coupling
//    between the two directions.
enum class Framework {
  measurement_based_a,
  measurement_based_b,
  measurement_independent,
  independent_optimization,
};
const char* framework_name(Framework f);

struct CorrelationTriple {
  Framework framework{};
  double q{};
  double c{};
  double t{};
  std::optional<Direction> q_direction;
  std::optional<Direction> c_direction;
  bool available = true;    // false: framework undefined for this input
  bool approximate = false; // true: a value rests on a numeric search oracle
  std::string note;
};

// Exact values for a Bell-diagonal state with sorted magnitudes c_plus >=
// c_zero >= c_minus: q = c_zero, c = c_plus, and the closest product state
// to the optimized classical state sits at distance
// c_prime = 2(sqrt(1 + c_plus) - 1), realized with the Bloch lengths
// a_n = -1 + sqrt(1 + c_plus) and b_n = sign(c_n) a_n.
struct ClosedFormReference {
  double q{};
  double c{};
  double c_prime{};
  double a_n{};
  double b_n{};
};

struct OptimizationResult {
  double value{};
  Direction direction;
  std::size_t evaluations{};
};

// Distance from rho to its measured image along n: the quantum correlation
// revealed by that measurement. Zero iff rho is classical along n.
double q_at(const TwoQubitState& rho, const Direction& n);

// Distance between the measured state and the measured marginal product:
// the classical correlation along n.
double c_at(const TwoQubitState& rho, const Direction& n);

// Distance from rho to its marginal product: total correlation, shared by
// all frameworks.
double total(const TwoQubitState& rho);

// Global search over measurement directions: a Fibonacci hemisphere lattice
// (grid_points nodes), then simplex refinement in (theta, phi) seeded from
// the 5 best nodes. Lattice ties break toward the smallest node index, and
// refinement only replaces the incumbent on strict improvement, so results
// are reproducible bit for bit. evaluations counts objective calls.
OptimizationResult minimize_q(const TwoQubitState& rho, const OptimizerSettings& settings);
OptimizationResult maximize_c(const TwoQubitState& rho, const OptimizerSettings& settings);

// Rejects correlation vectors whose state would be unphysical.
ClosedFormReference closed_form_bell(const BellVector& c);

// The product state closest to the classical state
// (1/4)[I(x)I + c_n pauli_axis (x) pauli_axis]: Bloch vectors of length a_n
// and b_n along the axis. |c_n| below 1e-12 degenerates to I/4.
TwoQubitState closest_product_to_single_axis_classical(double c_n, Axis axis);

struct CPrimeValue {
  double value{};
  // True when the closest product state came from the numeric search
  // (non-Bell-diagonal input) rather than the exact expression.
  bool approximate{};
};

// Distance from the measured state M_n(rho) to its own closest product
// state. Never exceeds c_at(rho, n).
CPrimeValue c_prime_at(const TwoQubitState& rho, const Direction& n);

struct ProductSearchResult {
  double distance{};
  ComplexMatrix closest{4};
  std::size_t evaluations{};
};

// Numeric best-effort search for the product state closest to target:
// simplex descent over the two Bloch vectors (ball-projected, with an
// out-of-ball penalty), restarted from the target's own marginals and from
// seeded random interior points.
ProductSearchResult closest_product_search(const ComplexMatrix& target,
                                           std::size_t restarts, std::uint64_t seed);

// All four correlation triples for one state. The measurement-independent
// entry is available only when the input is Bell-diagonal within 1e-10.
std::vector<CorrelationTriple> evaluate_all_frameworks(const TwoQubitState& rho,
                                                       const OptimizerSettings& settings);

}  // namespace qcorr
