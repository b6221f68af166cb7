#pragma once

#include <array>
#include <optional>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/pauli.hpp"

namespace qcorr {

enum class Axis { x, y, z };
char axis_name(Axis a);

// Correlation vector (c_x, c_y, c_z) of a Bell-diagonal state
//   rho = (1/4)[I(x)I + sum_k c_k pauli_k (x) pauli_k].
// Physicality (every eigenvalue >= -1e-12) is enforced when a state is
// built from it, not here.
struct BellVector {
  double x{};
  double y{};
  double z{};
};

// The four eigenvalues (1/4)(1 +- c_x -+ c_y +- c_z) in ascending order.
std::array<double, 4> bell_diagonal_spectrum(const BellVector& c);

// The 4x4 matrix of the Bell-diagonal state for c, with no physicality
// check. Callers that need a validated state use build_bell_diagonal.
ComplexMatrix bell_diagonal_matrix(const BellVector& c);

enum class StateTag { general, bell_diagonal, classical_quantum, product };
const char* state_tag_name(StateTag t);

// Validated two-qubit density operator. Construction enforces Hermiticity
// within 1e-12, unit trace within 1e-10 and eigenvalues >= -1e-12; the
// stored eigenvalues are clipped at 0. The tag is read off the Pauli
// decomposition (1e-10 per entry): product, then Bell-diagonal, then
// classical-quantum (invariant under some first-qubit measurement), else
// general.
class TwoQubitState {
public:
  static TwoQubitState from_matrix(const ComplexMatrix& m);

  // Skips the positivity and trace gates (Hermiticity is still required).
  // Exists for exploring families whose correlation formulas extend past
  // the physical boundary; eigenvalues() then carries negative entries.
  static TwoQubitState unchecked(const ComplexMatrix& m);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  StateTag tag() const noexcept { return tag_; }
  // Ascending; clipped at 0 on the validated path.
  const std::array<double, 4>& eigenvalues() const noexcept { return eigenvalues_; }
  bool validated() const noexcept { return validated_; }

private:
  TwoQubitState(ComplexMatrix m, StateTag tag, std::array<double, 4> eigenvalues,
                bool validated);

  ComplexMatrix matrix_;
  StateTag tag_;
  std::array<double, 4> eigenvalues_;
  bool validated_;
};

// (1/4)[I(x)I + c . (pauli (x) pauli)]; rejects vectors whose state has an
// eigenvalue below -1e-12, reporting the offending eigenvalue.
TwoQubitState build_bell_diagonal(const BellVector& c);

// The one-parameter family c = (c, c, 0), 0 <= c <= 1, every direction an
// equally good measurement axis. Physicality restricts it to c <= 1/2: the
// smallest eigenvalue is (1 - 2c)/4. Larger c is rejected like any other
// unphysical vector; use bell_diagonal_matrix + TwoQubitState::unchecked to
// study the formulas beyond the boundary.
TwoQubitState build_rho_star(double c);

// Product of the marginals, tr_B(rho) (x) tr_A(rho): the input with all
// correlations erased. Tagged product.
TwoQubitState marginal_product(const TwoQubitState& rho);
ComplexMatrix marginal_product_matrix(const ComplexMatrix& m);

// |c_k| in descending order with their axes. Adjacent magnitudes closer
// than 1e-9 set tie flags; ties mark degenerate optimal measurements and
// route the state to the degeneracy scanner.
struct SortedCorrelations {
  double c_plus{};
  double c_zero{};
  double c_minus{};
  double signed_plus{};
  double signed_zero{};
  double signed_minus{};
  Axis axis_plus{Axis::x};
  Axis axis_zero{Axis::y};
  Axis axis_minus{Axis::z};
  bool tie_plus_zero{};
  bool tie_zero_minus{};
  bool tie_plus_minus{};
  bool any_tie() const noexcept { return tie_plus_zero || tie_zero_minus || tie_plus_minus; }
};

SortedCorrelations sort_correlations(const BellVector& c);

// The correlation vector if m is Bell-diagonal within 1e-10 per Pauli
// coefficient (local Bloch vectors zero, correlation tensor diagonal).
std::optional<BellVector> bell_diagonal_vector(const ComplexMatrix& m);

}  // namespace qcorr
