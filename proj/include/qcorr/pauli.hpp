#pragma once

#include <array>
#include <cstddef>

#include "qcorr/complex_matrix.hpp"

namespace qcorr {

// Single-qubit basis: index 0 is the identity, 1..3 are the x, y, z Pauli
// matrices.
const ComplexMatrix& pauli(std::size_t k);

// Real coefficients of a two-qubit operator in the Pauli product basis,
//   coeff[i][j] = Re tr[(pauli_i (x) pauli_j) m].
// For Hermitian m the imaginary parts vanish and the expansion
//   m = (1/4) sum_ij coeff[i][j] pauli_i (x) pauli_j
// is exact.  Row 0 / column 0 carry the local Bloch vectors of the second
// and first qubit respectively; the 3x3 lower-right block is the spin
// correlation tensor.
using PauliCoefficients = std::array<std::array<double, 4>, 4>;

PauliCoefficients pauli_decompose(const ComplexMatrix& m);
ComplexMatrix pauli_compose(const PauliCoefficients& coeff);

}  // namespace qcorr
