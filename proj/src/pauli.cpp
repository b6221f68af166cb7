#include "qcorr/pauli.hpp"

#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

ComplexMatrix make_pauli(std::size_t k) {
  ComplexMatrix m(2);
  switch (k) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw std::out_of_range("pauli: index must be 0..3");
  }
  return m;
}

// Kronecker products pauli_i (x) pauli_j, built once.
const std::array<ComplexMatrix, 16>& pauli_basis() {
  static const std::array<ComplexMatrix, 16> basis = [] {
    std::array<ComplexMatrix, 16> b{
        ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
        ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
        ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4),
        ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4), ComplexMatrix(4)};
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        b[4 * i + j] = tensor_product(pauli(i), pauli(j));
      }
    }
    return b;
  }();
  return basis;
}

}  // namespace

const ComplexMatrix& pauli(std::size_t k) {
  static const std::array<ComplexMatrix, 4> table = {
      make_pauli(0), make_pauli(1), make_pauli(2), make_pauli(3)};
  if (k >= 4) {
    throw std::out_of_range("pauli: index must be 0..3");
  }
  return table[k];
}

PauliCoefficients pauli_decompose(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    throw DimensionError("pauli_decompose: expected a 4x4 matrix");
  }
  const auto& basis = pauli_basis();
  PauliCoefficients coeff{};
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      const ComplexMatrix& b = basis[4 * i + j];
      Complex t = 0.0;
      // Pauli products are Hermitian, so tr[b m] = sum_pq b(q,p) m(p,q).
      for (std::size_t p = 0; p < 4; ++p) {
        for (std::size_t q = 0; q < 4; ++q) {
          t += b(q, p) * m(p, q);
        }
      }
      coeff[i][j] = t.real();
    }
  }
  return coeff;
}

ComplexMatrix pauli_compose(const PauliCoefficients& coeff) {
  const auto& basis = pauli_basis();
  ComplexMatrix m(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (coeff[i][j] != 0.0) {
        m += basis[4 * i + j].scaled(0.25 * coeff[i][j]);
      }
    }
  }
  return m;
}

}  // namespace qcorr
