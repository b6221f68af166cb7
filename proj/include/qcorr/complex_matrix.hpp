#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <vector>

namespace qcorr {

using Complex = std::complex<double>;

// Dense complex matrix of dimension 2 or 4. Fixed inline storage, value
// semantics; all operations allocate nothing, which keeps the optimizer
// objective evaluations cheap.
class ComplexMatrix {
public:
  explicit ComplexMatrix(std::size_t dim);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t i, std::size_t j) noexcept { return e_[i * dim_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const noexcept {
    return e_[i * dim_ + j];
  }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);

  ComplexMatrix scaled(Complex factor) const;
  ComplexMatrix adjoint() const;
  Complex trace() const;

  // max_ij |m(i,j) - conj(m(j,i))|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_defect() <= tol; }
  // (m + m^dagger) / 2
  ComplexMatrix symmetrized() const;

  double max_abs_diff(const ComplexMatrix& other) const;

private:
  std::size_t dim_;
  std::array<Complex, 16> e_{};
};

ComplexMatrix operator*(Complex factor, const ComplexMatrix& m);
ComplexMatrix operator*(double factor, const ComplexMatrix& m);

// Real eigenvalues of a Hermitian matrix, sorted ascending.
struct EigenSpectrum {
  std::vector<double> values;
  double min() const { return values.front(); }
  double max() const { return values.back(); }
  double sum() const;
};

// Kronecker product of two 2x2 matrices; block (i,j) of the result is a(i,j)*b.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { a, b };

// Trace a 4x4 two-qubit operator over the named subsystem, leaving the 2x2
// reduced operator of the other one. Subsystem a is the first tensor factor.
ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced_out);

// Cyclic Jacobi diagonalization of a complex Hermitian matrix. The input is
// symmetrized first; inputs whose Hermiticity defect exceeds hermiticity_tol
// are rejected with the measured asymmetry. Rotations stop once the
// off-diagonal Frobenius norm falls below 1e-13 (at most 100 sweeps).
EigenSpectrum eigenvalues_hermitian(const ComplexMatrix& m, double hermiticity_tol = 1e-12);

// Schatten 1-norm distance: sum_i |eigenvalue_i(rho - tau)| for Hermitian
// rho, tau of equal dimension.
double trace_norm_distance(const ComplexMatrix& rho, const ComplexMatrix& tau);

}  // namespace qcorr
