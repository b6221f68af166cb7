#include "qcorr/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kJacobiOffNorm = 1e-13;
constexpr std::size_t kJacobiMaxSweeps = 100;
constexpr double kResidualGate = 1e-12;

void require_dim(std::size_t dim) {
  if (dim != 2 && dim != 4) {
    std::ostringstream os;
    os << "matrix dimension must be 2 or 4, got " << dim;
    throw DimensionError(os.str());
  }
}

double off_diagonal_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (i != j) acc += std::norm(m(i, j));
    }
  }
  return std::sqrt(acc);
}

// One unitary similarity rotation zeroing m(p,q). The 2x2 block
// [[a, r w], [r conj(w), d]] with |w| = 1 is rotated by
// U(p,p) = c, U(p,q) = -s w, U(q,p) = s conj(w), U(q,q) = c,
// where tan(2 theta) solves r (c^2 - s^2) + (d - a) c s = 0.
void jacobi_rotate(ComplexMatrix& m, std::size_t p, std::size_t q) {
  const Complex mpq = m(p, q);
  const double r = std::abs(mpq);
  if (r == 0.0) return;
  const Complex w = mpq / r;

  const double a = m(p, p).real();
  const double d = m(q, q).real();
  const double tau = (d - a) / (2.0 * r);
  // smaller-magnitude root of t^2 - 2 tau t - 1 = 0, keeps the rotation <= 45 degrees
  const double t = (tau >= 0.0) ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex upq = -s * w;
  const Complex uqp = s * std::conj(w);
  const std::size_t n = m.dim();

  // columns: M <- M U
  for (std::size_t i = 0; i < n; ++i) {
    const Complex mip = m(i, p);
    const Complex miq = m(i, q);
    m(i, p) = mip * c + miq * uqp;
    m(i, q) = mip * upq + miq * c;
  }
  // rows: M <- U^dagger M
  for (std::size_t j = 0; j < n; ++j) {
    const Complex mpj = m(p, j);
    const Complex mqj = m(q, j);
    m(p, j) = c * mpj + s * w * mqj;
    m(q, j) = -s * std::conj(w) * mpj + c * mqj;
  }

  m(p, q) = 0.0;
  m(q, p) = 0.0;
  m(p, p) = Complex(m(p, p).real(), 0.0);
  m(q, q) = Complex(m(q, q).real(), 0.0);
}

// Eigenvalues of an already-symmetrized Hermitian matrix, ascending.
std::array<double, 4> jacobi_eigenvalues(ComplexMatrix m, std::size_t* count) {
  const std::size_t n = m.dim();
  for (std::size_t sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(m) < kJacobiOffNorm) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        jacobi_rotate(m, p, q);
      }
    }
  }
  if (off_diagonal_norm(m) >= kResidualGate) {
    throw std::runtime_error("jacobi: off-diagonal residual above 1e-12 after 100 sweeps");
  }
  std::array<double, 4> vals{};
  for (std::size_t i = 0; i < n; ++i) vals[i] = m(i, i).real();
  std::sort(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(n));
  *count = n;
  return vals;
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim) { require_dim(dim); }

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("matrix addition: dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) out.e_[k] = e_[k] + other.e_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("matrix subtraction: dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) out.e_[k] = e_[k] - other.e_[k];
  return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("matrix product: dimension mismatch");
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t k = 0; k < dim_; ++k) {
      const Complex aik = (*this)(i, k);
      if (aik == Complex(0.0, 0.0)) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        out(i, j) += aik * other(k, j);
      }
    }
  }
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (dim_ != other.dim_) throw DimensionError("matrix addition: dimension mismatch");
  for (std::size_t k = 0; k < dim_ * dim_; ++k) e_[k] += other.e_[k];
  return *this;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  ComplexMatrix out(dim_);
  for (std::size_t k = 0; k < dim_ * dim_; ++k) out.e_[k] = factor * e_[k];
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(i, j) = std::conj((*this)(j, i));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = i; j < dim_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    }
  }
  return worst;
}

ComplexMatrix ComplexMatrix::symmetrized() const {
  ComplexMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) {
      out(i, j) = 0.5 * ((*this)(i, j) + std::conj((*this)(j, i)));
    }
  }
  return out;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) throw DimensionError("matrix comparison: dimension mismatch");
  double worst = 0.0;
  for (std::size_t k = 0; k < dim_ * dim_; ++k) {
    worst = std::max(worst, std::abs(e_[k] - other.e_[k]));
  }
  return worst;
}

ComplexMatrix operator*(Complex factor, const ComplexMatrix& m) { return m.scaled(factor); }
ComplexMatrix operator*(double factor, const ComplexMatrix& m) {
  return m.scaled(Complex(factor, 0.0));
}

double EigenSpectrum::sum() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != 2 || b.dim() != 2) {
    throw DimensionError("tensor_product: both factors must be 2x2");
  }
  ComplexMatrix out(4);
  for (std::size_t i1 = 0; i1 < 2; ++i1) {
    for (std::size_t j1 = 0; j1 < 2; ++j1) {
      for (std::size_t i2 = 0; i2 < 2; ++i2) {
        for (std::size_t j2 = 0; j2 < 2; ++j2) {
          out(2 * i1 + i2, 2 * j1 + j2) = a(i1, j1) * b(i2, j2);
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_trace(const ComplexMatrix& m, Subsystem traced_out) {
  if (m.dim() != 4) throw DimensionError("partial_trace: input must be 4x4");
  ComplexMatrix out(2);
  if (traced_out == Subsystem::b) {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        out(i, j) = m(2 * i + 0, 2 * j + 0) + m(2 * i + 1, 2 * j + 1);
      }
    }
  } else {
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) {
        out(i, j) = m(0 + i, 0 + j) + m(2 + i, 2 + j);
      }
    }
  }
  return out;
}

EigenSpectrum eigenvalues_hermitian(const ComplexMatrix& m, double hermiticity_tol) {
  const double defect = m.hermiticity_defect();
  if (defect > hermiticity_tol) {
    std::ostringstream os;
    os << "eigenvalues_hermitian: input asymmetry " << defect << " exceeds tolerance "
       << hermiticity_tol;
    throw NotHermitianError(os.str(), defect);
  }
  std::size_t count = 0;
  const auto vals = jacobi_eigenvalues(m.symmetrized(), &count);
  EigenSpectrum s;
  s.values.assign(vals.begin(), vals.begin() + static_cast<std::ptrdiff_t>(count));
  return s;
}

double trace_norm_distance(const ComplexMatrix& rho, const ComplexMatrix& tau) {
  if (rho.dim() != tau.dim()) {
    throw DimensionError("trace_norm_distance: dimension mismatch");
  }
  const ComplexMatrix diff = rho - tau;
  // the difference of two Hermitian-within-tol inputs carries twice the defect
  const double defect = diff.hermiticity_defect();
  if (defect > 2e-12) {
    std::ostringstream os;
    os << "trace_norm_distance: operands not Hermitian, difference asymmetry " << defect;
    throw NotHermitianError(os.str(), defect);
  }
  std::size_t count = 0;
  const auto vals = jacobi_eigenvalues(diff.symmetrized(), &count);
  double sum = 0.0;
  for (std::size_t i = 0; i < count; ++i) sum += std::abs(vals[i]);
  return sum;
}

}  // namespace qcorr
