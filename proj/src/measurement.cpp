#include "qcorr/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kUnitTol = 1e-12;

}  // namespace

Direction::Direction(double x, double y, double z) : nx_(x), ny_(y), nz_(z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (std::abs(norm - 1.0) > kUnitTol) {
    std::ostringstream os;
    os << "Direction: norm " << norm << " differs from 1 beyond " << kUnitTol;
    throw InputError(os.str());
  }
}

Direction Direction::from_angles(double theta, double phi) {
  const double st = std::sin(theta);
  return Direction(Unchecked{}, st * std::cos(phi), st * std::sin(phi), std::cos(theta));
}

Direction Direction::normalized(double x, double y, double z) {
  const double norm = std::sqrt(x * x + y * y + z * z);
  if (norm <= kUnitTol) {
    throw InputError("Direction: cannot normalize a near-zero vector");
  }
  return Direction(Unchecked{}, x / norm, y / norm, z / norm);
}

Direction Direction::antipode() const noexcept {
  return Direction(Unchecked{}, -nx_, -ny_, -nz_);
}

double Direction::dot(const Direction& o) const noexcept {
  return nx_ * o.nx_ + ny_ * o.ny_ + nz_ * o.nz_;
}

ComplexMatrix projector(const Direction& n, Outcome outcome) {
  const double s = outcome == Outcome::plus ? 1.0 : -1.0;
  ComplexMatrix p(2);
  p(0, 0) = 0.5 * (1.0 + s * n.z());
  p(1, 1) = 0.5 * (1.0 - s * n.z());
  p(0, 1) = Complex(0.5 * s * n.x(), -0.5 * s * n.y());
  p(1, 0) = Complex(0.5 * s * n.x(), 0.5 * s * n.y());
  return p;
}

ComplexMatrix apply_local_measurement(const ComplexMatrix& rho, const Direction& n,
                                      MeasuredQubit side) {
  if (rho.dim() != 4) {
    throw DimensionError("apply_local_measurement: expected a 4x4 matrix");
  }
  const ComplexMatrix p = projector(n, Outcome::plus);
  const ComplexMatrix i2 = ComplexMatrix::identity(2);
  const ComplexMatrix k =
      side == MeasuredQubit::first ? tensor_product(p, i2) : tensor_product(i2, p);
  // With the complementary projector I - k the channel collapses to
  // rho - k rho - rho k + 2 k rho k; for Hermitian rho, rho k = (k rho)^+.
  const ComplexMatrix a = k * rho;
  const ComplexMatrix b = a * k;
  ComplexMatrix out = rho - a - a.adjoint();
  out += b.scaled(2.0);
  return out;
}

TwoQubitState local_measure(const TwoQubitState& rho, const Direction& n,
                            MeasuredQubit side) {
  return TwoQubitState::from_matrix(apply_local_measurement(rho.matrix(), n, side));
}

std::vector<Direction> fibonacci_hemisphere(std::size_t count) {
  if (count < 2) {
    throw InputError("fibonacci_hemisphere: need at least 2 nodes");
  }
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Direction> nodes;
  nodes.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double z = static_cast<double>(i) / static_cast<double>(count - 1);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = static_cast<double>(i) * golden_angle;
    nodes.push_back(Direction::normalized(r * std::cos(phi), r * std::sin(phi), z));
  }
  return nodes;
}

}  // namespace qcorr
