#pragma once

#include <cstddef>
#include <vector>

#include "qcorr/complex_matrix.hpp"
#include "qcorr/states.hpp"

namespace qcorr {

// Unit vector on the Bloch sphere. Stored as components, not angles, so no
// coordinate singularity reaches the measurement channel; the optimizer
// converts (theta, phi) at its own boundary.
class Direction {
public:
  Direction() : nx_(0.0), ny_(0.0), nz_(1.0) {}
  // Rejects vectors whose norm differs from 1 by more than 1e-12.
  Direction(double x, double y, double z);

  // (sin t cos p, sin t sin p, cos t)
  static Direction from_angles(double theta, double phi);
  // Rescales an arbitrary nonzero vector onto the sphere.
  static Direction normalized(double x, double y, double z);

  double x() const noexcept { return nx_; }
  double y() const noexcept { return ny_; }
  double z() const noexcept { return nz_; }

  Direction antipode() const noexcept;
  double dot(const Direction& o) const noexcept;

private:
  struct Unchecked {};
  Direction(Unchecked, double x, double y, double z) : nx_(x), ny_(y), nz_(z) {}

  double nx_, ny_, nz_;
};

enum class Outcome { plus, minus };

// (I +- n.pauli)/2; idempotent, the pair sums to I and is orthogonal.
ComplexMatrix projector(const Direction& n, Outcome outcome);

enum class MeasuredQubit { first, second };

// The projective-measurement channel sum_j (P_j (x) I) rho (P_j (x) I) on
// raw matrices, with no validation or tagging. This is the optimizer's
// inner loop. The channel is exactly antipode-symmetric: the two projectors
// swap roles.
ComplexMatrix apply_local_measurement(const ComplexMatrix& rho, const Direction& n,
                                      MeasuredQubit side = MeasuredQubit::first);

// Same channel on validated states; the result is classified and validated.
// Idempotent: measuring twice along the same n equals measuring once.
TwoQubitState local_measure(const TwoQubitState& rho, const Direction& n,
                            MeasuredQubit side = MeasuredQubit::first);

// Deterministic near-uniform cover of the upper hemisphere (z >= 0) with
// count >= 2 nodes: z_i = i/(count-1), golden-angle azimuth. Node 0 is
// exactly +x and the last node exactly +z, so the equator and pole are
// always represented. Antipodal symmetry of the channel makes the
// hemisphere a full cover of measurement axes.
std::vector<Direction> fibonacci_hemisphere(std::size_t count);

}  // namespace qcorr
