#include "qcorr/states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "qcorr/errors.hpp"

namespace qcorr {

namespace {

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-10;
constexpr double kPositivityTol = 1e-12;
constexpr double kTagTol = 1e-10;
constexpr double kTieTol = 1e-9;

struct Vec3 {
  double x{}, y{}, z{};
  double norm() const { return std::sqrt(x * x + y * y + z * z); }
  double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
};

// True when v lies in span{n} within tol per component; n is unit.
bool parallel_within(const Vec3& v, const Vec3& n, double tol) {
  const double p = v.dot(n);
  return std::abs(v.x - p * n.x) <= tol && std::abs(v.y - p * n.y) <= tol &&
         std::abs(v.z - p * n.z) <= tol;
}

StateTag classify(const PauliCoefficients& r) {
  const Vec3 a{r[1][0], r[2][0], r[3][0]};

  bool product = true;
  for (std::size_t j = 1; j < 4 && product; ++j) {
    for (std::size_t k = 1; k < 4 && product; ++k) {
      product = std::abs(r[j][k] - r[j][0] * r[0][k]) <= kTagTol;
    }
  }
  if (product) {
    return StateTag::product;
  }

  bool bell = true;
  for (std::size_t k = 1; k < 4 && bell; ++k) {
    bell = std::abs(r[k][0]) <= kTagTol && std::abs(r[0][k]) <= kTagTol;
  }
  for (std::size_t j = 1; j < 4 && bell; ++j) {
    for (std::size_t k = 1; k < 4 && bell; ++k) {
      if (j != k) {
        bell = std::abs(r[j][k]) <= kTagTol;
      }
    }
  }
  if (bell) {
    return StateTag::bell_diagonal;
  }

  // Invariance under some first-qubit measurement along n is equivalent to
  // a || n and every column of the correlation tensor || n.  The candidate
  // n is the largest of those vectors.
  const Vec3 cols[3] = {{r[1][1], r[2][1], r[3][1]},
                        {r[1][2], r[2][2], r[3][2]},
                        {r[1][3], r[2][3], r[3][3]}};
  Vec3 candidate = a;
  for (const Vec3& c : cols) {
    if (c.norm() > candidate.norm()) {
      candidate = c;
    }
  }
  // candidate cannot vanish here: a = 0 and T = 0 would have been product
  if (candidate.norm() > kTagTol) {
    const double inv = 1.0 / candidate.norm();
    const Vec3 n{candidate.x * inv, candidate.y * inv, candidate.z * inv};
    bool cq = parallel_within(a, n, kTagTol);
    for (const Vec3& c : cols) {
      cq = cq && parallel_within(c, n, kTagTol);
    }
    if (cq) {
      return StateTag::classical_quantum;
    }
  }

  return StateTag::general;
}

std::array<double, 4> spectrum_of(const ComplexMatrix& m) {
  const EigenSpectrum s = eigenvalues_hermitian(m, kHermitianTol);
  return {s.values[0], s.values[1], s.values[2], s.values[3]};
}

}  // namespace

char axis_name(Axis a) {
  switch (a) {
    case Axis::x:
      return 'x';
    case Axis::y:
      return 'y';
    default:
      return 'z';
  }
}

const char* state_tag_name(StateTag t) {
  switch (t) {
    case StateTag::general:
      return "general";
    case StateTag::bell_diagonal:
      return "bell_diagonal";
    case StateTag::classical_quantum:
      return "classical_quantum";
    default:
      return "product";
  }
}

std::array<double, 4> bell_diagonal_spectrum(const BellVector& c) {
  std::array<double, 4> v = {
      0.25 * (1.0 + c.x - c.y + c.z), 0.25 * (1.0 - c.x + c.y + c.z),
      0.25 * (1.0 + c.x + c.y - c.z), 0.25 * (1.0 - c.x - c.y - c.z)};
  std::sort(v.begin(), v.end());
  return v;
}

ComplexMatrix bell_diagonal_matrix(const BellVector& c) {
  ComplexMatrix m(4);
  m(0, 0) = m(3, 3) = 0.25 * (1.0 + c.z);
  m(1, 1) = m(2, 2) = 0.25 * (1.0 - c.z);
  m(0, 3) = m(3, 0) = 0.25 * (c.x - c.y);
  m(1, 2) = m(2, 1) = 0.25 * (c.x + c.y);
  return m;
}

TwoQubitState::TwoQubitState(ComplexMatrix m, StateTag tag,
                             std::array<double, 4> eigenvalues, bool validated)
    : matrix_(std::move(m)), tag_(tag), eigenvalues_(eigenvalues), validated_(validated) {}

TwoQubitState TwoQubitState::from_matrix(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    throw DimensionError("TwoQubitState: expected a 4x4 matrix");
  }
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "TwoQubitState: matrix not Hermitian, asymmetry " << defect;
    throw NotHermitianError(os.str(), defect);
  }

  std::array<double, 4> eigs = spectrum_of(m);
  const double tr = m.trace().real();
  if (std::abs(tr - 1.0) > kTraceTol) {
    std::ostringstream os;
    os << "TwoQubitState: trace " << tr << " differs from 1 beyond " << kTraceTol;
    throw UnphysicalStateError(os.str(), tr);
  }
  if (eigs[0] < -kPositivityTol) {
    std::ostringstream os;
    os << "TwoQubitState: negative eigenvalue " << eigs[0];
    throw UnphysicalStateError(os.str(), eigs[0]);
  }
  for (double& v : eigs) {
    if (v < 0.0) {
      v = 0.0;
    }
  }
  return TwoQubitState(m, classify(pauli_decompose(m)), eigs, true);
}

TwoQubitState TwoQubitState::unchecked(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    throw DimensionError("TwoQubitState: expected a 4x4 matrix");
  }
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    std::ostringstream os;
    os << "TwoQubitState: matrix not Hermitian, asymmetry " << defect;
    throw NotHermitianError(os.str(), defect);
  }
  return TwoQubitState(m, classify(pauli_decompose(m)), spectrum_of(m), false);
}

TwoQubitState build_bell_diagonal(const BellVector& c) {
  return TwoQubitState::from_matrix(bell_diagonal_matrix(c));
}

TwoQubitState build_rho_star(double c) {
  if (!(c >= 0.0 && c <= 1.0)) {
    std::ostringstream os;
    os << "build_rho_star: c = " << c << " outside [0, 1]";
    throw InputError(os.str());
  }
  return build_bell_diagonal(BellVector{c, c, 0.0});
}

ComplexMatrix marginal_product_matrix(const ComplexMatrix& m) {
  return tensor_product(partial_trace(m, Subsystem::b), partial_trace(m, Subsystem::a));
}

TwoQubitState marginal_product(const TwoQubitState& rho) {
  return TwoQubitState::unchecked(marginal_product_matrix(rho.matrix()));
}

SortedCorrelations sort_correlations(const BellVector& c) {
  struct Entry {
    double magnitude;
    double value;
    Axis axis;
  };
  std::array<Entry, 3> e = {Entry{std::abs(c.x), c.x, Axis::x},
                            Entry{std::abs(c.y), c.y, Axis::y},
                            Entry{std::abs(c.z), c.z, Axis::z}};
  // stable: exact ties keep x before y before z
  std::stable_sort(e.begin(), e.end(),
                   [](const Entry& l, const Entry& r) { return l.magnitude > r.magnitude; });

  SortedCorrelations s;
  s.c_plus = e[0].magnitude;
  s.c_zero = e[1].magnitude;
  s.c_minus = e[2].magnitude;
  s.signed_plus = e[0].value;
  s.signed_zero = e[1].value;
  s.signed_minus = e[2].value;
  s.axis_plus = e[0].axis;
  s.axis_zero = e[1].axis;
  s.axis_minus = e[2].axis;
  s.tie_plus_zero = s.c_plus - s.c_zero <= kTieTol;
  s.tie_zero_minus = s.c_zero - s.c_minus <= kTieTol;
  s.tie_plus_minus = s.c_plus - s.c_minus <= kTieTol;
  return s;
}

std::optional<BellVector> bell_diagonal_vector(const ComplexMatrix& m) {
  if (m.dim() != 4) {
    return std::nullopt;
  }
  const PauliCoefficients r = pauli_decompose(m);
  for (std::size_t k = 1; k < 4; ++k) {
    if (std::abs(r[k][0]) > kTagTol || std::abs(r[0][k]) > kTagTol) {
      return std::nullopt;
    }
  }
  for (std::size_t j = 1; j < 4; ++j) {
    for (std::size_t k = 1; k < 4; ++k) {
      if (j != k && std::abs(r[j][k]) > kTagTol) {
        return std::nullopt;
      }
    }
  }
  return BellVector{r[1][1], r[2][2], r[3][3]};
}

}  // namespace qcorr
