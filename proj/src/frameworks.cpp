#include "qcorr/frameworks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/nelder_mead.hpp"
#include "qcorr/parallel.hpp"
#include "qcorr/pauli.hpp"

namespace qcorr {

namespace {

constexpr double kZeroCorrelation = 1e-12;
constexpr std::size_t kRefineStarts = 5;
constexpr double kRefineStep = 0.1;

// Fixed oracle settings for the per-direction product search, so repeated
// calls agree bit for bit.
constexpr std::size_t kSearchRestarts = 50;
constexpr std::uint64_t kSearchSeed = 20260819;
constexpr double kSearchStep = 0.15;
constexpr double kSearchTol = 1e-12;
constexpr std::size_t kSearchMaxIters = 400;

const char* kTieBreakNote = "ambiguous under degeneracy";

Direction hemisphere(const Direction& d) {
  return d.z() < 0.0 ? d.antipode() : d;
}

Direction axis_direction(Axis a) {
  switch (a) {
    case Axis::x:
      return Direction(1.0, 0.0, 0.0);
    case Axis::y:
      return Direction(0.0, 1.0, 0.0);
    default:
      return Direction(0.0, 0.0, 1.0);
  }
}

// Lattice scan plus simplex refinement; minimizes. Ties on the lattice keep
// the smallest index; refinement replaces the incumbent only on strict
// improvement. Both rules keep degenerate plateaus deterministic.
OptimizationResult optimize_direction(const std::function<double(const Direction&)>& objective,
                                      const OptimizerSettings& settings) {
  const std::vector<Direction> lattice = fibonacci_hemisphere(settings.grid_points);
  std::vector<double> value(lattice.size());
  parallel_for(lattice.size(),
               [&](std::size_t i) { value[i] = objective(lattice[i]); });
  std::size_t evaluations = lattice.size();

  std::vector<std::size_t> order(lattice.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t starts = std::min(kRefineStarts, lattice.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(starts),
                    order.end(), [&](std::size_t a, std::size_t b) {
                      if (value[a] != value[b]) {
                        return value[a] < value[b];
                      }
                      return a < b;
                    });

  double best_value = value[order[0]];
  Direction best_direction = lattice[order[0]];

  for (std::size_t k = 0; k < starts; ++k) {
    const Direction& node = lattice[order[k]];
    const double theta = std::acos(std::clamp(node.z(), -1.0, 1.0));
    const double phi = std::atan2(node.y(), node.x());
    const NelderMeadResult refined = nelder_mead(
        [&](const std::vector<double>& p) {
          return objective(Direction::from_angles(p[0], p[1]));
        },
        {theta, phi}, kRefineStep, settings.refine_tol, settings.refine_max_iters);
    evaluations += refined.evaluations;
    if (refined.value < best_value) {
      best_value = refined.value;
      best_direction = hemisphere(Direction::from_angles(refined.point[0], refined.point[1]));
    }
  }
  return OptimizationResult{best_value, best_direction, evaluations};
}

// Bloch vectors read off a 6-parameter point, each projected onto the unit
// ball; excess_{a,b} report how far outside the ball the raw point sat.
ComplexMatrix product_from_bloch(const std::vector<double>& p, double* excess_a,
                                 double* excess_b) {
  auto half = [](double bx, double by, double bz, double* excess) {
    const double norm = std::sqrt(bx * bx + by * by + bz * bz);
    double scale = 1.0;
    *excess = 0.0;
    if (norm > 1.0) {
      scale = 1.0 / norm;
      *excess = norm - 1.0;
    }
    ComplexMatrix m(2);
    m(0, 0) = 0.5 * (1.0 + scale * bz);
    m(1, 1) = 0.5 * (1.0 - scale * bz);
    m(0, 1) = Complex(0.5 * scale * bx, -0.5 * scale * by);
    m(1, 0) = Complex(0.5 * scale * bx, 0.5 * scale * by);
    return m;
  };
  return tensor_product(half(p[0], p[1], p[2], excess_a),
                        half(p[3], p[4], p[5], excess_b));
}

}  // namespace

void validate(const OptimizerSettings& settings) {
  if (settings.grid_points < 16) {
    throw InputError("OptimizerSettings: grid_points must be at least 16");
  }
  if (!(settings.refine_tol > 0.0)) {
    throw InputError("OptimizerSettings: refine_tol must be positive");
  }
}

const char* framework_name(Framework f) {
  switch (f) {
    case Framework::measurement_based_a:
      return "measurement_based_a";
    case Framework::measurement_based_b:
      return "measurement_based_b";
    case Framework::measurement_independent:
      return "measurement_independent";
    default:
      return "independent_optimization";
  }
}

double q_at(const TwoQubitState& rho, const Direction& n) {
  const ComplexMatrix& m = rho.matrix();
  return trace_norm_distance(m, apply_local_measurement(m, n));
}

double c_at(const TwoQubitState& rho, const Direction& n) {
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix pm = marginal_product_matrix(m);
  return trace_norm_distance(apply_local_measurement(m, n),
                             apply_local_measurement(pm, n));
}

double total(const TwoQubitState& rho) {
  return trace_norm_distance(rho.matrix(), marginal_product_matrix(rho.matrix()));
}

OptimizationResult minimize_q(const TwoQubitState& rho, const OptimizerSettings& settings) {
  validate(settings);
  const ComplexMatrix& m = rho.matrix();
  return optimize_direction(
      [&m](const Direction& n) {
        return trace_norm_distance(m, apply_local_measurement(m, n));
      },
      settings);
}

OptimizationResult maximize_c(const TwoQubitState& rho, const OptimizerSettings& settings) {
  validate(settings);
  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix pm = marginal_product_matrix(m);
  OptimizationResult result = optimize_direction(
      [&](const Direction& n) {
        return -trace_norm_distance(apply_local_measurement(m, n),
                                    apply_local_measurement(pm, n));
      },
      settings);
  result.value = std::max(0.0, -result.value);
  return result;
}

ClosedFormReference closed_form_bell(const BellVector& c) {
  const std::array<double, 4> spectrum = bell_diagonal_spectrum(c);
  if (spectrum[0] < -1e-12) {
    std::ostringstream os;
    os << "closed_form_bell: unphysical correlation vector, eigenvalue " << spectrum[0];
    throw UnphysicalStateError(os.str(), spectrum[0]);
  }
  const SortedCorrelations sc = sort_correlations(c);
  ClosedFormReference ref;
  ref.q = sc.c_zero;
  ref.c = sc.c_plus;
  ref.a_n = std::sqrt(1.0 + sc.c_plus) - 1.0;
  ref.b_n = sc.c_plus < kZeroCorrelation ? 0.0
            : sc.signed_plus < 0.0       ? -ref.a_n
                                         : ref.a_n;
  ref.c_prime = 2.0 * ref.a_n;
  return ref;
}

TwoQubitState closest_product_to_single_axis_classical(double c_n, Axis axis) {
  if (std::abs(c_n) > 1.0) {
    std::ostringstream os;
    os << "closest_product_to_single_axis_classical: |c_n| = " << std::abs(c_n)
       << " exceeds 1";
    throw InputError(os.str());
  }
  if (std::abs(c_n) < kZeroCorrelation) {
    return build_bell_diagonal(BellVector{});
  }
  const double a = std::sqrt(1.0 + std::abs(c_n)) - 1.0;
  const double b = c_n < 0.0 ? -a : a;
  const std::size_t k = axis == Axis::x ? 1 : axis == Axis::y ? 2 : 3;
  PauliCoefficients r{};
  r[0][0] = 1.0;
  r[k][0] = a;
  r[0][k] = b;
  r[k][k] = a * b;
  return TwoQubitState::from_matrix(pauli_compose(r));
}

CPrimeValue c_prime_at(const TwoQubitState& rho, const Direction& n) {
  if (const std::optional<BellVector> bd = bell_diagonal_vector(rho.matrix())) {
    // The measured state is a single-axis classical state up to local
    // unitaries, with strength |(c_x n_x, c_y n_y, c_z n_z)|; the closest
    // product distance depends only on that strength.
    const double mu = std::sqrt(bd->x * bd->x * n.x() * n.x() +
                                bd->y * bd->y * n.y() * n.y() +
                                bd->z * bd->z * n.z() * n.z());
    return CPrimeValue{2.0 * (std::sqrt(1.0 + mu) - 1.0), false};
  }
  const ComplexMatrix chi = apply_local_measurement(rho.matrix(), n);
  const ProductSearchResult found =
      closest_product_search(chi, kSearchRestarts, kSearchSeed);
  return CPrimeValue{found.distance, true};
}

ProductSearchResult closest_product_search(const ComplexMatrix& target,
                                           std::size_t restarts, std::uint64_t seed) {
  if (target.dim() != 4) {
    throw DimensionError("closest_product_search: expected a 4x4 matrix");
  }
  auto objective = [&](const std::vector<double>& p) {
    double excess_a = 0.0;
    double excess_b = 0.0;
    const ComplexMatrix prod = product_from_bloch(p, &excess_a, &excess_b);
    return trace_norm_distance(target, prod) +
           4.0 * (excess_a * excess_a + excess_b * excess_b);
  };

  // first start: the target's own marginal Bloch vectors
  const PauliCoefficients r = pauli_decompose(target);
  std::vector<double> start = {r[1][0], r[2][0], r[3][0], r[0][1], r[0][2], r[0][3]};

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto ball_coordinate = [&](std::vector<double>& p, std::size_t offset) {
    while (true) {
      const double x = 2.0 * uniform() - 1.0;
      const double y = 2.0 * uniform() - 1.0;
      const double z = 2.0 * uniform() - 1.0;
      if (x * x + y * y + z * z <= 1.0) {
        p[offset] = x;
        p[offset + 1] = y;
        p[offset + 2] = z;
        return;
      }
    }
  };

  std::size_t evaluations = 0;
  std::vector<double> best_point = start;
  double best_value = std::numeric_limits<double>::infinity();
  const std::size_t total_starts = std::max<std::size_t>(1, restarts);
  for (std::size_t s = 0; s < total_starts; ++s) {
    std::vector<double> p = start;
    if (s > 0) {
      ball_coordinate(p, 0);
      ball_coordinate(p, 3);
    }
    const NelderMeadResult res =
        nelder_mead(objective, p, kSearchStep, kSearchTol, kSearchMaxIters);
    evaluations += res.evaluations;
    if (res.value < best_value) {
      best_value = res.value;
      best_point = res.point;
    }
  }

  double excess_a = 0.0;
  double excess_b = 0.0;
  ProductSearchResult result;
  result.closest = product_from_bloch(best_point, &excess_a, &excess_b);
  result.distance = trace_norm_distance(target, result.closest);
  result.evaluations = evaluations;
  return result;
}

std::vector<CorrelationTriple> evaluate_all_frameworks(const TwoQubitState& rho,
                                                       const OptimizerSettings& settings) {
  validate(settings);
  const double t = std::max(0.0, total(rho));
  const OptimizationResult q_opt = minimize_q(rho, settings);
  const OptimizationResult c_opt = maximize_c(rho, settings);

  std::vector<CorrelationTriple> triples;
  triples.reserve(4);

  CorrelationTriple a;
  a.framework = Framework::measurement_based_a;
  a.q = std::max(0.0, q_opt.value);
  a.c = std::max(0.0, c_at(rho, q_opt.direction));
  a.t = t;
  a.q_direction = q_opt.direction;
  a.c_direction = q_opt.direction;
  a.note = kTieBreakNote;
  triples.push_back(a);

  CorrelationTriple b;
  b.framework = Framework::measurement_based_b;
  b.q = std::max(0.0, q_at(rho, c_opt.direction));
  b.c = std::max(0.0, c_opt.value);
  b.t = t;
  b.q_direction = c_opt.direction;
  b.c_direction = c_opt.direction;
  b.note = kTieBreakNote;
  triples.push_back(b);

  CorrelationTriple mi;
  mi.framework = Framework::measurement_independent;
  if (const std::optional<BellVector> bd = bell_diagonal_vector(rho.matrix())) {
    const SortedCorrelations sc = sort_correlations(*bd);
    const ClosedFormReference ref = closed_form_bell(*bd);
    const TwoQubitState closest_product =
        closest_product_to_single_axis_classical(sc.signed_plus, sc.axis_plus);
    mi.q = std::max(0.0, ref.q);
    mi.c = std::max(0.0, ref.c_prime);
    mi.t = std::max(0.0, trace_norm_distance(rho.matrix(), closest_product.matrix()));
    mi.q_direction = axis_direction(sc.axis_plus);
    mi.c_direction = axis_direction(sc.axis_plus);
    if (sc.tie_plus_zero) {
      mi.note = kTieBreakNote;
    }
  } else {
    mi.available = false;
    mi.note = "no closed form for the closest classical state of a general state";
  }
  triples.push_back(mi);

  CorrelationTriple ind;
  ind.framework = Framework::independent_optimization;
  ind.q = std::max(0.0, q_opt.value);
  ind.c = std::max(0.0, c_opt.value);
  ind.t = t;
  ind.q_direction = q_opt.direction;
  ind.c_direction = c_opt.direction;
  triples.push_back(ind);

  return triples;
}

}  // namespace qcorr
