#include "qcorr/degeneracy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/parallel.hpp"

namespace qcorr {

namespace {

constexpr std::size_t kScanDensityFactor = 4;
constexpr std::size_t kMaxSampledPairs = 64;

std::string direction_text(const Direction& d) {
  std::ostringstream os;
  os << "(" << d.x() << ", " << d.y() << ", " << d.z() << ")";
  return os.str();
}

}  // namespace

DegeneracyReport scan_degenerate_directions(const TwoQubitState& rho,
                                            const OptimizerSettings& settings,
                                            double tol) {
  validate(settings);
  if (!(tol > 0.0)) {
    throw InputError("scan_degenerate_directions: tol must be positive");
  }

  const ComplexMatrix& m = rho.matrix();
  const ComplexMatrix pm = marginal_product_matrix(m);
  auto q_of = [&](const Direction& n) {
    return trace_norm_distance(m, apply_local_measurement(m, n));
  };
  auto c_of = [&](const Direction& n) {
    return trace_norm_distance(apply_local_measurement(m, n),
                               apply_local_measurement(pm, n));
  };

  const OptimizationResult refined = minimize_q(rho, settings);

  std::vector<Direction> lattice =
      fibonacci_hemisphere(kScanDensityFactor * settings.grid_points);
  std::vector<double> q(lattice.size());
  parallel_for(lattice.size(), [&](std::size_t i) { q[i] = q_of(lattice[i]); });

  double q_optimum = refined.value;
  for (const double v : q) {
    q_optimum = std::min(q_optimum, v);
  }

  DegeneracyReport report;
  report.q_optimum = q_optimum;
  report.tolerance = tol;
  report.scan_lattice_size = lattice.size();

  std::vector<std::size_t> members;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    if (q[i] <= q_optimum + tol) {
      members.push_back(i);
    }
  }
  report.degenerate_directions.reserve(members.size() + 1);
  for (const std::size_t i : members) {
    report.degenerate_directions.push_back(lattice[i]);
  }
  // the refined direction reproduces refined.value up to rounding, far
  // inside any sensible tol, so it joins whenever the denser lattice found
  // nothing lower
  if (refined.value <= q_optimum + tol) {
    report.degenerate_directions.push_back(refined.direction);
  }

  std::vector<double> c(report.degenerate_directions.size());
  parallel_for(c.size(),
               [&](std::size_t i) { c[i] = c_of(report.degenerate_directions[i]); });

  std::size_t low = 0;
  std::size_t high = 0;
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i] < c[low]) {
      low = i;
    }
    if (c[i] > c[high]) {
      high = i;
    }
  }
  report.c_min = c[low];
  report.c_max = c[high];
  report.c_spread = report.c_max - report.c_min;
  report.is_ambiguous = report.c_spread > kAmbiguityThreshold;
  report.c_min_direction = report.degenerate_directions[low];
  report.c_max_direction = report.degenerate_directions[high];

  const std::size_t stride =
      std::max<std::size_t>(1, (c.size() + kMaxSampledPairs - 1) / kMaxSampledPairs);
  for (std::size_t i = 0; i < c.size(); i += stride) {
    report.sampled_pairs.emplace_back(report.degenerate_directions[i], c[i]);
  }
  return report;
}

std::vector<std::pair<double, double>> c_profile(double rho_star_c,
                                                 std::size_t n_z_samples) {
  if (n_z_samples < 2) {
    throw InputError("c_profile: need at least 2 samples");
  }
  const TwoQubitState rho = build_rho_star(rho_star_c);
  std::vector<std::pair<double, double>> profile;
  profile.reserve(n_z_samples);
  for (std::size_t i = 0; i < n_z_samples; ++i) {
    const double n_z = -1.0 + 2.0 * static_cast<double>(i) /
                                  static_cast<double>(n_z_samples - 1);
    const double r = std::sqrt(std::max(0.0, 1.0 - n_z * n_z));
    const Direction n = Direction::normalized(r, 0.0, n_z);
    profile.emplace_back(n_z, c_at(rho, n));
  }
  return profile;
}

AmbiguityWitness summarize(const DegeneracyReport& report) {
  AmbiguityWitness witness;
  witness.is_ambiguous = report.is_ambiguous;
  witness.c_spread = report.c_spread;
  witness.low = report.c_min_direction;
  witness.high = report.c_max_direction;

  std::ostringstream os;
  if (report.is_ambiguous) {
    os << "ambiguous: classical correlation spans [" << report.c_min << ", "
       << report.c_max << "] (spread " << report.c_spread << " > "
       << kAmbiguityThreshold << ") across " << report.degenerate_directions.size()
       << " degenerate directions; lowest at " << direction_text(witness.low)
       << ", highest at " << direction_text(witness.high);
  } else {
    os << "not ambiguous: classical correlation spread " << report.c_spread
       << " <= " << kAmbiguityThreshold << " across "
       << report.degenerate_directions.size() << " degenerate directions";
  }
  witness.summary = os.str();
  return witness;
}

AmbiguityWitness ambiguity_witness(const TwoQubitState& rho,
                                   const OptimizerSettings& settings) {
  return summarize(scan_degenerate_directions(rho, settings, kDegeneracyBandTol));
}

}  // namespace qcorr
