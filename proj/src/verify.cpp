#include "qcorr/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "qcorr/errors.hpp"
#include "qcorr/format.hpp"

namespace qcorr {

namespace {

constexpr double kOptimumTol = 1e-6;
constexpr double kSearchTol = 1e-4;
constexpr std::size_t kSearchRestarts = 50;

BellVector single_axis_vector(double value, Axis axis) {
  switch (axis) {
    case Axis::x:
      return BellVector{value, 0.0, 0.0};
    case Axis::y:
      return BellVector{0.0, value, 0.0};
    default:
      return BellVector{0.0, 0.0, value};
  }
}

}  // namespace

VerificationResult run_verification(std::size_t n_states, std::uint64_t seed,
                                    const OptimizerSettings& settings,
                                    const ClosedFormFn& closed_form) {
  if (n_states < 1) {
    throw InputError("run_verification: need at least 1 state");
  }
  validate(settings);

  std::mt19937_64 rng(seed);
  auto uniform = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  auto next_physical = [&]() {
    while (true) {
      const BellVector c{2.0 * uniform() - 1.0, 2.0 * uniform() - 1.0,
                         2.0 * uniform() - 1.0};
      if (bell_diagonal_spectrum(c)[0] >= 0.0) {
        return c;
      }
    }
  };

  VerificationResult result;
  for (std::size_t i = 0; i < n_states; ++i) {
    const BellVector c = next_physical();
    const std::uint64_t search_seed = rng();
    ++result.states_checked;

    const TwoQubitState rho = build_bell_diagonal(c);
    const ClosedFormReference ref = closed_form(c);

    const double q = minimize_q(rho, settings).value;
    if (std::abs(q - ref.q) > kOptimumTol) {
      result.failures.push_back({c, "minimized_q_vs_reference", ref.q, q, kOptimumTol});
    }

    const double cc = maximize_c(rho, settings).value;
    if (std::abs(cc - ref.c) > kOptimumTol) {
      result.failures.push_back({c, "maximized_c_vs_reference", ref.c, cc, kOptimumTol});
    }

    const SortedCorrelations sc = sort_correlations(c);
    const TwoQubitState chi =
        build_bell_diagonal(single_axis_vector(sc.signed_plus, sc.axis_plus));
    const ProductSearchResult search =
        closest_product_search(chi.matrix(), kSearchRestarts, search_seed);
    if (std::abs(search.distance - ref.c_prime) > kSearchTol) {
      result.failures.push_back(
          {c, "closest_product_search_vs_reference", ref.c_prime, search.distance,
           kSearchTol});
    }
  }
  return result;
}

std::string render_verification(const VerificationResult& result) {
  std::ostringstream os;
  os << "verification: " << result.states_checked << " states checked, "
     << result.failures.size() << " failure"
     << (result.failures.size() == 1 ? "" : "s") << " -> "
     << (result.passed() ? "PASS" : "FAIL") << "\n";
  for (const VerificationFailure& f : result.failures) {
    os << "failure: check " << f.check << " on bell vector ("
       << format_full(f.vector.x) << ", " << format_full(f.vector.y) << ", "
       << format_full(f.vector.z) << "): expected " << format_full(f.expected)
       << ", got " << format_full(f.actual) << ", tolerance "
       << format_full(f.tolerance) << "\n";
  }
  return os.str();
}

}  // namespace qcorr
