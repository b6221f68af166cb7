#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace qcorr {

struct NelderMeadResult {
  std::vector<double> point;
  double value{};
  std::size_t evaluations{};
  bool converged{};
};

// Downhill-simplex minimization with the standard coefficients (reflect 1,
// expand 2, contract 1/2, shrink 1/2). The initial simplex is the start
// point plus one vertex per coordinate offset by initial_step. Stops when
// the value spread across the simplex drops below tol, or after max_iters
// iterations. Deterministic for a given start (stable ordering on ties).
NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, double initial_step, double tol,
    std::size_t max_iters);

}  // namespace qcorr
