#include "qcorr/nelder_mead.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qcorr {

namespace {

std::vector<double> blend(const std::vector<double>& a, const std::vector<double>& b,
                          double t) {
  // a + t (a - b)
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + t * (a[i] - b[i]);
  }
  return out;
}

}  // namespace

NelderMeadResult nelder_mead(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& start, double initial_step, double tol,
    std::size_t max_iters) {
  const std::size_t n = start.size();
  if (n == 0) {
    throw std::invalid_argument("nelder_mead: empty start point");
  }

  std::size_t evaluations = 0;
  auto eval = [&](const std::vector<double>& p) {
    ++evaluations;
    return objective(p);
  };

  std::vector<std::vector<double>> simplex(n + 1, start);
  std::vector<double> value(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    simplex[i + 1][i] += initial_step;
  }
  for (std::size_t i = 0; i <= n; ++i) {
    value[i] = eval(simplex[i]);
  }

  std::vector<std::size_t> order(n + 1);
  bool converged = false;
  for (std::size_t iter = 0; iter < max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return value[a] < value[b]; });
    const std::size_t best = order[0];
    const std::size_t second_worst = order[n - 1];
    const std::size_t worst = order[n];

    if (value[worst] - value[best] < tol) {
      converged = true;
      break;
    }

    std::vector<double> centroid(n, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == worst) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        centroid[k] += simplex[i][k];
      }
    }
    for (double& c : centroid) {
      c /= static_cast<double>(n);
    }

    const std::vector<double> reflected = blend(centroid, simplex[worst], 1.0);
    const double f_reflected = eval(reflected);

    if (f_reflected < value[best]) {
      const std::vector<double> expanded = blend(centroid, simplex[worst], 2.0);
      const double f_expanded = eval(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        value[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        value[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < value[second_worst]) {
      simplex[worst] = reflected;
      value[worst] = f_reflected;
      continue;
    }

    // contraction: outside when the reflection at least beat the worst
    // vertex, inside otherwise
    std::vector<double> contracted;
    if (f_reflected < value[worst]) {
      contracted = blend(centroid, simplex[worst], 0.5);
    } else {
      contracted = blend(centroid, simplex[worst], -0.5);
    }
    const double f_contracted = eval(contracted);
    if (f_contracted < std::min(f_reflected, value[worst])) {
      simplex[worst] = contracted;
      value[worst] = f_contracted;
      continue;
    }

    // shrink toward the best vertex
    for (std::size_t i = 0; i <= n; ++i) {
      if (i == best) {
        continue;
      }
      for (std::size_t k = 0; k < n; ++k) {
        simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      }
      value[i] = eval(simplex[i]);
    }
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (value[i] < value[best]) {
      best = i;
    }
  }
  return NelderMeadResult{simplex[best], value[best], evaluations, converged};
}

}  // namespace qcorr
