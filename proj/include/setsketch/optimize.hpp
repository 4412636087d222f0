#pragma once

#include <functional>

namespace setsketch {

struct OptimizeResult {
  double x = 0;
  double value = 0;
  int iterations = 0;
};

/// Brent's method (golden section with parabolic steps) for the maximum of
/// f on the open interval (lo, hi). Only interior points are evaluated.
/// Terminates when the bracket is narrower than about 2 * abs_tol or after
/// max_iterations evaluations.
OptimizeResult brent_maximize(const std::function<double(double)>& f, double lo, double hi, double abs_tol = 1e-9,
                              int max_iterations = 200);

/// Brent-Dekker root search on [lo, hi]. f(lo) and f(hi) must have
/// opposite signs (or one of them be zero), otherwise std::invalid_argument.
/// Stops once the bracket is below abs_tol + rel_tol * |x|.
OptimizeResult brent_root(const std::function<double(double)>& f, double lo, double hi, double abs_tol, double rel_tol,
                          int max_iterations = 200);

}  // namespace setsketch
