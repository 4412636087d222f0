#pragma once

namespace setsketch {

/// Series truncation settings shared by the special functions.
struct SeriesParams {
  /// Bound on the truncated tail relative to the partial sum, in (0, 1e-6].
  double tolerance = 1e-15;
  /// Hard cap on evaluated terms per call.
  long max_terms = 50'000'000;
};

/// (log b / Gamma(k)) * sum_j b^(k (x - j)) exp(-b^(x - j)), k in {1, 2}.
/// Periodic in x with period 1 and close to 1 for b <= 2.
/// Throws std::invalid_argument for b <= 1 or k outside {1, 2}.
double xi(double b, double x, int k, const SeriesParams& params = {});

/// sum_j exp(-b^(x1 - j)) - exp(-b^(x2 - j)), approximately x2 - x1.
/// Throws std::invalid_argument for b <= 1.
double zeta(double b, double x1, double x2, const SeriesParams& params = {});

/// x + (b - 1) sum_{k>=1} b^(k-1) x^(b^k), +infinity for x > 1 - 1e-12.
/// Throws std::invalid_argument for b <= 1 or x outside [0, 1].
double sigma(double b, double x, const SeriesParams& params = {});

/// 1 - x + (b - 1) sum_{k>=0} b^(-k-1) (x^(b^-k) - 1).
/// Throws std::invalid_argument for b <= 1 or x outside [0, 1].
double tau(double b, double x, const SeriesParams& params = {});

/// -log_b(1 - x (b - 1) / b). Throws std::invalid_argument for b <= 1 or
/// x outside [0, 1].
double p_b(double b, double x);

/// x / expm1(x), continuous at 0.
double x_div_expm1(double x);

}  // namespace setsketch
