#include "setsketch/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace setsketch {

namespace {

void check_base(double b) {
  if (!(b > 1) || std::isinf(b)) throw std::invalid_argument("base must be a finite value > 1");
}

void check_params(const SeriesParams& p) {
  if (!(p.tolerance > 0) || !(p.tolerance <= 1e-6))
    throw std::invalid_argument("series tolerance must be in (0, 1e-6]");
  if (p.max_terms < 1) throw std::invalid_argument("series term budget must be positive");
}

void check_unit(double x) {
  if (!(x >= 0) || !(x <= 1)) throw std::invalid_argument("argument must be in [0, 1]");
}

// True once the remaining tail is below tolerance * |sum|. The term ratios
// of every series here decrease towards their limit, so with r = |t / prev|
// < 1 the tail is at most |t| r / (1 - r).
bool tail_negligible(double t, double prev, double sum, double tolerance) {
  if (t == 0) return true;
  const double r = std::abs(t / prev);
  return r < 1 && std::abs(t) * r <= tolerance * (1 - r) * std::abs(sum);
}

// Sums term(j) for j = j0 - 1, j0 - 2, ... until 8 consecutive steps have
// a negligible tail.
template <typename Term>
double downward_sum(Term term, long j0, double reference, long& budget, double tolerance) {
  constexpr int quiet_needed = 8;
  double sum = 0, prev = term(j0);
  for (long j = j0 - 1, quiet = 0; quiet < quiet_needed && budget > 0; --j, --budget) {
    const double t = term(j);
    sum += t;
    quiet = tail_negligible(t, prev, reference + sum, tolerance) ? quiet + 1 : 0;
    prev = t;
  }
  return sum;
}

// Below this argument the upward tail is summed in closed form: exp(-t)
// is expanded into powers of t, and each power summed over j is geometric.
constexpr double small_argument = 0.1;

// sum_{n>=n0} coefficient(n) t^n / n!, stopped once a term is negligible
// against reference + sum. Callers keep t small enough for the terms to
// shrink geometrically.
template <typename Coefficient>
double power_tail(double t, int n0, Coefficient coefficient, double reference, double tolerance) {
  double sum = 0, t_pow = std::pow(t, n0), factorial = std::tgamma(n0 + 1.);
  for (int n = n0; n < n0 + 100; ++n) {
    if (n > n0) {
      t_pow *= t;
      factorial *= n;
    }
    const double c = coefficient(n) * t_pow / factorial;
    sum += c;
    if (std::abs(c) <= tolerance * std::abs(reference + sum)) break;
  }
  return sum;
}

}  // namespace

double xi(double b, double x, int k, const SeriesParams& params) {
  check_base(b);
  check_params(params);
  if (k != 1 && k != 2) throw std::invalid_argument("xi is defined for k in {1, 2}");
  const double log_b = std::log(b);
  // t = b^(x - j), term = t^k exp(-t)
  auto t_of = [&](long j) { return std::exp((x - static_cast<double>(j)) * log_b); };
  auto term = [&](long j) {
    const double t = t_of(j);
    return std::pow(t, k) * std::exp(-t);
  };
  const long j0 = std::lround(x);
  long budget = params.max_terms;
  double sum = term(j0);
  long j = j0 + 1;
  for (; t_of(j) >= small_argument && budget > 0; ++j, --budget) sum += term(j);
  // sum_{i>=0} (t b^-i)^k exp(-t b^-i) = sum_n (-1)^n t^(k+n) / (n! (1 - b^-(k+n)))
  const double t = t_of(j);
  const double t_k = std::pow(t, k);
  sum += t_k * power_tail(
                   t, 0, [&](int n) { return (n % 2 ? -1. : 1.) / -std::expm1(-(n + k) * log_b); }, sum / t_k,
                   params.tolerance);
  sum += downward_sum(term, j0, sum, budget, params.tolerance);
  // Gamma(1) = Gamma(2) = 1
  return log_b * sum;
}

double zeta(double b, double x1, double x2, const SeriesParams& params) {
  check_base(b);
  check_params(params);
  if (x1 == x2) return 0;
  if (x2 < x1) return -zeta(b, x2, x1, params);
  const double log_b = std::log(b);
  const double width_log = (x2 - x1) * log_b;
  const double growth = std::expm1(width_log);
  auto a_of = [&](long j) { return std::exp((x1 - static_cast<double>(j)) * log_b); };
  auto term = [&](long j) {
    const double a1 = a_of(j);
    // exp(-a1) - exp(-a2) with a2 - a1 = a1 * growth
    return -std::exp(-a1) * std::expm1(-a1 * growth);
  };
  const long j0 = std::lround(x1);
  long budget = params.max_terms;
  double sum = term(j0);
  long j = j0 + 1;
  for (; a_of(j) * (1 + growth) >= small_argument && budget > 0; ++j, --budget) sum += term(j);
  // exp(-a1) - exp(-a2) = sum_{n>=1} (-1)^n (a1^n - a2^n) / n!, a2^n = a1^n b^(n w)
  sum += power_tail(
      a_of(j), 1, [&](int n) { return (n % 2 ? 1. : -1.) * std::expm1(n * width_log) / -std::expm1(-n * log_b); }, sum,
      params.tolerance);
  sum += downward_sum(term, j0, sum, budget, params.tolerance);
  return sum;
}

double sigma(double b, double x, const SeriesParams& params) {
  check_base(b);
  check_params(params);
  check_unit(x);
  if (x == 0) return 0;
  if (x > 1 - 1e-12) return std::numeric_limits<double>::infinity();
  const double log_x = std::log(x);
  double series = 0, prev = 0;
  double b_pow = 1;  // b^(k-1)
  for (long k = 1; k <= params.max_terms; ++k) {
    const double term = b_pow * std::exp(b_pow * b * log_x);
    series += term;
    if (k > 1 && tail_negligible(term, prev, series, params.tolerance)) break;
    prev = term;
    b_pow *= b;
  }
  return x + (b - 1) * series;
}

double tau(double b, double x, const SeriesParams& params) {
  check_base(b);
  check_params(params);
  check_unit(x);
  if (x == 0 || x == 1) return 0;
  const double log_x = std::log(x);
  double series = 0, prev = 0;
  double b_pow = 1;  // b^-k
  for (long k = 0; k < params.max_terms; ++k) {
    const double term = b_pow / b * std::expm1(b_pow * log_x);
    series += term;
    if (k > 0 && tail_negligible(term, prev, series, params.tolerance)) break;
    prev = term;
    b_pow /= b;
  }
  return 1 - x + (b - 1) * series;
}

double p_b(double b, double x) {
  check_base(b);
  check_unit(x);
  if (x == 0) return 0;
  if (x == 1) return 1;
  return -std::log1p(-x * (b - 1) / b) / std::log1p(b - 1);
}

double x_div_expm1(double x) {
  if (x == 0) return 1;
  return x / std::expm1(x);
}

}  // namespace setsketch
