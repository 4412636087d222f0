#include "setsketch/joint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "setsketch/optimize.hpp"
#include "setsketch/special_functions.hpp"

namespace setsketch {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

void check_relative(double u, double v) {
  if (!(u > 0) || !(v > 0) || !(std::abs(u + v - 1) <= 1e-12)) {
    throw std::invalid_argument("relative cardinalities must be positive and sum to 1");
  }
}

void check_jaccard_range(double j, double u, double v) {
  if (!(j >= 0) || !(j <= std::min(u / v, v / u))) throw std::invalid_argument("J outside [0, min(u/v, v/u)]");
}

void check_joint_base(double b) {
  if (!(b > 1) || !(b <= std::numbers::e)) throw std::invalid_argument("joint estimation requires b in (1, e]");
}

double weighted_log(std::uint32_t count, double p) { return count == 0 ? 0. : count * std::log(p); }

struct CellProbabilities {
  double plus;
  double minus;
  double zero;
};

CellProbabilities cells(double j, double u, double v, double b) {
  const double p_plus = p_b(b, std::clamp(u - v * j, 0., 1.));
  const double p_minus = p_b(b, std::clamp(v - u * j, 0., 1.));
  return {p_plus, p_minus, std::max(0., 1 - p_plus - p_minus)};
}

double log_likelihood_unchecked(double j, double u, double v, const JointCounts& c, double b) {
  const CellProbabilities p = cells(j, u, v, b);
  return weighted_log(c.d_plus, p.plus) + weighted_log(c.d_minus, p.minus) + weighted_log(c.d_zero, p.zero);
}

// count * dp / p, zero for an empty cell even where p vanishes
double score_term(std::uint32_t count, double dp, double p) { return count == 0 ? 0. : count * dp / p; }

// Derivative of the log-likelihood with respect to J. Decreasing in J
// because the log-likelihood is concave.
double score_unchecked(double j, double u, double v, const JointCounts& c, double b) {
  const CellProbabilities p = cells(j, u, v, b);
  // derivative of p_b at x, up to the factor (b - 1) / log(b)
  auto slope = [b](double x) { return 1 / (b - x * (b - 1)); };
  const double dp_plus = -v * slope(std::clamp(u - v * j, 0., 1.));
  const double dp_minus = -u * slope(std::clamp(v - u * j, 0., 1.));
  return score_term(c.d_plus, dp_plus, p.plus) + score_term(c.d_minus, dp_minus, p.minus) +
         score_term(c.d_zero, -dp_plus - dp_minus, p.zero);
}

}  // namespace

std::string_view quantity_name(JointQuantity q) {
  switch (q) {
    case JointQuantity::jaccard:
      return "jaccard";
    case JointQuantity::union_size:
      return "union";
    case JointQuantity::intersection:
      return "intersection";
    case JointQuantity::diff_a:
      return "difference_a";
    case JointQuantity::diff_b:
      return "difference_b";
    case JointQuantity::cosine:
      return "cosine";
    case JointQuantity::inclusion_a:
      return "inclusion_a";
    case JointQuantity::inclusion_b:
      return "inclusion_b";
  }
  return "unknown";
}

double log_likelihood_joint(double j, double u, double v, const JointCounts& counts, double b) {
  check_relative(u, v);
  check_joint_base(b);
  check_jaccard_range(j, u, v);
  return log_likelihood_unchecked(j, u, v, counts, b);
}

double estimate_jaccard_ml(const JointCounts& counts, double n_a, double n_b, double b) {
  if (!(n_a > 0) || !(n_b > 0) || std::isinf(n_a) || std::isinf(n_b)) {
    throw std::invalid_argument("cardinalities must be positive and finite");
  }
  check_joint_base(b);
  if (counts.total() == 0) throw std::invalid_argument("joint counts are empty");
  const double u = n_a / (n_a + n_b);
  const double v = n_b / (n_a + n_b);
  const double j_max = std::min(n_a, n_b) / std::max(n_a, n_b);
  // The maximizer of a concave function is the root of its derivative,
  // which is computed analytically and thus locates J far more precisely
  // than comparing nearly equal likelihood values.
  auto score = [&](double j) { return score_unchecked(j, u, v, counts, b); };
  if (!(score(0) > 0)) return 0;
  if (!(score(j_max) < 0)) return j_max;
  return brent_root(score, 0, j_max, 1e-13, 4 * std::numeric_limits<double>::epsilon(), 200).x;
}

double fisher_information_joint(double j, double u, double v, double b, std::uint32_t m) {
  check_relative(u, v);
  if (!(b > 1)) throw std::invalid_argument("base must be > 1");
  check_jaccard_range(j, u, v);
  const CellProbabilities p = cells(j, u, v, b);
  if (!(p.plus > 0) || !(p.minus > 0) || !(p.zero > 0)) return inf;
  const double log_b = std::log1p(b - 1);
  const double scale = m * (b - 1) * (b - 1) / (b * b * log_b * log_b);
  // derivatives of the cell probabilities up to the common factor
  const double d_plus = v * std::exp(p.plus * log_b);
  const double d_minus = u * std::exp(p.minus * log_b);
  const double d_zero = d_plus + d_minus;
  return scale * (d_plus * d_plus / p.plus + d_minus * d_minus / p.minus + d_zero * d_zero / p.zero);
}

double fisher_information_joint_limit(double j, double u, double v, std::uint32_t m) {
  check_relative(u, v);
  check_jaccard_range(j, u, v);
  if (j == 0 || j == std::min(u / v, v / u)) return inf;
  const double correction = 1 - (u - v) * (u - v) * j / (u * v * (1 - j) * (1 - j));
  return m / (j * (1 - j)) / correction;
}

double estimate_jaccard_inclusion_exclusion(double n_hat_a, double n_hat_b, double n_hat_union) {
  if (!(n_hat_union > 0)) throw std::invalid_argument("union estimate must be positive");
  if (!(n_hat_a >= 0) || !(n_hat_b >= 0)) throw std::invalid_argument("cardinality estimates must be nonnegative");
  const double j = (n_hat_a + n_hat_b - n_hat_union) / n_hat_union;
  const double hi = std::max(n_hat_a, n_hat_b) > 0 ? std::min(n_hat_a, n_hat_b) / std::max(n_hat_a, n_hat_b) : 0.;
  return std::clamp(j, 0., hi);
}

double estimate_jaccard_mh_closed_form(const JointCounts& counts, double u, double v) {
  check_relative(u, v);
  const double m = counts.total();
  if (m == 0) throw std::invalid_argument("joint counts are empty");
  const double d0 = counts.d_zero, dp = counts.d_plus, dm = counts.d_minus;
  const double xa = u * u * (d0 + dm);
  const double xb = v * v * (d0 + dp);
  const double root = std::sqrt((xa - xb) * (xa - xb) + 4 * dm * dp * u * u * v * v);
  const double j = (xa + xb - root) / (2 * m * u * v);
  return std::clamp(j, 0., std::min(u / v, v / u));
}

std::pair<double, double> estimate_jaccard_lsh_bounds(std::uint32_t d_zero, std::uint32_t m, double b) {
  if (m == 0 || d_zero > m) throw std::invalid_argument("need 0 <= d_zero <= m and m > 0");
  if (!(b > 1)) throw std::invalid_argument("base must be > 1");
  const double f = static_cast<double>(d_zero) / m;
  const double log_b = std::log(b);
  const double low = std::max(0., 2 * std::expm1(0.5 * (f + 1) * log_b) / (b - 1) - 1);
  const double up = std::expm1(f * log_b) / (b - 1);
  return {std::min(low, 1.), std::min(up, 1.)};
}

std::pair<double, double> collision_probability_bounds(double j, double b) {
  if (!(j >= 0) || !(j <= 1)) throw std::invalid_argument("J must be in [0, 1]");
  if (!(b > 1)) throw std::invalid_argument("base must be > 1");
  const double log_b = std::log(b);
  const double p_min = std::log1p(j * (b - 1)) / log_b;
  const double p_max = std::log1p(j * (b - 1) + (1 - j) * (1 - j) * (b - 1) * (b - 1) / (4 * b)) / log_b;
  return {p_min, p_max};
}

DerivedJointQuantities derive_joint_quantities(double n_a, double n_b, double j) {
  if (!(n_a > 0) || !(n_b > 0)) throw std::invalid_argument("cardinalities must be positive");
  if (!(j >= 0) || std::isinf(j)) throw std::invalid_argument("J must be finite and nonnegative");
  const double total = n_a + n_b;
  DerivedJointQuantities d;
  d.union_size = total / (1 + j);
  d.intersection_size = total * j / (1 + j);
  d.diff_a_minus_b = (n_a - n_b * j) / (1 + j);
  d.diff_b_minus_a = (n_b - n_a * j) / (1 + j);
  d.cosine = d.intersection_size / std::sqrt(n_a * n_b);
  d.inclusion_a = d.intersection_size / n_a;
  d.inclusion_b = d.intersection_size / n_b;
  return d;
}

double quantity_value(const DerivedJointQuantities& d, double j, JointQuantity q) {
  switch (q) {
    case JointQuantity::jaccard:
      return j;
    case JointQuantity::union_size:
      return d.union_size;
    case JointQuantity::intersection:
      return d.intersection_size;
    case JointQuantity::diff_a:
      return d.diff_a_minus_b;
    case JointQuantity::diff_b:
      return d.diff_b_minus_a;
    case JointQuantity::cosine:
      return d.cosine;
    case JointQuantity::inclusion_a:
      return d.inclusion_a;
    case JointQuantity::inclusion_b:
      return d.inclusion_b;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double quantity_derivative(double n_a, double n_b, double j, JointQuantity q) {
  const double base = (n_a + n_b) / ((1 + j) * (1 + j));
  switch (q) {
    case JointQuantity::jaccard:
      return 1;
    case JointQuantity::union_size:
    case JointQuantity::diff_a:
    case JointQuantity::diff_b:
      return -base;
    case JointQuantity::intersection:
      return base;
    case JointQuantity::cosine:
      return base / std::sqrt(n_a * n_b);
    case JointQuantity::inclusion_a:
      return base / n_a;
    case JointQuantity::inclusion_b:
      return base / n_b;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace setsketch
