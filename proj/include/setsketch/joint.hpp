#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <utility>

#include "setsketch/joint_counts.hpp"

namespace setsketch {

struct JointEstimate {
  double n_hat_a = 0;
  double n_hat_b = 0;
  double j_hat = 0;
};

struct DerivedJointQuantities {
  double union_size = 0;
  double intersection_size = 0;
  double diff_a_minus_b = 0;
  double diff_b_minus_a = 0;
  double cosine = 0;
  double inclusion_a = 0;
  double inclusion_b = 0;
};

enum class JointQuantity { jaccard, union_size, intersection, diff_a, diff_b, cosine, inclusion_a, inclusion_b };

inline constexpr std::array<JointQuantity, 8> all_joint_quantities{
    JointQuantity::jaccard, JointQuantity::union_size, JointQuantity::intersection, JointQuantity::diff_a,
    JointQuantity::diff_b,  JointQuantity::cosine,     JointQuantity::inclusion_a,  JointQuantity::inclusion_b};

std::string_view quantity_name(JointQuantity q);

/// D+ log p_b(u - vJ) + D- log p_b(v - uJ) + D0 log(1 - p_b(u - vJ) - p_b(v - uJ)).
/// Terms with zero count contribute 0; a vanishing probability with a
/// positive count gives -infinity.
/// Throws std::invalid_argument unless u, v > 0, |u + v - 1| <= 1e-12,
/// b in (1, e] and J in [0, min(u/v, v/u)].
double log_likelihood_joint(double j, double u, double v, const JointCounts& counts, double b);

/// Maximizer of log_likelihood_joint over [0, min(u/v, v/u)] with
/// u = n_a / (n_a + n_b). The likelihood is concave, so the estimate is
/// an interval end point when the score has no sign change and otherwise
/// the root of the score, found by Brent's method to about 1e-13.
/// Throws std::invalid_argument for non-positive cardinalities, empty
/// counts or b outside (1, e].
double estimate_jaccard_ml(const JointCounts& counts, double n_a, double n_b, double b);

/// Fisher information of the joint likelihood with respect to J, or
/// +infinity where one of the three cell probabilities vanishes.
/// Throws std::invalid_argument unless u, v > 0, |u + v - 1| <= 1e-12,
/// b > 1 and J in [0, min(u/v, v/u)].
double fisher_information_joint(double j, double u, double v, double b, std::uint32_t m);

/// Limit of fisher_information_joint for b -> 1 (MinHash):
/// m / (J (1 - J)) / (1 - (u - v)^2 J / (u v (1 - J)^2)).
double fisher_information_joint_limit(double j, double u, double v, std::uint32_t m);

/// (n_a + n_b - n_union) / n_union trimmed to [0, min(n_a/n_b, n_b/n_a)].
/// Throws std::invalid_argument unless n_union > 0 and n_a, n_b >= 0.
double estimate_jaccard_inclusion_exclusion(double n_hat_a, double n_hat_b, double n_hat_union);

/// Closed-form maximum-likelihood Jaccard estimate for MinHash from
/// min-based counts (smaller root of the quadratic score equation).
/// Throws std::invalid_argument unless u, v > 0, |u + v - 1| <= 1e-12 and
/// counts are nonempty.
double estimate_jaccard_mh_closed_form(const JointCounts& counts, double u, double v);

/// Lower and upper bound estimators from the fraction of equal registers.
std::pair<double, double> estimate_jaccard_lsh_bounds(std::uint32_t d_zero, std::uint32_t m, double b);

/// Range of the probability that two registers are equal, over all
/// cardinality ratios with the given Jaccard similarity.
std::pair<double, double> collision_probability_bounds(double j, double b);

/// Throws std::invalid_argument unless n_a, n_b > 0 and J >= 0.
DerivedJointQuantities derive_joint_quantities(double n_a, double n_b, double j);

double quantity_value(const DerivedJointQuantities& d, double j, JointQuantity q);

/// Derivative of the quantity with respect to J at fixed n_a, n_b.
double quantity_derivative(double n_a, double n_b, double j, JointQuantity q);

}  // namespace setsketch
