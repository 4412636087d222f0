#include "setsketch/cardinality.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "setsketch/optimize.hpp"
#include "setsketch/special_functions.hpp"

namespace setsketch {

namespace {

// (value, count) pairs with nonzero count, ascending by value.
using SparseHistogram = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

SparseHistogram sparse_from_registers(std::span<const std::uint32_t> registers, const SketchConfig& config) {
  check_config(config);
  if (registers.size() != config.m) throw std::invalid_argument("register count does not match m");
  std::vector<std::uint32_t> sorted(registers.begin(), registers.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.back() > config.q + 1) throw std::invalid_argument("register value exceeds q+1");
  SparseHistogram h;
  for (std::size_t i = 0; i < sorted.size();) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    h.emplace_back(sorted[i], static_cast<std::uint32_t>(j - i));
    i = j;
  }
  return h;
}

SparseHistogram sparse_from_histogram(const RegisterHistogram& histogram, const SketchConfig& config) {
  check_config(config);
  if (histogram.counts.size() != std::size_t{config.q} + 2) {
    throw std::invalid_argument("histogram size does not match q");
  }
  if (histogram.total() != config.m) throw std::invalid_argument("histogram counts do not sum to m");
  SparseHistogram h;
  for (std::uint32_t k = 0; k < histogram.counts.size(); ++k) {
    if (histogram.counts[k] != 0) h.emplace_back(k, histogram.counts[k]);
  }
  return h;
}

double inverse_power(double b, std::uint32_t k) { return std::pow(b, -static_cast<double>(k)); }

// sum of C_k b^-k over lo <= k <= hi, ascending k
double power_sum(const SparseHistogram& h, double b, std::uint32_t lo, std::uint32_t hi) {
  double sum = 0;
  for (const auto& [k, c] : h) {
    if (k >= lo && k <= hi) sum += c * inverse_power(b, k);
  }
  return sum;
}

double count_of(const SparseHistogram& h, std::uint32_t k) {
  for (const auto& [kk, c] : h) {
    if (kk == k) return c;
  }
  return 0;
}

double raw(const SparseHistogram& h, const SketchConfig& c) {
  const double sum = power_sum(h, c.b, 0, c.q + 1);
  return c.m * (1 - 1 / c.b) / (c.a * std::log(c.b) * sum);
}

double corrected(const SparseHistogram& h, const SketchConfig& c) {
  const double m = c.m;
  const double c0 = count_of(h, 0);
  const double c_top = count_of(h, c.q + 1);
  const double denominator =
      (m * sigma(c.b, c0 / m) + power_sum(h, c.b, 1, c.q)) + m * inverse_power(c.b, c.q) * tau(c.b, 1 - c_top / m);
  if (denominator == 0) return std::numeric_limits<double>::infinity();
  return m * (1 - 1 / c.b) / (c.a * std::log(c.b) * denominator);
}

double ml(const SparseHistogram& h, const SketchConfig& c) {
  const double m = c.m;
  const double c0 = count_of(h, 0);
  const double c_top = count_of(h, c.q + 1);
  if (c0 == m) return 0;
  if (c_top == m) return std::numeric_limits<double>::infinity();
  const double z = c.a * power_sum(h, c.b, 0, c.q);
  const double top_rate = c.a * inverse_power(c.b, c.q);
  // n times the derivative of the log-likelihood, decreasing in n
  auto score = [&](double n) {
    double s = -n * z;
    for (const auto& [k, cnt] : h) {
      if (k == 0) continue;
      if (k <= c.q) {
        s += cnt * x_div_expm1(n * (c.b - 1) * c.a * inverse_power(c.b, k));
      } else {
        s += cnt * x_div_expm1(n * top_rate);
      }
    }
    return s;
  };
  const double hi = (m - c0) / z;
  return brent_root(score, 0, hi, 0, 1e-9).x;
}

}  // namespace

double estimate_cardinality_raw(std::span<const std::uint32_t> registers, const SketchConfig& config) {
  return raw(sparse_from_registers(registers, config), config);
}

double estimate_cardinality_raw(const RegisterHistogram& histogram, const SketchConfig& config) {
  return raw(sparse_from_histogram(histogram, config), config);
}

double estimate_cardinality_corrected(const RegisterHistogram& histogram, const SketchConfig& config) {
  return corrected(sparse_from_histogram(histogram, config), config);
}

double estimate_cardinality_corrected(std::span<const std::uint32_t> registers, const SketchConfig& config) {
  return corrected(sparse_from_registers(registers, config), config);
}

double estimate_cardinality_ml(std::span<const std::uint32_t> registers, const SketchConfig& config) {
  return ml(sparse_from_registers(registers, config), config);
}

double estimate_cardinality_ml(const RegisterHistogram& histogram, const SketchConfig& config) {
  return ml(sparse_from_histogram(histogram, config), config);
}

double rsd_theoretical(double b, std::uint32_t m) {
  if (!(b > 1)) throw std::invalid_argument("base must be > 1");
  if (m == 0) throw std::invalid_argument("m must be positive");
  const double d = b - 1;
  return std::sqrt((b + 1) / d * std::log1p(d) - 1) / std::sqrt(static_cast<double>(m));
}

double estimate_cardinality_mh(std::span<const double> components) {
  if (components.empty()) throw std::invalid_argument("no MinHash components");
  double sum = 0;
  for (double v : components) {
    if (!(v > 0) || !(v <= 1)) throw std::invalid_argument("MinHash component outside (0, 1]");
    if (v == 1) throw std::domain_error("MinHash component was never updated");
    sum -= std::log1p(-v);
  }
  return components.size() / sum;
}

}  // namespace setsketch
