#include "setsketch/config.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace setsketch {

void check_config(const SketchConfig& config) {
  if (config.m == 0) throw std::invalid_argument("m must be positive");
  if (!(config.b > 1) || std::isinf(config.b)) throw std::invalid_argument("b must be a finite value > 1");
  if (!(config.a > 0) || std::isinf(config.a)) throw std::invalid_argument("a must be a finite positive value");
  if (config.q >= std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("q is too large");
}

std::uint64_t nominal_memory_bits(const SketchConfig& config) {
  std::uint64_t bits = 0;
  while ((std::uint64_t{1} << bits) < std::uint64_t{config.q} + 2) ++bits;
  return std::uint64_t{config.m} * bits;
}

ConfigReport validate_config(const SketchConfig& config, double epsilon, double n_max) {
  check_config(config);
  if (!(epsilon > 0) || !(epsilon <= 1)) throw std::invalid_argument("epsilon must be in (0, 1]");
  if (!(n_max >= 1)) throw std::invalid_argument("n_max must be at least 1");
  const double m = config.m;
  const double log_b = std::log(config.b);
  ConfigReport r;
  r.a_min = std::log(m / epsilon) / config.b;
  const double q_min = std::floor(std::log(m * n_max * config.a / epsilon) / log_b);
  r.q_min = q_min > 0 ? static_cast<std::uint64_t>(q_min) : 0;
  r.ok = config.a >= r.a_min && config.q >= r.q_min;
  r.negative_value_probability = m * std::exp(-config.a * config.b);
  r.overflow_probability = m * config.a * n_max * std::exp(-(config.q + 1.) * log_b);
  return r;
}

}  // namespace setsketch
