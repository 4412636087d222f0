#pragma once

#include <cstdint>

namespace setsketch {

/// Sketch parameters. Registers take values in {0, ..., q+1}.
struct SketchConfig {
  std::uint32_t m = 0;
  double b = 2.;
  double a = 20.;
  std::uint32_t q = 62;

  bool operator==(const SketchConfig&) const = default;
};

/// Throws std::invalid_argument unless m >= 1, b > 1, a > 0 and q + 1 fits
/// into the register type.
void check_config(const SketchConfig& config);

/// Nominal memory footprint m * ceil(log2(q + 2)) in bits.
std::uint64_t nominal_memory_bits(const SketchConfig& config);

struct ConfigReport {
  double a_min = 0;
  std::uint64_t q_min = 0;
  bool ok = false;
  /// Probability that some register would need a negative value when a
  /// single element is inserted, bounded by m * exp(-a * b).
  double negative_value_probability = 0;
  /// Probability that some register exceeds q for a set of n_max elements,
  /// bounded by m * a * n_max * b^(-q-1).
  double overflow_probability = 0;
};

/// a_min = log(m / epsilon) / b, q_min = floor(log_b(m * n_max * a / epsilon)).
/// Report-only; throws std::invalid_argument for epsilon outside (0, 1] or
/// n_max == 0.
ConfigReport validate_config(const SketchConfig& config, double epsilon, double n_max);

}  // namespace setsketch
