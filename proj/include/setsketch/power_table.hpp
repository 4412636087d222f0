#pragma once

#include <cstdint>
#include <vector>

namespace setsketch {

/// Descending powers b^-k for k = 0..q+1, used to map points to update
/// values without evaluating logarithms.
class PowerTable {
 public:
  PowerTable(double b, std::uint32_t q);

  double operator[](std::uint32_t k) const noexcept { return powers_[k]; }
  std::uint32_t q() const noexcept { return q_; }
  double base() const noexcept { return b_; }

  /// max(0, min(q+1, floor(1 - log_b x))) by binary search over the table.
  /// Ties x == b^-k resolve to k+1 (entries are compared with >=).
  /// Throws std::invalid_argument unless x > 0.
  std::uint32_t update_value(double x) const;

  /// Same mapping restricted to exponents >= lower_bound. Requires
  /// x <= b^-lower_bound, in which case the result is at least
  /// min(lower_bound + 1, q + 1). No argument checks.
  std::uint32_t update_value_above(double x, std::uint32_t lower_bound) const noexcept;

 private:
  double b_;
  std::uint32_t q_;
  std::vector<double> powers_;
};

/// Stand-alone version of PowerTable::update_value that builds no table;
/// evaluates the clamped floor with std::log. Used as a reference.
std::uint32_t update_value_by_log(double x, double b, std::uint32_t q);

}  // namespace setsketch
