#include "setsketch/power_table.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "setsketch/config.hpp"

namespace setsketch {

PowerTable::PowerTable(double b, std::uint32_t q) : b_(b), q_(q), powers_(std::size_t{q} + 2) {
  check_config(SketchConfig{1, b, 1., q});
  for (std::size_t k = 0; k < powers_.size(); ++k) powers_[k] = std::pow(b, -static_cast<double>(k));
}

std::uint32_t PowerTable::update_value(double x) const {
  if (!(x > 0)) throw std::invalid_argument("point must be positive");
  if (x > powers_[0]) return 0;
  return update_value_above(x, 0);
}

std::uint32_t PowerTable::update_value_above(double x, std::uint32_t lower_bound) const noexcept {
  const auto first = powers_.begin() + lower_bound;
  const auto last = powers_.begin() + q_ + 1;
  if (first >= last) return q_ + 1;
  const auto it = std::partition_point(first, last, [x](double p) { return p >= x; });
  return static_cast<std::uint32_t>(it - powers_.begin());
}

std::uint32_t update_value_by_log(double x, double b, std::uint32_t q) {
  if (!(x > 0)) throw std::invalid_argument("point must be positive");
  const double k = std::floor(1. - std::log(x) / std::log(b));
  if (k <= 0) return 0;
  if (k >= q + 1.) return q + 1;
  return static_cast<std::uint32_t>(k);
}

}  // namespace setsketch
