#include "setsketch/joint_counts.hpp"

#include <stdexcept>

#include "setsketch/ghll.hpp"
#include "setsketch/minhash.hpp"
#include "setsketch/setsketch.hpp"

namespace setsketch {

namespace {

template <typename T>
JointCounts count(std::span<const T> a, std::span<const T> b, Ordering ordering) {
  if (a.size() != b.size()) throw std::invalid_argument("sketch sizes differ");
  JointCounts c;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) {
      ++c.d_plus;
    } else if (a[i] < b[i]) {
      ++c.d_minus;
    } else {
      ++c.d_zero;
    }
  }
  if (ordering == Ordering::min_based) std::swap(c.d_plus, c.d_minus);
  return c;
}

}  // namespace

JointCounts compare_registers(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b, Ordering ordering) {
  return count(a, b, ordering);
}

JointCounts compare_registers(std::span<const double> a, std::span<const double> b, Ordering ordering) {
  return count(a, b, ordering);
}

JointCounts compare_registers(const SetSketch& a, const SetSketch& b) {
  if (a.config() != b.config() || a.variant() != b.variant()) {
    throw std::invalid_argument("sketch configurations differ");
  }
  return count(a.registers(), b.registers(), Ordering::max_based);
}

JointCounts compare_registers(const Ghll& a, const Ghll& b) {
  if (a.config() != b.config()) throw std::invalid_argument("sketch configurations differ");
  return count(a.registers(), b.registers(), Ordering::max_based);
}

JointCounts compare_registers(const MinHash& a, const MinHash& b) {
  return count(a.components(), b.components(), Ordering::min_based);
}

Applicability ghll_applicability_check(const Ghll& a, const Ghll& b) {
  if (a.config() != b.config()) throw std::invalid_argument("sketch configurations differ");
  const std::uint32_t top = a.q() + 1;
  const auto ra = a.registers();
  const auto rb = b.registers();
  for (std::size_t i = 0; i < ra.size(); ++i) {
    if (ra[i] == rb[i] && (ra[i] == 0 || ra[i] == top)) return Applicability::fallback_required;
  }
  return Applicability::ok;
}

}  // namespace setsketch
