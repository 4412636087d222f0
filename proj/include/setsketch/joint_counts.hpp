#pragma once

#include <cstdint>
#include <span>

namespace setsketch {

class SetSketch;
class Ghll;
class MinHash;

/// Register comparison counts between sketches of A and B.
struct JointCounts {
  std::uint32_t d_plus = 0;
  std::uint32_t d_minus = 0;
  std::uint32_t d_zero = 0;

  std::uint32_t total() const noexcept { return d_plus + d_minus + d_zero; }
  bool operator==(const JointCounts&) const = default;
};

/// max_based: d_plus counts registers where A > B (SetSketch, GHLL).
/// min_based: d_plus counts registers where A < B (MinHash).
enum class Ordering { max_based, min_based };

/// Throws std::invalid_argument if sizes differ.
JointCounts compare_registers(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                              Ordering ordering = Ordering::max_based);
JointCounts compare_registers(std::span<const double> a, std::span<const double> b,
                              Ordering ordering = Ordering::min_based);

/// Also throw std::invalid_argument if the configurations differ.
JointCounts compare_registers(const SetSketch& a, const SetSketch& b);
JointCounts compare_registers(const Ghll& a, const Ghll& b);
JointCounts compare_registers(const MinHash& a, const MinHash& b);

enum class Applicability { ok, fallback_required };

/// fallback_required if some index has both registers 0 or both q+1.
/// Throws std::invalid_argument if the configurations differ.
Applicability ghll_applicability_check(const Ghll& a, const Ghll& b);

}  // namespace setsketch
