#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "setsketch/config.hpp"
#include "setsketch/histogram.hpp"
#include "setsketch/power_table.hpp"
#include "setsketch/random.hpp"

namespace setsketch {

/// Register range used when q is not given: 62 for b = 2 (6-bit
/// registers), 65534 otherwise (16-bit registers).
std::uint32_t default_ghll_q(double b);

/// Generalized HyperLogLog with stochastic averaging. Each element draws
/// a uniform u, then a register index; the register takes the maximum of
/// its value and max(0, min(q+1, floor(1 - log_b u))).
///
/// The matching SetSketch configuration has a = 1/m, see config().
class Ghll {
 public:
  Ghll(std::uint32_t m, double b, std::uint32_t q, bool track_lower_bound = true);

  /// Throws std::invalid_argument on values above q+1.
  static Ghll from_registers(std::uint32_t m, double b, std::uint32_t q, std::vector<std::uint32_t> registers,
                             bool track_lower_bound = true);

  void insert(ElementSeed element);
  void merge(const Ghll& other);

  /// {m, b, 1/m, q}, the parameters the estimators expect.
  SketchConfig config() const noexcept;
  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(registers_.size()); }
  double base() const noexcept { return powers_->base(); }
  std::uint32_t q() const noexcept { return powers_->q(); }
  bool tracks_lower_bound() const noexcept { return track_lower_bound_; }
  std::span<const std::uint32_t> registers() const noexcept { return registers_; }
  std::uint32_t lower_bound() const noexcept { return lower_bound_; }
  RegisterHistogram histogram() const;

  /// Number of register reads since construction. With lower-bound
  /// tracking, elements whose value cannot change anything skip the read.
  std::uint64_t register_accesses() const noexcept { return register_accesses_; }

  /// Compares m, b, q and registers.
  bool operator==(const Ghll& other) const;

 private:
  std::shared_ptr<const PowerTable> powers_;
  std::vector<std::uint32_t> registers_;
  bool track_lower_bound_;
  std::uint32_t lower_bound_ = 0;
  std::uint32_t update_counter_ = 0;
  std::uint64_t register_accesses_ = 0;
};

Ghll merge(const Ghll& s1, const Ghll& s2);

}  // namespace setsketch
