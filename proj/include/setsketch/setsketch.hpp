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

enum class Variant : std::uint8_t { setsketch1 = 1, setsketch2 = 2 };

/// Immutable per-configuration tables. Sketches with equal configuration
/// and variant may share one instance.
struct SketchContext {
  SketchContext(const SketchConfig& config, Variant variant);

  SketchConfig config;
  Variant variant;
  PowerTable powers;
  /// SetSketch1: 1 / (a (m - j)) for j = 0..m-1.
  std::vector<double> spacing;
  /// SetSketch2: interval boundaries gamma_0..gamma_m, gamma_m = +inf.
  std::vector<double> gamma;
};

std::shared_ptr<const SketchContext> make_context(const SketchConfig& config, Variant variant);

/// Interval boundaries gamma_j = log(1 + j / (m - j)) / a, j = 0..m.
std::vector<double> interval_boundaries(std::uint32_t m, double a);

class SetSketch {
 public:
  SetSketch(const SketchConfig& config, Variant variant);
  explicit SetSketch(std::shared_ptr<const SketchContext> context);

  /// Builds a sketch from raw register values; B = min K, c = 0.
  /// Throws std::invalid_argument on size mismatch or values above q+1.
  static SetSketch from_registers(const SketchConfig& config, Variant variant, std::vector<std::uint32_t> registers);

  void insert(ElementSeed element);

  /// Generates all m points of the element and ignores the lower bound
  /// when deciding what to skip. Produces the same state as insert().
  void insert_exhaustive(ElementSeed element);

  /// Element-wise maximum. Throws std::invalid_argument if config or
  /// variant differ.
  void merge(const SetSketch& other);

  const SketchConfig& config() const noexcept { return context_->config; }
  Variant variant() const noexcept { return context_->variant; }
  const std::shared_ptr<const SketchContext>& context() const noexcept { return context_; }
  std::span<const std::uint32_t> registers() const noexcept { return registers_; }
  std::uint32_t lower_bound() const noexcept { return lower_bound_; }
  std::uint32_t update_counter() const noexcept { return update_counter_; }
  RegisterHistogram histogram() const;

  /// Number of points generated since construction.
  std::uint64_t inner_iterations() const noexcept { return inner_iterations_; }

  /// Compares configuration, variant and registers. The lower bound and
  /// the modification counter depend on insertion order and are ignored.
  bool operator==(const SetSketch& other) const;

 private:
  void update(std::uint32_t index, std::uint32_t value);

  std::shared_ptr<const SketchContext> context_;
  std::vector<std::uint32_t> registers_;
  std::uint32_t lower_bound_ = 0;
  std::uint32_t update_counter_ = 0;
  std::uint64_t inner_iterations_ = 0;
  PermutationSampler sampler_;
};

SetSketch merge(const SetSketch& s1, const SetSketch& s2);

}  // namespace setsketch
