#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "setsketch/random.hpp"

namespace setsketch {

/// Classic MinHash with m components. Component i of an element is the
/// i-th uniform drawn from the element's stream.
class MinHash {
 public:
  explicit MinHash(std::uint32_t m);

  /// Throws std::invalid_argument if a value is outside (0, 1].
  static MinHash from_components(std::vector<double> components);

  void insert(ElementSeed element);

  /// Element-wise minimum. Throws std::invalid_argument if sizes differ.
  void merge(const MinHash& other);

  std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(components_.size()); }
  std::span<const double> components() const noexcept { return components_; }
  std::uint64_t inner_iterations() const noexcept { return inner_iterations_; }

  bool operator==(const MinHash& other) const { return components_ == other.components_; }

 private:
  std::vector<double> components_;
  std::uint64_t inner_iterations_ = 0;
};

MinHash merge(const MinHash& s1, const MinHash& s2);

}  // namespace setsketch
