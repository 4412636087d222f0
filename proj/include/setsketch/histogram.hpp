#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace setsketch {

/// counts[k] = number of registers with value k, k = 0..q+1.
struct RegisterHistogram {
  std::vector<std::uint32_t> counts;

  std::uint32_t q() const { return static_cast<std::uint32_t>(counts.size()) - 2; }
  std::uint64_t total() const;
  bool operator==(const RegisterHistogram&) const = default;
};

/// Throws std::invalid_argument if a register exceeds q+1.
RegisterHistogram make_histogram(std::span<const std::uint32_t> registers, std::uint32_t q);

}  // namespace setsketch
