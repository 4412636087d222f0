#include "setsketch/histogram.hpp"

#include <numeric>
#include <stdexcept>

namespace setsketch {

std::uint64_t RegisterHistogram::total() const {
  return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

RegisterHistogram make_histogram(std::span<const std::uint32_t> registers, std::uint32_t q) {
  RegisterHistogram h{std::vector<std::uint32_t>(std::size_t{q} + 2, 0)};
  for (std::uint32_t k : registers) {
    if (k > q + 1) throw std::invalid_argument("register value exceeds q+1");
    ++h.counts[k];
  }
  return h;
}

}  // namespace setsketch
