#include "setsketch/random.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace setsketch {

double RandomStream::next_standard_exponential() noexcept { return -std::log(next_uniform()); }

double RandomStream::next_exponential(double rate) {
  if (!(rate > 0)) throw std::invalid_argument("exponential rate must be positive");
  return next_standard_exponential() / rate;
}

double RandomStream::next_truncated_exponential(double rate, double lo, double hi) {
  if (!(rate > 0)) throw std::invalid_argument("exponential rate must be positive");
  if (!(lo >= 0) || !(lo < hi) || std::isinf(lo)) {
    throw std::invalid_argument("truncation interval must satisfy 0 <= lo < hi");
  }
  const double u = next_uniform();
  // mass of [lo, hi) relative to [lo, inf)
  const double mass = std::isinf(hi) ? 1. : -std::expm1(-rate * (hi - lo));
  const double x = lo - std::log1p(-u * mass) / rate;
  if (x >= hi) return std::nextafter(hi, lo);
  return x;
}

PermutationSampler::PermutationSampler(std::uint32_t m) : m_(m), values_(m), generation_of_(m, 0) {
  if (m == 0) throw std::invalid_argument("permutation size must be positive");
}

void PermutationSampler::reset() noexcept {
  drawn_ = 0;
  if (++generation_ == 0) {
    std::fill(generation_of_.begin(), generation_of_.end(), 0);
    generation_ = 1;
  }
}

std::uint32_t PermutationSampler::next(RandomStream& stream) {
  if (drawn_ >= m_) throw std::logic_error("permutation sampler exhausted");
  const std::uint32_t j = drawn_;
  const std::uint32_t r = j + stream.next_index(m_ - j);
  const std::uint32_t picked = slot(r);
  // slot j is never read again until the next reset, only r needs the swap
  values_[r] = slot(j);
  generation_of_[r] = generation_;
  ++drawn_;
  return picked;
}

}  // namespace setsketch
