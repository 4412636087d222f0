#pragma once

#include <cstdint>
#include <limits>
#include <vector>

namespace setsketch {

/// A 64-bit set element. Elements are assumed to be hash values already.
using ElementSeed = std::uint64_t;

/// SplitMix64 finalizer. Used to decorrelate seeds before they enter the
/// generator and to derive per-trial seeds in the harness.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += UINT64_C(0x9e3779b97f4a7c15);
  x = (x ^ (x >> 30)) * UINT64_C(0xbf58476d1ce4e5b9);
  x = (x ^ (x >> 27)) * UINT64_C(0x94d049bb133111eb);
  return x ^ (x >> 31);
}

/// Deterministic pseudorandom stream seeded with a set element.
///
/// The generator is wyrand (64-bit state). The seed is passed through
/// splitmix64 first, because wyrand advances its state by a fixed additive
/// constant and raw seeds differing by that constant would share a stream.
/// Every sketch in this library derives its hash values from this class,
/// so changing the generator changes every serialized state.
class RandomStream {
 public:
  explicit RandomStream(ElementSeed seed) noexcept : state_(splitmix64(seed)) {}

  std::uint64_t next_u64() noexcept {
    state_ += UINT64_C(0xa0761d6478bd642f);
    const __uint128_t t = static_cast<__uint128_t>(state_) * (state_ ^ UINT64_C(0xe7037ed1a0b428db));
    ++words_;
    return static_cast<std::uint64_t>(t >> 64) ^ static_cast<std::uint64_t>(t);
  }

  /// Uniform on the open interval (0, 1), 53 bits of resolution.
  double next_uniform() noexcept { return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53; }

  /// Uniform integer in [0, bound) using Lemire's multiply-and-reject method.
  std::uint32_t next_index(std::uint32_t bound) noexcept {
    std::uint64_t x = next_u64() >> 32;
    std::uint64_t product = x * bound;
    auto low = static_cast<std::uint32_t>(product);
    if (low < bound) {
      const std::uint32_t threshold = static_cast<std::uint32_t>(-bound) % bound;
      while (low < threshold) {
        x = next_u64() >> 32;
        product = x * bound;
        low = static_cast<std::uint32_t>(product);
      }
    }
    return static_cast<std::uint32_t>(product >> 32);
  }

  /// Exponential(rate) by inversion. Throws std::invalid_argument if rate <= 0.
  double next_exponential(double rate);

  /// Exponential(1) by inversion, no argument checks.
  double next_standard_exponential() noexcept;

  /// Exponential(rate) conditioned on [lo, hi). hi may be +infinity.
  /// Throws std::invalid_argument unless rate > 0 and 0 <= lo < hi.
  double next_truncated_exponential(double rate, double lo, double hi);

  /// Number of 64-bit words consumed so far.
  std::uint64_t words_consumed() const noexcept { return words_; }

 private:
  std::uint64_t state_;
  std::uint64_t words_ = 0;
};

inline RandomStream stream_from_seed(ElementSeed seed) noexcept { return RandomStream(seed); }

/// Incremental Fisher-Yates shuffle of {0, ..., m-1}.
///
/// reset() is O(1): slots are tagged with a generation number, so only
/// the slots touched by the previous element need to be considered stale.
class PermutationSampler {
 public:
  explicit PermutationSampler(std::uint32_t m);

  void reset() noexcept;

  /// Returns a not-yet-drawn index, uniformly among the remaining ones.
  /// Throws std::logic_error after m draws without reset().
  std::uint32_t next(RandomStream& stream);

  std::uint32_t size() const noexcept { return m_; }
  std::uint32_t drawn() const noexcept { return drawn_; }

 private:
  std::uint32_t slot(std::uint32_t i) const noexcept { return generation_of_[i] == generation_ ? values_[i] : i; }

  std::uint32_t m_;
  std::uint32_t drawn_ = 0;
  std::uint32_t generation_ = 1;
  std::vector<std::uint32_t> values_;
  std::vector<std::uint32_t> generation_of_;
};

}  // namespace setsketch
