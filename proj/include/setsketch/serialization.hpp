#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "setsketch/ghll.hpp"
#include "setsketch/minhash.hpp"
#include "setsketch/setsketch.hpp"

namespace setsketch {

/// Malformed byte stream: bad magic, unknown version or variant, wrong
/// length, or register values out of range.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Variant codes stored in the header.
enum class SketchKind : std::uint8_t { setsketch1 = 1, setsketch2 = 2, minhash = 3, ghll = 4 };

inline constexpr std::uint8_t format_version = 1;
inline constexpr std::size_t header_size = 4 + 1 + 1 + 4 + 4 + 8 + 8;

// Layout, little-endian: "SSKB", version u8, kind u8, m u32, q u32, b f64,
// a f64, then m registers (u32, or f64 for MinHash). MinHash writes q = 0,
// b = 1, a = 1. GHLL writes a = 1/m.
std::vector<std::uint8_t> serialize(const SetSketch& sketch);
std::vector<std::uint8_t> serialize(const Ghll& sketch);
std::vector<std::uint8_t> serialize(const MinHash& sketch);

SetSketch deserialize_setsketch(std::span<const std::uint8_t> bytes);
Ghll deserialize_ghll(std::span<const std::uint8_t> bytes);
MinHash deserialize_minhash(std::span<const std::uint8_t> bytes);

using AnySketch = std::variant<SetSketch, Ghll, MinHash>;
AnySketch deserialize_any(std::span<const std::uint8_t> bytes);

}  // namespace setsketch
