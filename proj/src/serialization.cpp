#include "setsketch/serialization.hpp"

#include <bit>

namespace setsketch {

namespace {

class Writer {
 public:
  explicit Writer(std::size_t capacity) { bytes_.reserve(capacity); }

  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void u64(std::uint64_t v) {
    for (int i = 0; i < 8; ++i) bytes_.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
  }
  void f64(double v) { u64(std::bit_cast<std::uint64_t>(v)); }

  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  std::vector<std::uint8_t> bytes_;
};

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() {
    need(1);
    return bytes_[pos_++];
  }
  std::uint32_t u32() {
    need(4);
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= std::uint32_t{bytes_[pos_++]} << (8 * i);
    return v;
  }
  std::uint64_t u64() {
    need(8);
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) v |= std::uint64_t{bytes_[pos_++]} << (8 * i);
    return v;
  }
  double f64() { return std::bit_cast<double>(u64()); }
  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  void need(std::size_t n) const {
    if (remaining() < n) throw FormatError("truncated sketch data");
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

struct Header {
  SketchKind kind;
  std::uint32_t m;
  std::uint32_t q;
  double b;
  double a;
};

void write_header(Writer& w, SketchKind kind, std::uint32_t m, std::uint32_t q, double b, double a) {
  for (char c : {'S', 'S', 'K', 'B'}) w.u8(static_cast<std::uint8_t>(c));
  w.u8(format_version);
  w.u8(static_cast<std::uint8_t>(kind));
  w.u32(m);
  w.u32(q);
  w.f64(b);
  w.f64(a);
}

Header read_header(Reader& r) {
  for (char c : {'S', 'S', 'K', 'B'}) {
    if (r.u8() != static_cast<std::uint8_t>(c)) throw FormatError("bad magic");
  }
  if (r.u8() != format_version) throw FormatError("unsupported format version");
  const std::uint8_t kind = r.u8();
  if (kind < 1 || kind > 4) throw FormatError("unknown sketch variant");
  Header h{static_cast<SketchKind>(kind), r.u32(), r.u32(), r.f64(), r.f64()};
  if (h.m == 0) throw FormatError("m must be positive");
  const std::size_t width = h.kind == SketchKind::minhash ? 8 : 4;
  if (r.remaining() != std::size_t{h.m} * width) throw FormatError("register data has wrong length");
  return h;
}

std::vector<std::uint32_t> read_registers(Reader& r, std::uint32_t m) {
  std::vector<std::uint32_t> registers(m);
  for (auto& k : registers) k = r.u32();
  return registers;
}

template <typename F>
auto rethrow_as_format_error(F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

SetSketch setsketch_from(const Header& h, Reader& r) {
  auto registers = read_registers(r, h.m);
  return rethrow_as_format_error([&] {
    const Variant v = h.kind == SketchKind::setsketch1 ? Variant::setsketch1 : Variant::setsketch2;
    return SetSketch::from_registers(SketchConfig{h.m, h.b, h.a, h.q}, v, std::move(registers));
  });
}

Ghll ghll_from(const Header& h, Reader& r) {
  auto registers = read_registers(r, h.m);
  return rethrow_as_format_error([&] { return Ghll::from_registers(h.m, h.b, h.q, std::move(registers)); });
}

MinHash minhash_from(const Header& h, Reader& r) {
  std::vector<double> components(h.m);
  for (auto& v : components) v = r.f64();
  return rethrow_as_format_error([&] { return MinHash::from_components(std::move(components)); });
}

}  // namespace

std::vector<std::uint8_t> serialize(const SetSketch& sketch) {
  const SketchConfig& c = sketch.config();
  Writer w(header_size + 4 * std::size_t{c.m});
  const auto kind = sketch.variant() == Variant::setsketch1 ? SketchKind::setsketch1 : SketchKind::setsketch2;
  write_header(w, kind, c.m, c.q, c.b, c.a);
  for (std::uint32_t k : sketch.registers()) w.u32(k);
  return w.take();
}

std::vector<std::uint8_t> serialize(const Ghll& sketch) {
  const SketchConfig c = sketch.config();
  Writer w(header_size + 4 * std::size_t{c.m});
  write_header(w, SketchKind::ghll, c.m, c.q, c.b, c.a);
  for (std::uint32_t k : sketch.registers()) w.u32(k);
  return w.take();
}

std::vector<std::uint8_t> serialize(const MinHash& sketch) {
  Writer w(header_size + 8 * std::size_t{sketch.size()});
  write_header(w, SketchKind::minhash, sketch.size(), 0, 1., 1.);
  for (double v : sketch.components()) w.f64(v);
  return w.take();
}

SetSketch deserialize_setsketch(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const Header h = read_header(r);
  if (h.kind != SketchKind::setsketch1 && h.kind != SketchKind::setsketch2) {
    throw FormatError("not a SetSketch");
  }
  return setsketch_from(h, r);
}

Ghll deserialize_ghll(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const Header h = read_header(r);
  if (h.kind != SketchKind::ghll) throw FormatError("not a GHLL sketch");
  return ghll_from(h, r);
}

MinHash deserialize_minhash(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const Header h = read_header(r);
  if (h.kind != SketchKind::minhash) throw FormatError("not a MinHash sketch");
  return minhash_from(h, r);
}

AnySketch deserialize_any(std::span<const std::uint8_t> bytes) {
  Reader r(bytes);
  const Header h = read_header(r);
  switch (h.kind) {
    case SketchKind::setsketch1:
    case SketchKind::setsketch2:
      return setsketch_from(h, r);
    case SketchKind::ghll:
      return ghll_from(h, r);
    case SketchKind::minhash:
      return minhash_from(h, r);
  }
  throw FormatError("unknown sketch variant");
}

}  // namespace setsketch
