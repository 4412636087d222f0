#include "setsketch/ghll.hpp"

#include <algorithm>
#include <stdexcept>

namespace setsketch {

std::uint32_t default_ghll_q(double b) { return b == 2. ? 62 : 65534; }

Ghll::Ghll(std::uint32_t m, double b, std::uint32_t q, bool track_lower_bound)
    : powers_((check_config(SketchConfig{m, b, 1., q}), std::make_shared<const PowerTable>(b, q))),
      registers_(m, 0),
      track_lower_bound_(track_lower_bound) {}

Ghll Ghll::from_registers(std::uint32_t m, double b, std::uint32_t q, std::vector<std::uint32_t> registers,
                          bool track_lower_bound) {
  Ghll s(m, b, q, track_lower_bound);
  if (registers.size() != m) throw std::invalid_argument("register count does not match m");
  for (std::uint32_t k : registers) {
    if (k > q + 1) throw std::invalid_argument("register value exceeds q+1");
  }
  s.registers_ = std::move(registers);
  s.lower_bound_ = *std::min_element(s.registers_.begin(), s.registers_.end());
  return s;
}

void Ghll::insert(ElementSeed element) {
  RandomStream stream(element);
  const std::uint32_t k = powers_->update_value(stream.next_uniform());
  if (track_lower_bound_ && k <= lower_bound_) return;
  const std::uint32_t i = stream.next_index(size());
  ++register_accesses_;
  if (k <= registers_[i]) return;
  registers_[i] = k;
  if (track_lower_bound_ && ++update_counter_ >= size()) {
    lower_bound_ = *std::min_element(registers_.begin(), registers_.end());
    update_counter_ = 0;
  }
}

void Ghll::merge(const Ghll& other) {
  if (size() != other.size() || base() != other.base() || q() != other.q()) {
    throw std::invalid_argument("cannot merge GHLL sketches with different configuration");
  }
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    registers_[i] = std::max(registers_[i], other.registers_[i]);
  }
  lower_bound_ = *std::min_element(registers_.begin(), registers_.end());
  update_counter_ = 0;
}

SketchConfig Ghll::config() const noexcept { return SketchConfig{size(), base(), 1. / size(), q()}; }

RegisterHistogram Ghll::histogram() const { return make_histogram(registers_, q()); }

bool Ghll::operator==(const Ghll& other) const {
  return base() == other.base() && q() == other.q() && registers_ == other.registers_;
}

Ghll merge(const Ghll& s1, const Ghll& s2) {
  Ghll result = s1;
  result.merge(s2);
  return result;
}

}  // namespace setsketch
