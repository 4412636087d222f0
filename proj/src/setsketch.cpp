#include "setsketch/setsketch.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace setsketch {

std::vector<double> interval_boundaries(std::uint32_t m, double a) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  if (!(a > 0)) throw std::invalid_argument("a must be positive");
  std::vector<double> gamma(std::size_t{m} + 1);
  gamma[0] = 0;
  for (std::uint32_t j = 1; j < m; ++j) {
    gamma[j] = std::log1p(static_cast<double>(j) / static_cast<double>(m - j)) / a;
  }
  gamma[m] = std::numeric_limits<double>::infinity();
  return gamma;
}

SketchContext::SketchContext(const SketchConfig& c, Variant v)
    : config(c), variant(v), powers((check_config(c), c.b), c.q) {
  if (v == Variant::setsketch1) {
    spacing.resize(c.m);
    for (std::uint32_t j = 0; j < c.m; ++j) spacing[j] = 1. / (c.a * static_cast<double>(c.m - j));
  } else if (v == Variant::setsketch2) {
    gamma = interval_boundaries(c.m, c.a);
  } else {
    throw std::invalid_argument("unknown SetSketch variant");
  }
}

std::shared_ptr<const SketchContext> make_context(const SketchConfig& config, Variant variant) {
  return std::make_shared<const SketchContext>(config, variant);
}

SetSketch::SetSketch(const SketchConfig& config, Variant variant) : SetSketch(make_context(config, variant)) {}

SetSketch::SetSketch(std::shared_ptr<const SketchContext> context)
    : context_(std::move(context)), registers_(context_->config.m, 0), sampler_(context_->config.m) {}

SetSketch SetSketch::from_registers(const SketchConfig& config, Variant variant, std::vector<std::uint32_t> registers) {
  SetSketch s(config, variant);
  if (registers.size() != config.m) throw std::invalid_argument("register count does not match m");
  for (std::uint32_t k : registers) {
    if (k > config.q + 1) throw std::invalid_argument("register value exceeds q+1");
  }
  s.registers_ = std::move(registers);
  s.lower_bound_ = *std::min_element(s.registers_.begin(), s.registers_.end());
  return s;
}

void SetSketch::update(std::uint32_t index, std::uint32_t value) {
  if (value <= registers_[index]) return;
  registers_[index] = value;
  if (++update_counter_ >= context_->config.m) {
    lower_bound_ = *std::min_element(registers_.begin(), registers_.end());
    update_counter_ = 0;
  }
}

void SetSketch::insert(ElementSeed element) {
  const SketchContext& ctx = *context_;
  const std::uint32_t m = ctx.config.m;
  RandomStream stream(element);
  sampler_.reset();
  if (ctx.variant == Variant::setsketch1) {
    double x = 0;
    for (std::uint32_t j = 0; j < m; ++j) {
      x += stream.next_standard_exponential() * ctx.spacing[j];
      ++inner_iterations_;
      if (x > ctx.powers[lower_bound_]) break;
      const std::uint32_t k = ctx.powers.update_value_above(x, lower_bound_);
      if (k <= lower_bound_) break;
      update(sampler_.next(stream), k);
    }
  } else {
    for (std::uint32_t j = 0; j < m; ++j) {
      if (ctx.gamma[j] > ctx.powers[lower_bound_]) break;
      const double x = stream.next_truncated_exponential(ctx.config.a, ctx.gamma[j], ctx.gamma[j + 1]);
      ++inner_iterations_;
      if (x > ctx.powers[lower_bound_]) break;
      const std::uint32_t k = ctx.powers.update_value_above(x, lower_bound_);
      if (k <= lower_bound_) break;
      update(sampler_.next(stream), k);
    }
  }
}

void SetSketch::insert_exhaustive(ElementSeed element) {
  const SketchContext& ctx = *context_;
  const std::uint32_t m = ctx.config.m;
  RandomStream stream(element);
  sampler_.reset();
  double x = 0;
  for (std::uint32_t j = 0; j < m; ++j) {
    if (ctx.variant == Variant::setsketch1) {
      x += stream.next_standard_exponential() * ctx.spacing[j];
    } else {
      x = stream.next_truncated_exponential(ctx.config.a, ctx.gamma[j], ctx.gamma[j + 1]);
    }
    ++inner_iterations_;
    update(sampler_.next(stream), ctx.powers.update_value(x));
  }
}

void SetSketch::merge(const SetSketch& other) {
  if (config() != other.config() || variant() != other.variant()) {
    throw std::invalid_argument("cannot merge sketches with different configuration");
  }
  for (std::size_t i = 0; i < registers_.size(); ++i) {
    registers_[i] = std::max(registers_[i], other.registers_[i]);
  }
  lower_bound_ = *std::min_element(registers_.begin(), registers_.end());
  update_counter_ = 0;
}

RegisterHistogram SetSketch::histogram() const { return make_histogram(registers_, config().q); }

bool SetSketch::operator==(const SetSketch& other) const {
  return config() == other.config() && variant() == other.variant() && registers_ == other.registers_;
}

SetSketch merge(const SetSketch& s1, const SetSketch& s2) {
  SetSketch result = s1;
  result.merge(s2);
  return result;
}

}  // namespace setsketch
