#pragma once

#include <cstdint>
#include <span>

#include "setsketch/config.hpp"
#include "setsketch/histogram.hpp"

namespace setsketch {

/// m (1 - 1/b) / (a log(b) sum_i b^-K_i). Finite and positive for any
/// register vector.
double estimate_cardinality_raw(std::span<const std::uint32_t> registers, const SketchConfig& config);
double estimate_cardinality_raw(const RegisterHistogram& histogram, const SketchConfig& config);

/// Raw estimator with the contributions of registers at 0 and q+1 replaced
/// by m sigma(C_0/m) and m b^-q tau(1 - C_{q+1}/m). Returns 0 when all
/// registers are 0 and +infinity when all are q+1. Bit-identical to the
/// raw estimate when C_0 = C_{q+1} = 0.
/// Throws std::invalid_argument if the histogram does not match config.
double estimate_cardinality_corrected(const RegisterHistogram& histogram, const SketchConfig& config);
double estimate_cardinality_corrected(std::span<const std::uint32_t> registers, const SketchConfig& config);

/// Maximum-likelihood estimate under independent registers with
/// P(K <= k) = exp(-n a b^-k), where K = 0 has mass exp(-n a) and
/// K = q+1 has mass 1 - exp(-n a b^-q). Root of the score function to
/// relative tolerance 1e-9. All registers 0 gives 0, all q+1 gives
/// +infinity (the corrected estimator's values).
double estimate_cardinality_ml(std::span<const std::uint32_t> registers, const SketchConfig& config);
double estimate_cardinality_ml(const RegisterHistogram& histogram, const SketchConfig& config);

/// sqrt(((b+1)/(b-1)) log(b) - 1) / sqrt(m).
double rsd_theoretical(double b, std::uint32_t m);

/// m / sum_i -log(1 - V_i) for MinHash components V_i.
/// Throws std::domain_error if a component is 1 (never updated) and
/// std::invalid_argument if a component is outside (0, 1] or the input is
/// empty.
double estimate_cardinality_mh(std::span<const double> components);

}  // namespace setsketch
