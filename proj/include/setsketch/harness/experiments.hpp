#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "setsketch/config.hpp"
#include "setsketch/random.hpp"

namespace setsketch::harness {

enum class SketchType { setsketch1, setsketch2, ghll, minhash };

std::string_view sketch_name(SketchType type);
/// Throws std::invalid_argument for unknown names.
SketchType parse_sketch_type(std::string_view name);

/// Cardinality estimator fed into joint estimation when cardinalities are
/// not known.
enum class Plugin { raw, corrected, ml };

std::string_view plugin_name(Plugin plugin);
Plugin parse_plugin(std::string_view name);

struct ExperimentSpec {
  SketchType sketch = SketchType::setsketch1;
  std::uint32_t m = 256;
  double b = 2.;
  double a = 20.;
  /// Chosen by resolve_q when empty.
  std::optional<std::uint32_t> q;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> cardinalities = default_cardinality_grid();
  std::uint64_t union_size = 10'000;
  std::vector<double> jaccards{0.01, 0.1, 0.5};
  std::vector<double> ratios{1, 10, 100};
  /// Empty: emit estimators for known and for estimated cardinalities.
  std::optional<bool> known_cardinalities;
  /// Empty: raw for SetSketch, corrected for GHLL.
  std::optional<Plugin> plugin;
  /// false runs the serial reference loop, true the OpenMP loop.
  bool parallel = true;

  /// 8 log-spaced cardinalities from 1 to 10^6.
  static std::vector<std::uint64_t> default_cardinality_grid();
};

/// Throws std::invalid_argument for empty grids, zero trials, cardinalities
/// below 1, Jaccard values outside (0, 1] or non-positive ratios.
void check_spec(const ExperimentSpec& spec);

/// q from the spec, otherwise: GHLL 62 for b = 2 and 65534 else; SetSketch
/// the smallest q for which validate_config accepts epsilon = 1e-3 at the
/// largest cardinality of the experiment, but at least 62 for b = 2.
std::uint32_t resolve_q(const ExperimentSpec& spec, double n_max);

/// Seed of trial t: splitmix64(seed + t).
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

std::vector<std::uint64_t> generate_set(std::uint64_t n, RandomStream& stream);

/// A = S1 u S3 and B = S2 u S3 with |S_i| = n_i, all drawn from stream.
std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> generate_pair(std::uint64_t n1, std::uint64_t n2,
                                                                                std::uint64_t n3, RandomStream& stream);

struct ErrorStats {
  double bias = 0;
  double rmse = 0;
  double kurtosis = 0;
};

/// Statistics of relative errors: mean, root mean square, and Pearson
/// kurtosis of the central moments (NaN for fewer than 4 values).
ErrorStats summarize(std::span<const double> relative_errors);

struct CardinalityRecord {
  std::string sketch;
  std::string estimator;
  SketchConfig config;
  std::uint64_t true_n = 0;
  std::uint64_t trials = 0;
  ErrorStats stats;
  double theoretical_rsd = 0;
};

/// One streaming pass per trial; estimates are taken when the number of
/// inserted elements reaches a grid cardinality.
std::vector<CardinalityRecord> run_cardinality_experiment(const ExperimentSpec& spec);

struct JointRecord {
  std::string sketch;
  std::uint32_t m = 0;
  double b = 0;
  std::uint64_t union_size = 0;
  double jaccard = 0;
  double ratio = 0;
  std::string estimator;
  std::string quantity;
  std::uint64_t trials = 0;
  double rel_rmse = 0;
  double fisher_rmse = 0;
};

/// Per (J, ratio) grid point the union is split into |A\B|, |B\A| and
/// |A n B| with |A\B| / |B\A| = ratio and |A n B| = J * union_size
/// (rounded); the jaccard column holds the realized value. Quantities whose
/// true value is 0 have undefined relative errors, reported as NaN.
std::vector<JointRecord> run_joint_experiment(const ExperimentSpec& spec);

struct ThroughputRecord {
  std::string sketch;
  std::uint32_t m = 0;
  double b = 0;
  std::uint64_t n = 0;
  std::uint64_t trials = 0;
  double mean_ns_per_element = 0;
  double mean_inner_iterations = 0;
};

/// Always serial. For GHLL, rows with and without lower-bound tracking.
std::vector<ThroughputRecord> run_throughput_benchmark(const ExperimentSpec& spec);

struct AuditRecord {
  std::string function;
  double b = 0;
  std::uint64_t grid_points = 0;
  double max_abs_error = 0;
  double bound = 0;
  bool pass = false;
};

/// max |xi^1 - 1|, max |xi^2 - 1| over x in [0, 1) and the maximum
/// relative error of zeta against x2 - x1, for b in {1.001, 1.2, 2}.
std::vector<AuditRecord> run_special_function_audit(std::uint64_t grid_points = 1000);

void write_csv(std::ostream& out, std::span<const CardinalityRecord> records);
void write_csv(std::ostream& out, std::span<const JointRecord> records);
void write_csv(std::ostream& out, std::span<const ThroughputRecord> records);
void write_csv(std::ostream& out, std::span<const AuditRecord> records);

}  // namespace setsketch::harness
