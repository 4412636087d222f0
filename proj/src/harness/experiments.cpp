#include "setsketch/harness/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <stdexcept>

#include "setsketch/cardinality.hpp"
#include "setsketch/ghll.hpp"
#include "setsketch/joint.hpp"
#include "setsketch/joint_counts.hpp"
#include "setsketch/minhash.hpp"
#include "setsketch/setsketch.hpp"
#include "setsketch/special_functions.hpp"

namespace setsketch::harness {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

// Runs fn(t) for every trial. Results must be written to per-trial slots so
// that both loops produce identical output.
template <typename Fn>
void for_each_trial(std::uint64_t trials, bool parallel, Fn&& fn) {
  if (!parallel) {
    for (std::uint64_t t = 0; t < trials; ++t) fn(t);
    return;
  }
  std::exception_ptr error;
  const auto count = static_cast<std::int64_t>(trials);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t t = 0; t < count; ++t) {
    try {
      fn(static_cast<std::uint64_t>(t));
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

std::string format_double(double x) {
  // printf may print the sign of a NaN
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

Variant setsketch_variant(SketchType type) {
  return type == SketchType::setsketch1 ? Variant::setsketch1 : Variant::setsketch2;
}

bool is_setsketch(SketchType type) { return type == SketchType::setsketch1 || type == SketchType::setsketch2; }

double estimate_registers(Plugin plugin, std::span<const std::uint32_t> registers, const SketchConfig& config) {
  switch (plugin) {
    case Plugin::raw:
      return estimate_cardinality_raw(registers, config);
    case Plugin::corrected:
      return estimate_cardinality_corrected(registers, config);
    case Plugin::ml:
      return estimate_cardinality_ml(registers, config);
  }
  return nan;
}

double estimate(Plugin plugin, const SetSketch& s) { return estimate_registers(plugin, s.registers(), s.config()); }
double estimate(Plugin plugin, const Ghll& s) { return estimate_registers(plugin, s.registers(), s.config()); }
double estimate(Plugin, const MinHash& s) { return estimate_cardinality_mh(s.components()); }

Plugin resolve_plugin(const ExperimentSpec& spec) {
  if (spec.plugin) return *spec.plugin;
  return spec.sketch == SketchType::ghll ? Plugin::corrected : Plugin::raw;
}

double max_cardinality(const ExperimentSpec& spec) {
  return static_cast<double>(*std::max_element(spec.cardinalities.begin(), spec.cardinalities.end()));
}

// Builds empty sketches of the configured type.
class SketchFactory {
 public:
  SketchFactory(const ExperimentSpec& spec, double n_max) : spec_(spec) {
    if (spec.sketch != SketchType::minhash) q_ = resolve_q(spec, n_max);
    if (is_setsketch(spec.sketch)) {
      context_ = make_context(SketchConfig{spec.m, spec.b, spec.a, q_}, setsketch_variant(spec.sketch));
    } else if (spec.sketch == SketchType::ghll) {
      Ghll(spec.m, spec.b, q_);  // validates the configuration up front
    }
  }

  SetSketch setsketch() const { return SetSketch(context_); }
  Ghll ghll(bool track_lower_bound = true) const { return Ghll(spec_.m, spec_.b, q_, track_lower_bound); }
  MinHash minhash() const { return MinHash(spec_.m); }

  SketchConfig config() const {
    switch (spec_.sketch) {
      case SketchType::setsketch1:
      case SketchType::setsketch2:
        return context_->config;
      case SketchType::ghll:
        return ghll().config();
      case SketchType::minhash:
        return SketchConfig{spec_.m, 1., 1., 0};
    }
    return {};
  }

 private:
  const ExperimentSpec& spec_;
  std::uint32_t q_ = 0;
  std::shared_ptr<const SketchContext> context_;
};

// Calls fn(sketch) with a fresh sketch of the configured type.
template <typename Fn>
void with_fresh_sketch(const ExperimentSpec& spec, const SketchFactory& factory, Fn&& fn) {
  switch (spec.sketch) {
    case SketchType::setsketch1:
    case SketchType::setsketch2: {
      SetSketch s = factory.setsketch();
      fn(s);
      return;
    }
    case SketchType::ghll: {
      Ghll s = factory.ghll();
      fn(s);
      return;
    }
    case SketchType::minhash: {
      MinHash s = factory.minhash();
      fn(s);
      return;
    }
  }
}

std::vector<std::string> cardinality_estimators(SketchType type) {
  if (type == SketchType::minhash) return {"mh"};
  return {"raw", "corrected", "ml"};
}

void cardinality_estimates(const SetSketch& s, std::span<double> out) {
  out[0] = estimate(Plugin::raw, s);
  out[1] = estimate(Plugin::corrected, s);
  out[2] = estimate(Plugin::ml, s);
}
void cardinality_estimates(const Ghll& s, std::span<double> out) {
  out[0] = estimate(Plugin::raw, s);
  out[1] = estimate(Plugin::corrected, s);
  out[2] = estimate(Plugin::ml, s);
}
void cardinality_estimates(const MinHash& s, std::span<double> out) { out[0] = estimate(Plugin::raw, s); }

struct Joint {
  double n_a;
  double n_b;
  double j;
};

struct PairSizes {
  std::uint64_t n1;
  std::uint64_t n2;
  std::uint64_t n3;
};

PairSizes split_union(std::uint64_t union_size, double jaccard, double ratio) {
  const auto n3 = static_cast<std::uint64_t>(std::llround(jaccard * static_cast<double>(union_size)));
  const std::uint64_t rest = union_size - std::min(n3, union_size);
  const auto n1 = static_cast<std::uint64_t>(std::llround(static_cast<double>(rest) * ratio / (1 + ratio)));
  return {n1, rest - n1, std::min(n3, union_size)};
}

// Names in the order joint_estimates() fills its result.
std::vector<std::string> joint_estimator_names(SketchType type, Plugin plugin, std::optional<bool> known) {
  std::vector<std::string> result;
  const std::string suffix = type == SketchType::minhash ? "mh" : std::string(plugin_name(plugin));
  const bool with_known = !known || *known;
  const bool with_estimated = !known || !*known;
  if (type == SketchType::minhash) {
    if (with_known) {
      result.push_back("closed_form_known");
      result.push_back("matching_fraction_known");
    }
    if (with_estimated) {
      result.push_back("closed_form_" + suffix);
      result.push_back("matching_fraction_" + suffix);
      result.push_back("inclusion_exclusion_" + suffix);
    }
  } else {
    if (with_known) result.push_back("ml_known");
    if (with_estimated) {
      result.push_back("ml_" + suffix);
      result.push_back("inclusion_exclusion_" + suffix);
    }
  }
  return result;
}

bool ml_applicable(const SetSketch&, const SetSketch&) { return true; }
bool ml_applicable(const Ghll& a, const Ghll& b) { return ghll_applicability_check(a, b) == Applicability::ok; }

template <typename Sketch>
std::vector<Joint> joint_estimates(const Sketch& sa, const Sketch& sb, const Sketch& su, double n_a, double n_b,
                                   Plugin plugin, std::optional<bool> known) {
  const bool with_known = !known || *known;
  const bool with_estimated = !known || !*known;
  const double na_hat = estimate(plugin, sa);
  const double nb_hat = estimate(plugin, sb);
  const double j_ie = estimate_jaccard_inclusion_exclusion(na_hat, nb_hat, estimate(plugin, su));
  std::vector<Joint> out;
  if constexpr (std::is_same_v<Sketch, MinHash>) {
    const JointCounts counts = compare_registers(sa, sb);
    const double matching = static_cast<double>(counts.d_zero) / counts.total();
    if (with_known) {
      out.push_back({n_a, n_b, estimate_jaccard_mh_closed_form(counts, n_a / (n_a + n_b), n_b / (n_a + n_b))});
      out.push_back({n_a, n_b, matching});
    }
    if (with_estimated) {
      const double u = na_hat / (na_hat + nb_hat);
      out.push_back({na_hat, nb_hat, estimate_jaccard_mh_closed_form(counts, u, nb_hat / (na_hat + nb_hat))});
      out.push_back({na_hat, nb_hat, matching});
      out.push_back({na_hat, nb_hat, j_ie});
    }
  } else {
    const double b = sa.config().b;
    const JointCounts counts = compare_registers(sa, sb);
    const bool applicable = ml_applicable(sa, sb);
    if (with_known) out.push_back({n_a, n_b, applicable ? estimate_jaccard_ml(counts, n_a, n_b, b) : j_ie});
    if (with_estimated) {
      out.push_back({na_hat, nb_hat, applicable ? estimate_jaccard_ml(counts, na_hat, nb_hat, b) : j_ie});
      out.push_back({na_hat, nb_hat, j_ie});
    }
  }
  return out;
}

double fisher_rmse(SketchType type, double n_a, double n_b, double j, double b, std::uint32_t m, JointQuantity q) {
  const double u = n_a / (n_a + n_b);
  const double v = n_b / (n_a + n_b);
  const double info = type == SketchType::minhash ? fisher_information_joint_limit(j, u, v, m)
                                                  : fisher_information_joint(j, u, v, b, m);
  const double value = quantity_value(derive_joint_quantities(n_a, n_b, j), j, q);
  return std::abs(quantity_derivative(n_a, n_b, j, q)) / std::sqrt(info) / std::abs(value);
}

}  // namespace

std::string_view sketch_name(SketchType type) {
  switch (type) {
    case SketchType::setsketch1:
      return "setsketch1";
    case SketchType::setsketch2:
      return "setsketch2";
    case SketchType::ghll:
      return "ghll";
    case SketchType::minhash:
      return "minhash";
  }
  return "unknown";
}

SketchType parse_sketch_type(std::string_view name) {
  for (SketchType t : {SketchType::setsketch1, SketchType::setsketch2, SketchType::ghll, SketchType::minhash}) {
    if (sketch_name(t) == name) return t;
  }
  throw std::invalid_argument("unknown sketch type: " + std::string(name));
}

std::string_view plugin_name(Plugin plugin) {
  switch (plugin) {
    case Plugin::raw:
      return "raw";
    case Plugin::corrected:
      return "corrected";
    case Plugin::ml:
      return "ml";
  }
  return "unknown";
}

Plugin parse_plugin(std::string_view name) {
  for (Plugin p : {Plugin::raw, Plugin::corrected, Plugin::ml}) {
    if (plugin_name(p) == name) return p;
  }
  throw std::invalid_argument("unknown cardinality estimator: " + std::string(name));
}

std::vector<std::uint64_t> ExperimentSpec::default_cardinality_grid() {
  std::vector<std::uint64_t> grid;
  for (int i = 0; i < 8; ++i) grid.push_back(static_cast<std::uint64_t>(std::llround(std::pow(10., 6. * i / 7))));
  return grid;
}

void check_spec(const ExperimentSpec& spec) {
  if (spec.trials == 0) throw std::invalid_argument("trials must be at least 1");
  if (spec.m == 0) throw std::invalid_argument("m must be positive");
  if (spec.cardinalities.empty()) throw std::invalid_argument("cardinality grid is empty");
  for (auto n : spec.cardinalities) {
    if (n == 0) throw std::invalid_argument("grid cardinalities must be at least 1");
  }
  if (spec.jaccards.empty() || spec.ratios.empty()) throw std::invalid_argument("joint grids must be nonempty");
  for (double j : spec.jaccards) {
    if (!(j > 0) || !(j <= 1)) throw std::invalid_argument("Jaccard grid values must be in (0, 1]");
  }
  for (double r : spec.ratios) {
    if (!(r > 0) || std::isinf(r)) throw std::invalid_argument("ratio grid values must be positive");
  }
  if (spec.union_size == 0) throw std::invalid_argument("union size must be at least 1");
}

std::uint32_t resolve_q(const ExperimentSpec& spec, double n_max) {
  if (spec.q) return *spec.q;
  if (spec.sketch == SketchType::ghll) return default_ghll_q(spec.b);
  const ConfigReport report = validate_config(SketchConfig{spec.m, spec.b, spec.a, 0}, 1e-3, n_max);
  std::uint64_t q = report.q_min;
  if (spec.b == 2.) q = std::max<std::uint64_t>(q, 62);
  if (q >= std::numeric_limits<std::uint32_t>::max()) throw std::invalid_argument("required q is too large");
  return static_cast<std::uint32_t>(q);
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed + trial); }

std::vector<std::uint64_t> generate_set(std::uint64_t n, RandomStream& stream) {
  std::vector<std::uint64_t> elements(n);
  for (auto& e : elements) e = stream.next_u64();
  return elements;
}

std::pair<std::vector<std::uint64_t>, std::vector<std::uint64_t>> generate_pair(std::uint64_t n1, std::uint64_t n2,
                                                                                std::uint64_t n3,
                                                                                RandomStream& stream) {
  if (n1 + n3 == 0 || n2 + n3 == 0) throw std::invalid_argument("both sets must be nonempty");
  const auto s1 = generate_set(n1, stream);
  const auto s2 = generate_set(n2, stream);
  const auto s3 = generate_set(n3, stream);
  std::vector<std::uint64_t> a(s1);
  a.insert(a.end(), s3.begin(), s3.end());
  std::vector<std::uint64_t> b(s2);
  b.insert(b.end(), s3.begin(), s3.end());
  return {std::move(a), std::move(b)};
}

ErrorStats summarize(std::span<const double> e) {
  ErrorStats s;
  if (e.empty()) return {nan, nan, nan};
  const double n = static_cast<double>(e.size());
  double sum = 0, sum_sq = 0;
  for (double x : e) {
    sum += x;
    sum_sq += x * x;
  }
  s.bias = sum / n;
  s.rmse = std::sqrt(sum_sq / n);
  if (e.size() < 4) {
    s.kurtosis = nan;
    return s;
  }
  double m2 = 0, m4 = 0;
  for (double x : e) {
    const double d = x - s.bias;
    m2 += d * d;
    m4 += d * d * d * d;
  }
  m2 /= n;
  m4 /= n;
  s.kurtosis = m2 > 0 ? m4 / (m2 * m2) : nan;
  return s;
}

std::vector<CardinalityRecord> run_cardinality_experiment(const ExperimentSpec& spec) {
  check_spec(spec);
  std::vector<std::uint64_t> grid = spec.cardinalities;
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  const SketchFactory factory(spec, static_cast<double>(grid.back()));
  const auto estimators = cardinality_estimators(spec.sketch);
  const std::size_t n_est = estimators.size(), n_grid = grid.size(), trials = spec.trials;
  std::vector<double> errors(n_est * n_grid * trials);

  for_each_trial(trials, spec.parallel, [&](std::uint64_t t) {
    RandomStream stream(trial_seed(spec.seed, t));
    with_fresh_sketch(spec, factory, [&](auto& sketch) {
      std::vector<double> values(n_est);
      std::uint64_t inserted = 0;
      for (std::size_t g = 0; g < n_grid; ++g) {
        for (; inserted < grid[g]; ++inserted) sketch.insert(stream.next_u64());
        cardinality_estimates(sketch, values);
        for (std::size_t e = 0; e < n_est; ++e) {
          errors[(e * n_grid + g) * trials + t] = values[e] / static_cast<double>(grid[g]) - 1;
        }
      }
    });
  });

  const SketchConfig config = factory.config();
  const double rsd =
      spec.sketch == SketchType::minhash ? 1 / std::sqrt(static_cast<double>(spec.m)) : rsd_theoretical(spec.b, spec.m);
  std::vector<CardinalityRecord> records;
  for (std::size_t e = 0; e < n_est; ++e) {
    for (std::size_t g = 0; g < n_grid; ++g) {
      const std::span<const double> slice(errors.data() + (e * n_grid + g) * trials, trials);
      records.push_back(
          {std::string(sketch_name(spec.sketch)), estimators[e], config, grid[g], trials, summarize(slice), rsd});
    }
  }
  return records;
}

std::vector<JointRecord> run_joint_experiment(const ExperimentSpec& spec) {
  check_spec(spec);
  const SketchFactory factory(spec, static_cast<double>(spec.union_size));
  const Plugin plugin = resolve_plugin(spec);
  const auto estimators = joint_estimator_names(spec.sketch, plugin, spec.known_cardinalities);
  const std::size_t n_est = estimators.size(), n_q = all_joint_quantities.size(), trials = spec.trials;
  const double b = factory.config().b;

  std::vector<JointRecord> records;
  for (double jaccard : spec.jaccards) {
    for (double ratio : spec.ratios) {
      const PairSizes sizes = split_union(spec.union_size, jaccard, ratio);
      if (sizes.n1 + sizes.n3 == 0 || sizes.n2 + sizes.n3 == 0) {
        throw std::invalid_argument("grid point leaves one of the sets empty");
      }
      const double n_a = static_cast<double>(sizes.n1 + sizes.n3);
      const double n_b = static_cast<double>(sizes.n2 + sizes.n3);
      const double j_true = static_cast<double>(sizes.n3) / static_cast<double>(spec.union_size);
      const DerivedJointQuantities truth = derive_joint_quantities(n_a, n_b, j_true);
      // realized |A\B| / |B\A|, the requested value when B\A is empty
      const double realized_ratio =
          sizes.n2 == 0 ? ratio : static_cast<double>(sizes.n1) / static_cast<double>(sizes.n2);
      std::vector<double> errors(n_est * n_q * trials);

      for_each_trial(trials, spec.parallel, [&](std::uint64_t t) {
        RandomStream stream(trial_seed(spec.seed, t));
        auto run = [&](auto s1) {
          auto s2 = s1;
          auto s3 = s1;
          for (std::uint64_t i = 0; i < sizes.n1; ++i) s1.insert(stream.next_u64());
          for (std::uint64_t i = 0; i < sizes.n2; ++i) s2.insert(stream.next_u64());
          for (std::uint64_t i = 0; i < sizes.n3; ++i) s3.insert(stream.next_u64());
          const auto sa = merge(s1, s3);
          const auto sb = merge(s2, s3);
          const auto su = merge(sa, sb);
          return joint_estimates(sa, sb, su, n_a, n_b, plugin, spec.known_cardinalities);
        };
        std::vector<Joint> est;
        with_fresh_sketch(spec, factory, [&](auto& sketch) { est = run(sketch); });
        for (std::size_t e = 0; e < n_est; ++e) {
          const DerivedJointQuantities d = derive_joint_quantities(est[e].n_a, est[e].n_b, est[e].j);
          for (std::size_t q = 0; q < n_q; ++q) {
            const JointQuantity quantity = all_joint_quantities[q];
            errors[(e * n_q + q) * trials + t] =
                quantity_value(d, est[e].j, quantity) / quantity_value(truth, j_true, quantity) - 1;
          }
        }
      });

      for (std::size_t e = 0; e < n_est; ++e) {
        for (std::size_t q = 0; q < n_q; ++q) {
          const JointQuantity quantity = all_joint_quantities[q];
          const std::span<const double> slice(errors.data() + (e * n_q + q) * trials, trials);
          records.push_back({std::string(sketch_name(spec.sketch)), spec.m, b, spec.union_size, j_true, realized_ratio,
                             estimators[e], std::string(quantity_name(quantity)), trials, summarize(slice).rmse,
                             fisher_rmse(spec.sketch, n_a, n_b, j_true, b, spec.m, quantity)});
        }
      }
    }
  }
  return records;
}

std::vector<ThroughputRecord> run_throughput_benchmark(const ExperimentSpec& spec) {
  check_spec(spec);
  const SketchFactory factory(spec, max_cardinality(spec));
  std::vector<ThroughputRecord> records;
  auto measure = [&](std::string name, auto make_sketch, auto iterations) {
    for (std::uint64_t n : spec.cardinalities) {
      double total_ns = 0;
      double total_iterations = 0;
      for (std::uint64_t t = 0; t < spec.trials; ++t) {
        RandomStream stream(trial_seed(spec.seed, t));
        const auto elements = generate_set(n, stream);
        auto sketch = make_sketch();
        const auto start = std::chrono::steady_clock::now();
        for (std::uint64_t e : elements) sketch.insert(e);
        const auto stop = std::chrono::steady_clock::now();
        total_ns += std::chrono::duration<double, std::nano>(stop - start).count();
        total_iterations += static_cast<double>(iterations(sketch));
      }
      const double count = static_cast<double>(n) * static_cast<double>(spec.trials);
      records.push_back({name, spec.m, factory.config().b, n, spec.trials, total_ns / count, total_iterations / count});
    }
  };
  const auto name = std::string(sketch_name(spec.sketch));
  switch (spec.sketch) {
    case SketchType::setsketch1:
    case SketchType::setsketch2:
      measure(name, [&] { return factory.setsketch(); }, [](const SetSketch& s) { return s.inner_iterations(); });
      break;
    case SketchType::ghll:
      measure(name, [&] { return factory.ghll(true); }, [](const Ghll& s) { return s.register_accesses(); });
      measure(
          name + "_nolbt", [&] { return factory.ghll(false); }, [](const Ghll& s) { return s.register_accesses(); });
      break;
    case SketchType::minhash:
      measure(name, [&] { return factory.minhash(); }, [](const MinHash& s) { return s.inner_iterations(); });
      break;
  }
  return records;
}

std::vector<AuditRecord> run_special_function_audit(std::uint64_t grid_points) {
  if (grid_points == 0) throw std::invalid_argument("audit grid must be nonempty");
  constexpr double golden_fraction = 0.6180339887498949;
  std::vector<AuditRecord> records;
  for (double b : {1.001, 1.2, 2.}) {
    double xi1 = 0, xi2 = 0, zeta_rel = 0;
    for (std::uint64_t i = 0; i < grid_points; ++i) {
      const double x = static_cast<double>(i) / static_cast<double>(grid_points);
      xi1 = std::max(xi1, std::abs(xi(b, x, 1) - 1));
      xi2 = std::max(xi2, std::abs(xi(b, x, 2) - 1));
      const double frac = std::fmod(static_cast<double>(i) * golden_fraction, 1.);
      const double width = 0.1 + 9.9 * frac;
      zeta_rel = std::max(zeta_rel, std::abs(zeta(b, x, x + width) - width) / width);
    }
    records.push_back({"xi1", b, grid_points, xi1, 1e-5, xi1 <= 1e-5});
    records.push_back({"xi2", b, grid_points, xi2, 1e-4, xi2 <= 1e-4});
    records.push_back({"zeta_rel", b, grid_points, zeta_rel, 1e-5, zeta_rel <= 1e-5});
  }
  return records;
}

void write_csv(std::ostream& out, std::span<const CardinalityRecord> records) {
  out << "sketch,variant,m,b,a,q,true_n,trials,rel_bias,rel_rmse,kurtosis,theoretical_rsd\n";
  for (const auto& r : records) {
    out << r.sketch << ',' << r.estimator << ',' << r.config.m << ',' << format_double(r.config.b) << ','
        << format_double(r.config.a) << ',' << r.config.q << ',' << r.true_n << ',' << r.trials << ','
        << format_double(r.stats.bias) << ',' << format_double(r.stats.rmse) << ',' << format_double(r.stats.kurtosis)
        << ',' << format_double(r.theoretical_rsd) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const JointRecord> records) {
  out << "sketch,m,b,union_size,jaccard,ratio,estimator,quantity,trials,rel_rmse,fisher_rmse\n";
  for (const auto& r : records) {
    out << r.sketch << ',' << r.m << ',' << format_double(r.b) << ',' << r.union_size << ',' << format_double(r.jaccard)
        << ',' << format_double(r.ratio) << ',' << r.estimator << ',' << r.quantity << ',' << r.trials << ','
        << format_double(r.rel_rmse) << ',' << format_double(r.fisher_rmse) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const ThroughputRecord> records) {
  out << "sketch,m,b,n,trials,mean_ns_per_element,mean_inner_iterations\n";
  for (const auto& r : records) {
    out << r.sketch << ',' << r.m << ',' << format_double(r.b) << ',' << r.n << ',' << r.trials << ','
        << format_double(r.mean_ns_per_element) << ',' << format_double(r.mean_inner_iterations) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const AuditRecord> records) {
  out << "function,b,grid_points,max_abs_error,paper_bound,pass\n";
  for (const auto& r : records) {
    out << r.function << ',' << format_double(r.b) << ',' << r.grid_points << ',' << format_double(r.max_abs_error)
        << ',' << format_double(r.bound) << ',' << (r.pass ? "true" : "false") << '\n';
  }
}

}  // namespace setsketch::harness
