#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "setsketch/cardinality.hpp"
#include "setsketch/harness/experiments.hpp"
#include "setsketch/joint.hpp"
#include "setsketch/serialization.hpp"

using namespace setsketch;
using namespace setsketch::harness;

namespace {

constexpr int exit_argument_error = 2;
constexpr int exit_audit_failure = 3;

struct Options {
  std::string sketch = "setsketch1";
  ExperimentSpec spec;
  std::uint32_t q = 0;
  std::string out = "-";
  bool serial = false;
  std::string known;
  std::string plugin;
  std::uint64_t audit_grid = 1000;
};

void add_sketch_options(CLI::App& app, Options& o) {
  app.add_option("--sketch", o.sketch, "setsketch1, setsketch2, ghll or minhash")
      ->check(CLI::IsMember({"setsketch1", "setsketch2", "ghll", "minhash"}))
      ->capture_default_str();
  app.add_option("--m", o.spec.m, "number of registers")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--b", o.spec.b, "base, > 1")->capture_default_str();
  app.add_option("--a", o.spec.a, "rate, > 0")->capture_default_str();
  app.add_option("--q", o.q, "largest register value minus one (default: chosen from the experiment range)");
}

void add_experiment_options(CLI::App& app, Options& o) {
  add_sketch_options(app, o);
  app.add_option("--trials", o.spec.trials, "trials per grid point")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", o.spec.seed, "experiment seed")->capture_default_str();
  app.add_option("--out", o.out, "output CSV path, - for stdout")->capture_default_str();
  app.add_flag("--serial", o.serial, "run trials with the serial reference loop");
}

void add_grid_option(CLI::App& app, Options& o) {
  app.add_option("--grid", o.spec.cardinalities, "comma-separated cardinalities")->delimiter(',');
}

ExperimentSpec finish(const Options& o) {
  ExperimentSpec spec = o.spec;
  spec.sketch = parse_sketch_type(o.sketch);
  if (o.q != 0) spec.q = o.q;
  spec.parallel = !o.serial;
  if (!o.known.empty()) spec.known_cardinalities = o.known == "true";
  if (!o.plugin.empty()) spec.plugin = parse_plugin(o.plugin);
  return spec;
}

template <typename Records>
void emit(const Options& o, const Records& records) {
  if (o.out == "-") {
    write_csv(std::cout, std::span(records));
    return;
  }
  std::ofstream file(o.out);
  if (!file) throw std::invalid_argument("cannot open output file " + o.out);
  write_csv(file, std::span(records));
}

std::vector<std::uint64_t> read_elements(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open input file " + path);
    in = &file;
  }
  std::vector<std::uint64_t> elements;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty()) continue;
    std::size_t used = 0;
    const unsigned long long value = std::stoull(line, &used, 0);
    if (used != line.size()) throw std::invalid_argument("not an integer: " + line);
    elements.push_back(value);
  }
  return elements;
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open sketch file " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

AnySketch make_sketch(const Options& o, double n_max) {
  ExperimentSpec spec = finish(o);
  const std::uint32_t q = resolve_q(spec, n_max);
  switch (spec.sketch) {
    case SketchType::setsketch1:
      return SetSketch({spec.m, spec.b, spec.a, q}, Variant::setsketch1);
    case SketchType::setsketch2:
      return SetSketch({spec.m, spec.b, spec.a, q}, Variant::setsketch2);
    case SketchType::ghll:
      return Ghll(spec.m, spec.b, q);
    case SketchType::minhash:
      return MinHash(spec.m);
  }
  throw std::logic_error("unhandled sketch type");
}

void print_estimates(const AnySketch& any) {
  std::visit(
      [](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, MinHash>) {
          std::printf("estimator,value\nmh,%.10g\n", estimate_cardinality_mh(s.components()));
        } else {
          std::printf("estimator,value\nraw,%.10g\ncorrected,%.10g\nml,%.10g\n",
                      estimate_cardinality_raw(s.registers(), s.config()),
                      estimate_cardinality_corrected(s.histogram(), s.config()),
                      estimate_cardinality_ml(s.histogram(), s.config()));
        }
      },
      any);
}

void print_joint(const AnySketch& first, const AnySketch& second) {
  if (first.index() != second.index()) throw std::invalid_argument("sketches are of different types");
  std::visit(
      [&](const auto& a) {
        using S = std::decay_t<decltype(a)>;
        const S& b = std::get<S>(second);
        const S u = merge(a, b);
        const JointCounts c = compare_registers(a, b);
        std::printf("quantity,value\nd_plus,%u\nd_minus,%u\nd_zero,%u\n", c.d_plus, c.d_minus, c.d_zero);
        if constexpr (std::is_same_v<S, MinHash>) {
          const double na = estimate_cardinality_mh(a.components()), nb = estimate_cardinality_mh(b.components());
          const double j = estimate_jaccard_mh_closed_form(c, na / (na + nb), nb / (na + nb));
          std::printf("n_a,%.10g\nn_b,%.10g\njaccard_closed_form,%.10g\njaccard_matching_fraction,%.10g\n", na, nb, j,
                      static_cast<double>(c.d_zero) / c.total());
          std::printf("jaccard_inclusion_exclusion,%.10g\n",
                      estimate_jaccard_inclusion_exclusion(na, nb, estimate_cardinality_mh(u.components())));
        } else {
          const double na = estimate_cardinality_corrected(a.histogram(), a.config());
          const double nb = estimate_cardinality_corrected(b.histogram(), b.config());
          const double nu = estimate_cardinality_corrected(u.histogram(), u.config());
          const double b_base = a.config().b;
          std::printf("n_a,%.10g\nn_b,%.10g\nn_union,%.10g\n", na, nb, nu);
          std::printf("jaccard_inclusion_exclusion,%.10g\n", estimate_jaccard_inclusion_exclusion(na, nb, nu));
          if (b_base <= std::numbers::e && na > 0 && nb > 0 && std::isfinite(na) && std::isfinite(nb)) {
            std::printf("jaccard_ml,%.10g\n", estimate_jaccard_ml(c, na, nb, b_base));
          }
          const auto [lo, hi] = estimate_jaccard_lsh_bounds(c.d_zero, c.total(), b_base);
          std::printf("jaccard_lower_bound,%.10g\njaccard_upper_bound,%.10g\n", lo, hi);
        }
      },
      first);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"SetSketch experiments and sketch files"};
  app.require_subcommand(1);
  Options o;

  auto* cardinality = app.add_subcommand("cardinality", "relative error of cardinality estimates");
  add_experiment_options(*cardinality, o);
  add_grid_option(*cardinality, o);

  auto* joint = app.add_subcommand("joint", "relative error of joint estimates");
  add_experiment_options(*joint, o);
  joint->add_option("--union-size", o.spec.union_size, "size of the union")->capture_default_str();
  joint->add_option("--jaccard-grid", o.spec.jaccards, "comma-separated Jaccard values")->delimiter(',');
  joint->add_option("--ratio-grid", o.spec.ratios, "comma-separated ratios |A\\B| / |B\\A|")->delimiter(',');
  joint->add_option("--known-cardinalities", o.known, "true or false (default: both)")
      ->check(CLI::IsMember({"true", "false"}));
  joint->add_option("--plugin", o.plugin, "cardinality estimator for unknown cardinalities")
      ->check(CLI::IsMember({"raw", "corrected", "ml"}));

  auto* throughput = app.add_subcommand("throughput", "insertion time per element");
  add_experiment_options(*throughput, o);
  add_grid_option(*throughput, o);

  auto* audit = app.add_subcommand("audit", "deviation of the special functions from their approximations");
  audit->add_option("--grid-points", o.audit_grid, "grid points per function")->check(CLI::PositiveNumber);
  audit->add_option("--out", o.out, "output CSV path, - for stdout");

  auto* sketch = app.add_subcommand("sketch", "build, merge and query sketch files");
  sketch->require_subcommand(1);
  std::string input = "-", output, first, second;
  std::vector<std::string> inputs;
  double n_max = 1e9;
  auto* build = sketch->add_subcommand("build", "sketch of integers read one per line");
  add_sketch_options(*build, o);
  build->add_option("--input", input, "element file, - for stdin")->capture_default_str();
  build->add_option("--n-max", n_max, "largest expected cardinality, used to choose q")->capture_default_str();
  build->add_option("--out", output, "sketch file")->required();
  auto* merge_cmd = sketch->add_subcommand("merge", "union of sketch files");
  merge_cmd->add_option("inputs", inputs, "sketch files")->required()->expected(1, -1);
  merge_cmd->add_option("--out", output, "sketch file")->required();
  auto* estimate = sketch->add_subcommand("estimate", "cardinality estimates of a sketch file");
  estimate->add_option("file", first, "sketch file")->required();
  auto* jaccard = sketch->add_subcommand("jaccard", "joint estimates of two sketch files");
  jaccard->add_option("first", first, "sketch file")->required();
  jaccard->add_option("second", second, "sketch file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : exit_argument_error;
  }

  try {
    if (*cardinality) emit(o, run_cardinality_experiment(finish(o)));
    if (*joint) emit(o, run_joint_experiment(finish(o)));
    if (*throughput) emit(o, run_throughput_benchmark(finish(o)));
    if (*audit) {
      const auto records = run_special_function_audit(o.audit_grid);
      emit(o, records);
      for (const auto& r : records) {
        if (!r.pass) return exit_audit_failure;
      }
    }
    if (*build) {
      AnySketch s = make_sketch(o, n_max);
      const auto elements = read_elements(input);
      std::visit(
          [&](auto& sk) {
            for (auto e : elements) sk.insert(e);
            write_bytes(output, serialize(sk));
          },
          s);
    }
    if (*merge_cmd) {
      AnySketch acc = deserialize_any(read_bytes(inputs.front()));
      for (std::size_t i = 1; i < inputs.size(); ++i) {
        const AnySketch next = deserialize_any(read_bytes(inputs[i]));
        if (next.index() != acc.index()) throw std::invalid_argument("sketches are of different types");
        std::visit([&](auto& a) { a.merge(std::get<std::decay_t<decltype(a)>>(next)); }, acc);
      }
      std::visit([&](const auto& a) { write_bytes(output, serialize(a)); }, acc);
    }
    if (*estimate) print_estimates(deserialize_any(read_bytes(first)));
    if (*jaccard) print_joint(deserialize_any(read_bytes(first)), deserialize_any(read_bytes(second)));
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_argument_error;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: value out of range: " << e.what() << '\n';
    return exit_argument_error;
  } catch (const FormatError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_argument_error;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
