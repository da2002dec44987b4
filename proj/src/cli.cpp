// Copyright 2026 The qubogray Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qubogray/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "qubogray/io.hpp"

namespace qubogray::cli {
namespace {

std::string shortest(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

// steady_clock ticks are nanoseconds; a solve shorter than one tick still
// took nonzero time.
constexpr double kMinSeconds = 1e-9;

}  // namespace

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  InstanceOptions options;
  options.triangle = args.strict ? TriangleMode::kStrict : TriangleMode::kFold;
  options.max_dimension = args.max_dimension;

  try {
    const QuboInstance instance = read_instance_file(args.input, options);

    SolveConfig config;
    config.mode = args.mode;
    config.threads = args.threads;
    config.fixed_bits = args.fixed_bits;
    config.max_dimension = args.max_dimension;
    const Solution s = solve(instance, config);

    if (args.json) {
      nlohmann::json report = {
          {"n", instance.size()},
          {"mode", std::string(to_string(args.mode))},
          {"value", s.value},
          {"minimizer", s.minimizer.to_string()},
          {"evaluations", s.evaluations},
          {"seconds", s.elapsed.count()},
      };
      out << report.dump() << '\n';
    } else {
      out << "n: " << instance.size() << '\n'
          << "mode: " << to_string(args.mode) << '\n'
          << "minimizer: " << s.minimizer.to_string() << "  (bit index 0 first)\n"
          << "value: " << shortest(s.value) << '\n'
          << "evaluations: " << s.evaluations << '\n'
          << "seconds: " << s.elapsed.count() << '\n';
    }
    return kExitOk;
  } catch (const DimensionLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitTooLarge;
  } catch (const ParseError& e) {
    err << "error: " << args.input.string() << ":" << e.line() << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n < 1 || args.n > kDefaultMaxDimension) {
    err << "error: -n must be in [1, " << kDefaultMaxDimension << "]\n";
    return kExitUsage;
  }
  if (!(args.density > 0.0 && args.density <= 1.0)) {
    err << "error: --density must be in (0, 1]\n";
    return kExitUsage;
  }
  const QuboInstance instance = random_instance(args.n, args.seed, args.density);
  if (!args.output) {
    out << serialize_instance(instance);
    return kExitOk;
  }
  try {
    write_instance_file(*args.output, instance);
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

std::vector<BenchRecord> run_bench(const BenchArgs& args) {
  std::vector<BenchRecord> records;
  for (std::size_t n = args.n_min; n <= args.n_max; ++n) {
    std::vector<QuboInstance> instances;
    instances.reserve(args.reps);
    for (std::size_t rep = 0; rep < args.reps; ++rep) {
      instances.push_back(random_instance(n, bench_seed(n, rep)));
    }
    for (const SolveMode mode : args.modes) {
      SolveConfig config;
      config.mode = mode;
      config.threads = args.threads;
      for (std::size_t rep = 0; rep < args.reps; ++rep) {
        const Solution s = solve(instances[rep], config);
        records.push_back({n, mode, rep, std::max(s.elapsed.count(), kMinSeconds), s.value});
      }
    }
  }
  return records;
}

std::string format_bench_row(const BenchRecord& r) {
  return std::to_string(r.n) + "," + std::string(to_string(r.mode)) + "," +
         std::to_string(r.rep) + "," + shortest(r.seconds) + "," + shortest(r.value);
}

std::map<std::size_t, double> mean_speedups(const std::vector<BenchRecord>& records) {
  struct Sums {
    double naive = 0.0, incremental = 0.0;
    std::size_t naive_count = 0, incremental_count = 0;
  };
  std::map<std::size_t, Sums> sums;
  for (const auto& r : records) {
    auto& s = sums[r.n];
    if (r.mode == SolveMode::kNaive) {
      s.naive += r.seconds;
      ++s.naive_count;
    } else if (r.mode == SolveMode::kIncremental) {
      s.incremental += r.seconds;
      ++s.incremental_count;
    }
  }
  std::map<std::size_t, double> speedups;
  for (const auto& [n, s] : sums) {
    if (s.naive_count == 0 || s.incremental_count == 0) continue;
    speedups[n] = (s.naive / static_cast<double>(s.naive_count)) /
                  (s.incremental / static_cast<double>(s.incremental_count));
  }
  return speedups;
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  if (args.n_min < 1 || args.n_min > args.n_max || args.n_max > kDefaultMaxDimension) {
    err << "error: need 1 <= --n-min <= --n-max <= " << kDefaultMaxDimension << '\n';
    return kExitUsage;
  }
  if (args.reps < 1 || args.modes.empty() || args.threads < 1) {
    err << "error: --reps, --modes and --threads must be non-empty/positive\n";
    return kExitUsage;
  }
  const bool wants_naive =
      std::find(args.modes.begin(), args.modes.end(), SolveMode::kNaive) != args.modes.end();
  if (wants_naive && args.n_max > kNaiveDimensionLimit) {
    err << "error: naive mode refuses n > " << kNaiveDimensionLimit
        << "; lower --n-max or drop naive from --modes\n";
    return kExitTooLarge;
  }

  std::ofstream file;
  bool header = true;
  if (args.output) {
    std::error_code ec;
    const auto size = std::filesystem::file_size(*args.output, ec);
    header = ec || size == 0;
    file.open(*args.output, std::ios::app);
    if (!file) {
      err << "error: cannot open '" << args.output->string() << "' for writing\n";
      return kExitUsage;
    }
  }
  std::ostream& csv = args.output ? static_cast<std::ostream&>(file) : out;
  std::ostream& log = args.output ? out : err;

  const auto records = run_bench(args);
  if (header) csv << kBenchCsvHeader << '\n';
  for (const auto& r : records) csv << format_bench_row(r) << '\n';
  csv.flush();
  if (!csv) {
    err << "error: failed writing benchmark CSV\n";
    return kExitUsage;
  }

  int status = kExitOk;
  for (const auto& a : records) {
    for (const auto& b : records) {
      if (a.n == b.n && a.rep == b.rep && &a < &b && std::abs(a.value - b.value) > 1e-9) {
        err << "error: n=" << a.n << " rep=" << a.rep << ": " << to_string(a.mode) << " found "
            << shortest(a.value) << " but " << to_string(b.mode) << " found "
            << shortest(b.value) << '\n';
        status = kExitFailure;
      }
    }
  }
  for (const auto& [n, speedup] : mean_speedups(records)) {
    log << "n=" << n << " mean speedup incremental vs naive: " << speedup << "x\n";
  }
  return status;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact QUBO brute-force solver using Gray-code traversal"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  std::string solve_mode = "incremental";
  std::size_t fixed_bits = 0;
  auto* solve = app.add_subcommand(
      "solve",
      "Solve an instance file. The minimizer is printed as a bit string with "
      "index 0 FIRST: the leftmost character is x_0.");
  solve->add_option("file", solve_args.input, "Instance in QUBO triplet format")->required();
  solve->add_option("--mode", solve_mode, "naive | incremental | parallel")
      ->check(CLI::IsMember({"naive", "incremental", "parallel"}));
  solve->add_option("--threads", solve_args.threads, "Worker threads (parallel mode)")
      ->check(CLI::PositiveNumber);
  auto* fixed_opt = solve->add_option(
      "--fixed-bits", fixed_bits,
      "Fixed high-order bits for parallel mode (default ceil(log2(threads)))");
  solve->add_option("--max-dim", solve_args.max_dimension, "Dimension cap (at most 63)");
  solve->add_flag("--strict", solve_args.strict, "Reject entries below the diagonal");
  solve->add_flag("--json", solve_args.json,
                  "Print {n, mode, value, minimizer, evaluations, seconds} as JSON");

  GenerateArgs gen_args;
  std::string gen_output;
  auto* generate = app.add_subcommand("generate", "Write a seeded random instance");
  generate->add_option("-n", gen_args.n, "Dimension")->required();
  generate->add_option("--seed", gen_args.seed, "PRNG seed")->required();
  generate->add_option("--density", gen_args.density, "Fraction of nonzero entries");
  generate->add_option("-o,--output", gen_output, "Output file (default stdout)");

  BenchArgs bench_args;
  std::vector<std::string> bench_modes{"naive", "incremental"};
  std::string bench_output;
  auto* bench = app.add_subcommand(
      "bench", "Time solvers on seeded random instances; CSV n,mode,rep,seconds,value");
  bench->add_option("--n-min", bench_args.n_min, "Smallest dimension");
  bench->add_option("--n-max", bench_args.n_max, "Largest dimension");
  bench->add_option("--reps", bench_args.reps, "Instances per dimension");
  bench->add_option("--modes", bench_modes, "Comma-separated solver modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"naive", "incremental", "parallel"}));
  bench->add_option("--threads", bench_args.threads, "Threads for parallel mode")
      ->check(CLI::PositiveNumber);
  bench->add_option("-o,--output", bench_output, "CSV file (appended; default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve) {
      solve_args.mode = parse_solve_mode(solve_mode);
      if (*fixed_opt) solve_args.fixed_bits = fixed_bits;
      return cmd_solve(solve_args, out, err);
    }
    if (*generate) {
      if (!gen_output.empty()) gen_args.output = gen_output;
      return cmd_generate(gen_args, out, err);
    }
    bench_args.modes.clear();
    for (const auto& m : bench_modes) bench_args.modes.push_back(parse_solve_mode(m));
    if (!bench_output.empty()) bench_args.output = bench_output;
    return cmd_bench(bench_args, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qubogray::cli
