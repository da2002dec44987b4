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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "qubogray/solver.hpp"

namespace qubogray::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;      // bad flags, unreadable/unwritable files, parse errors
inline constexpr int kExitTooLarge = 3;   // dimension over a solver cap

struct SolveArgs {
  std::filesystem::path input;
  SolveMode mode = SolveMode::kIncremental;
  unsigned threads = 1;
  std::optional<std::size_t> fixed_bits;
  std::size_t max_dimension = kDefaultMaxDimension;
  bool strict = false;
  bool json = false;
};

struct GenerateArgs {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  double density = 1.0;
  std::optional<std::filesystem::path> output;  // stdout when empty
};

struct BenchArgs {
  std::size_t n_min = 4;
  std::size_t n_max = 16;
  std::size_t reps = 10;
  std::vector<SolveMode> modes{SolveMode::kNaive, SolveMode::kIncremental};
  unsigned threads = 1;
  std::optional<std::filesystem::path> output;  // CSV to stdout when empty
};

struct BenchRecord {
  std::size_t n = 0;
  SolveMode mode = SolveMode::kIncremental;
  std::size_t rep = 0;
  double seconds = 0.0;
  double value = 0.0;
};

inline constexpr const char* kBenchCsvHeader = "n,mode,rep,seconds,value";

/// Solves the instance file and prints the report. The minimizer is printed
/// as a bit string with index 0 FIRST.
int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err);

/// Runs the benchmark and writes CSV rows `n,mode,rep,seconds,value`. An
/// existing non-empty output file is appended to without repeating the
/// header. Timing covers the solve call only.
int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err);

/// Solves `reps` instances per (n, mode) with seeds bench_seed(n, rep).
std::vector<BenchRecord> run_bench(const BenchArgs& args);

std::string format_bench_row(const BenchRecord& record);

/// Ratio of mean naive time to mean incremental time, per n. Dimensions
/// missing either mode are omitted.
std::map<std::size_t, double> mean_speedups(const std::vector<BenchRecord>& records);

/// Parses argv and dispatches to the subcommands above.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qubogray::cli
