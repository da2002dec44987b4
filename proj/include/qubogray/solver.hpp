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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qubogray/core.hpp"

namespace qubogray {

/// Default refusal threshold for the naive solver, which costs O(n^2) per
/// visited vector.
inline constexpr std::size_t kNaiveDimensionLimit = 24;

struct Solution {
  BitVector minimizer;
  /// Exact objective value of `minimizer`, recomputed with evaluate().
  double value = 0.0;
  /// Objective steps performed: full evaluations for the naive solver,
  /// incremental updates for the Gray-code solvers.
  std::uint64_t evaluations = 0;
  std::chrono::duration<double> elapsed{0.0};
};

/// Fixes the `fixed_bits` most-significant positions (n - m ... n - 1) to the
/// bits of `suffix`; positions 0 ... n - m - 1 are free.
struct SubspaceSpec {
  std::size_t fixed_bits = 0;
  std::uint64_t suffix = 0;
};

enum class SolveMode { kNaive, kIncremental, kParallel };

std::string_view to_string(SolveMode mode);
/// Parses "naive", "incremental" or "parallel"; throws std::invalid_argument.
SolveMode parse_solve_mode(std::string_view text);

struct SolveConfig {
  SolveMode mode = SolveMode::kIncremental;
  unsigned threads = 1;
  /// Number of fixed high-order bits for the parallel solver. Defaults to
  /// min(n - 1, ceil(log2(threads))).
  std::optional<std::size_t> fixed_bits;
  std::size_t max_dimension = kDefaultMaxDimension;
  std::size_t naive_limit = kNaiveDimensionLimit;
};

/// Visits all 2^n vectors in ascending integer order and evaluates each one
/// directly. Ties keep the first minimizer in that order; the all-zeros
/// vector with value 0 is the initial incumbent. Throws DimensionLimitError
/// when n > naive_limit.
Solution solve_naive(const QuboInstance& instance,
                     std::size_t naive_limit = kNaiveDimensionLimit);

/// Gray-code traversal with single-row incremental updates. Performs exactly
/// 2^n - 1 updates. Ties keep the first minimizer in Gray order, which may
/// differ from solve_naive's choice; the values always agree.
Solution solve_incremental(const QuboInstance& instance,
                           std::size_t max_dimension = kDefaultMaxDimension);

/// Minimizer over the 2^(n - m) vectors whose top m bits equal `sub.suffix`.
Solution solve_subspace(const QuboInstance& instance, const SubspaceSpec& sub);
Solution solve_subspace(const QuboInstance& instance, const SplitForm& form,
                        const SubspaceSpec& sub);

/// Min-reduction of per-subspace results indexed by suffix. Strictly smaller
/// values win, so ties go to the lowest suffix. Throws on an empty input.
Solution reduce_minimum(std::span<const Solution> by_suffix);

/// Solves all 2^m subspaces on `config.threads` workers and reduces them.
/// The result depends on m but never on the thread count or completion order.
Solution solve_parallel(const QuboInstance& instance, const SolveConfig& config);

/// Dispatches on config.mode.
Solution solve(const QuboInstance& instance, const SolveConfig& config);

/// min(n - 1, ceil(log2(threads))).
std::size_t default_fixed_bits(std::size_t n, unsigned threads);

}  // namespace qubogray
