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

#include "qubogray/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

#include "qubogray/gray_walk.hpp"

namespace qubogray {
namespace {

using Clock = std::chrono::steady_clock;

Solution finish(const QuboInstance& instance, std::uint64_t best_code,
                std::uint64_t steps, Clock::time_point started) {
  Solution s;
  s.minimizer = BitVector::from_integer(best_code, instance.size());
  // The running sum drifts over many additions; report the exact value.
  s.value = evaluate(instance, s.minimizer);
  s.evaluations = steps;
  s.elapsed = Clock::now() - started;
  return s;
}

void check_dimension(std::size_t n, std::size_t limit, const char* solver) {
  if (limit > kAbsoluteMaxDimension) {
    throw std::invalid_argument("dimension cap may not exceed " +
                                std::to_string(kAbsoluteMaxDimension));
  }
  if (n > limit) {
    throw DimensionLimitError(n, limit,
                              std::string(solver) + " solver refuses n = " +
                                  std::to_string(n) + " (limit " +
                                  std::to_string(limit) + ")");
  }
}

}  // namespace

std::string_view to_string(SolveMode mode) {
  switch (mode) {
    case SolveMode::kNaive:
      return "naive";
    case SolveMode::kIncremental:
      return "incremental";
    case SolveMode::kParallel:
      return "parallel";
  }
  return "unknown";
}

SolveMode parse_solve_mode(std::string_view text) {
  if (text == "naive") return SolveMode::kNaive;
  if (text == "incremental") return SolveMode::kIncremental;
  if (text == "parallel") return SolveMode::kParallel;
  throw std::invalid_argument("unknown solve mode '" + std::string(text) + "'");
}

std::size_t default_fixed_bits(std::size_t n, unsigned threads) {
  if (threads == 0) throw std::invalid_argument("thread count must be at least 1");
  const auto log2_ceil = static_cast<std::size_t>(std::bit_width(threads - 1u));
  return n == 0 ? 0 : std::min(n - 1, log2_ceil);
}

Solution solve_naive(const QuboInstance& instance, std::size_t naive_limit) {
  const auto started = Clock::now();
  const std::size_t n = instance.size();
  check_dimension(n, naive_limit, "naive");

  BitVector x(n);
  std::uint64_t best_code = 0;
  double best_value = 0.0;
  const std::uint64_t last = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t k = 1; k <= last; ++k) {
    x.assign_integer(k);
    const double value = evaluate(instance, x);
    if (value < best_value) {
      best_value = value;
      best_code = k;
    }
  }

  Solution s;
  s.minimizer = BitVector::from_integer(best_code, n);
  s.value = best_value;
  s.evaluations = last;
  s.elapsed = Clock::now() - started;
  return s;
}

Solution solve_incremental(const QuboInstance& instance, std::size_t max_dimension) {
  const auto started = Clock::now();
  check_dimension(instance.size(), max_dimension, "incremental");
  const SplitForm form = split(instance);
  const GrayWalkResult walk = gray_walk(form, instance.size(), 0, 0.0);
  return finish(instance, walk.best_code, walk.steps, started);
}

Solution solve_subspace(const QuboInstance& instance, const SubspaceSpec& sub) {
  return solve_subspace(instance, split(instance), sub);
}

Solution solve_subspace(const QuboInstance& instance, const SplitForm& form,
                        const SubspaceSpec& sub) {
  const auto started = Clock::now();
  const std::size_t n = instance.size();
  if (form.size() != n) throw std::invalid_argument("split form does not match instance");
  if (sub.fixed_bits >= n) {
    throw std::invalid_argument("fixed bit count " + std::to_string(sub.fixed_bits) +
                                " must be below n = " + std::to_string(n));
  }
  if ((sub.suffix >> sub.fixed_bits) != 0) {
    throw std::invalid_argument("suffix " + std::to_string(sub.suffix) +
                                " does not fit in " + std::to_string(sub.fixed_bits) +
                                " bits");
  }
  const std::size_t free_bits = n - sub.fixed_bits;
  const std::uint64_t start_code = sub.suffix << free_bits;
  const double start_value = evaluate(instance, BitVector::from_integer(start_code, n));
  const GrayWalkResult walk = gray_walk(form, free_bits, start_code, start_value);
  return finish(instance, walk.best_code, walk.steps, started);
}

Solution reduce_minimum(std::span<const Solution> by_suffix) {
  if (by_suffix.empty()) throw std::invalid_argument("reduce_minimum: no results");
  std::size_t best = 0;
  for (std::size_t i = 1; i < by_suffix.size(); ++i) {
    if (by_suffix[i].value < by_suffix[best].value) best = i;
  }
  return by_suffix[best];
}

Solution solve_parallel(const QuboInstance& instance, const SolveConfig& config) {
  const auto started = Clock::now();
  const std::size_t n = instance.size();
  check_dimension(n, config.max_dimension, "parallel");
  if (config.threads == 0) throw std::invalid_argument("thread count must be at least 1");
  const std::size_t m = config.fixed_bits.value_or(default_fixed_bits(n, config.threads));
  if (m >= n) {
    throw std::invalid_argument("fixed bit count " + std::to_string(m) +
                                " must be below n = " + std::to_string(n));
  }

  const SplitForm form = split(instance);
  const std::uint64_t count = std::uint64_t{1} << m;
  std::vector<Solution> results(count);

  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::uint64_t suffix = next.fetch_add(1, std::memory_order_relaxed);
      if (suffix >= count) return;
      try {
        results[suffix] = solve_subspace(instance, form, SubspaceSpec{m, suffix});
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  const auto workers = static_cast<unsigned>(
      std::min<std::uint64_t>(config.threads, count));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  if (first_error) std::rethrow_exception(first_error);

  Solution best = reduce_minimum(results);
  best.evaluations = 0;
  for (const auto& r : results) best.evaluations += r.evaluations;
  best.elapsed = Clock::now() - started;
  return best;
}

Solution solve(const QuboInstance& instance, const SolveConfig& config) {
  switch (config.mode) {
    case SolveMode::kNaive:
      return solve_naive(instance, config.naive_limit);
    case SolveMode::kIncremental:
      return solve_incremental(instance, config.max_dimension);
    case SolveMode::kParallel:
      return solve_parallel(instance, config);
  }
  throw std::invalid_argument("unknown solve mode");
}

}  // namespace qubogray
