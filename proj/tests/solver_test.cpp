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

#include <algorithm>
#include <cmath>
#include <vector>

#include "catch2/catch_amalgamated.hpp"
#include "oracles.hpp"
#include "qubogray/gray_walk.hpp"
#include "qubogray/solver.hpp"

namespace qubogray {

using testing::direct_objective;
using testing::enumerate_minimum;
using testing::random_upper;

namespace {

QuboInstance diag(std::vector<double> d) {
  const std::size_t n = d.size();
  std::vector<double> dense(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) dense[i * n + i] = d[i];
  return QuboInstance(n, dense);
}

bool is_listed(const std::vector<std::uint64_t>& codes, std::uint64_t code) {
  return std::find(codes.begin(), codes.end(), code) != codes.end();
}

}  // namespace

TEST_CASE("solve_naive") {
  SECTION("positive diagonal keeps the zero vector") {
    const auto s = solve_naive(diag({1, 2, 3}));
    CHECK(s.minimizer.to_string() == "000");
    CHECK(s.value == 0.0);
    CHECK(s.evaluations == 7);
  }
  SECTION("negative diagonal selects everything") {
    const auto s = solve_naive(diag({-1, -2}));
    CHECK(s.minimizer.to_string() == "11");
    CHECK(s.value == -3.0);
  }
  SECTION("agrees with exhaustive enumeration at n = 10") {
    const auto dense = random_upper(10, 10);
    const auto oracle = enumerate_minimum(dense, 10);
    const auto s = solve_naive(QuboInstance(10, dense));
    CHECK(std::abs(s.value - oracle.min_value) <= 1e-9);
    CHECK(is_listed(oracle.minimizers, s.minimizer.to_integer()));
  }
  SECTION("first minimizer in ascending order wins ties") {
    // x = 01 and x = 10 both reach -1; ascending order meets code 1 first.
    const auto s = solve_naive(QuboInstance(2, {-1, 2, 0, -1}));
    CHECK(s.value == -1.0);
    CHECK(s.minimizer.to_integer() == 1);
  }
  SECTION("dimension guard") {
    CHECK_THROWS_AS(solve_naive(QuboInstance::zeros(25)), DimensionLimitError);
    CHECK_THROWS_AS(solve_naive(diag({1, 2, 3}), 2), DimensionLimitError);
    CHECK_NOTHROW(solve_naive(diag({1, 2, 3}), 3));
  }
}

TEST_CASE("solve_incremental") {
  SECTION("positive diagonal") {
    const auto s = solve_incremental(diag({1, 2, 3}));
    CHECK(s.value == 0.0);
    CHECK(s.minimizer.to_string() == "000");
  }
  SECTION("step count is 2^n - 1") {
    for (std::size_t n = 1; n <= 14; ++n) {
      CHECK(solve_incremental(QuboInstance(n, random_upper(n, 7 * n))).evaluations ==
            (std::uint64_t{1} << n) - 1);
    }
  }
  SECTION("equals the naive value and returns a verified minimizer") {
    for (std::size_t n = 1; n <= 16; ++n) {
      for (std::uint32_t rep = 0; rep < 3; ++rep) {
        const QuboInstance q(n, random_upper(n, 1000 * n + rep));
        const auto fast = solve_incremental(q);
        const auto slow = solve_naive(q);
        REQUIRE(std::abs(fast.value - slow.value) <= 1e-9);
        REQUIRE(std::abs(evaluate(q, fast.minimizer) - fast.value) <= 1e-9);
        REQUIRE(std::abs(evaluate(q, slow.minimizer) - slow.value) <= 1e-9);
      }
    }
  }
  SECTION("first minimizer in Gray order wins ties") {
    // Gray order from 00 visits 01, 11, 10: code 1 first.
    const auto s = solve_incremental(QuboInstance(2, {-1, 2, 0, -1}));
    CHECK(s.minimizer.to_integer() == 1);
    // Codes 2 and 3 tie at -1; Gray order reaches 3 before 2.
    const auto t = solve_incremental(QuboInstance(2, {0, 0, 0, -1}));
    CHECK(t.value == -1.0);
    CHECK(t.minimizer.to_string() == "11");
    CHECK(solve_naive(QuboInstance(2, {0, 0, 0, -1})).minimizer.to_string() == "01");
  }
  SECTION("dimension cap") {
    InstanceOptions wide;
    wide.max_dimension = 41;
    CHECK_THROWS_AS(solve_incremental(QuboInstance::zeros(41, wide)), DimensionLimitError);
  }
}

TEST_CASE("gray_walk running value tracks direct evaluation") {
  const std::size_t n = 12;
  const auto dense = random_upper(n, 12);
  const QuboInstance q(n, dense);
  double worst = 0.0;
  std::uint64_t visits = 0;
  gray_walk(split(q), n, 0, 0.0, [&](std::uint64_t code, double running) {
    worst = std::max(worst, std::abs(running - direct_objective(dense, n, code)));
    ++visits;
  });
  CHECK(visits == 4095);
  CHECK(worst <= 1e-9);
}

TEST_CASE("solve_subspace") {
  const std::size_t n = 10;
  const auto dense = random_upper(n, 4242);
  const QuboInstance q(n, dense);
  const auto full = solve_incremental(q);

  SECTION("m = 0 reproduces the full search") {
    const auto s = solve_subspace(q, SubspaceSpec{0, 0});
    CHECK(s.value == full.value);
    CHECK(s.minimizer == full.minimizer);
    CHECK(s.evaluations == full.evaluations);
  }
  SECTION("m = n - 1 leaves two candidates") {
    for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << (n - 1)); suffix += 37) {
      const std::uint64_t a = suffix << 1;
      const std::uint64_t b = a | 1;
      const double expected =
          std::min(direct_objective(dense, n, a), direct_objective(dense, n, b));
      const auto s = solve_subspace(q, SubspaceSpec{n - 1, suffix});
      CHECK(std::abs(s.value - expected) <= 1e-12);
      CHECK(s.evaluations == 1);
      CHECK((s.minimizer.to_integer() >> 1) == suffix);
    }
  }
  SECTION("minimum over m = 3 subspaces equals the full search") {
    double best = 1e300;
    for (std::uint64_t suffix = 0; suffix < 8; ++suffix) {
      const auto s = solve_subspace(q, SubspaceSpec{3, suffix});
      CHECK((s.minimizer.to_integer() >> 7) == suffix);
      best = std::min(best, s.value);
    }
    CHECK(std::abs(best - full.value) <= 1e-9);
  }
  SECTION("invalid specs") {
    CHECK_THROWS_AS(solve_subspace(q, SubspaceSpec{n, 0}), std::invalid_argument);
    CHECK_THROWS_AS(solve_subspace(q, SubspaceSpec{3, 8}), std::invalid_argument);
  }
}

TEST_CASE("subspaces partition the cube") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const QuboInstance q(n, random_upper(n, 77));
    const auto form = split(q);
    for (std::size_t m = 0; m < n; ++m) {
      std::vector<int> hits(std::size_t{1} << n, 0);
      const std::size_t free_bits = n - m;
      for (std::uint64_t suffix = 0; suffix < (std::uint64_t{1} << m); ++suffix) {
        const std::uint64_t start = suffix << free_bits;
        ++hits[start];
        gray_walk(form, free_bits, start, 0.0, [&](std::uint64_t code, double) {
          REQUIRE((code >> free_bits) == suffix);
          ++hits[code];
        });
      }
      REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
  }
}

TEST_CASE("reduce_minimum") {
  // n = 5 with the top two bits fixed; one result per suffix.
  const std::vector<double> minima{0.0, -2.3, -1.8, 0.2};
  std::vector<Solution> results;
  for (std::uint64_t suffix = 0; suffix < minima.size(); ++suffix) {
    Solution s;
    s.minimizer = BitVector::from_integer(suffix << 3, 5);
    s.value = minima[suffix];
    results.push_back(s);
  }
  const auto best = reduce_minimum(results);
  CHECK(best.value == -2.3);
  CHECK(best.minimizer.to_integer() >> 3 == 1);

  results[3].value = -2.3;
  CHECK(reduce_minimum(results).minimizer.to_integer() >> 3 == 1);
  CHECK_THROWS_AS(reduce_minimum(std::vector<Solution>{}), std::invalid_argument);
}

TEST_CASE("default_fixed_bits") {
  CHECK(default_fixed_bits(10, 1) == 0);
  CHECK(default_fixed_bits(10, 2) == 1);
  CHECK(default_fixed_bits(10, 3) == 2);
  CHECK(default_fixed_bits(10, 4) == 2);
  CHECK(default_fixed_bits(10, 8) == 3);
  CHECK(default_fixed_bits(10, 9) == 4);
  CHECK(default_fixed_bits(2, 8) == 1);
  CHECK(default_fixed_bits(1, 8) == 0);
  CHECK_THROWS_AS(default_fixed_bits(4, 0), std::invalid_argument);
}

TEST_CASE("solve_parallel") {
  const std::size_t n = 16;
  const QuboInstance q(n, random_upper(n, 1616));
  const auto serial = solve_incremental(q);

  SECTION("one thread, no fixed bits") {
    SolveConfig config{SolveMode::kParallel, 1, 0};
    const auto s = solve_parallel(q, config);
    CHECK(s.value == serial.value);
    CHECK(s.minimizer == serial.minimizer);
  }
  SECTION("thread count never changes the answer") {
    for (std::size_t m : {1u, 3u, 5u}) {
      SolveConfig config{SolveMode::kParallel, 1, m};
      const auto reference = solve_parallel(q, config);
      CHECK(std::abs(reference.value - serial.value) <= 1e-9);
      CHECK(std::abs(evaluate(q, reference.minimizer) - reference.value) <= 1e-9);
      CHECK(reference.evaluations == (std::uint64_t{1} << n) - (std::uint64_t{1} << m));
      for (unsigned threads : {2u, 4u, 8u}) {
        config.threads = threads;
        const auto s = solve_parallel(q, config);
        CHECK(s.value == reference.value);
        CHECK(s.minimizer == reference.minimizer);
      }
    }
  }
  SECTION("default fixed bits from thread count") {
    SolveConfig config;
    config.mode = SolveMode::kParallel;
    config.threads = 4;
    const auto s = solve(q, config);
    CHECK(std::abs(s.value - serial.value) <= 1e-9);
    CHECK(s.evaluations == (std::uint64_t{1} << n) - 4);
  }
  SECTION("invalid configuration") {
    SolveConfig config{SolveMode::kParallel, 0, std::nullopt};
    CHECK_THROWS_AS(solve_parallel(q, config), std::invalid_argument);
    config = SolveConfig{SolveMode::kParallel, 2, n};
    CHECK_THROWS_AS(solve_parallel(q, config), std::invalid_argument);
  }
  SECTION("single variable") {
    SolveConfig config{SolveMode::kParallel, 8, std::nullopt};
    CHECK(solve_parallel(QuboInstance(1, {-1.5}), config).value == -1.5);
  }
}

TEST_CASE("solve mode names") {
  for (auto mode : {SolveMode::kNaive, SolveMode::kIncremental, SolveMode::kParallel}) {
    CHECK(parse_solve_mode(to_string(mode)) == mode);
  }
  CHECK_THROWS_AS(parse_solve_mode("annealing"), std::invalid_argument);
}

}  // namespace qubogray
