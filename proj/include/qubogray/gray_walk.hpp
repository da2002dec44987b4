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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "qubogray/core.hpp"

namespace qubogray {

/// Dot product of one coupling row with a 0/1 vector stored as doubles.
inline double row_field(const double* row, const double* x, std::size_t n) {
  // Four partial sums keep independent add chains in flight.
  double a0 = 0.0, a1 = 0.0, a2 = 0.0, a3 = 0.0;
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    a0 += row[j] * x[j];
    a1 += row[j + 1] * x[j + 1];
    a2 += row[j + 2] * x[j + 2];
    a3 += row[j + 3] * x[j + 3];
  }
  for (; j < n; ++j) a0 += row[j] * x[j];
  return (a0 + a1) + (a2 + a3);
}

struct GrayWalkResult {
  std::uint64_t best_code = 0;
  double best_running_value = 0.0;
  std::uint64_t steps = 0;
};

struct NoVisit {
  void operator()(std::uint64_t, double) const noexcept {}
};

/// Walks the low `free_bits` positions in Gray order starting from the vector
/// encoded by `start_code`, whose objective is `start_value`. Step k flips
/// bit ctz(k) and updates the running value by one row of `form`. After every
/// update `visit(code, running_value)` is called. The start vector is the
/// initial incumbent; strict '<' keeps the first minimizer in walk order.
template <class Visit = NoVisit>
GrayWalkResult gray_walk(const SplitForm& form, std::size_t free_bits,
                         std::uint64_t start_code, double start_value,
                         Visit&& visit = {}) {
  const std::size_t n = form.size();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<double>((start_code >> i) & 1u);

  const double* qua = form.qua_row(0).data();
  const double* lin = form.lin().data();
  double* xs = x.data();

  std::uint64_t code = start_code;
  double value = start_value;
  GrayWalkResult result{start_code, start_value, 0};

  const std::uint64_t last = (std::uint64_t{1} << free_bits) - 1;
  for (std::uint64_t k = 1; k <= last; ++k) {
    const auto l = static_cast<std::size_t>(std::countr_zero(k));
    xs[l] = 1.0 - xs[l];
    code ^= std::uint64_t{1} << l;
    value += (2.0 * xs[l] - 1.0) * (row_field(qua + l * n, xs, n) + lin[l]);
    visit(code, value);
    if (value < result.best_running_value) {
      result.best_running_value = value;
      result.best_code = code;
    }
  }
  result.steps = last;
  return result;
}

}  // namespace qubogray
