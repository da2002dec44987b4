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

#include "qubogray/graycode.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace qubogray {

unsigned ctz(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("ctz: undefined for 0");
  return static_cast<unsigned>(std::countr_zero(k));
}

FlipStream::FlipStream(std::size_t n, std::size_t max_width) : n_(n) {
  if (max_width > 63) throw std::invalid_argument("FlipStream: width cap above 63");
  if (n < 1 || n > max_width) {
    throw std::invalid_argument("FlipStream: width " + std::to_string(n) +
                                " outside [1, " + std::to_string(max_width) + "]");
  }
  last_ = (std::uint64_t{1} << n) - 1;
}

unsigned FlipStream::next() {
  if (done()) throw std::out_of_range("FlipStream: exhausted");
  return ctz(counter_++);
}

FlipStream flip_sequence(std::size_t n) { return FlipStream(n); }

std::vector<std::uint64_t> gray_permutation(std::size_t k_bits) {
  if (k_bits < 1 || k_bits > 20) {
    throw std::invalid_argument("gray_permutation: width must be in [1, 20]");
  }
  std::vector<std::string> codes{"0", "1"};
  for (std::size_t k = 2; k <= k_bits; ++k) {
    const std::size_t size = std::size_t{1} << k;
    const std::size_t half = size / 2;
    std::vector<std::string> next(size);
    for (std::size_t l = 0; l < size; ++l) {
      next[l] = l < half ? "0" + codes[l] : "1" + codes[size - l - 1];
    }
    codes = std::move(next);
  }
  std::vector<std::uint64_t> order;
  order.reserve(codes.size());
  for (const auto& code : codes) order.push_back(std::stoull(code, nullptr, 2));
  return order;
}

}  // namespace qubogray
