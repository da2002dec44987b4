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
#include <iterator>
#include <vector>

namespace qubogray {

/// Number of trailing zero bits of k. Throws std::invalid_argument for k = 0.
unsigned ctz(std::uint64_t k);

/// Stream of bit indices to flip when walking {0,1}^n in Gray order from the
/// all-zeros vector: ctz(1), ctz(2), ..., ctz(2^n - 1), i.e. the binary carry
/// sequence 0, 1, 0, 2, 0, 1, 0, 3, ...
///
/// Single-owner and stateful. Usable as an input range:
///
///   for (unsigned l : FlipStream(n)) x.flip(l);
class FlipStream {
 public:
  /// Throws std::invalid_argument unless 1 <= n <= max_width.
  explicit FlipStream(std::size_t n, std::size_t max_width = 40);

  std::size_t width() const noexcept { return n_; }
  /// Counter value whose ctz is emitted next; starts at 1.
  std::uint64_t next_counter() const noexcept { return counter_; }
  /// Last counter value, 2^n - 1.
  std::uint64_t last_counter() const noexcept { return last_; }
  bool done() const noexcept { return counter_ > last_; }

  /// Returns the next flip index. Precondition: !done().
  unsigned next();

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = unsigned;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(FlipStream* stream) : stream_(stream) {}

    unsigned operator*() const { return ctz(stream_->counter_); }
    iterator& operator++() {
      ++stream_->counter_;
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) {
      return it.stream_->done();
    }

   private:
    FlipStream* stream_ = nullptr;
  };

  iterator begin() { return iterator(this); }
  std::default_sentinel_t end() const { return {}; }

 private:
  std::size_t n_;
  std::uint64_t counter_ = 1;
  std::uint64_t last_;
};

/// Flip-index stream for n bits, 1 <= n <= 40.
FlipStream flip_sequence(std::size_t n);

/// Full reflected Gray ordering pi(0), ..., pi(2^k - 1), built by the literal
/// prefix recursion on binary strings (no XOR-shift closed form). Meant as a
/// test oracle; memory is O(2^k). Requires 1 <= k_bits <= 20.
std::vector<std::uint64_t> gray_permutation(std::size_t k_bits);

}  // namespace qubogray
