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
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qubogray {

/// Default upper bound on the problem dimension.
inline constexpr std::size_t kDefaultMaxDimension = 40;

/// Hard ceiling for any override: the enumeration counter is a 64-bit
/// unsigned integer and must hold 2^n - 1.
inline constexpr std::size_t kAbsoluteMaxDimension = 63;

/// Thrown when a dimension exceeds a configured cap (instance or solver).
class DimensionLimitError : public std::length_error {
 public:
  DimensionLimitError(std::size_t n, std::size_t limit, const std::string& what)
      : std::length_error(what), n_(n), limit_(limit) {}

  std::size_t n() const noexcept { return n_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t n_;
  std::size_t limit_;
};

/// How entries below the diagonal are treated on construction.
enum class TriangleMode {
  kFold,    // Q[i][j] += Q[j][i] for i < j, then the lower part is cleared.
  kStrict,  // any nonzero entry below the diagonal is rejected.
};

struct InstanceOptions {
  TriangleMode triangle = TriangleMode::kFold;
  std::size_t max_dimension = kDefaultMaxDimension;
};

/// Binary assignment of length n. Index 0 is the least-significant bit of
/// the integer encoding k = sum_i bits[i] * 2^i.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t n) : bits_(n, 0) {}

  static BitVector from_integer(std::uint64_t code, std::size_t n);
  /// Parses a string of '0'/'1' characters, index 0 first.
  static BitVector from_string(const std::string& text);

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }

  void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }
  void flip(std::size_t i) { bits_.at(i) ^= 1; }

  /// Overwrites the bits in place with the encoding of `code`.
  void assign_integer(std::uint64_t code);
  std::uint64_t to_integer() const;

  /// Bit string with index 0 FIRST, e.g. x = (1, 0, 0) -> "100".
  std::string to_string() const;

  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// QUBO problem f(x) = sum_{i <= j} Q[i][j] x_i x_j with an upper-triangular,
/// dense, row-major coefficient matrix. Immutable after construction.
class QuboInstance {
 public:
  /// Builds an instance from a dense row-major n*n matrix. Lower-triangular
  /// entries are folded or rejected according to `options.triangle`.
  /// Throws std::invalid_argument on bad shape, non-finite values, or (strict
  /// mode) a nonzero lower entry; DimensionLimitError when n exceeds the cap.
  QuboInstance(std::size_t n, std::vector<double> dense,
               const InstanceOptions& options = {});

  /// All-zero instance of dimension n.
  static QuboInstance zeros(std::size_t n, const InstanceOptions& options = {});

  std::size_t size() const noexcept { return n_; }
  double coeff(std::size_t i, std::size_t j) const { return coeffs_[i * n_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(coeffs_).subspan(i * n_, n_);
  }
  std::span<const double> coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const QuboInstance&, const QuboInstance&) = default;

 private:
  std::size_t n_;
  std::vector<double> coeffs_;
};

/// Preprocessed instance: `qua` is symmetric with zero diagonal and holds the
/// off-diagonal couplings in both triangles; `lin` holds the diagonal. One row
/// of `qua` plus one entry of `lin` are enough to score a single bit flip.
class SplitForm {
 public:
  SplitForm(std::size_t n, std::vector<double> qua, std::vector<double> lin);

  std::size_t size() const noexcept { return n_; }
  double qua(std::size_t i, std::size_t j) const { return qua_[i * n_ + j]; }
  std::span<const double> qua_row(std::size_t i) const {
    return std::span<const double>(qua_).subspan(i * n_, n_);
  }
  std::span<const double> lin() const noexcept { return lin_; }

  /// Rebuilds the upper-triangular instance this form was split from.
  QuboInstance reconstruct(std::size_t max_dimension = kAbsoluteMaxDimension) const;

 private:
  std::size_t n_;
  std::vector<double> qua_;
  std::vector<double> lin_;
};

/// Direct objective value. Summation is row-major over i <= j, so repeated
/// calls on equal inputs are bit-identical.
double evaluate(const QuboInstance& instance, const BitVector& x);

SplitForm split(const QuboInstance& instance);

/// Change in objective caused by flipping bit `l`. `x_flipped` must ALREADY
/// contain the flipped bit; the sign is (2 * x[l] - 1). Reads only row `l` of
/// the split form and lin[l].
double delta(const SplitForm& form, const BitVector& x_flipped, std::size_t l);

}  // namespace qubogray
