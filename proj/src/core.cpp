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

#include "qubogray/core.hpp"

#include <cmath>
#include <utility>

namespace qubogray {

BitVector BitVector::from_integer(std::uint64_t code, std::size_t n) {
  if (n > 64) throw std::invalid_argument("BitVector: width exceeds 64 bits");
  if (n < 64 && (code >> n) != 0) {
    throw std::invalid_argument("BitVector: code does not fit in " +
                                std::to_string(n) + " bits");
  }
  BitVector x(n);
  x.assign_integer(code);
  return x;
}

BitVector BitVector::from_string(const std::string& text) {
  BitVector x(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      x.bits_[i] = 1;
    } else if (text[i] != '0') {
      throw std::invalid_argument("BitVector: expected only '0'/'1' characters");
    }
  }
  return x;
}

void BitVector::assign_integer(std::uint64_t code) {
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    bits_[i] = static_cast<std::uint8_t>((code >> i) & 1u);
  }
}

std::uint64_t BitVector::to_integer() const {
  if (bits_.size() > 64) throw std::overflow_error("BitVector: wider than 64 bits");
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    code |= static_cast<std::uint64_t>(bits_[i]) << i;
  }
  return code;
}

std::string BitVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

QuboInstance::QuboInstance(std::size_t n, std::vector<double> dense,
                           const InstanceOptions& options)
    : n_(n), coeffs_(std::move(dense)) {
  if (options.max_dimension > kAbsoluteMaxDimension) {
    throw std::invalid_argument("dimension cap may not exceed " +
                                std::to_string(kAbsoluteMaxDimension));
  }
  if (n_ == 0) throw std::invalid_argument("QUBO dimension must be at least 1");
  if (n_ > options.max_dimension) {
    throw DimensionLimitError(n_, options.max_dimension,
                              "QUBO dimension " + std::to_string(n_) +
                                  " exceeds the cap of " +
                                  std::to_string(options.max_dimension));
  }
  if (coeffs_.size() != n_ * n_) {
    throw std::invalid_argument("coefficient matrix must have n*n entries");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) throw std::invalid_argument("coefficients must be finite");
  }
  for (std::size_t i = 1; i < n_; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      double& lower = coeffs_[i * n_ + j];
      if (lower == 0.0) continue;
      if (options.triangle == TriangleMode::kStrict) {
        throw std::invalid_argument("nonzero entry below the diagonal at (" +
                                    std::to_string(i) + ", " + std::to_string(j) +
                                    ") in strict mode");
      }
      double& upper = coeffs_[j * n_ + i];
      upper += lower;
      if (!std::isfinite(upper)) {
        throw std::invalid_argument("folded coefficient overflows");
      }
      lower = 0.0;
    }
  }
}

QuboInstance QuboInstance::zeros(std::size_t n, const InstanceOptions& options) {
  return QuboInstance(n, std::vector<double>(n * n, 0.0), options);
}

SplitForm::SplitForm(std::size_t n, std::vector<double> qua, std::vector<double> lin)
    : n_(n), qua_(std::move(qua)), lin_(std::move(lin)) {
  if (qua_.size() != n_ * n_ || lin_.size() != n_) {
    throw std::invalid_argument("SplitForm: inconsistent shapes");
  }
  for (std::size_t i = 0; i < n_; ++i) {
    if (qua_[i * n_ + i] != 0.0) {
      throw std::invalid_argument("SplitForm: quadratic part must have zero diagonal");
    }
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (qua_[i * n_ + j] != qua_[j * n_ + i]) {
        throw std::invalid_argument("SplitForm: quadratic part must be symmetric");
      }
    }
  }
}

QuboInstance SplitForm::reconstruct(std::size_t max_dimension) const {
  std::vector<double> dense(n_ * n_, 0.0);
  for (std::size_t i = 0; i < n_; ++i) {
    dense[i * n_ + i] = lin_[i];
    for (std::size_t j = i + 1; j < n_; ++j) dense[i * n_ + j] = qua_[i * n_ + j];
  }
  InstanceOptions options;
  options.triangle = TriangleMode::kStrict;
  options.max_dimension = max_dimension;
  return QuboInstance(n_, std::move(dense), options);
}

double evaluate(const QuboInstance& instance, const BitVector& x) {
  const std::size_t n = instance.size();
  if (x.size() != n) {
    throw std::invalid_argument("evaluate: vector length " + std::to_string(x.size()) +
                                " does not match dimension " + std::to_string(n));
  }
  double value = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    const auto row = instance.row(i);
    for (std::size_t j = i; j < n; ++j) {
      if (x[j]) value += row[j];
    }
  }
  return value;
}

SplitForm split(const QuboInstance& instance) {
  const std::size_t n = instance.size();
  std::vector<double> qua(n * n, 0.0);
  std::vector<double> lin(n);
  for (std::size_t i = 0; i < n; ++i) {
    lin[i] = instance.coeff(i, i);
    for (std::size_t j = i + 1; j < n; ++j) {
      qua[i * n + j] = instance.coeff(i, j);
      qua[j * n + i] = instance.coeff(i, j);
    }
  }
  return SplitForm(n, std::move(qua), std::move(lin));
}

double delta(const SplitForm& form, const BitVector& x_flipped, std::size_t l) {
  const std::size_t n = form.size();
  if (x_flipped.size() != n) {
    throw std::invalid_argument("delta: vector length does not match dimension");
  }
  if (l >= n) {
    throw std::invalid_argument("delta: bit index " + std::to_string(l) +
                                " out of range [0, " + std::to_string(n) + ")");
  }
  const auto row = form.qua_row(l);
  double field = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (x_flipped[j]) field += row[j];
  }
  const double sign = x_flipped[l] ? 1.0 : -1.0;
  return sign * (field + form.lin()[l]);
}

}  // namespace qubogray
