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

// QUBO triplet text format:
//
//   # comment (anywhere; '#' runs to end of line)
//   n <N>
//   <i> <j> <value>
//   ...
//
// Indices are 0-based. Each (i, j) pair may appear at most once. Lines with
// i > j are folded onto (j, i) unless strict mode is requested. Values are
// written in the shortest decimal form that round-trips a 64-bit double.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "qubogray/core.hpp"

namespace qubogray {

enum class ParseErrorKind {
  kMalformedHeader,
  kMalformedLine,
  kIndexOutOfRange,
  kNonFiniteValue,
  kDuplicateEntry,
  kLowerTriangleEntry,  // strict mode only
};

std::string_view to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail);

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number of the offending line.
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

/// Throws ParseError for format problems and DimensionLimitError when the
/// header dimension exceeds `options.max_dimension`.
QuboInstance parse_instance(std::string_view text, const InstanceOptions& options = {});

std::string serialize_instance(const QuboInstance& instance);

/// File helpers; throw std::runtime_error when the file cannot be opened.
QuboInstance read_instance_file(const std::filesystem::path& path,
                                const InstanceOptions& options = {});
void write_instance_file(const std::filesystem::path& path, const QuboInstance& instance);

/// Seeded random instance. Upper-triangular entries are visited row-major
/// (i <= j); each draws u from std::mt19937_64 seeded with `seed`, mapped to
/// (u >> 11) * 2^-53 in [0, 1), and takes the value 2 * that - 1. When
/// density < 1 a second draw, mapped the same way, keeps the entry iff it
/// is < density. std::mt19937_64 is fully specified by the C++ standard, so
/// instances are identical on every conforming platform.
QuboInstance random_instance(std::size_t n, std::uint64_t seed, double density = 1.0);

/// SplitMix64 finalizer applied to (n << 32) | rep. Used by the benchmark so
/// every mode sees the same instance for a given (n, rep).
std::uint64_t bench_seed(std::size_t n, std::uint64_t rep);

}  // namespace qubogray
