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

#include "qubogray/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace qubogray {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos == line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    tokens.push_back(line.substr(start, pos - start));
  }
  return tokens;
}

bool parse_index(std::string_view token, std::uint64_t& out) {
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

}  // namespace

std::string_view to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader:
      return "malformed header";
    case ParseErrorKind::kMalformedLine:
      return "malformed line";
    case ParseErrorKind::kIndexOutOfRange:
      return "index out of range";
    case ParseErrorKind::kNonFiniteValue:
      return "non-finite value";
    case ParseErrorKind::kDuplicateEntry:
      return "duplicate entry";
    case ParseErrorKind::kLowerTriangleEntry:
      return "entry below the diagonal";
  }
  return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, std::size_t line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " +
                         std::string(to_string(kind)) + ": " + detail),
      kind_(kind),
      line_(line) {}

QuboInstance parse_instance(std::string_view text, const InstanceOptions& options) {
  std::size_t n = 0;
  bool have_header = false;
  std::vector<double> dense;
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!have_header) {
      std::uint64_t declared = 0;
      if (tokens.size() != 2 || tokens[0] != "n" || !parse_index(tokens[1], declared) ||
          declared == 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected 'n <N>' with N >= 1");
      }
      if (declared > options.max_dimension) {
        throw DimensionLimitError(declared, options.max_dimension,
                                  "line " + std::to_string(line_no) + ": dimension " +
                                      std::to_string(declared) + " exceeds the cap of " +
                                      std::to_string(options.max_dimension));
      }
      n = static_cast<std::size_t>(declared);
      dense.assign(n * n, 0.0);
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "expected '<i> <j> <value>'");
    }
    std::uint64_t i = 0, j = 0;
    if (!parse_index(tokens[0], i) || !parse_index(tokens[1], j)) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "indices must be non-negative integers");
    }
    double value = 0.0;
    const auto* vend = tokens[2].data() + tokens[2].size();
    const auto [vptr, vec] = std::from_chars(tokens[2].data(), vend, value);
    if (vec == std::errc::result_out_of_range) {
      throw ParseError(ParseErrorKind::kNonFiniteValue, line_no,
                       "value '" + std::string(tokens[2]) + "' overflows a double");
    }
    if (vec != std::errc() || vptr != vend) {
      throw ParseError(ParseErrorKind::kMalformedLine, line_no,
                       "cannot parse value '" + std::string(tokens[2]) + "'");
    }
    if (!std::isfinite(value)) {
      throw ParseError(ParseErrorKind::kNonFiniteValue, line_no,
                       "value '" + std::string(tokens[2]) + "' is not finite");
    }
    if (i >= n || j >= n) {
      throw ParseError(ParseErrorKind::kIndexOutOfRange, line_no,
                       "index pair (" + std::to_string(i) + ", " + std::to_string(j) +
                           ") outside [0, " + std::to_string(n) + ")");
    }
    if (i > j && options.triangle == TriangleMode::kStrict) {
      throw ParseError(ParseErrorKind::kLowerTriangleEntry, line_no,
                       "strict mode accepts only i <= j");
    }
    if (!seen.emplace(i, j).second) {
      throw ParseError(ParseErrorKind::kDuplicateEntry, line_no,
                       "(" + std::to_string(i) + ", " + std::to_string(j) +
                           ") given more than once");
    }
    dense[i * n + j] = value;
  }

  if (!have_header) {
    throw ParseError(ParseErrorKind::kMalformedHeader, line_no + 1, "missing 'n <N>' header");
  }
  return QuboInstance(n, std::move(dense), options);
}

std::string serialize_instance(const QuboInstance& instance) {
  const std::size_t n = instance.size();
  std::string out = "n " + std::to_string(n) + "\n";
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double c = instance.coeff(i, j);
      if (c == 0.0) continue;
      out += std::to_string(i);
      out += ' ';
      out += std::to_string(j);
      out += ' ';
      out += format_double(c);
      out += '\n';
    }
  }
  return out;
}

QuboInstance read_instance_file(const std::filesystem::path& path,
                                const InstanceOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str(), options);
}

void write_instance_file(const std::filesystem::path& path, const QuboInstance& instance) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << serialize_instance(instance);
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

QuboInstance random_instance(std::size_t n, std::uint64_t seed, double density) {
  if (n < 1 || n > kDefaultMaxDimension) {
    throw std::invalid_argument("random_instance: n must be in [1, " +
                                std::to_string(kDefaultMaxDimension) + "]");
  }
  if (!(density > 0.0 && density <= 1.0)) {
    throw std::invalid_argument("random_instance: density must be in (0, 1]");
  }
  std::mt19937_64 gen(seed);
  auto unit = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

  std::vector<double> dense(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const double value = 2.0 * unit() - 1.0;
      const bool keep = density >= 1.0 || unit() < density;
      if (keep) dense[i * n + j] = value;
    }
  }
  return QuboInstance(n, std::move(dense));
}

std::uint64_t bench_seed(std::size_t n, std::uint64_t rep) {
  std::uint64_t z = ((static_cast<std::uint64_t>(n) << 32) | rep) + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace qubogray
