// Copyright 2026 the tdesign authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tdesign/io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tdesign/errors.hpp"

namespace tdesign {

namespace {

struct DataLine {
  long number;
  std::vector<std::string> tokens;
};

std::vector<DataLine> data_lines(std::istream& in, long* total_lines) {
  std::vector<DataLine> out;
  std::string line;
  long number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    DataLine dl{number, {}};
    for (std::string tok; ls >> tok;) dl.tokens.push_back(tok);
    if (!dl.tokens.empty()) out.push_back(std::move(dl));
  }
  *total_lines = number;
  return out;
}

long long parse_int(const std::string& tok, long line) {
  std::size_t pos = 0;
  long long v;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
    throw parse_error("expected an integer, got '" + tok + "'", line);
  }
  if (pos != tok.size()) throw parse_error("expected an integer, got '" + tok + "'", line);
  return v;
}

struct Header {
  int n, k;
  long long b;
  std::size_t first_row;  // index into the data lines
};

Header parse_header(const std::vector<DataLine>& lines, long total_lines, bool check_k) {
  if (lines.empty()) throw parse_error("missing header line 'n k b'", total_lines + 1);
  const DataLine& h = lines.front();
  if (h.tokens.size() != 3) throw parse_error("header must be 'n k b'", h.number);
  long long n = parse_int(h.tokens[0], h.number);
  long long k = parse_int(h.tokens[1], h.number);
  long long b = parse_int(h.tokens[2], h.number);
  if (n < 1 || n > 64) throw parse_error("n must be in [1, 64]", h.number);
  if (check_k && (k < 1 || k > n)) throw parse_error("k must be in [1, n]", h.number);
  if (b < 1) throw parse_error("b must be positive", h.number);
  return {static_cast<int>(n), static_cast<int>(k), b, 1};
}

// Shared row loop: reads exactly h.b rows, applies row_fn(tokens, line).
template <typename RowFn>
void parse_rows(const std::vector<DataLine>& lines, long total_lines, const Header& h,
                RowFn row_fn) {
  std::size_t want = h.first_row + static_cast<std::size_t>(h.b);
  if (lines.size() < want)
    throw parse_error("expected " + std::to_string(h.b) + " block lines, found " +
                          std::to_string(lines.size() - h.first_row),
                      total_lines + 1);
  if (lines.size() > want)
    throw parse_error("unexpected data after the last block", lines[want].number);
  for (std::size_t i = h.first_row; i < want; ++i) row_fn(lines[i].tokens, lines[i].number);
}

std::uint64_t parse_index_row(const std::vector<std::string>& tokens, long line, int n) {
  std::uint64_t mask = 0;
  long long prev = 0;
  for (const std::string& tok : tokens) {
    long long idx = parse_int(tok, line);
    if (idx < 1 || idx > n) throw parse_error("point index out of range [1, n]", line);
    if (idx <= prev) throw parse_error("point indices must be strictly ascending", line);
    prev = idx;
    mask |= std::uint64_t{1} << (idx - 1);
  }
  return mask;
}

}  // namespace

IncidenceStructure parse_design(std::istream& in) {
  long total_lines = 0;
  auto lines = data_lines(in, &total_lines);
  Header h = parse_header(lines, total_lines, true);
  std::vector<std::uint64_t> blocks;
  std::set<std::uint64_t> seen;
  parse_rows(lines, total_lines, h, [&](const std::vector<std::string>& tokens, long line) {
    if (tokens.size() != static_cast<std::size_t>(h.k))
      throw parse_error("block must list exactly k = " + std::to_string(h.k) + " points", line);
    std::uint64_t mask = parse_index_row(tokens, line, h.n);
    if (!seen.insert(mask).second) throw parse_error("repeated block", line);
    blocks.push_back(mask);
  });
  return IncidenceStructure(h.n, h.k, std::move(blocks));
}

IncidenceStructure parse_design(const std::string& text) {
  std::istringstream in(text);
  return parse_design(in);
}

IncidenceStructure load_design(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open design file: " + path);
  return parse_design(in);
}

std::string render_design(const IncidenceStructure& D) {
  std::ostringstream out;
  out << D.n() << ' ' << D.k() << ' ' << D.block_count() << '\n';
  for (std::uint64_t b : D.blocks()) {
    bool first = true;
    for (const int idx : PointSet(D.n(), b).indices()) {
      if (!first) out << ' ';
      out << idx;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

BooleanFunction parse_vector_set(std::istream& in) {
  long total_lines = 0;
  auto lines = data_lines(in, &total_lines);
  Header h = parse_header(lines, total_lines, false);
  std::vector<std::uint64_t> rows;
  std::set<std::uint64_t> seen;
  parse_rows(lines, total_lines, h, [&](const std::vector<std::string>& tokens, long line) {
    std::uint64_t mask;
    if (tokens.size() == 1 && tokens[0] == "-")
      mask = 0;
    else
      mask = parse_index_row(tokens, line, h.n);
    if (!seen.insert(mask).second) throw parse_error("repeated vector", line);
    rows.push_back(mask);
  });
  return BooleanFunction(h.n, std::move(rows));
}

BooleanFunction parse_vector_set(const std::string& text) {
  std::istringstream in(text);
  return parse_vector_set(in);
}

BooleanFunction load_vector_set(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open vector set file: " + path);
  return parse_vector_set(in);
}

std::string render_vector_set(const BooleanFunction& f) {
  if (f.support().empty())
    throw std::invalid_argument("render_vector_set: empty sets have no representation");
  std::ostringstream out;
  out << f.n() << " 0 " << f.support().size() << '\n';
  for (std::uint64_t row : f.support()) {
    if (row == 0) {
      out << "-\n";
      continue;
    }
    bool first = true;
    for (const int idx : PointSet(f.n(), row).indices()) {
      if (!first) out << ' ';
      out << idx;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tdesign
