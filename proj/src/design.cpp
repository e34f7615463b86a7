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

#include "tdesign/design.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tdesign/errors.hpp"
#include "tdesign/exactmath.hpp"

namespace tdesign {

namespace {

std::vector<std::uint64_t> masks_of(int n, const std::vector<PointSet>& blocks) {
  std::vector<std::uint64_t> out;
  out.reserve(blocks.size());
  for (const PointSet& b : blocks) {
    if (b.n() != n) throw std::invalid_argument("IncidenceStructure: block with mismatched n");
    out.push_back(b.mask());
  }
  return out;
}

// Next k-subset mask in ascending order (Gosper).
std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

}  // namespace

IncidenceStructure::IncidenceStructure(int n, int k, std::vector<PointSet> blocks)
    : IncidenceStructure(n, k, masks_of(n, blocks)) {}

IncidenceStructure::IncidenceStructure(int n, int k, std::vector<std::uint64_t> block_masks)
    : n_(n), k_(k), blocks_(std::move(block_masks)) {
  if (n < 1 || n > 64) throw std::invalid_argument("IncidenceStructure: n must be in [1, 64]");
  if (k < 1 || k > n) throw std::invalid_argument("IncidenceStructure: k must be in [1, n]");
  if (blocks_.empty()) throw std::invalid_argument("IncidenceStructure: needs at least one block");
  std::uint64_t lb = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t b : blocks_) {
    if (b & ~lb) throw std::invalid_argument("IncidenceStructure: block exceeds n bits");
    if (std::popcount(b) != k)
      throw std::invalid_argument("IncidenceStructure: block weight differs from k");
  }
  std::sort(blocks_.begin(), blocks_.end());
  if (std::adjacent_find(blocks_.begin(), blocks_.end()) != blocks_.end())
    throw std::invalid_argument("IncidenceStructure: repeated block");
}

bool IncidenceStructure::contains_block(std::uint64_t mask) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), mask);
}

BooleanFunction IncidenceStructure::characteristic_function() const {
  return BooleanFunction(n_, blocks_);
}

std::optional<std::vector<ExactInt>> lambda_table(int t, int n, int k, const ExactInt& lambda) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("lambda_table: need 1 <= t <= k <= n");
  if (lambda < 1) throw std::invalid_argument("lambda_table: lambda must be positive");
  std::vector<ExactInt> out;
  out.reserve(t + 1);
  for (int s = 0; s <= t; ++s) {
    ExactInt num = lambda * binomial(n - s, t - s);
    ExactInt den = binomial(k - s, t - s);
    if (num % den != 0) return std::nullopt;
    out.push_back(num / den);
  }
  return out;
}

std::optional<DesignParameters> verify_bruteforce(const IncidenceStructure& D, int t,
                                                  std::uint64_t budget) {
  int n = D.n(), k = D.k();
  if (t < 1 || t > k) throw std::invalid_argument("verify_bruteforce: need 1 <= t <= k");
  ExactInt work = binomial(n, t);
  if (work > budget)
    throw budget_error("verify_bruteforce: C(n,t) = " + work.str() + " exceeds budget " +
                       std::to_string(budget));

  ExactInt lambda = -1;
  std::uint64_t subsets = binomial(n, t).convert_to<std::uint64_t>();
  std::uint64_t s = (std::uint64_t{1} << t) - 1;
  for (std::uint64_t c = 0; c < subsets; ++c, s = next_subset(s)) {
    std::uint64_t count = 0;
    for (std::uint64_t b : D.blocks())
      count += (s & ~b) == 0;
    if (lambda < 0)
      lambda = count;
    else if (lambda != count)
      return std::nullopt;
  }
  if (lambda == 0) return std::nullopt;  // no t-subset covered: not a design

  auto table = lambda_table(t, n, k, lambda);
  if (!table)
    throw consistency_error("verify_bruteforce: counted lambda admits no integral lambda_s");
  DesignParameters p;
  p.t = t;
  p.n = n;
  p.k = k;
  p.lambda = lambda;
  p.lambda_s = std::move(*table);
  if (p.b() != D.block_count())
    throw consistency_error("verify_bruteforce: lambda_0 disagrees with the block count");
  return p;
}

IncidenceStructure complement_design(const IncidenceStructure& D) {
  if (D.k() == D.n())
    throw std::invalid_argument("complement_design: complements of full blocks are empty");
  std::uint64_t lb = D.n() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << D.n()) - 1;
  std::vector<std::uint64_t> comp;
  comp.reserve(D.block_count());
  for (std::uint64_t b : D.blocks()) comp.push_back(b ^ lb);
  return IncidenceStructure(D.n(), D.n() - D.k(), std::move(comp));
}

ExactInt complement_lambda(const DesignParameters& p, int s) {
  if (s < 0 || s > p.t) throw std::invalid_argument("complement_lambda: need 0 <= s <= t");
  ExactInt sum = 0;
  for (int i = 0; i <= s; ++i) {
    ExactInt term = binomial(s, i) * p.lambda_s[i];
    if (i & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

ExactInt intersection_number(const DesignParameters& p, int i, int j) {
  if (i < 0 || j < 0 || i + j > p.t)
    throw std::invalid_argument("intersection_number: need i, j >= 0 and i + j <= t");
  ExactInt num = p.lambda * binomial(p.n - i - j, p.k - i);
  ExactInt den = binomial(p.n - p.t, p.k - p.t);
  if (num % den != 0)
    throw consistency_error("intersection_number: non-integral value for valid parameters");
  return num / den;
}

ExactInt steiner_intersection(const DesignParameters& p, int j) {
  if (p.k != p.t + 1 || p.lambda != 1)
    throw std::invalid_argument("steiner_intersection: requires a t-(n, t+1, 1) design");
  if (j < 1 || j > p.t + 1)
    throw std::invalid_argument("steiner_intersection: need 1 <= j <= t+1");
  int m = p.n - p.t;
  ExactInt inner = 0;
  for (int l = 0; l < j; ++l) {
    ExactInt c = binomial(m, l + 1);
    inner += l & 1 ? -c : c;
  }
  if (j % 2 == 0) inner = -inner;  // (-1)^(j-1)
  if (inner % m != 0)
    throw consistency_error("steiner_intersection: non-integral value for valid parameters");
  return inner / m + (j & 1 ? -1 : 1);
}

bool is_trivial(const IncidenceStructure& D, int t) {
  if (t < 1 || t > D.k()) throw std::invalid_argument("is_trivial: need 1 <= t <= k");
  return ExactInt(D.block_count()) == binomial(D.n(), D.k());
}

}  // namespace tdesign
