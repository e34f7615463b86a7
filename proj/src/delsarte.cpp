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

#include "tdesign/delsarte.hpp"

#include <bit>
#include <stdexcept>

#include "tdesign/errors.hpp"
#include "tdesign/exactmath.hpp"

namespace tdesign {

namespace {

std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// sum over each weight h of the squared spectrum values.
std::vector<ExactInt> squared_sums_by_weight(const BooleanFunction& f, int n_cap) {
  WalshSpectrum s = walsh_full(f, n_cap);
  std::vector<ExactInt> out(f.n() + 1, ExactInt(0));
  for (std::uint64_t w = 0; w < s.values.size(); ++w)
    out[std::popcount(w)] += ExactInt(s.values[w]) * s.values[w];
  return out;
}

}  // namespace

DistanceDistribution inner_distribution(const BooleanFunction& C, std::uint64_t budget) {
  if (C.support().empty()) throw std::invalid_argument("inner_distribution: empty set");
  std::uint64_t m = C.support().size();
  if (ExactInt(m) * m > budget)
    throw budget_error("inner_distribution: |C|^2 exceeds the budget");
  DistanceDistribution d;
  d.n = C.n();
  std::vector<ExactInt> counts(C.n() + 1, ExactInt(0));
  for (std::uint64_t u : C.support())
    for (std::uint64_t v : C.support()) ++counts[std::popcount(u ^ v)];
  d.B.reserve(counts.size());
  for (const ExactInt& c : counts) d.B.emplace_back(c, ExactInt(m));
  return d;
}

OuterDistribution outer_distribution_hamming(const BooleanFunction& C, int n_cap) {
  if (C.support().empty()) throw std::invalid_argument("outer_distribution_hamming: empty set");
  int n = C.n();
  DistanceDistribution inner = inner_distribution(C);
  ExactInt m = C.support().size();

  OuterDistribution out;
  out.n = n;
  out.B.reserve(n + 1);
  KrawtchoukTable tab(n);
  for (int i = 0; i <= n; ++i) {
    ExactRat acc = 0;
    for (int j = 0; j <= n; ++j) acc += ExactRat(tab.at(i, j)) * inner.B[j];
    out.B.push_back(acc / ExactRat(m));
  }

  // Second route: per-weight squared spectrum sums.
  std::vector<ExactInt> sq = squared_sums_by_weight(C, n_cap);
  for (int i = 0; i <= n; ++i)
    if (out.B[i] != ExactRat(sq[i], m * m))
      throw consistency_error("outer_distribution_hamming: the two routes disagree at weight " +
                              std::to_string(i));
  return out;
}

int oa_strength(const BooleanFunction& C, std::uint64_t budget) {
  if (C.support().empty()) throw std::invalid_argument("oa_strength: empty set");
  int n = C.n();
  ExactInt work = 0;
  for (int h = 1; h <= n; ++h) {
    work += binomial(n, h) * C.support().size();
    if (work > budget)
      throw budget_error("oa_strength: weight scan up to " + std::to_string(h) +
                         " exceeds the budget");
    std::uint64_t count = binomial(n, h).convert_to<std::uint64_t>();
    std::uint64_t w = (std::uint64_t{1} << h) - 1;
    for (std::uint64_t c = 0; c < count; ++c, w = next_subset(w)) {
      std::int64_t acc = 0;
      for (std::uint64_t x : C.support()) acc += std::popcount(x & w) & 1 ? -1 : 1;
      if (acc != 0) return h - 1;
    }
  }
  return n;
}

bool johnson_design_check(const IncidenceStructure& D, int t, int n_cap) {
  int n = D.n(), k = D.k();
  if (t < 1 || t > k) throw std::invalid_argument("johnson_design_check: need 1 <= t <= k");
  if (2 * k > n)
    throw std::invalid_argument("johnson_design_check: needs k <= n/2 (complement first)");

  std::vector<ExactInt> sq = squared_sums_by_weight(D.characteristic_function(), n_cap);
  KrawtchoukTable tab(n);
  int jmax = std::min(k, n - k);
  for (int i = 1; i <= t; ++i) {
    ExactRat mu = ExactRat(ExactInt(n - 2 * i + 1) * binomial(n, i), ExactInt(n - i + 1));
    // S(h) = sum_j (mu_i / v_j) Q_j(i) P_2j(h); v_j = 0 beyond min(k, n-k).
    ExactRat total = 0;
    for (int h = 0; h <= n; ++h) {
      if (sq[h] == 0) continue;
      ExactRat s = 0;
      for (int j = 0; j <= jmax; ++j) {
        ExactRat v(binomial(k, j) * binomial(n - k, j));
        s += mu / v * ExactRat(eberlein(n, k, j, i)) * ExactRat(tab.at(2 * j, h));
      }
      total += ExactRat(sq[h]) * s;
    }
    if (total != 0) return false;
  }
  return true;
}

bool relative_design_check(const IncidenceStructure& D, int t, int n_cap) {
  int n = D.n(), k = D.k();
  if (t < 1 || t > k) throw std::invalid_argument("relative_design_check: need 1 <= t <= k");

  std::vector<ExactInt> sq = squared_sums_by_weight(D.characteristic_function(), n_cap);
  ExactInt b = D.block_count();
  for (int i = 1; i <= t; ++i) {
    ExactInt rhs = b * krawtchouk(n, i, k);
    if (binomial(n, i) * sq[i] != rhs * rhs) return false;
  }
  return true;
}

}  // namespace tdesign
