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

#include "tdesign/codes.hpp"

#include <bit>
#include <stdexcept>

#include "tdesign/errors.hpp"

namespace tdesign {

ExactInt WeightDistribution::min_distance() const {
  for (const auto& [w, c] : counts)
    if (w != 0 && c != 0) return w;
  throw std::invalid_argument("min_distance: no nonzero codeword");
}

WeightDistribution code_weight_distribution(const BooleanFunction& f, int n_cap) {
  if (f.n() < 1) throw std::invalid_argument("code_weight_distribution: requires n >= 1");
  if (f.value(std::uint64_t{0}) != 0)
    throw std::invalid_argument("code_weight_distribution: requires f(0) = 0");
  if (f.support().empty())
    throw std::invalid_argument("code_weight_distribution: requires a nonempty support");
  int n = f.n();
  WalshSpectrum s = walsh_full(f, n_cap);

  WeightDistribution d;
  d.length = (ExactInt(1) << n) - 1;
  d.dimension = n + 1;
  ExactInt half = ExactInt(1) << (n - 1);

  ++d.counts[0];                                 // u = 0, w = 0
  d.counts[half] += (ExactInt(1) << n) - 1;      // u = 0, w != 0
  ++d.counts[s.values[0]];                       // u = 1, w = 0: weight of f
  for (std::size_t w = 1; w < s.values.size(); ++w) ++d.counts[half + s.values[w]];

  // A second zero-weight word would mean f is a linear form and the
  // 2^(n+1) index pairs do not name distinct codewords.
  if (d.counts[0] != 1)
    throw consistency_error("code_weight_distribution: zero weight reached more than once");
  return d;
}

std::uint64_t code_enumerate(const BooleanFunction& f, int u, const PointSet& w) {
  if (u != 0 && u != 1) throw std::invalid_argument("code_enumerate: u must be 0 or 1");
  if (w.n() != f.n()) throw std::invalid_argument("code_enumerate: mismatched n");
  if (f.n() < 1 || f.n() > 30)
    throw budget_error("code_enumerate: letter-by-letter route only runs for n <= 30");
  std::uint64_t weight = 0;
  std::uint64_t size = std::uint64_t{1} << f.n();
  for (std::uint64_t x = 1; x < size; ++x) {
    int bit = (u & f.value(x)) ^ (std::popcount(x & w.mask()) & 1);
    weight += bit;
  }
  return weight;
}

}  // namespace tdesign
