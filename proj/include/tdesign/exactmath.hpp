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

#pragma once

#include <cstdint>
#include <vector>

#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief Binomial coefficient C(n, k), exact.
 *
 * n must be nonnegative (throws std::invalid_argument otherwise);
 * k outside [0, n] yields 0.
 */
ExactInt binomial(std::int64_t n, std::int64_t k);

/*! \brief Binary Krawtchouk polynomial value P_k(x) for parameter n.
 *
 * P_k(x) = sum_j (-1)^j C(x, j) C(n-x, k-j). Requires 0 <= k <= n and
 * 0 <= x <= n.
 */
ExactInt krawtchouk(int n, int k, int x);

/*! \brief All values P_k(x) for one n, 0 <= k, x <= n. */
class KrawtchoukTable {
 public:
  explicit KrawtchoukTable(int n);
  int n() const noexcept { return n_; }
  const ExactInt& at(int k, int x) const;

 private:
  int n_;
  std::vector<std::vector<ExactInt>> values_;
};

/*! \brief Eberlein polynomial value Q_l(x) for the Johnson scheme J(n, k).
 *
 * Q_l(x) = sum_j (-1)^j C(x, j) C(k-x, l-j) C(n-k-x, l-j).
 * Requires 1 <= k <= n/2, 0 <= l <= k, 0 <= x <= k.
 */
ExactInt eberlein(int n, int k, int l, int x);

/*! \brief Deterministic primality test for m >= 1 (trial division). */
bool is_prime(std::int64_t m);

/*! \brief Greatest common divisor, gcd(0, 0) = 0. */
ExactInt gcd(const ExactInt& a, const ExactInt& b);

/*! \brief lcm(1, 2, ..., t+1). Requires t >= 1. */
ExactInt lcm_range(int t);

}  // namespace tdesign
