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

#include "tdesign/exactmath.hpp"

#include <boost/multiprecision/integer.hpp>
#include <stdexcept>

namespace tdesign {

ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt r = 1;
  // r stays integral at every step: after multiplying by (n-k+i) it is
  // i! * C(n-k+i, i) / (i-1)! ... i divides exactly.
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ExactInt krawtchouk(int n, int k, int x) {
  if (n < 0) throw std::invalid_argument("krawtchouk: n must be nonnegative");
  if (k < 0 || k > n) throw std::invalid_argument("krawtchouk: k out of range");
  if (x < 0 || x > n) throw std::invalid_argument("krawtchouk: x out of range");
  ExactInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    ExactInt term = binomial(x, j) * binomial(n - x, k - j);
    if (j & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

KrawtchoukTable::KrawtchoukTable(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("KrawtchoukTable: n must be nonnegative");
  values_.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    values_[k].reserve(n + 1);
    for (int x = 0; x <= n; ++x) values_[k].push_back(krawtchouk(n, k, x));
  }
}

const ExactInt& KrawtchoukTable::at(int k, int x) const {
  if (k < 0 || k > n_ || x < 0 || x > n_)
    throw std::invalid_argument("KrawtchoukTable::at: index out of range");
  return values_[k][x];
}

ExactInt eberlein(int n, int k, int l, int x) {
  if (n < 1) throw std::invalid_argument("eberlein: n must be positive");
  if (k < 1 || 2 * k > n) throw std::invalid_argument("eberlein: need 1 <= k <= n/2");
  if (l < 0 || l > k) throw std::invalid_argument("eberlein: l out of range");
  if (x < 0 || x > k) throw std::invalid_argument("eberlein: x out of range");
  ExactInt sum = 0;
  for (int j = 0; j <= l; ++j) {
    ExactInt term = binomial(x, j) * binomial(k - x, l - j) * binomial(n - k - x, l - j);
    if (j & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

bool is_prime(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("is_prime: m must be >= 1");
  if (m == 1) return false;
  if (m % 2 == 0) return m == 2;
  for (std::int64_t d = 3; d * d <= m; d += 2)
    if (m % d == 0) return false;
  return true;
}

ExactInt gcd(const ExactInt& a, const ExactInt& b) {
  return boost::multiprecision::gcd(a, b);
}

ExactInt lcm_range(int t) {
  if (t < 1) throw std::invalid_argument("lcm_range: t must be >= 1");
  ExactInt l = 1;
  for (int i = 2; i <= t + 1; ++i) l = boost::multiprecision::lcm(l, ExactInt(i));
  return l;
}

}  // namespace tdesign
