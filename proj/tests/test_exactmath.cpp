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

#include <bit>
#include <cstdint>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "tdesign/exactmath.hpp"

using namespace tdesign;

TEST_SUITE_BEGIN("exactmath");

TEST_CASE("binomial basics") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(12, 6) == 924);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(150, 75) == ExactInt("92826069736708789698985814872605121940117520"));
  CHECK_THROWS_AS(binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("binomial Pascal recurrence") {
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("krawtchouk frozen values") {
  // n = 7
  CHECK(krawtchouk(7, 3, 0) == 35);
  CHECK(krawtchouk(7, 3, 1) == 5);
  CHECK(krawtchouk(7, 3, 2) == -5);
  // n = 12: the k = 6 row at x = 0..6
  const std::int64_t row12[] = {924, 0, -84, 0, 28, 0, -20};
  for (int x = 0; x <= 6; ++x) CHECK(krawtchouk(12, 6, x) == row12[x]);
  // n = 8: the k = 4 row at x = 0..4
  const std::int64_t row8[] = {70, 0, -10, 0, 6};
  for (int x = 0; x <= 4; ++x) CHECK(krawtchouk(8, 4, x) == row8[x]);
  CHECK_THROWS_AS(krawtchouk(7, 8, 0), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk(7, 0, 8), std::invalid_argument);
  CHECK_THROWS_AS(krawtchouk(7, -1, 0), std::invalid_argument);
}

TEST_CASE("krawtchouk matches generating function oracle") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      for (int x = 0; x <= n; ++x)
        CHECK(krawtchouk(n, k, x) == oracles::krawtchouk_gf(n, k, x));
}

TEST_CASE("krawtchouk matches both alternative expressions") {
  for (int n = 0; n <= 12; ++n)
    for (int k = 0; k <= n; ++k)
      for (int x = 0; x <= n; ++x) {
        CHECK(krawtchouk(n, k, x) == oracles::krawtchouk_alt_pow2(n, k, x));
        CHECK(krawtchouk(n, k, x) == oracles::krawtchouk_alt_shift(n, k, x));
      }
}

TEST_CASE("krawtchouk orthogonality") {
  // sum_i C(n,i) P_r(i) P_s(i) = 2^n C(n,r) [r == s]
  for (int n = 0; n <= 16; ++n) {
    KrawtchoukTable tab(n);
    for (int r = 0; r <= n; ++r)
      for (int s = 0; s <= n; ++s) {
        ExactInt sum = 0;
        for (int i = 0; i <= n; ++i) sum += binomial(n, i) * tab.at(r, i) * tab.at(s, i);
        ExactInt expect = r == s ? (ExactInt(1) << n) * binomial(n, r) : ExactInt(0);
        CHECK(sum == expect);
      }
  }
}

TEST_CASE("krawtchouk duality") {
  // sum_i P_r(i) P_i(s) = 2^n [r == s]
  for (int n = 0; n <= 16; ++n) {
    KrawtchoukTable tab(n);
    for (int r = 0; r <= n; ++r)
      for (int s = 0; s <= n; ++s) {
        ExactInt sum = 0;
        for (int i = 0; i <= n; ++i) sum += tab.at(r, i) * tab.at(i, s);
        CHECK(sum == (r == s ? ExactInt(1) << n : ExactInt(0)));
      }
  }
}

TEST_CASE("krawtchouk symmetry and reflection") {
  for (int n = 0; n <= 16; ++n) {
    KrawtchoukTable tab(n);
    for (int s = 0; s <= n; ++s)
      for (int i = 0; i <= n; ++i) {
        CHECK(binomial(n, i) * tab.at(s, i) == binomial(n, s) * tab.at(i, s));
        ExactInt refl = tab.at(s, n - i);
        CHECK(tab.at(s, i) == (s & 1 ? -refl : refl));
        ExactInt swap = tab.at(n - s, i);
        CHECK(tab.at(s, i) == (i & 1 ? -swap : swap));
      }
  }
}

TEST_CASE("krawtchouk row sums") {
  // sum_k C(n-k, n-j) P_k(x) = 2^j C(n-x, j)
  for (int n = 0; n <= 12; ++n) {
    KrawtchoukTable tab(n);
    for (int j = 0; j <= n; ++j)
      for (int x = 0; x <= n; ++x) {
        ExactInt sum = 0;
        for (int k = 0; k <= n; ++k) sum += binomial(n - k, n - j) * tab.at(k, x);
        CHECK(sum == (ExactInt(1) << j) * binomial(n - x, j));
      }
  }
}

TEST_CASE("krawtchouk special values") {
  for (int n = 1; n <= 16; ++n) {
    for (int k = 0; k <= n; ++k) {
      CHECK(krawtchouk(n, k, 0) == binomial(n, k));
      CHECK(ExactInt(n) * krawtchouk(n, k, 1) == ExactInt(n - 2 * k) * binomial(n, k));
    }
    CHECK(krawtchouk(n, n, n) == (n & 1 ? -1 : 1));
    if (n % 4 == 0) {
      ExactInt v = binomial(n / 2, n / 4);
      CHECK(krawtchouk(n, n / 2, n / 2) == ((n / 4) & 1 ? -v : v));
    }
  }
}

TEST_CASE("krawtchouk sign-character sum") {
  // sum over weight-k vectors v of (-1)^(u.v) equals P_k(wt(u))
  std::mt19937_64 rng(0xC0FFEE);
  for (int n = 1; n <= 10; ++n) {
    std::uniform_int_distribution<std::uint32_t> pick(0, (1u << n) - 1);
    for (int rep = 0; rep < 20; ++rep) {
      std::uint32_t u = pick(rng);
      std::vector<ExactInt> sums(n + 1, ExactInt(0));
      for (std::uint32_t v = 0; v < (1u << n); ++v)
        sums[std::popcount(v)] += std::popcount(u & v) & 1 ? -1 : 1;
      for (int k = 0; k <= n; ++k) CHECK(sums[k] == krawtchouk(n, k, std::popcount(u)));
    }
  }
}

TEST_CASE("krawtchouk table agrees with per-entry evaluation") {
  KrawtchoukTable tab(10);
  for (int k = 0; k <= 10; ++k)
    for (int x = 0; x <= 10; ++x) CHECK(tab.at(k, x) == krawtchouk(10, k, x));
  CHECK_THROWS_AS(tab.at(11, 0), std::invalid_argument);
}

TEST_CASE("eberlein frozen values and identities") {
  CHECK(eberlein(7, 3, 1, 0) == 12);
  CHECK(eberlein(7, 3, 1, 3) == -3);
  for (int n = 2; n <= 14; ++n)
    for (int k = 1; 2 * k <= n; ++k)
      for (int x = 0; x <= k; ++x) {
        CHECK(eberlein(n, k, 0, x) == 1);
        CHECK(eberlein(n, k, 1, x) == ExactInt(k - x) * (n - k - x) - x);
      }
  // Q_l(0) is the valency C(k,l) C(n-k,l)
  for (int l = 0; l <= 3; ++l) CHECK(eberlein(7, 3, l, 0) == binomial(3, l) * binomial(4, l));
  CHECK_THROWS_AS(eberlein(7, 3, 4, 0), std::invalid_argument);
  CHECK_THROWS_AS(eberlein(7, 4, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(eberlein(7, 3, 1, 4), std::invalid_argument);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(5));
  CHECK(is_prime(73));
  CHECK_FALSE(is_prime(75));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(is_prime(0), std::invalid_argument);
  // sieve cross-check
  std::vector<bool> comp(2000, false);
  for (int p = 2; p < 2000; ++p)
    if (!comp[p])
      for (int q = 2 * p; q < 2000; q += p) comp[q] = true;
  for (int m = 2; m < 2000; ++m) CHECK(is_prime(m) == !comp[m]);
}

TEST_CASE("gcd and lcm_range") {
  CHECK(gcd(0, 0) == 0);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(ExactInt(9), lcm_range(7)) == 3);  // lcm(1..8) = 840
  CHECK(lcm_range(1) == 2);
  CHECK(lcm_range(3) == 12);
  CHECK(lcm_range(7) == 840);
  CHECK_THROWS_AS(lcm_range(0), std::invalid_argument);
}

TEST_SUITE_END();
