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

// Independent re-computations used only by the tests. Each one takes a
// different route than the library code it checks.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "tdesign/boolfn.hpp"
#include "tdesign/design.hpp"
#include "tdesign/exactmath.hpp"

namespace tdesign::oracles {

// Dense polynomial over ExactInt, lowest degree first.
struct Poly {
  std::vector<ExactInt> c;

  static Poly one() { return Poly{{ExactInt(1)}}; }

  Poly operator*(const Poly& o) const {
    Poly r;
    r.c.assign(c.size() + o.c.size() - 1, ExactInt(0));
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    return r;
  }

  const ExactInt& coeff(std::size_t k) const {
    static const ExactInt zero = 0;
    return k < c.size() ? c[k] : zero;
  }
};

// P_k(x) as the z^k coefficient of (1+z)^(n-x) (1-z)^x.
inline ExactInt krawtchouk_gf(int n, int k, int x) {
  Poly p = Poly::one();
  Poly plus{{ExactInt(1), ExactInt(1)}};
  Poly minus{{ExactInt(1), ExactInt(-1)}};
  for (int i = 0; i < n - x; ++i) p = p * plus;
  for (int i = 0; i < x; ++i) p = p * minus;
  return p.coeff(static_cast<std::size_t>(k));
}

// P_k(x) = sum_j (-2)^j C(n-j, k-j) C(x, j).
inline ExactInt krawtchouk_alt_pow2(int n, int k, int x) {
  ExactInt sum = 0;
  ExactInt pow = 1;  // (-2)^j
  for (int j = 0; j <= k; ++j) {
    sum += pow * binomial(n - j, k - j) * binomial(x, j);
    pow *= -2;
  }
  return sum;
}

// P_k(x) = sum_j (-1)^j 2^(k-j) C(n-k+j, j) C(n-x, k-j).
inline ExactInt krawtchouk_alt_shift(int n, int k, int x) {
  ExactInt sum = 0;
  for (int j = 0; j <= k; ++j) {
    ExactInt term = (ExactInt(1) << (k - j)) * binomial(n - k + j, j) * binomial(n - x, k - j);
    if (j & 1)
      sum -= term;
    else
      sum += term;
  }
  return sum;
}

// The coefficient of the monomial over T in the multilinear polynomial of f,
// straight from the inclusion sum: parity of |{x in supp(f) : x subseteq T}|.
inline int anf_coeff_literal(const BooleanFunction& f, std::uint64_t term) {
  int parity = 0;
  for (std::uint64_t x : f.support())
    if ((x & ~term) == 0) parity ^= 1;
  return parity;
}

// Seeded generators shared by the property suites. A fresh engine per suite
// keeps the corpora reproducible independent of test order.
inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0xC0FFEE ^ salt); }

inline BooleanFunction random_function(std::mt19937_64& g, int n, double density = 0.5) {
  std::bernoulli_distribution bit(density);
  std::vector<std::uint64_t> supp;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x)
    if (bit(g)) supp.push_back(x);
  return BooleanFunction(n, std::move(supp));
}

// All k-subsets of [1..n].
inline IncidenceStructure complete_structure(int n, int k) {
  std::vector<std::uint64_t> blocks;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t count = binomial(n, k).convert_to<std::uint64_t>();
  for (std::uint64_t c = 0; c < count; ++c) {
    blocks.push_back(mask);
    std::uint64_t lo = mask & -mask, r = mask + lo;
    mask = (((r ^ mask) >> 2) / lo) | r;
  }
  return IncidenceStructure(n, k, std::move(blocks));
}

// b distinct k-subsets of [1..n], uniform without replacement.
inline IncidenceStructure random_structure(std::mt19937_64& g, int n, int k, int b) {
  std::vector<std::uint64_t> all;
  std::uint64_t mask = (std::uint64_t{1} << k) - 1;
  std::uint64_t count = binomial(n, k).convert_to<std::uint64_t>();
  for (std::uint64_t c = 0; c < count; ++c) {
    all.push_back(mask);
    std::uint64_t lo = mask & -mask, r = mask + lo;
    mask = (((r ^ mask) >> 2) / lo) | r;
  }
  std::shuffle(all.begin(), all.end(), g);
  all.resize(static_cast<std::size_t>(b));
  return IncidenceStructure(n, k, all);
}

// Every member of C restricted to the columns of sel, counted per pattern;
// strength-t means each projection onto t columns is perfectly balanced.
inline bool balanced_projection(const BooleanFunction& C, std::uint64_t sel) {
  std::vector<std::uint64_t> counts(std::uint64_t{1} << std::popcount(sel), 0);
  for (std::uint64_t v : C.support()) {
    std::uint64_t pattern = 0, bit = 1;
    for (int i = 0; i < C.n(); ++i)
      if ((sel >> i) & 1) {
        if ((v >> i) & 1) pattern |= bit;
        bit <<= 1;
      }
    ++counts[pattern];
  }
  for (std::uint64_t c : counts)
    if (c != counts[0]) return false;
  return true;
}

// Largest t with every t-column projection balanced (the textbook definition
// of orthogonal-array strength).
inline int oa_strength_projection(const BooleanFunction& C) {
  for (int t = 1; t <= C.n(); ++t) {
    std::uint64_t sel = (std::uint64_t{1} << t) - 1;
    std::uint64_t count = binomial(C.n(), t).convert_to<std::uint64_t>();
    for (std::uint64_t c = 0; c < count; ++c) {
      if (!balanced_projection(C, sel)) return t - 1;
      std::uint64_t lo = sel & -sel, r = sel + lo;
      sel = (((r ^ sel) >> 2) / lo) | r;
    }
  }
  return C.n();
}

// Span of the generator rows over GF(2).
inline std::vector<std::uint64_t> span(int n, const std::vector<std::uint64_t>& gens) {
  std::vector<std::uint64_t> words{0};
  for (std::uint64_t g : gens) {
    std::size_t sz = words.size();
    for (std::size_t i = 0; i < sz; ++i) {
      std::uint64_t w = words[i] ^ g;
      if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
    }
  }
  return words;
}

// Minimum distance of the dual code, by enumerating all 2^n candidates and
// keeping those orthogonal to every generator.
inline int dual_min_distance(int n, const std::vector<std::uint64_t>& gens) {
  int best = n + 1;
  for (std::uint64_t w = 1; w < (std::uint64_t{1} << n); ++w) {
    bool orthogonal = true;
    for (std::uint64_t g : gens)
      if (std::popcount(w & g) & 1) {
        orthogonal = false;
        break;
      }
    if (orthogonal) best = std::min(best, std::popcount(w));
  }
  return best;
}

}  // namespace tdesign::oracles
