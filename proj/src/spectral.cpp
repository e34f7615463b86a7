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

#include "tdesign/spectral.hpp"

#include <bit>
#include <stdexcept>

#include "tdesign/boolfn.hpp"
#include "tdesign/errors.hpp"
#include "tdesign/exactmath.hpp"

namespace tdesign {

namespace {

std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

void require_quarter(int n, const char* who) {
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument(std::string(who) + ": n must be a multiple of 4");
}

ExactInt integral_or_throw(const ExactRat& q, const char* who) {
  if (!is_integral(q))
    throw std::invalid_argument(std::string(who) + ": value is not an integer for this n");
  return numerator(q);
}

}  // namespace

ExpectedWalsh expected_walsh(int t, int n, int k, const ExactInt& lambda, int h) {
  if (t < 0 || t > k || k > n) throw std::invalid_argument("expected_walsh: need 0 <= t <= k <= n");
  if (h < 0 || h > t) throw std::invalid_argument("expected_walsh: need 0 <= h <= t");
  if (lambda < 1) throw std::invalid_argument("expected_walsh: lambda must be positive");
  ExpectedWalsh e;
  e.exact = ExactRat(lambda * krawtchouk(n, k, h), binomial(n - t, k - t));
  e.integral = is_integral(e.exact);
  if (e.integral) e.value = numerator(e.exact);
  return e;
}

SpectralVerdict verify_spectral(const IncidenceStructure& D, int t, std::uint64_t budget) {
  int n = D.n(), k = D.k();
  if (t < 1 || t > k) throw std::invalid_argument("verify_spectral: need 1 <= t <= k");

  ExactInt work = 0;
  for (int h = 0; h <= t; ++h) work += binomial(n, h);
  work *= D.block_count();
  if (work > budget)
    throw budget_error("verify_spectral: sum of C(n,h) * b = " + work.str() +
                       " exceeds budget " + std::to_string(budget));

  SpectralVerdict v;
  v.t = t;
  ExactInt b = D.block_count();
  ExactRat lambda_rat = ExactRat(b * binomial(k, t), binomial(n, t));
  if (!is_integral(lambda_rat)) {
    // No integral lambda fits the block count, so no expected value exists.
    v.first_violation = SpectralViolation{PointSet::empty(n), std::nullopt, b};
    return v;
  }
  ExactInt lambda = numerator(lambda_rat);

  for (int h = 1; h <= t; ++h) {
    ExpectedWalsh e = expected_walsh(t, n, k, lambda, h);
    std::uint64_t count = binomial(n, h).convert_to<std::uint64_t>();
    std::uint64_t w = (std::uint64_t{1} << h) - 1;
    for (std::uint64_t c = 0; c < count; ++c, w = next_subset(w)) {
      std::int64_t actual = 0;
      for (std::uint64_t blk : D.blocks()) actual += std::popcount(blk & w) & 1 ? -1 : 1;
      if (!e.integral || actual != e.value) {
        v.first_violation = SpectralViolation{PointSet(n, w), e.integral
                                                                  ? std::optional<ExactInt>(e.value)
                                                                  : std::nullopt,
                                              actual};
        return v;
      }
    }
  }
  v.is_design = true;
  v.lambda = lambda;
  return v;
}

AnfStructureReport anf_structure_check(const IncidenceStructure& D, const DesignParameters& p) {
  if (p.n != D.n() || p.k != D.k())
    throw std::invalid_argument("anf_structure_check: parameters do not match the structure");
  AnfStructureReport rep;
  auto fail = [&rep](std::string msg) {
    rep.ok = false;
    rep.violations.push_back(std::move(msg));
  };

  AlgebraicNormalForm a = anf(D.characteristic_function());
  int n = D.n(), k = D.k();

  std::vector<std::uint64_t> degree_k_terms;
  std::vector<std::uint64_t> high_counts(p.t + 1, 0);  // h -> #terms of degree n-h
  for (std::uint64_t term : a.terms) {
    int d = std::popcount(term);
    if (d < k) {
      fail("monomial of degree " + std::to_string(d) + " below the block size");
      continue;
    }
    if (d == k) degree_k_terms.push_back(term);
    if (d >= n - p.t) ++high_counts[n - d];
  }

  std::sort(degree_k_terms.begin(), degree_k_terms.end());
  if (degree_k_terms != D.blocks()) fail("degree-k monomials differ from the block set");

  for (int h = 0; h <= p.t && n - h > k; ++h) {
    bool all = complement_lambda(p, h) % 2 != 0;
    ExactInt want = all ? binomial(n, h) : ExactInt(0);
    if (high_counts[h] != want)
      fail("degree-" + std::to_string(n - h) + " monomials: found " +
           std::to_string(high_counts[h]) + ", expected " + want.str());
  }
  return rep;
}

ExactInt steiner_a(int n) {
  require_quarter(n, "steiner_a");
  int half = n / 2, m = (n + 2) / 2;
  ExactInt total = 0;
  ExactInt inner = 0;  // sum_{l=0}^{h-1} (-1)^l C(m, l+1)
  for (int h = 1; h <= half; ++h) {
    ExactInt step = binomial(m, h);
    inner += (h - 1) & 1 ? -step : step;
    total += binomial(half, h) * inner;
  }
  ExactRat a = ExactRat((ExactInt(1) << half) * (n + 2) - 2 * total, ExactInt(n + 2));
  return integral_or_throw(a, "steiner_a");
}

ExactInt steiner_a_tilde(int n) {
  require_quarter(n, "steiner_a_tilde");
  ExactRat v = ExactRat(-2 * (steiner_a(n) - krawtchouk(n, n / 2, n / 2)), ExactInt(n));
  return integral_or_throw(v, "steiner_a_tilde");
}

SteinerSystemSolution steiner_nonblock_system(int n, bool block) {
  require_quarter(n, "steiner_nonblock_system");
  int t = (n - 2) / 2, k = n / 2;
  auto lam = lambda_table(t, n, k, 1);
  if (!lam)
    throw std::invalid_argument("steiner_nonblock_system: parameters fail divisibility");

  SteinerSystemSolution sol;
  sol.y.assign(k + 1, ExactInt(0));
  sol.y[k] = block ? 1 : 0;
  for (int r = t; r >= 0; --r) {
    ExactInt v = binomial(k, r) * (*lam)[r];
    for (int i = r + 1; i <= k; ++i) v -= binomial(i, r) * sol.y[i];
    if (v < 0)
      throw std::invalid_argument("steiner_nonblock_system: negative meet count at i = " +
                                  std::to_string(r));
    sol.y[r] = v;
  }
  sol.walsh_value = 0;
  for (int i = 0; i <= k; ++i) sol.walsh_value += i & 1 ? -sol.y[i] : sol.y[i];
  return sol;
}

SteinerSpectrum steiner_full_spectrum(int n) {
  require_quarter(n, "steiner_full_spectrum");
  int t = (n - 2) / 2, k = n / 2;
  auto lam = lambda_table(t, n, k, 1);
  if (!lam) throw std::invalid_argument("steiner_full_spectrum: parameters fail divisibility");

  SteinerSpectrum s;
  s.n = n;
  s.block_count = (*lam)[0];
  s.a = steiner_a(n);
  s.a_tilde = steiner_a_tilde(n);
  for (int h = 0; h <= t; ++h) {
    ExpectedWalsh e = expected_walsh(t, n, k, 1, h);
    if (!e.integral)
      throw std::invalid_argument("steiner_full_spectrum: non-integral value at weight " +
                                  std::to_string(h));
    s.by_weight[h] = e.value;
    // complements flip the sign by (-1)^k
    s.by_weight[n - h] = k & 1 ? -e.value : e.value;
  }
  if (s.by_weight.at(0) != s.block_count)
    throw consistency_error("steiner_full_spectrum: weight-0 value differs from the block count");

  // The weight-n/2 pair must match the meet-distribution route.
  if (steiner_nonblock_system(n, true).walsh_value != s.a ||
      steiner_nonblock_system(n, false).walsh_value != s.a_tilde)
    throw consistency_error("steiner_full_spectrum: closed forms disagree with the linear system");

  // Closure under the transform: the full spectrum must sum to 0 (the empty
  // set is never a block) and its squares to 2^n b.
  ExactInt half_count = binomial(n, k);
  ExactInt sum = s.block_count * s.a + (half_count - s.block_count) * s.a_tilde;
  ExactInt sum_sq = s.block_count * s.a * s.a +
                    (half_count - s.block_count) * s.a_tilde * s.a_tilde;
  for (auto& [h, value] : s.by_weight) {
    sum += binomial(n, h) * value;
    sum_sq += binomial(n, h) * value * value;
  }
  if (sum != 0 || sum_sq != (ExactInt(1) << n) * s.block_count)
    throw consistency_error("steiner_full_spectrum: assembled spectrum fails the closure sums");
  return s;
}

bool zero_odd_weights_check(const IncidenceStructure& D, int t, std::uint64_t budget) {
  int n = D.n(), k = D.k();
  if (n % 2 != 0 || k != n / 2)
    throw std::invalid_argument("zero_odd_weights_check: needs k = n/2 with n even");
  if (t < 1 || t > k) throw std::invalid_argument("zero_odd_weights_check: need 1 <= t <= k");

  ExactInt work = 0;
  for (int h = 1; h <= t; h += 2) work += binomial(n, h);
  work *= D.block_count();
  if (work > budget)
    throw budget_error("zero_odd_weights_check: sum of C(n,h) * b = " + work.str() +
                       " exceeds budget " + std::to_string(budget));

  for (int h = 1; h <= t; h += 2) {
    std::uint64_t count = binomial(n, h).convert_to<std::uint64_t>();
    std::uint64_t w = (std::uint64_t{1} << h) - 1;
    for (std::uint64_t c = 0; c < count; ++c, w = next_subset(w)) {
      std::int64_t value = 0;
      for (std::uint64_t blk : D.blocks()) value += std::popcount(blk & w) & 1 ? -1 : 1;
      if (value != 0) return false;
    }
  }
  return true;
}

bool check_sum_identities(int n, const ExactInt& b) {
  require_quarter(n, "check_sum_identities");
  int t = (n - 2) / 2, k = n / 2;
  ExactInt a = steiner_a(n), at = steiner_a_tilde(n);
  ExactInt rest = binomial(n, k) - b;

  ExactInt sum_p = 0, sum_p2 = 0;
  for (int h = 0; h <= t; ++h) {
    ExactInt p = krawtchouk(n, k, h);
    sum_p += binomial(n, h) * p;
    sum_p2 += binomial(n, h) * p * p;
  }
  bool first = ExactRat(b * a + rest * at) == ExactRat(-4 * sum_p, ExactInt(n + 2));
  bool second = ExactRat((ExactInt(1) << n) * b - b * a * a - rest * at * at) ==
                ExactRat(8 * sum_p2, ExactInt(n + 2) * (n + 2));
  return first && second;
}

}  // namespace tdesign
