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

#include "tdesign/admissibility.hpp"

#include <stdexcept>

#include "tdesign/exactmath.hpp"

namespace tdesign {

namespace {

void require_params(int t, int n, int k, const ExactInt& lambda) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("filter: need 1 <= t <= k <= n");
  if (lambda < 1) throw std::invalid_argument("filter: lambda must be positive");
}

// floor(k/top floor((k-1)/(top-1) ... floor(low_num/low_den) ...)) evaluated
// innermost first: denominators low_den..top, numerator k - top + d at
// denominator d.
ExactInt floor_tower(int k, int low_den, int top) {
  ExactInt v = 1;
  for (int d = low_den; d <= top; ++d) v = (k - top + d) * v / d;
  return v;
}

}  // namespace

FilterResult filter_divisibility(int t, int n, int k, const ExactInt& lambda) {
  require_params(t, n, k, lambda);
  FilterResult r{"divisibility"};
  for (int s = 0; s <= t; ++s) {
    ExactInt num = lambda * binomial(n - s, t - s);
    ExactInt den = binomial(k - s, t - s);
    if (num % den != 0) {
      r.pass = false;
      r.detail = "lambda_" + std::to_string(s) + " = " + num.str() + "/" + den.str() +
                 " is not an integer";
      return r;
    }
  }
  return r;
}

FilterResult filter_spectral_divisibility(int t, int n, int k, const ExactInt& lambda) {
  require_params(t, n, k, lambda);
  FilterResult r{"spectral-divisibility"};
  ExactInt den = binomial(n - t, k - t);
  for (int h = 0; h <= t; ++h) {
    ExactInt num = lambda * krawtchouk(n, k, h);
    if (num % den != 0) {
      r.pass = false;
      r.detail = "coefficient at weight " + std::to_string(h) + " = " + num.str() + "/" +
                 den.str() + " is not an integer";
      return r;
    }
  }
  return r;
}

FilterResult filter_gcd(int t, int n) {
  if (t < 1 || t + 1 > n) throw std::invalid_argument("filter_gcd: need 1 <= t and t+1 <= n");
  FilterResult r{"gcd"};
  ExactInt g = gcd(ExactInt(n - t), lcm_range(t));
  if (g != 1) {
    r.pass = false;
    r.detail = "gcd(n-t, lcm(1..t+1)) = " + g.str();
  }
  return r;
}

FilterResult filter_johnson(int t, int n, int k) {
  if (t < 1 || t > k || k > n) throw std::invalid_argument("filter_johnson: need 1 <= t <= k <= n");
  FilterResult r{"johnson"};
  if (t < 2 || k <= t || n <= k + 1) return r;  // bounds are vacuous here

  // C(k, t-1) (k-t) / (n-k-1) <= floor(k/(t-1) floor(... floor((k-t+3)/2)))
  ExactInt lhs = binomial(k, t - 1) * (k - t);
  ExactInt tower = t == 2 ? ExactInt(k) : floor_tower(k, 2, t - 1);
  if (lhs > tower * (n - k - 1)) {
    r.pass = false;
    r.detail = "pair-packing bound: " + lhs.str() + " > " + ExactInt(tower * (n - k - 1)).str();
    return r;
  }

  // C(k, k-t+1) (k-t) / (n-k-1) <= floor(k/(k-t+1) floor(... floor((t+1)/2)))
  lhs = binomial(k, k - t + 1) * (k - t);
  tower = floor_tower(k, 2, k - t + 1);  // k - t + 1 >= 2 after the guard
  if (lhs > tower * (n - k - 1)) {
    r.pass = false;
    r.detail = "co-packing bound: " + lhs.str() + " > " + ExactInt(tower * (n - k - 1)).str();
    return r;
  }

  // C(n, t) >= (n/k)^delta C(n-delta, h) C(k, t) with t = 2h + delta
  int h = t / 2, delta = t % 2;
  ExactInt left = binomial(n, t), right = binomial(n - delta, h) * binomial(k, t);
  if (delta) {
    left *= k;
    right *= n;
  }
  if (left < right) {
    r.pass = false;
    r.detail = "halving bound: " + left.str() + " < " + right.str();
  }
  return r;
}

FilterResult filter_steiner_half(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("filter_steiner_half: n must be even and at least 4");
  FilterResult r{"steiner-half"};
  if (n % 4 != 0) {
    r.pass = false;
    r.detail = "n = " + std::to_string(n % 4) + " mod 4";
    return r;
  }
  if (!is_prime((n + 2) / 2)) {
    r.pass = false;
    r.detail = "(n+2)/2 = " + std::to_string((n + 2) / 2) + " is composite";
  }
  return r;
}

AdmissibilityReport check_steiner_half(int n) {
  if (n < 4 || n % 2 != 0)
    throw std::invalid_argument("check_steiner_half: n must be even and at least 4");
  AdmissibilityReport rep;
  rep.n = n;
  rep.t = (n - 2) / 2;
  rep.k = n / 2;
  rep.lambda = 1;
  FilterResult results[] = {
      filter_divisibility(rep.t, n, rep.k, rep.lambda),
      filter_spectral_divisibility(rep.t, n, rep.k, rep.lambda),
      filter_gcd(rep.t, n),
      filter_johnson(rep.t, n, rep.k),
      filter_steiner_half(n),
  };
  for (FilterResult& f : results) {
    if (f.pass)
      rep.passed.push_back(f.name);
    else
      rep.failed.push_back(std::move(f));
  }
  return rep;
}

std::vector<AdmissibilityReport> admissibility_scan(int min_n, int max_n) {
  if (min_n < 8 || min_n > max_n)
    throw std::invalid_argument("admissibility_scan: need 8 <= min_n <= max_n");
  std::vector<AdmissibilityReport> out;
  for (int n = min_n + (min_n % 2); n <= max_n; n += 2) out.push_back(check_steiner_half(n));
  return out;
}

std::vector<int> enumerate_admissible(int min_n, int max_n) {
  std::vector<int> out;
  for (const AdmissibilityReport& rep : admissibility_scan(min_n, max_n))
    if (rep.admissible()) out.push_back(rep.n);
  return out;
}

}  // namespace tdesign
