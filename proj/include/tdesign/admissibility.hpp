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

#include <string>
#include <vector>

#include "tdesign/exactint.hpp"

namespace tdesign {

// Outcome of one necessary-condition filter. detail explains a failure
// (which quantity broke, at which index).
struct FilterResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

//! Every lambda_s = lambda C(n-s, t-s) / C(k-s, t-s), s <= t, must be integral.
FilterResult filter_divisibility(int t, int n, int k, const ExactInt& lambda);

//! C(n-t, k-t) must divide lambda P_k(h) for every h <= t.
FilterResult filter_spectral_divisibility(int t, int n, int k, const ExactInt& lambda);

//! For t-(n, t+1, 1): gcd(n - t, lcm(1, ..., t+1)) = 1.
FilterResult filter_gcd(int t, int n);

/*! \brief Johnson-type packing bounds for t-(n, k, 1); exact integer
 * arithmetic, floors evaluated innermost first. Vacuously passes when
 * t < 2, k <= t, or n <= k + 1.
 */
FilterResult filter_johnson(int t, int n, int k);

//! For ((n-2)/2)-(n, n/2, 1): n = 0 mod 4 and (n+2)/2 prime.
FilterResult filter_steiner_half(int n);

struct AdmissibilityReport {
  int n = 0, t = 0, k = 0;
  ExactInt lambda;
  std::vector<std::string> passed;
  std::vector<FilterResult> failed;
  bool admissible() const { return failed.empty(); }
};

//! All five filters applied to the parameters ((n-2)/2, n, n/2, 1).
AdmissibilityReport check_steiner_half(int n);

//! Reports for every even n in [min_n, max_n]; requires 8 <= min_n <= max_n.
std::vector<AdmissibilityReport> admissibility_scan(int min_n, int max_n);

//! The surviving n from admissibility_scan.
std::vector<int> enumerate_admissible(int min_n, int max_n);

}  // namespace tdesign
