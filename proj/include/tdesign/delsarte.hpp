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

#include "tdesign/boolfn.hpp"
#include "tdesign/design.hpp"
#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief Inner distribution of a nonempty set C in the Hamming scheme:
 * B_i = |{(u, v) in C^2 : d(u, v) = i}| / |C|.
 */
struct DistanceDistribution {
  int n = 0;
  std::vector<ExactRat> B;  // index i = 0..n
};

DistanceDistribution inner_distribution(const BooleanFunction& C,
                                        std::uint64_t budget = 100'000'000);

/*! \brief Outer (dual) distribution B'_i = (1/|C|) sum_j P_i(j) B_j.
 *
 * Evaluated twice — through the inner distribution and through the squared
 * spectrum sum (1/|C|^2) sum over weight-i w of 1^_C(w)^2 — and the routes
 * must agree.
 */
struct OuterDistribution {
  int n = 0;
  std::vector<ExactRat> B;  // index i = 0..n
};

OuterDistribution outer_distribution_hamming(const BooleanFunction& C, int n_cap = kDenseCap);

/*! \brief Largest t such that the spectrum of the row set vanishes on all
 * weights 1..t; equivalently the array has strength t.
 */
int oa_strength(const BooleanFunction& C, std::uint64_t budget = 100'000'000);

/*! \brief t-design test over the block set's squared spectrum weighted by
 * Johnson-scheme eigenvalues: for i = 1..t the i-th combination must
 * vanish. Requires k <= n/2.
 */
bool johnson_design_check(const IncidenceStructure& D, int t, int n_cap = kDenseCap);

/*! \brief t-design test by the per-weight second-moment identity: for
 * i = 1..t, C(n, i) * (sum of squares over weight-i w) must equal the
 * squared plain sum b P_i(k); at most equality holds in general.
 */
bool relative_design_check(const IncidenceStructure& D, int t, int n_cap = kDenseCap);

}  // namespace tdesign
