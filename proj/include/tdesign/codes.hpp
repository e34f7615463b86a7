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
#include <map>

#include "tdesign/boolfn.hpp"
#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief Weight distribution of the binary code attached to f:
 * codewords (u f(x) + w . x) over the coordinates x != 0, for u in GF(2)
 * and w in GF(2)^n.
 */
struct WeightDistribution {
  ExactInt length;                  // 2^n - 1
  int dimension = 0;                // log2 of the codeword count
  std::map<ExactInt, ExactInt> counts;  // weight -> number of codewords

  ExactInt min_distance() const;
};

/*! \brief Weight distribution computed from the Walsh spectrum: the nonzero
 * weights are f^(0), 2^{n-1} (from the linear words), and 2^{n-1} + f^(w)
 * for w != 0. Requires f(0) = 0.
 */
WeightDistribution code_weight_distribution(const BooleanFunction& f, int n_cap = kDenseCap);

/*! \brief Weight of the single codeword (u, w) counted letter by letter.
 * The brute-force route: 2^n evaluations.
 */
std::uint64_t code_enumerate(const BooleanFunction& f, int u, const PointSet& w);

}  // namespace tdesign
