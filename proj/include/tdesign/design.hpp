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
#include <optional>
#include <vector>

#include "tdesign/boolfn.hpp"
#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief A set of k-element blocks over the points {1, ..., n}.
 *
 * Blocks are kept sorted by mask; repeated blocks are rejected, so every
 * structure here is simple.
 */
class IncidenceStructure {
 public:
  IncidenceStructure(int n, int k, std::vector<PointSet> blocks);
  IncidenceStructure(int n, int k, std::vector<std::uint64_t> block_masks);

  int n() const noexcept { return n_; }
  int k() const noexcept { return k_; }
  std::uint64_t block_count() const noexcept { return blocks_.size(); }
  const std::vector<std::uint64_t>& blocks() const noexcept { return blocks_; }
  bool contains_block(std::uint64_t mask) const;

  //! Indicator of the block set inside GF(2)^n.
  BooleanFunction characteristic_function() const;

  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;

 private:
  int n_, k_;
  std::vector<std::uint64_t> blocks_;  // sorted, unique
};

/*! \brief Parameters of a verified t-design: lambda_s for s = 0..t. */
struct DesignParameters {
  int t = 0, n = 0, k = 0;
  ExactInt lambda;
  std::vector<ExactInt> lambda_s;  // index s, size t+1
  const ExactInt& b() const { return lambda_s.front(); }
};

/*! \brief The derived values lambda_s = lambda C(n-s, t-s) / C(k-s, t-s)
 * for s = 0..t, or absent when any of them fails to be an integer.
 */
std::optional<std::vector<ExactInt>> lambda_table(int t, int n, int k, const ExactInt& lambda);

/*! \brief Checks the t-design property by counting blocks over every
 * t-subset of the points.
 *
 * Returns the parameters when every t-subset lies in the same number of
 * blocks, absent otherwise. Throws budget_error if C(n, t) exceeds the
 * enumeration budget.
 */
std::optional<DesignParameters> verify_bruteforce(const IncidenceStructure& D, int t,
                                                  std::uint64_t budget = 10'000'000);

//! Blocks replaced by their complements; requires k < n.
IncidenceStructure complement_design(const IncidenceStructure& D);

//! lambda of the complement design at strength s <= t.
ExactInt complement_lambda(const DesignParameters& p, int s);

/*! \brief Blocks containing a fixed i-set and avoiding a disjoint j-set;
 * independent of the chosen sets while i + j <= t.
 */
ExactInt intersection_number(const DesignParameters& p, int i, int j);

/*! \brief For a t-(n, t+1, 1) design: blocks containing t+1-j chosen points
 * of a block B and avoiding the remaining j, for 1 <= j <= t+1.
 *
 * The count is well defined one level past t only because the reference
 * sets lie inside a block; it equals the alternating binomial sum
 * (-1)^(j-1) [sum_l (-1)^l C(n-t, l+1)] / (n-t) + (-1)^j. Requires k = t+1
 * and lambda = 1.
 */
ExactInt steiner_intersection(const DesignParameters& p, int j);

//! True iff the blocks are all k-subsets (includes the single-block k = n case).
bool is_trivial(const IncidenceStructure& D, int t);

}  // namespace tdesign
