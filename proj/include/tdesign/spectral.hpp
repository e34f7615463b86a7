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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tdesign/design.hpp"
#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief The Walsh coefficient a t-(n, k, lambda) design must take on
 * every weight-h input, h <= t: lambda P_k(h) / C(n-t, k-t).
 *
 * exact always holds the rational value; value is meaningful only when
 * integral is true.
 */
struct ExpectedWalsh {
  bool integral = false;
  ExactInt value;
  ExactRat exact;
};

ExpectedWalsh expected_walsh(int t, int n, int k, const ExactInt& lambda, int h);

struct SpectralViolation {
  PointSet w;
  //! Absent when no integral expected value exists at this weight.
  std::optional<ExactInt> expected;
  ExactInt actual;
};

struct SpectralVerdict {
  bool is_design = false;
  int t = 0;
  std::optional<ExactInt> lambda;  // inferred from the block count when verified
  std::optional<SpectralViolation> first_violation;
};

/*! \brief Verifies the t-design property through the Walsh spectrum alone:
 * the structure is a t-design iff the coefficient at every w with
 * 1 <= wt(w) <= t equals expected_walsh at that weight, with lambda
 * inferred from the block count.
 *
 * The reported violation is the lowest mask within the lowest offending
 * weight. Work is sum over h <= t of C(n, h) * b; beyond budget throws
 * budget_error.
 */
SpectralVerdict verify_spectral(const IncidenceStructure& D, int t,
                                std::uint64_t budget = 100'000'000);

/*! \brief Structure of the polynomial representation of a t-design's
 * indicator:
 *
 * - no monomial of degree below k,
 * - the degree-k monomials are exactly the blocks,
 * - for 0 <= h <= t the degree-(n-h) monomials are all present when the
 *   complement value at strength h is odd, and all absent when it is even.
 */
struct AnfStructureReport {
  bool ok = true;
  std::vector<std::string> violations;
};

AnfStructureReport anf_structure_check(const IncidenceStructure& D, const DesignParameters& p);

/*! \brief Walsh coefficient at a block of a hypothetical
 * ((n-2)/2)-(n, n/2, 1) design, closed form. Even n >= 4.
 */
ExactInt steiner_a(int n);

//! The companion value at non-block weight-n/2 inputs: -2 (a - P_{n/2}(n/2)) / n.
ExactInt steiner_a_tilde(int n);

/*! \brief The meet-distribution counts y_i = |{blocks meeting a fixed
 * weight-n/2 vector w in exactly i points}| forced by the design
 * identities, solved by back-substitution.
 *
 * block selects whether w is itself a block. All y_i must come out as
 * nonnegative integers; walsh_value = sum_i (-1)^i y_i.
 */
struct SteinerSystemSolution {
  std::vector<ExactInt> y;  // i = 0..n/2
  ExactInt walsh_value;
};

SteinerSystemSolution steiner_nonblock_system(int n, bool block);

/*! \brief Fully assembled spectrum of a hypothetical ((n-2)/2)-(n, n/2, 1)
 * design: one forced value per weight h != n/2, and the pair {a, a_tilde}
 * at weight n/2 with multiplicities b and C(n, n/2) - b.
 */
struct SteinerSpectrum {
  int n = 0;
  ExactInt a, a_tilde;
  ExactInt block_count;
  std::map<int, ExactInt> by_weight;  // h -> value, h != n/2
};

SteinerSpectrum steiner_full_spectrum(int n);

/*! \brief Verifies the two aggregate identities the assembled weight-n/2
 * values must satisfy: the plain sum and the sum of squares over all
 * weight-n/2 inputs, each against its closed form.
 */
bool check_sum_identities(int n, const ExactInt& b);

/*! \brief For a half-size design (k = n/2, n even): every odd-weight w with
 * wt(w) <= t must have a vanishing coefficient. Work is bounded like
 * verify_spectral.
 */
bool zero_odd_weights_check(const IncidenceStructure& D, int t,
                            std::uint64_t budget = 100'000'000);

}  // namespace tdesign
