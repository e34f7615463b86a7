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

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "tdesign/exactint.hpp"

namespace tdesign {

/*! \brief Subset of the point set {1, ..., n}, equivalently a vector in GF(2)^n.
 *
 * Point i corresponds to bit i-1 of the mask. n is limited to 64.
 */
class PointSet {
 public:
  PointSet(int n, std::uint64_t mask);

  static PointSet empty(int n) { return PointSet(n, 0); }
  static PointSet full(int n);
  //! Builds from 1-based indices; duplicates or out-of-range indices throw.
  static PointSet from_indices(int n, const std::vector<int>& indices);

  int n() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int weight() const noexcept;
  bool contains(int i) const;  // 1-based
  bool subset_of(const PointSet& o) const;
  PointSet complemented() const;
  //! GF(2) inner product, 0 or 1. Operands must share n.
  int dot(const PointSet& o) const;
  //! Ascending 1-based indices of the members.
  std::vector<int> indices() const;

  friend bool operator==(const PointSet&, const PointSet&) = default;
  friend std::strong_ordering operator<=>(const PointSet&, const PointSet&) = default;

 private:
  int n_;
  std::uint64_t mask_;
};

inline int weight(const PointSet& v) { return v.weight(); }
inline PointSet complement_vector(const PointSet& v) { return v.complemented(); }
inline int dot(const PointSet& u, const PointSet& v) { return u.dot(v); }

/*! \brief Boolean function f: GF(2)^n -> {0, 1} stored as its support. */
class BooleanFunction {
 public:
  //! support: masks of the vectors where f = 1. Duplicates throw.
  BooleanFunction(int n, std::vector<std::uint64_t> support);
  static BooleanFunction from_support(int n, const std::vector<PointSet>& points);
  //! bits[x] in {0, 1} for every mask x; requires bits.size() == 2^n.
  static BooleanFunction from_truth_table(int n, const std::vector<int>& bits);

  int n() const noexcept { return n_; }
  const std::vector<std::uint64_t>& support() const noexcept { return support_; }
  std::uint64_t weight() const noexcept { return support_.size(); }
  int value(std::uint64_t x) const;
  int value(const PointSet& x) const;

 private:
  int n_;
  std::vector<std::uint64_t> support_;  // sorted, unique
};

/*! \brief Walsh coefficient f^(w) = sum_x f(x) (-1)^(w.x), computed from the
 * support directly. Exact for any n <= 64.
 */
ExactInt walsh_at(const BooleanFunction& f, const PointSet& w);

//! Default cap on the exponent of dense 2^n-sized transforms.
inline constexpr int kDenseCap = 28;

/*! \brief Dense Walsh spectrum; values[w] = f^(w) indexed by mask.
 *
 * Entries of any {0,1}-valued function satisfy |f^(w)| <= 2^n, so int64
 * holds them exactly for every n the dense transform accepts.
 */
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;

  ExactInt sum() const;
  ExactInt sum_squares() const;
  //! weight of w -> (value -> multiplicity)
  std::map<int, std::map<std::int64_t, std::uint64_t>> by_weight() const;
};

/*! \brief Full spectrum via the fast transform. Throws budget_error when
 * n exceeds the cap.
 *
 * Internally transforms the (-1)^f encoding; the two transforms are bridged
 * by f^(w) = (2^n [w = 0] - F^(w)) / 2.
 */
WalshSpectrum walsh_full(const BooleanFunction& f, int n_cap = kDenseCap);

/*! \brief Reconstructs the function with the given spectrum.
 *
 * Throws std::invalid_argument naming the first x (lowest mask) whose
 * reconstructed value is not in {0, 1}.
 */
BooleanFunction inverse_walsh(const WalshSpectrum& s);

/*! \brief Multilinear GF(2) polynomial: term masks name the variables. */
struct AlgebraicNormalForm {
  int n = 0;
  std::vector<std::uint64_t> terms;  // sorted by degree, then lex on index lists

  //! -1 for the zero function.
  int degree() const;
  std::map<int, std::uint64_t> degree_histogram() const;
};

AlgebraicNormalForm anf(const BooleanFunction& f, int n_cap = kDenseCap);

//! Evaluates the polynomial over GF(2) at x.
int evaluate(const AlgebraicNormalForm& a, const PointSet& x);

/*! \brief One term per line, "x_{i}" factors joined by "*"; the constant
 * term renders as "1" and the zero polynomial as "0".
 */
std::string render_anf(const AlgebraicNormalForm& a);

}  // namespace tdesign
