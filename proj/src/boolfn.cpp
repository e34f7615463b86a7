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

#include "tdesign/boolfn.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "tdesign/errors.hpp"

namespace tdesign {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// a < b as ascending index lists of equal length: the lowest differing
// position decides, and it lies in whichever mask owns that bit.
bool term_lex_less(std::uint64_t a, std::uint64_t b) {
  int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da < db;
  std::uint64_t d = a ^ b;
  if (d == 0) return false;
  return (a >> std::countr_zero(d)) & 1;
}

}  // namespace

PointSet::PointSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  if (n < 1 || n > 64) throw std::invalid_argument("PointSet: n must be in [1, 64]");
  if (mask & ~low_bits(n)) throw std::invalid_argument("PointSet: mask exceeds n bits");
}

PointSet PointSet::full(int n) {
  if (n < 1 || n > 64) throw std::invalid_argument("PointSet: n must be in [1, 64]");
  return PointSet(n, low_bits(n));
}

PointSet PointSet::from_indices(int n, const std::vector<int>& indices) {
  std::uint64_t m = 0;
  for (int i : indices) {
    if (i < 1 || i > n) throw std::invalid_argument("PointSet: index out of range");
    std::uint64_t bit = std::uint64_t{1} << (i - 1);
    if (m & bit) throw std::invalid_argument("PointSet: duplicate index");
    m |= bit;
  }
  return PointSet(n, m);
}

int PointSet::weight() const noexcept { return std::popcount(mask_); }

bool PointSet::contains(int i) const {
  if (i < 1 || i > n_) throw std::invalid_argument("PointSet: index out of range");
  return (mask_ >> (i - 1)) & 1;
}

bool PointSet::subset_of(const PointSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PointSet: mismatched n");
  return (mask_ & ~o.mask_) == 0;
}

PointSet PointSet::complemented() const { return PointSet(n_, mask_ ^ low_bits(n_)); }

int PointSet::dot(const PointSet& o) const {
  if (n_ != o.n_) throw std::invalid_argument("PointSet: mismatched n");
  return std::popcount(mask_ & o.mask_) & 1;
}

std::vector<int> PointSet::indices() const {
  std::vector<int> out;
  out.reserve(weight());
  for (std::uint64_t m = mask_; m; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint64_t> support)
    : n_(n), support_(std::move(support)) {
  if (n < 1 || n > 64) throw std::invalid_argument("BooleanFunction: n must be in [1, 64]");
  std::uint64_t lb = low_bits(n);
  for (std::uint64_t x : support_)
    if (x & ~lb) throw std::invalid_argument("BooleanFunction: support vector exceeds n bits");
  std::sort(support_.begin(), support_.end());
  if (std::adjacent_find(support_.begin(), support_.end()) != support_.end())
    throw std::invalid_argument("BooleanFunction: duplicate support vector");
}

BooleanFunction BooleanFunction::from_support(int n, const std::vector<PointSet>& points) {
  std::vector<std::uint64_t> masks;
  masks.reserve(points.size());
  for (const PointSet& p : points) {
    if (p.n() != n) throw std::invalid_argument("BooleanFunction: point with mismatched n");
    masks.push_back(p.mask());
  }
  return BooleanFunction(n, std::move(masks));
}

BooleanFunction BooleanFunction::from_truth_table(int n, const std::vector<int>& bits) {
  if (n < 0 || n > 63 || bits.size() != (std::uint64_t{1} << n))
    throw std::invalid_argument("BooleanFunction: truth table size must be 2^n");
  std::vector<std::uint64_t> masks;
  for (std::uint64_t x = 0; x < bits.size(); ++x) {
    if (bits[x] != 0 && bits[x] != 1)
      throw std::invalid_argument("BooleanFunction: truth table entries must be 0 or 1");
    if (bits[x]) masks.push_back(x);
  }
  return BooleanFunction(n, std::move(masks));
}

int BooleanFunction::value(std::uint64_t x) const {
  if (x & ~low_bits(n_)) throw std::invalid_argument("BooleanFunction: x exceeds n bits");
  return std::binary_search(support_.begin(), support_.end(), x) ? 1 : 0;
}

int BooleanFunction::value(const PointSet& x) const {
  if (x.n() != n_) throw std::invalid_argument("BooleanFunction: mismatched n");
  return value(x.mask());
}

ExactInt walsh_at(const BooleanFunction& f, const PointSet& w) {
  if (w.n() != f.n()) throw std::invalid_argument("walsh_at: mismatched n");
  std::int64_t acc = 0;
  for (std::uint64_t x : f.support())
    acc += std::popcount(x & w.mask()) & 1 ? -1 : 1;
  return acc;
}

ExactInt WalshSpectrum::sum() const {
  ExactInt s = 0;
  for (std::int64_t v : values) s += v;
  return s;
}

ExactInt WalshSpectrum::sum_squares() const {
  ExactInt s = 0;
  for (std::int64_t v : values) s += ExactInt(v) * v;
  return s;
}

std::map<int, std::map<std::int64_t, std::uint64_t>> WalshSpectrum::by_weight() const {
  std::map<int, std::map<std::int64_t, std::uint64_t>> out;
  for (std::uint64_t w = 0; w < values.size(); ++w)
    ++out[std::popcount(w)][values[w]];
  return out;
}

WalshSpectrum walsh_full(const BooleanFunction& f, int n_cap) {
  int n = f.n();
  if (n > n_cap)
    throw budget_error("walsh_full: n = " + std::to_string(n) + " exceeds the dense cap " +
                       std::to_string(n_cap));
  std::size_t size = std::size_t{1} << n;
  // F[x] = (-1)^f(x); its transform relates to f^ by
  // f^(w) = (2^n [w = 0] - F^(w)) / 2.
  std::vector<std::int64_t> a(size, 1);
  for (std::uint64_t x : f.support()) a[x] = -1;
  for (std::size_t half = 1; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += half << 1)
      for (std::size_t i = base; i < base + half; ++i) {
        std::int64_t u = a[i], v = a[i + half];
        a[i] = u + v;
        a[i + half] = u - v;
      }
  WalshSpectrum s;
  s.n = n;
  s.values.resize(size);
  s.values[0] = ((std::int64_t{1} << n) - a[0]) / 2;
  for (std::size_t w = 1; w < size; ++w) s.values[w] = -a[w] / 2;
  return s;
}

BooleanFunction inverse_walsh(const WalshSpectrum& s) {
  if (s.n < 1 || s.n > 40) throw std::invalid_argument("inverse_walsh: n out of range");
  std::size_t size = std::size_t{1} << s.n;
  if (s.values.size() != size)
    throw std::invalid_argument("inverse_walsh: spectrum must have 2^n entries");
  // 128-bit intermediates: |sums| <= 2^n * max|entry| stays well in range.
  std::vector<__int128> a(s.values.begin(), s.values.end());
  for (std::size_t half = 1; half < size; half <<= 1)
    for (std::size_t base = 0; base < size; base += half << 1)
      for (std::size_t i = base; i < base + half; ++i) {
        __int128 u = a[i], v = a[i + half];
        a[i] = u + v;
        a[i + half] = u - v;
      }
  std::vector<std::uint64_t> support;
  for (std::size_t x = 0; x < size; ++x) {
    __int128 scaled = a[x];  // 2^n f(x)
    if (scaled != 0 && scaled != static_cast<__int128>(1) << s.n)
      throw std::invalid_argument("inverse_walsh: value at x = " + std::to_string(x) +
                                  " is not in {0, 1}");
    if (scaled != 0) support.push_back(x);
  }
  return BooleanFunction(s.n, std::move(support));
}

int AlgebraicNormalForm::degree() const {
  int d = -1;
  for (std::uint64_t t : terms) d = std::max(d, std::popcount(t));
  return d;
}

std::map<int, std::uint64_t> AlgebraicNormalForm::degree_histogram() const {
  std::map<int, std::uint64_t> h;
  for (std::uint64_t t : terms) ++h[std::popcount(t)];
  return h;
}

AlgebraicNormalForm anf(const BooleanFunction& f, int n_cap) {
  int n = f.n();
  if (n > n_cap)
    throw budget_error("anf: n = " + std::to_string(n) + " exceeds the dense cap " +
                       std::to_string(n_cap));
  // Truth table packed 64 values per word; zeta transform over GF(2).
  std::size_t size = std::size_t{1} << n;
  std::size_t words = (size + 63) / 64;
  std::vector<std::uint64_t> bits(words, 0);
  for (std::uint64_t x : f.support()) bits[x >> 6] |= std::uint64_t{1} << (x & 63);

  static constexpr std::uint64_t kMask[6] = {
      0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
      0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull};
  for (int v = 0; v < n; ++v) {
    if (v < 6) {
      for (std::uint64_t& w : bits) w ^= (w & kMask[v]) << (1 << v);
    } else {
      std::size_t step = std::size_t{1} << (v - 6);
      for (std::size_t base = 0; base < words; base += step << 1)
        for (std::size_t i = base; i < base + step; ++i) bits[i + step] ^= bits[i];
    }
  }

  AlgebraicNormalForm out;
  out.n = n;
  for (std::uint64_t x = 0; x < size; ++x)
    if ((bits[x >> 6] >> (x & 63)) & 1) out.terms.push_back(x);
  std::sort(out.terms.begin(), out.terms.end(), term_lex_less);
  return out;
}

int evaluate(const AlgebraicNormalForm& a, const PointSet& x) {
  if (x.n() != a.n) throw std::invalid_argument("evaluate: mismatched n");
  int acc = 0;
  for (std::uint64_t t : a.terms) acc ^= (t & ~x.mask()) == 0;
  return acc;
}

std::string render_anf(const AlgebraicNormalForm& a) {
  if (a.terms.empty()) return "0\n";
  std::string out;
  for (std::uint64_t t : a.terms) {
    if (t == 0) {
      out += "1";
    } else {
      bool first = true;
      for (std::uint64_t m = t; m; m &= m - 1) {
        if (!first) out += "*";
        out += "x_{" + std::to_string(std::countr_zero(m) + 1) + "}";
        first = false;
      }
    }
    out += "\n";
  }
  return out;
}

}  // namespace tdesign
