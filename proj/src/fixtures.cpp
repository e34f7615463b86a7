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

#include "tdesign/fixtures.hpp"

#include <array>
#include <set>

#include "tdesign/errors.hpp"

namespace tdesign {

namespace {

// Point i (0-based) is the field element i for i < 11, and the extra point
// for i = 11.
using Perm = std::array<int, 12>;

Perm shift_perm() {
  Perm p{};
  for (int z = 0; z < 11; ++z) p[z] = (z + 1) % 11;
  p[11] = 11;
  return p;
}

Perm negate_invert_perm() {
  Perm p{};
  p[0] = 11;
  p[11] = 0;
  for (int z = 1; z < 11; ++z) {
    int inv = 1;
    for (int e = 0; e < 9; ++e) inv = inv * z % 11;  // z^9 = z^-1 mod 11
    p[z] = (11 - inv) % 11;
  }
  return p;
}

std::uint64_t apply(const Perm& p, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (int i = 0; i < 12; ++i)
    if ((mask >> i) & 1) out |= std::uint64_t{1} << p[i];
  return out;
}

// Orbit of the subset under the two generators, abandoned once it grows
// past cap.
std::set<std::uint64_t> orbit(std::uint64_t seed, std::size_t cap) {
  const Perm gens[2] = {shift_perm(), negate_invert_perm()};
  std::set<std::uint64_t> seen{seed};
  std::vector<std::uint64_t> frontier{seed};
  while (!frontier.empty()) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t m : frontier)
      for (const Perm& g : gens) {
        std::uint64_t img = apply(g, m);
        if (seen.insert(img).second) {
          if (seen.size() > cap) return seen;
          next.push_back(img);
        }
      }
    frontier = std::move(next);
  }
  return seen;
}

std::uint64_t next_subset(std::uint64_t v) {
  std::uint64_t c = v & -v;
  std::uint64_t r = v + c;
  return (((r ^ v) >> 2) / c) | r;
}

// Lowest block of the design generate_s5612() finds; the scan is
// deterministic, so loading can rebuild the orbit from this one subset.
constexpr std::uint64_t kBaseBlock5612 = 0x5f;

DesignParameters checked_params(const IncidenceStructure& D, int t, const ExactInt& lambda,
                                const std::string& name) {
  auto p = verify_bruteforce(D, t);
  if (!p || p->lambda != lambda)
    throw fixture_error("fixture " + name + " failed its design verification");
  return *p;
}

}  // namespace

IncidenceStructure fano() {
  return IncidenceStructure(7, 3, std::vector<std::uint64_t>{7, 25, 97, 74, 50, 44, 84});
}

IncidenceStructure s5612() {
  auto blocks = orbit(kBaseBlock5612, 132);
  if (blocks.size() != 132) throw fixture_error("fixture s5612: orbit size is not 132");
  IncidenceStructure D(12, 6, std::vector<std::uint64_t>(blocks.begin(), blocks.end()));
  checked_params(D, 5, 1, "s5612");
  return D;
}

IncidenceStructure generate_s5612() {
  std::uint64_t mask = 0x3f;  // {1..6}
  for (std::uint64_t c = 0, subsets = 924; c < subsets; ++c, mask = next_subset(mask)) {
    auto blocks = orbit(mask, 132);
    if (blocks.size() != 132) continue;
    IncidenceStructure D(12, 6, std::vector<std::uint64_t>(blocks.begin(), blocks.end()));
    auto p = verify_bruteforce(D, 5);
    if (p && p->lambda == 1) return D;
  }
  throw consistency_error("generate_s5612: no orbit of 132 six-sets forms a 5-design");
}

std::vector<Fixture> all_fixtures() {
  std::vector<Fixture> out;
  IncidenceStructure f = fano();
  out.push_back({"fano", f, checked_params(f, 2, 1, "fano")});
  IncidenceStructure s = s5612();
  out.push_back({"s5612", s, checked_params(s, 5, 1, "s5612")});
  return out;
}

}  // namespace tdesign
