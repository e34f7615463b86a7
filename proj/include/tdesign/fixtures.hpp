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

#include "tdesign/design.hpp"

namespace tdesign {

//! The seven lines of the order-2 projective plane: a 2-(7, 3, 1) design.
IncidenceStructure fano();

/*! \brief The 5-(12, 6, 1) design, loaded from a frozen base block and
 * expanded under the group generated by z -> z+1 and z -> -1/z acting on
 * GF(11) with an extra fixed point (relabelled 1..12).
 *
 * Every load re-verifies the design property; a failure throws
 * fixture_error.
 */
IncidenceStructure s5612();

/*! \brief Re-derives the 5-(12, 6, 1) design from scratch: scans 6-subsets
 * in ascending mask order until one has an orbit of exactly 132 sets that
 * verifies as a 5-design.
 */
IncidenceStructure generate_s5612();

struct Fixture {
  std::string name;
  IncidenceStructure structure;
  DesignParameters expected;
};

//! All bundled designs, re-verified; any mismatch throws fixture_error.
std::vector<Fixture> all_fixtures();

}  // namespace tdesign
