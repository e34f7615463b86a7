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

#include <iosfwd>
#include <string>

#include "tdesign/boolfn.hpp"
#include "tdesign/design.hpp"

namespace tdesign {

// Design file format. '#' starts a comment; blank lines are skipped.
// The first data line is "n k b"; each of the next b data lines lists the
// k points of one block as strictly ascending 1-based indices.
IncidenceStructure parse_design(std::istream& in);
IncidenceStructure parse_design(const std::string& text);
IncidenceStructure load_design(const std::string& path);

// Canonical text form: header line, then the blocks in sorted mask order.
// parse(render(D)) == D, and render is a fixed point of parse . render.
std::string render_design(const IncidenceStructure& D);

// Same surface syntax with rows read as arbitrary-weight vectors: the
// header's k is ignored, a row of "-" denotes the zero vector, and rows
// must be pairwise distinct.
BooleanFunction parse_vector_set(std::istream& in);
BooleanFunction parse_vector_set(const std::string& text);
BooleanFunction load_vector_set(const std::string& path);

std::string render_vector_set(const BooleanFunction& f);

}  // namespace tdesign
