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

#include <boost/multiprecision/cpp_int.hpp>

namespace tdesign {

// Arbitrary-precision signed integer / rational. Every arithmetic result in
// this library is exact; there is no floating point anywhere.
using ExactInt = boost::multiprecision::cpp_int;
using ExactRat = boost::multiprecision::cpp_rational;

inline ExactInt numerator(const ExactRat& q) { return boost::multiprecision::numerator(q); }
inline ExactInt denominator(const ExactRat& q) { return boost::multiprecision::denominator(q); }

// True iff q is an integer (denominator 1 after normalisation).
inline bool is_integral(const ExactRat& q) { return denominator(q) == 1; }

}  // namespace tdesign
