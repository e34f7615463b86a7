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

#include <stdexcept>
#include <string>

namespace tdesign {

// Input text could not be parsed; line is 1-based within the offending stream.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string message, long line)
      : std::runtime_error("line " + std::to_string(line) + ": " + std::move(message)),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

// An operation would exceed its stated work budget. Never silently truncated.
class budget_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagreed. Always a bug;
// the CLI maps this to its own exit code so it is never confused with
// "input is not a design".
class consistency_error : public std::logic_error {
  using std::logic_error::logic_error;
};

// A bundled fixture failed its self-verification on load.
class fixture_error : public std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace tdesign
