// Copyright 2026 The cclp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CCLP_MPS_HPP_
#define CCLP_MPS_HPP_

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "cclp/lp.hpp"

namespace cclp {

class MpsParseError : public std::runtime_error {
 public:
  MpsParseError(int line, const std::string& message)
      : std::runtime_error("MPS parse error at line " + std::to_string(line) +
                           ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Parses fixed- or free-format MPS. Fixed-format columns are tolerated by
// whitespace splitting, so names may not contain blanks. Sections handled:
// NAME, OBJSENSE, ROWS, COLUMNS, RHS, RANGES, BOUNDS, ENDATA. Default column
// bounds are [0, +inf). An RHS entry on the objective row sets the objective
// offset to its negation.
LinearProgram parse_mps(std::istream& in);
LinearProgram parse_mps(const std::string& text);

// Reads a plain or gzip-compressed MPS file (detected by the 1f 8b magic).
LinearProgram read_mps_file(const std::string& path);

// Writes free-format MPS. parse(write(lp)) reproduces the LP data exactly.
void write_mps(const LinearProgram& lp, std::ostream& out);
std::string write_mps(const LinearProgram& lp);

}  // namespace cclp

#endif  // CCLP_MPS_HPP_
