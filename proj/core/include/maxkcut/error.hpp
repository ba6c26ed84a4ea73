// Copyright 2026 The maxkcut Authors
//
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
#pragma once

#include <stdexcept>
#include <string>

namespace maxkcut {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument does not hold.
class InvalidArgument : public Error {
  public:
    using Error::Error;
};

/// An assignment does not match the graph it is evaluated on.
class InvalidAssignment : public Error {
  public:
    using Error::Error;
};

/// A computation would exceed a configured size cap (enumeration count,
/// qubit count, dense matrix dimension).
class SizeLimitError : public Error {
  public:
    using Error::Error;
};

/// Malformed input file. The message carries the line number when known.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what
                         : what),
          line_(line) {}

    [[nodiscard]] int line() const noexcept { return line_; }

  private:
    int line_;
};

} // namespace maxkcut
