// Copyright 2026 The lrsumm Authors.
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

#ifndef LRSUMM_ERROR_H_
#define LRSUMM_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lrsumm {

// Bad input data or configuration. The CLI maps this family to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A malformed line in a text file format. Line numbers are 1-based.
class FormatError : public InputError {
 public:
  FormatError(const std::string &message, size_t line)
      : InputError("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  size_t line() const { return line_; }

 private:
  size_t line_;
};

// A sentence with no tokens after trimming.
class DegenerateSentenceError : public InputError {
 public:
  DegenerateSentenceError() : InputError("degenerate sentence: no tokens") {}
};

// The peer process of the generator wire protocol misbehaved or died.
class ProtocolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writing a pair file failed after `written` complete lines.
class ExportError : public std::runtime_error {
 public:
  ExportError(const std::string &message, size_t written)
      : std::runtime_error(message + " (" + std::to_string(written) +
                           " pairs written)"),
        written_(written) {}

  size_t written() const { return written_; }

 private:
  size_t written_;
};

}  // namespace lrsumm

#endif  // LRSUMM_ERROR_H_
