// Copyright 2026 The Paralemma Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace paralemma {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A paradigm asks to cut more code points than the word has.
class CutExceedsLength : public Error {
 public:
  using Error::Error;
};

class InvalidUtf8 : public Error {
 public:
  using Error::Error;
};

class EmptyToken : public Error {
 public:
  using Error::Error;
};

class WhitespaceInToken : public Error {
 public:
  using Error::Error;
};

/// Parse failure in the dictionary XML. Line and column are 1-based.
class MalformedXml : public Error {
 public:
  MalformedXml(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class MissingNormalForm : public Error {
 public:
  using Error::Error;
};

class DuplicateLemmaId : public Error {
 public:
  using Error::Error;
};

/// Compiled dictionary bytes do not follow the two-section layout.
class FormatError : public Error {
 public:
  using Error::Error;
};

class DanglingParadigmId : public FormatError {
 public:
  using FormatError::FormatError;
};

/// A stored (hash, paradigm) pair does not reconstruct a matching lemma.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace paralemma
