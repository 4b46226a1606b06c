// Copyright 2026 The qnlp Authors
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
#include <optional>
#include <stdexcept>
#include <string>

namespace qnlp {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sequential composition or diagram construction with incompatible types.
class TypeMismatch : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `offset` is a byte offset (JSON) when known; `line`
/// and `column` are 1-based positions (AUTO files) when known.
class ParseError : public Error {
 public:
  explicit ParseError(
      const std::string& reason, std::optional<std::size_t> offset = {},
      std::optional<std::size_t> line = {},
      std::optional<std::size_t> column = {});

  const std::string& reason() const { return reason_; }
  std::optional<std::size_t> offset() const { return offset_; }
  std::optional<std::size_t> line() const { return line_; }
  std::optional<std::size_t> column() const { return column_; }

 private:
  std::string reason_;
  std::optional<std::size_t> offset_;
  std::optional<std::size_t> line_;
  std::optional<std::size_t> column_;
};

class UnknownCategory : public Error {
 public:
  using Error::Error;
};

class DerivationError : public Error {
 public:
  using Error::Error;
};

class UnsupportedBox : public Error {
 public:
  using Error::Error;
};

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

class UnboundSymbol : public Error {
 public:
  using Error::Error;
};

/// Postselection succeeded with probability below the evaluation threshold.
class ZeroNorm : public Error {
 public:
  using Error::Error;
};

class AllShotsDiscarded : public Error {
 public:
  using Error::Error;
};

/// One or more dataset sentences failed to compile under a pipeline.
class CompileError : public Error {
 public:
  using Error::Error;
};

}  // namespace qnlp
