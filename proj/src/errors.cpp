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

#include "qnlp/errors.hpp"

namespace qnlp {
namespace {

std::string describe(
    const std::string& reason, std::optional<std::size_t> offset,
    std::optional<std::size_t> line, std::optional<std::size_t> column) {
  std::string msg = "parse error";
  if (line) {
    msg += " at line " + std::to_string(*line);
    if (column) msg += ", column " + std::to_string(*column);
  }
  if (offset) msg += " at byte " + std::to_string(*offset);
  return msg + ": " + reason;
}

}  // namespace

ParseError::ParseError(
    const std::string& reason, std::optional<std::size_t> offset,
    std::optional<std::size_t> line, std::optional<std::size_t> column)
    : Error(describe(reason, offset, line, column)),
      reason_(reason),
      offset_(offset),
      line_(line),
      column_(column) {}

}  // namespace qnlp
