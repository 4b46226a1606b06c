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

#include <string>
#include <string_view>
#include <vector>

#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

/// Splits on whitespace, strips ASCII punctuation and lowercases. Tokens
/// that become empty are dropped. Throws InvalidInput when nothing is left.
std::vector<std::string> tokenize(std::string_view text);

/// Bag of words: every token is a word state of type s, merged by a single
/// k-to-1 spider. Throws InvalidInput for an empty token list.
Diagram spiders_read(const std::vector<std::string>& tokens);

/// Tensor train: tokens 1..k-1 have type s . s^l, the last token s; each
/// s^l is cupped with the next word's s. Throws InvalidInput for an empty
/// token list.
Diagram cups_read(const std::vector<std::string>& tokens);

}  // namespace qnlp
