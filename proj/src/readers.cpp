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

#include "qnlp/readers.hpp"

#include <cctype>
#include <sstream>

#include "qnlp/errors.hpp"

namespace qnlp {

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (in >> raw) {
    std::string tok;
    for (char c : raw) {
      auto u = static_cast<unsigned char>(c);
      if (u < 0x80 && std::ispunct(u)) continue;
      tok.push_back(u < 0x80 ? static_cast<char>(std::tolower(u)) : c);
    }
    if (!tok.empty()) out.push_back(std::move(tok));
  }
  if (out.empty()) throw InvalidInput("sentence has no tokens");
  return out;
}

namespace {

void require_tokens(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw InvalidInput("sentence has no tokens");
  for (const auto& t : tokens)
    if (t.empty()) throw InvalidInput("empty token");
}

}  // namespace

Diagram spiders_read(const std::vector<std::string>& tokens) {
  require_tokens(tokens);
  Diagram d;
  for (const auto& t : tokens) d = tensor(d, Diagram::from_box(Word{t, {}, sent()}));
  d.append(Spider{AtomicType::sentence(), 0, tokens.size(), 1}, 0);
  return d;
}

Diagram cups_read(const std::vector<std::string>& tokens) {
  require_tokens(tokens);
  Diagram d;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    TypeSeq cod = i + 1 < tokens.size() ? TypeSeq{sent(), sent(-1)} : TypeSeq{sent()};
    d = tensor(d, Diagram::from_box(Word{tokens[i], {}, cod}));
  }
  for (std::size_t i = 1; i < tokens.size(); ++i) d.append(Cup{AtomicType::sentence(), -1}, 1);
  return d;
}

}  // namespace qnlp
