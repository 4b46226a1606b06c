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

#include <filesystem>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

/// Replaces matching word boxes by a fragment with the same dom and cod.
struct RewriteRule {
  std::string name;
  std::function<bool(const Word&)> matches;
  std::function<Diagram(const Word&)> transform;
};

/// Token lists keyed by list name: determiners, auxiliaries, connectors,
/// prepositions, preadverbs, postadverbs.
class WordLists {
 public:
  /// The lists shipped with the library.
  static const WordLists& builtin();
  /// Built-in lists overridden by `<dir>/<name>.txt` where present. Files
  /// hold one token per line; blank lines and `#` comments are ignored.
  static WordLists load(const std::filesystem::path& dir);

  const std::set<std::string>& get(const std::string& list) const;
  void set(const std::string& list, std::set<std::string> tokens);

 private:
  std::map<std::string, std::set<std::string>> lists_;
};

std::set<std::string> read_word_list(const std::filesystem::path& file);

/// Nested caps producing `type`, which must be cap-shaped: wire i pairs
/// with wire len-1-i and each pair is a^(z+1) . a^(z). Shapes T^r . T and
/// T . T^l qualify. Throws InvalidInput otherwise.
Diagram nested_caps(const TypeSeq& type);
bool is_cap_shaped(const TypeSeq& type);

RewriteRule determiner_rule(std::set<std::string> tokens);
RewriteRule auxiliary_rule(std::set<std::string> tokens);
RewriteRule connector_rule(std::set<std::string> tokens);
RewriteRule prepositional_phrase_rule(std::set<std::string> tokens);
RewriteRule preadverb_rule(std::set<std::string> tokens);
RewriteRule postadverb_rule(std::set<std::string> tokens);

/// Names accepted by Rewriter::from_names, in canonical order.
const std::vector<std::string>& builtin_rule_names();

/// Ordered rule list; the first matching rule rewrites a word.
class Rewriter {
 public:
  Rewriter() = default;
  /// Throws InvalidConfig on duplicate rule names.
  explicit Rewriter(std::vector<RewriteRule> rules);
  /// Throws InvalidConfig for unknown or duplicate names.
  static Rewriter from_names(const std::vector<std::string>& names,
                             const WordLists& lists = WordLists::builtin());

  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Rewrites every matching word state in place; dom and cod unchanged.
  Diagram apply(const Diagram& d) const;

 private:
  std::vector<RewriteRule> rules_;
};

}  // namespace qnlp
