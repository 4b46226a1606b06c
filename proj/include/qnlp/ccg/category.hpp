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

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qnlp/pregroup/types.hpp"

namespace qnlp::ccg {

/// CCG category: an atom (`S[dcl]`, `NP`, `conj`, `,` ...) or a slash
/// category X/Y (forward) or X\Y (backward). Immutable; copies share
/// structure.
class Category {
 public:
  enum class Kind { Atomic, Forward, Backward };

  static Category atomic(std::string name, std::optional<std::string> feature = {});
  static Category forward(const Category& result, const Category& argument);
  static Category backward(const Category& result, const Category& argument);

  Kind kind() const { return node_->kind; }
  bool is_atomic() const { return kind() == Kind::Atomic; }
  const std::string& name() const { return node_->name; }
  const std::optional<std::string>& feature() const { return node_->feature; }
  const Category& result() const { return *node_->result; }
  const Category& argument() const { return *node_->argument; }

  /// Coordination marker, written `[conj]` after the category in CCGBank
  /// (e.g. `NP[conj]`, `(S[dcl]\NP)[conj]`).
  bool conj() const { return node_->conj; }
  Category with_conj(bool conj) const;

  /// Punctuation class or `conj`.
  bool is_punctuation_or_conj() const;

  /// CCGBank notation, e.g. `(S[dcl]\NP)/NP`.
  std::string to_string() const;

  /// Structural equality, features and conj marker included.
  bool operator==(const Category& other) const;

 private:
  struct Node {
    Kind kind = Kind::Atomic;
    std::string name;
    std::optional<std::string> feature;
    std::shared_ptr<const Category> result;
    std::shared_ptr<const Category> argument;
    bool conj = false;
  };
  explicit Category(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses a category string. Throws UnknownCategory for malformed strings
/// or atoms outside {S, N, NP, PP, conj} and the punctuation classes.
Category parse_category(std::string_view text);

/// Equality up to features: atoms match when names agree and the features
/// agree or either side has none. Conj markers are ignored.
bool unifies(const Category& a, const Category& b);

/// Maps a category to its pregroup type:
///   N, NP, PP -> n;  S[*] -> s;  conj and punctuation -> 1 (empty);
///   X/Y -> T(X) . T(Y)^l;  X\Y -> T(Y)^r . T(X).
TypeSeq cat_to_typeseq(const Category& c);

}  // namespace qnlp::ccg
