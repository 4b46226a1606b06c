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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qnlp/ccg/category.hpp"

namespace qnlp::ccg {

/// Combinator that produced a derivation node.
enum class Rule {
  FA,     // forward application      X/Y  Y    => X
  BA,     // backward application     Y    X\Y  => X
  FC,     // forward composition      X/Y  Y/Z  => X/Z   (any degree)
  BC,     // backward composition     Y\Z  X\Y  => X\Z   (any degree)
  FX,     // forward crossed          X/Y  Y\Z  => X\Z
  BX,     // backward crossed         Y/Z  X\Y  => X/Z
  TR,     // type raising             Y => X/(X\Y) or X\(X/Y)
  LEX,    // unary re-categorisation with an unchanged pregroup image
  CONJ,   // coordination and punctuation absorption
  UNARY,  // any other unary type change
};

std::string_view rule_name(Rule rule);

/// The four binary shapes grouped under Rule::CONJ.
enum class ConjShape {
  CoordRight,  // conj X  => X[conj]
  CoordLeft,   // X X[conj] => X
  PunctRight,  // X p => X
  PunctLeft,   // p X => X
};

std::optional<ConjShape> conj_shape(
    const Category& parent, const Category& left, const Category& right);

/// Infers the combinator of a binary node, or nothing when none applies.
std::optional<Rule> infer_binary_rule(
    const Category& parent, const Category& left, const Category& right);
Rule infer_unary_rule(const Category& parent, const Category& child);

/// A CCG derivation tree. Leaves carry a token; nodes carry a rule and one
/// (TR, LEX, UNARY) or two (all other rules) children.
struct CCGTree {
  Category category;
  std::string token;
  std::optional<Rule> rule;
  std::vector<CCGTree> children;

  static CCGTree leaf(std::string token, Category category);
  /// Throws DerivationError when the arity does not match the rule.
  static CCGTree node(Category category, Rule rule, std::vector<CCGTree> children);

  bool is_leaf() const { return !rule.has_value(); }
  /// Leaf tokens in sentence order.
  std::vector<std::string> tokens() const;
};

/// Parses one derivation written in CCGBank AUTO notation:
///   (<T cat head ndtrs> child...)   and   (<L cat pos pos token cat>)
/// `line` is used for error positions. Throws ParseError (with line and
/// column) for malformed nodes or nodes no combinator explains, and
/// UnknownCategory for unparseable categories.
CCGTree parse_derivation(std::string_view text, std::size_t line = 1);

/// Parses an AUTO document: one derivation per line; blank lines and lines
/// beginning with `ID=` are skipped.
std::vector<CCGTree> parse_auto(std::string_view text);

/// Writes a tree back in AUTO notation (head index 0, POS fields `X`).
std::string to_auto(const CCGTree& tree);

}  // namespace qnlp::ccg
