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

#include <cctype>
#include <sstream>

#include "qnlp/ccg/tree.hpp"
#include "qnlp/errors.hpp"

namespace qnlp::ccg {

std::string_view rule_name(Rule rule) {
  switch (rule) {
    case Rule::FA: return "FA";
    case Rule::BA: return "BA";
    case Rule::FC: return "FC";
    case Rule::BC: return "BC";
    case Rule::FX: return "FX";
    case Rule::BX: return "BX";
    case Rule::TR: return "TR";
    case Rule::LEX: return "LEX";
    case Rule::CONJ: return "CONJ";
    case Rule::UNARY: return "UNARY";
  }
  return "?";
}

namespace {

bool is_unary(Rule rule) {
  return rule == Rule::TR || rule == Rule::LEX || rule == Rule::UNARY;
}

bool is_fwd(const Category& c) { return c.kind() == Category::Kind::Forward; }
bool is_bwd(const Category& c) { return c.kind() == Category::Kind::Backward; }

// Generalized composition. `functor` is X/Y (forward) or X\Y (backward);
// `other` is Y|Z1|...|Zn and `parent` X|Z1|...|Zn with the same slash.
bool composes(const Category& parent, const Category& functor,
              const Category& other, Category::Kind slash) {
  Category p = parent;
  Category o = other;
  while (p.kind() == slash && o.kind() == slash) {
    if (!unifies(p.argument(), o.argument())) return false;
    p = p.result();
    o = o.result();
    if (unifies(o, functor.argument()) && unifies(p, functor.result()))
      return true;
  }
  return false;
}

}  // namespace

std::optional<ConjShape> conj_shape(
    const Category& parent, const Category& left, const Category& right) {
  if (right.conj() && !left.conj() && !parent.conj() &&
      unifies(left, parent) && unifies(right, parent))
    return ConjShape::CoordLeft;
  if (left.is_punctuation_or_conj() && parent.conj() && !right.conj() &&
      unifies(right, parent))
    return ConjShape::CoordRight;
  if (right.is_punctuation_or_conj() && left.conj() == parent.conj() &&
      unifies(left, parent))
    return ConjShape::PunctRight;
  if (left.is_punctuation_or_conj() && right.conj() == parent.conj() &&
      unifies(right, parent))
    return ConjShape::PunctLeft;
  return std::nullopt;
}

std::optional<Rule> infer_binary_rule(
    const Category& parent, const Category& left, const Category& right) {
  if (conj_shape(parent, left, right)) return Rule::CONJ;
  if (parent.conj() || left.conj() || right.conj()) return std::nullopt;
  if (is_fwd(left) && unifies(left.result(), parent) &&
      unifies(left.argument(), right))
    return Rule::FA;
  if (is_bwd(right) && unifies(right.result(), parent) &&
      unifies(right.argument(), left))
    return Rule::BA;
  if (is_fwd(left) && composes(parent, left, right, Category::Kind::Forward))
    return Rule::FC;
  if (is_bwd(right) && composes(parent, right, left, Category::Kind::Backward))
    return Rule::BC;
  // X/Y  Y\Z => X\Z
  if (is_fwd(left) && is_bwd(right) && is_bwd(parent) &&
      unifies(right.result(), left.argument()) &&
      unifies(parent.result(), left.result()) &&
      unifies(parent.argument(), right.argument()))
    return Rule::FX;
  // Y/Z  X\Y => X/Z
  if (is_fwd(left) && is_bwd(right) && is_fwd(parent) &&
      unifies(left.result(), right.argument()) &&
      unifies(parent.result(), right.result()) &&
      unifies(parent.argument(), left.argument()))
    return Rule::BX;
  return std::nullopt;
}

Rule infer_unary_rule(const Category& parent, const Category& child) {
  // X/(X\Y) and X\(X/Y)
  if (is_fwd(parent) && is_bwd(parent.argument()) &&
      unifies(parent.argument().result(), parent.result()) &&
      unifies(parent.argument().argument(), child))
    return Rule::TR;
  if (is_bwd(parent) && is_fwd(parent.argument()) &&
      unifies(parent.argument().result(), parent.result()) &&
      unifies(parent.argument().argument(), child))
    return Rule::TR;
  if (!parent.conj() && !child.conj() &&
      cat_to_typeseq(parent) == cat_to_typeseq(child))
    return Rule::LEX;
  return Rule::UNARY;
}

CCGTree CCGTree::leaf(std::string token, Category category) {
  return CCGTree{std::move(category), std::move(token), std::nullopt, {}};
}

CCGTree CCGTree::node(Category category, Rule rule, std::vector<CCGTree> children) {
  std::size_t want = is_unary(rule) ? 1 : 2;
  if (children.size() != want) {
    throw DerivationError(
        "rule " + std::string(rule_name(rule)) + " expects " +
        std::to_string(want) + " children, got " +
        std::to_string(children.size()));
  }
  return CCGTree{std::move(category), {}, rule, std::move(children)};
}

std::vector<std::string> CCGTree::tokens() const {
  std::vector<std::string> out;
  std::vector<const CCGTree*> stack{this};
  while (!stack.empty()) {
    const CCGTree* t = stack.back();
    stack.pop_back();
    if (t->is_leaf()) {
      out.push_back(t->token);
      continue;
    }
    for (auto it = t->children.rbegin(); it != t->children.rend(); ++it)
      stack.push_back(&*it);
  }
  return out;
}

namespace {

class AutoReader {
 public:
  AutoReader(std::string_view text, std::size_t line) : text_(text), line_(line) {}

  CCGTree document() {
    skip_ws();
    CCGTree tree = node();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing characters after derivation");
    return tree;
  }

 private:
  [[noreturn]] void fail(const std::string& reason) const {
    throw ParseError(reason, std::nullopt, line_, pos_ + 1);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', got end of line");
    if (text_[pos_] != c)
      fail(std::string("expected '") + c + "', got '" + text_[pos_] + "'");
    ++pos_;
  }

  // Space-separated fields up to the closing '>'.
  std::vector<std::string> fields() {
    std::vector<std::string> out;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated node header");
      if (text_[pos_] == '>') {
        ++pos_;
        return out;
      }
      std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != '>' &&
             !std::isspace(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      out.emplace_back(text_.substr(start, pos_ - start));
    }
  }

  Category category(const std::string& text, std::size_t at) {
    try {
      return parse_category(text);
    } catch (const UnknownCategory& e) {
      throw UnknownCategory(std::string(e.what()) + " (line " +
                            std::to_string(line_) + ", column " +
                            std::to_string(at + 1) + ")");
    }
  }

  CCGTree node() {
    std::size_t start = pos_;
    expect('(');
    expect('<');
    std::size_t header = pos_;
    std::vector<std::string> f = fields();
    if (f.empty()) fail("empty node header");
    if (f[0] == "L") {
      if (f.size() < 5) fail("leaf needs <L cat pos pos token ...>");
      Category cat = category(f[1], header);
      expect(')');
      return CCGTree::leaf(f[4], cat);
    }
    if (f[0] != "T") fail("node kind must be 'T' or 'L', got '" + f[0] + "'");
    if (f.size() != 4) fail("internal node needs <T cat head ndtrs>");
    Category cat = category(f[1], header);
    int ndtrs = 0;
    if (f[3] == "1") ndtrs = 1;
    else if (f[3] == "2") ndtrs = 2;
    else fail("child count must be 1 or 2, got '" + f[3] + "'");
    if (f[2] != "0" && f[2] != "1") fail("head index must be 0 or 1, got '" + f[2] + "'");

    std::vector<CCGTree> children;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated node");
      if (text_[pos_] == ')') break;
      children.push_back(node());
    }
    if (children.size() != static_cast<std::size_t>(ndtrs)) {
      fail("node declares " + std::to_string(ndtrs) + " children but has " +
           std::to_string(children.size()));
    }
    ++pos_;

    Rule rule;
    if (ndtrs == 1) {
      rule = infer_unary_rule(cat, children[0].category);
    } else {
      auto r = infer_binary_rule(cat, children[0].category, children[1].category);
      if (!r) {
        pos_ = start;
        fail("no combinator derives " + cat.to_string() + " from " +
             children[0].category.to_string() + " and " +
             children[1].category.to_string());
      }
      rule = *r;
    }
    return CCGTree::node(cat, rule, std::move(children));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

CCGTree parse_derivation(std::string_view text, std::size_t line) {
  return AutoReader(text, line).document();
}

std::vector<CCGTree> parse_auto(std::string_view text) {
  std::vector<CCGTree> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (line.substr(first, 3) == "ID=") continue;
    out.push_back(parse_derivation(line, line_no));
  }
  return out;
}

namespace {

void write_auto(const CCGTree& t, std::ostringstream& out) {
  std::string cat = t.category.to_string();
  if (t.is_leaf()) {
    out << "(<L " << cat << " X X " << t.token << " " << cat << ">)";
    return;
  }
  out << "(<T " << cat << " 0 " << t.children.size() << ">";
  for (const CCGTree& c : t.children) {
    out << " ";
    write_auto(c, out);
  }
  out << " )";
}

}  // namespace

std::string to_auto(const CCGTree& tree) {
  std::ostringstream out;
  write_auto(tree, out);
  return out.str();
}

}  // namespace qnlp::ccg
