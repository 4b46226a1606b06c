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

#include "qnlp/ccg/category.hpp"

#include <array>
#include <cctype>

#include "qnlp/errors.hpp"

namespace qnlp::ccg {
namespace {

constexpr std::array<std::string_view, 5> kContentAtoms = {"S", "N", "NP", "PP", "conj"};
constexpr std::array<std::string_view, 10> kPunctuation = {
    ",", ".", ":", ";", "LRB", "RRB", "LQU", "RQU", "``", "''"};

bool is_known_atom(std::string_view name) {
  for (auto a : kContentAtoms) {
    if (a == name) return true;
  }
  for (auto p : kPunctuation) {
    if (p == name) return true;
  }
  return false;
}

class CategoryParser {
 public:
  explicit CategoryParser(std::string_view text) : text_(text) {}

  Category parse() {
    Category c = parse_slashed();
    if (pos_ != text_.size()) fail("trailing characters");
    return c;
  }

 private:
  // Slashes associate to the left: A/B\C = (A/B)\C.
  Category parse_slashed() {
    Category left = parse_primary();
    while (pos_ < text_.size() && (text_[pos_] == '/' || text_[pos_] == '\\')) {
      const char slash = text_[pos_++];
      Category right = parse_primary();
      left = slash == '/' ? Category::forward(left, right) : Category::backward(left, right);
    }
    return left;
  }

  Category parse_primary() {
    if (pos_ >= text_.size()) fail("unexpected end of category");
    if (text_[pos_] == '(') {
      ++pos_;
      Category inner = parse_slashed();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      if (auto feat = parse_feature()) {
        if (*feat != "conj") fail("only [conj] may follow a bracketed category");
        inner = inner.with_conj(true);
      }
      return inner;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '/' && text_[pos_] != '\\' &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '[') {
      ++pos_;
    }
    const std::string name(text_.substr(start, pos_ - start));
    if (name.empty()) fail("empty atom");
    if (!is_known_atom(name)) {
      throw UnknownCategory("unknown atomic category '" + name + "' in '" + std::string(text_) + "'");
    }
    std::optional<std::string> feature = parse_feature();
    bool conj = false;
    if (feature == "conj") {
      feature.reset();
      conj = true;
    }
    if (auto second = parse_feature()) {
      if (*second != "conj") fail("unexpected second feature");
      conj = true;
    }
    return Category::atomic(name, feature).with_conj(conj);
  }

  std::optional<std::string> parse_feature() {
    if (pos_ >= text_.size() || text_[pos_] != '[') return std::nullopt;
    const std::size_t close = text_.find(']', pos_);
    if (close == std::string_view::npos) fail("unterminated feature");
    std::string feat(text_.substr(pos_ + 1, close - pos_ - 1));
    if (feat.empty()) fail("empty feature");
    pos_ = close + 1;
    return feat;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw UnknownCategory(
        "cannot parse category '" + std::string(text_) + "' at position " +
        std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Category Category::atomic(std::string name, std::optional<std::string> feature) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atomic;
  node->name = std::move(name);
  node->feature = std::move(feature);
  return Category(std::move(node));
}

Category Category::forward(const Category& result, const Category& argument) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Forward;
  node->result = std::make_shared<const Category>(result);
  node->argument = std::make_shared<const Category>(argument);
  return Category(std::move(node));
}

Category Category::backward(const Category& result, const Category& argument) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Backward;
  node->result = std::make_shared<const Category>(result);
  node->argument = std::make_shared<const Category>(argument);
  return Category(std::move(node));
}

Category Category::with_conj(bool conj) const {
  if (node_->conj == conj) return *this;
  auto node = std::make_shared<Node>(*node_);
  node->conj = conj;
  return Category(std::move(node));
}

bool Category::is_punctuation_or_conj() const {
  if (!is_atomic()) return false;
  if (name() == "conj") return true;
  for (auto p : kPunctuation) {
    if (p == name()) return true;
  }
  return false;
}

std::string Category::to_string() const {
  std::string out;
  if (is_atomic()) {
    out = name();
    if (feature()) out += "[" + *feature() + "]";
    if (conj()) out += "[conj]";
    return out;
  }
  auto wrap = [](const Category& c) {
    return c.is_atomic() || c.conj() ? c.to_string() : "(" + c.to_string() + ")";
  };
  out = wrap(result()) + (kind() == Kind::Forward ? "/" : "\\") + wrap(argument());
  if (conj()) out = "(" + out + ")[conj]";
  return out;
}

bool Category::operator==(const Category& other) const {
  if (kind() != other.kind() || conj() != other.conj()) return false;
  if (is_atomic()) return name() == other.name() && feature() == other.feature();
  return result() == other.result() && argument() == other.argument();
}

Category parse_category(std::string_view text) { return CategoryParser(text).parse(); }

bool unifies(const Category& a, const Category& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_atomic()) {
    if (a.name() != b.name()) return false;
    return !a.feature() || !b.feature() || a.feature() == b.feature();
  }
  return unifies(a.result(), b.result()) && unifies(a.argument(), b.argument());
}

TypeSeq cat_to_typeseq(const Category& c) {
  switch (c.kind()) {
    case Category::Kind::Atomic: {
      const std::string& name = c.name();
      if (name == "N" || name == "NP" || name == "PP") return TypeSeq{noun()};
      if (name == "S") return TypeSeq{sent()};
      if (c.is_punctuation_or_conj()) return TypeSeq{};
      throw UnknownCategory("no pregroup image for atomic category '" + name + "'");
    }
    case Category::Kind::Forward:
      return cat_to_typeseq(c.result()) + cat_to_typeseq(c.argument()).l();
    case Category::Kind::Backward:
      return cat_to_typeseq(c.argument()).r() + cat_to_typeseq(c.result());
  }
  return {};
}

}  // namespace qnlp::ccg
