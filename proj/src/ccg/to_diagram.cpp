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

#include "qnlp/ccg/to_diagram.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "qnlp/errors.hpp"

namespace qnlp::ccg {

namespace {

// Appends k nested cups meeting at wire boundary `pos`.
void cancel(Diagram& d, std::size_t pos, std::size_t k, const CCGTree& at) {
  TypeSeq wires = d.cod();
  if (k > pos || pos + k > wires.size())
    throw DerivationError("rule " + std::string(rule_name(*at.rule)) + " at " +
                          at.category.to_string() + ": cup window out of range");
  for (std::size_t i = 0; i < k; ++i) {
    const PType& left = wires[pos - 1 - i];
    const PType& right = wires[pos + i];
    if (!cancels(left, right)) {
      throw DerivationError(
          "rule " + std::string(rule_name(*at.rule)) + " at " +
          at.category.to_string() + ": " + left.to_string() + " and " +
          right.to_string() + " do not cancel");
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const PType& left = wires[pos - 1 - i];
    d.append(Cup{left.base, left.z}, pos - 1 - i);
  }
}

// Moves wire `from` to index `to` with adjacent swaps.
void move_wire(Diagram& d, std::size_t from, std::size_t to) {
  while (from > to) {
    TypeSeq w = d.cod();
    d.append(Swap{w[from - 1], w[from]}, from - 1);
    --from;
  }
  while (from < to) {
    TypeSeq w = d.cod();
    d.append(Swap{w[from], w[from + 1]}, from);
    ++from;
  }
}

// 1 -> t . t^l
Diagram caps_left(const TypeSeq& t) {
  Diagram d;
  for (std::size_t i = 0; i < t.size(); ++i) d.append(Cap{t[i].base, t[i].z - 1}, i);
  return d;
}

// 1 -> t^r . t
Diagram caps_right(const TypeSeq& t) {
  Diagram d;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const PType& p = t[t.size() - 1 - i];
    d.append(Cap{p.base, p.z}, i);
  }
  return d;
}

Diagram retyped_leaf(const CCGTree& leaf, const TypeSeq& type, const CCGTree& at) {
  if (!leaf.is_leaf()) {
    throw DerivationError("CONJ at " + at.category.to_string() +
                          ": conjunction or punctuation must be a single word");
  }
  return Diagram::from_box(Word{leaf.token, {}, type});
}

Diagram convert(const CCGTree& t) {
  if (t.is_leaf())
    return Diagram::from_box(Word{t.token, {}, cat_to_typeseq(t.category)});

  const Rule rule = *t.rule;
  if (rule == Rule::TR || rule == Rule::LEX || rule == Rule::UNARY) {
    Diagram child = convert(t.children[0]);
    const Category& p = t.category;
    if (rule == Rule::LEX) return child;
    if (rule == Rule::TR) {
      TypeSeq x = cat_to_typeseq(p.result());
      if (p.kind() == Category::Kind::Forward) return tensor(caps_left(x), child);
      return tensor(child, caps_right(x));
    }
    TypeSeq from = child.cod();
    std::string token = "UNARY[" + t.children[0].category.to_string() + "->" +
                        p.to_string() + "]";
    Diagram d = tensor(child, Diagram::from_box(Word{token, {}, from.r() + cat_to_typeseq(p)}));
    cancel(d, from.size(), from.size(), t);
    return d;
  }

  const CCGTree& lt = t.children[0];
  const CCGTree& rt = t.children[1];

  if (rule == Rule::CONJ) {
    ConjShape shape = *conj_shape(t.category, lt.category, rt.category);
    switch (shape) {
      case ConjShape::CoordLeft: {
        Diagram left = convert(lt);
        Diagram d = tensor(left, convert(rt));
        cancel(d, left.cod().size(), left.cod().size(), t);
        return d;
      }
      case ConjShape::CoordRight: {
        Diagram right = convert(rt);
        const TypeSeq& x = right.cod();
        Diagram d = tensor(retyped_leaf(lt, x.r() + x + x.l(), t), right);
        cancel(d, 3 * x.size(), x.size(), t);
        return d;
      }
      case ConjShape::PunctRight: {
        Diagram left = convert(lt);
        const TypeSeq& x = left.cod();
        Diagram d = tensor(left, retyped_leaf(rt, x.r() + x, t));
        cancel(d, x.size(), x.size(), t);
        return d;
      }
      case ConjShape::PunctLeft: {
        Diagram right = convert(rt);
        const TypeSeq& x = right.cod();
        Diagram d = tensor(retyped_leaf(lt, x + x.l(), t), right);
        cancel(d, 2 * x.size(), x.size(), t);
        return d;
      }
    }
  }

  Diagram left = convert(lt);
  Diagram right = convert(rt);
  const std::size_t nl = left.cod().size();
  const std::size_t nr = right.cod().size();
  Diagram d = tensor(left, right);
  switch (rule) {
    case Rule::FA:
      cancel(d, nl, nr, t);
      break;
    case Rule::BA:
      cancel(d, nl, nl, t);
      break;
    case Rule::FC:
      cancel(d, nl, cat_to_typeseq(lt.category.argument()).size(), t);
      break;
    case Rule::BC:
      cancel(d, nl, cat_to_typeseq(rt.category.argument()).size(), t);
      break;
    case Rule::FX: {
      // [X, Y^l] [Z^r, Y]: carry Z^r to the far left.
      std::size_t c = cat_to_typeseq(rt.category.argument()).size();
      std::size_t b = nr - c;
      for (std::size_t i = 0; i < c; ++i) move_wire(d, nl + i, i);
      cancel(d, c + nl, b, t);
      break;
    }
    case Rule::BX: {
      // [Y, Z^l] [Y^r, X]: carry Z^l to the far right.
      std::size_t c = cat_to_typeseq(lt.category.argument()).size();
      std::size_t b = nl - c;
      std::size_t n = nl + nr;
      for (std::size_t i = 0; i < c; ++i) move_wire(d, nl - 1 - i, n - 1 - i);
      cancel(d, b, b, t);
      break;
    }
    default:
      throw DerivationError("unexpected rule " + std::string(rule_name(rule)));
  }
  return d;
}

}  // namespace

Diagram tree_to_diagram(const CCGTree& tree) {
  Diagram d = convert(tree);
  if (!tree.category.conj() && d.cod() != cat_to_typeseq(tree.category)) {
    throw DerivationError("derivation of " + tree.category.to_string() +
                          " produced wires " + d.cod().to_string());
  }
  return d;
}

namespace {

void convert_file(const std::filesystem::path& file, std::vector<SectionEntry>& out) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot read " + file.string());
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::string> pending_id;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line.compare(first, 3, "ID=") == 0) {
      std::istringstream fields(line.substr(first + 3));
      std::string id;
      fields >> id;
      pending_id = id;
      continue;
    }
    SectionEntry entry;
    entry.id = pending_id.value_or(file.filename().string() + ":" + std::to_string(line_no));
    pending_id.reset();
    try {
      entry.diagram = tree_to_diagram(parse_derivation(line, line_no));
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
}

}  // namespace

std::vector<SectionEntry> section_to_diagrams(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::vector<SectionEntry> out;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".auto")
        files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) convert_file(f, out);
    return out;
  }
  if (!fs::is_regular_file(path, ec)) throw InvalidInput("cannot read " + path.string());
  convert_file(path, out);
  return out;
}

}  // namespace qnlp::ccg
