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

#include "qnlp/pregroup/diagram.hpp"

#include <stdexcept>

#include "qnlp/errors.hpp"

namespace qnlp {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TypeSeq repeat(const PType& t, std::size_t count) {
  std::vector<PType> out(count, t);
  return TypeSeq(std::move(out));
}

std::optional<std::string> check_box(const Box& box) {
  if (const auto* sp = std::get_if<Spider>(&box)) {
    if (sp->n_in + sp->n_out == 0) return "spider must have at least one leg";
  }
  if (const auto* w = std::get_if<Word>(&box)) {
    if (w->token.empty()) return "word token must be non-empty";
  }
  return std::nullopt;
}

}  // namespace

TypeSeq box_dom(const Box& box) {
  return std::visit(
      overloaded{
          [](const Word& w) { return w.dom; },
          [](const Cup& c) { return TypeSeq{{c.base, c.z}, {c.base, c.z + 1}}; },
          [](const Cap&) { return TypeSeq{}; },
          [](const Spider& sp) { return repeat({sp.base, sp.z}, sp.n_in); },
          [](const Swap& sw) { return TypeSeq{sw.left, sw.right}; },
      },
      box);
}

TypeSeq box_cod(const Box& box) {
  return std::visit(
      overloaded{
          [](const Word& w) { return w.cod; },
          [](const Cup&) { return TypeSeq{}; },
          [](const Cap& c) { return TypeSeq{{c.base, c.z + 1}, {c.base, c.z}}; },
          [](const Spider& sp) { return repeat({sp.base, sp.z}, sp.n_out); },
          [](const Swap& sw) { return TypeSeq{sw.right, sw.left}; },
      },
      box);
}

std::string box_label(const Box& box) {
  return std::visit(
      overloaded{
          [](const Word& w) {
            return "Word(" + w.token + ": " + w.dom.to_string() + " -> " +
                   w.cod.to_string() + ")";
          },
          [](const Cup& c) {
            return "Cup(" + PType{c.base, c.z}.to_string() + ")";
          },
          [](const Cap& c) {
            return "Cap(" + PType{c.base, c.z}.to_string() + ")";
          },
          [](const Spider& sp) {
            return "Spider(" + PType{sp.base, sp.z}.to_string() + ", " +
                   std::to_string(sp.n_in) + " -> " + std::to_string(sp.n_out) + ")";
          },
          [](const Swap& sw) {
            return "Swap(" + sw.left.to_string() + ", " + sw.right.to_string() + ")";
          },
      },
      box);
}

std::optional<std::string> check_types(
    const TypeSeq& dom, const TypeSeq& cod, const std::vector<Layer>& layers) {
  std::vector<PType> wires = dom.items();
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const Layer& layer = layers[i];
    if (auto err = check_box(layer.box)) {
      return "layer " + std::to_string(i) + ": " + *err;
    }
    const TypeSeq in = box_dom(layer.box);
    if (layer.offset + in.size() > wires.size()) {
      return "layer " + std::to_string(i) + ": " + box_label(layer.box) +
             " at offset " + std::to_string(layer.offset) + " exceeds " +
             std::to_string(wires.size()) + " wires";
    }
    const auto first = wires.begin() + static_cast<std::ptrdiff_t>(layer.offset);
    const auto last = first + static_cast<std::ptrdiff_t>(in.size());
    if (!std::equal(first, last, in.begin())) {
      return "layer " + std::to_string(i) + ": " + box_label(layer.box) +
             " expects " + in.to_string() + " but wires are " +
             TypeSeq(std::vector<PType>(first, last)).to_string();
    }
    const TypeSeq out = box_cod(layer.box);
    const auto pos = wires.erase(first, last);
    wires.insert(pos, out.begin(), out.end());
  }
  if (TypeSeq(wires) != cod) {
    return "final wires " + TypeSeq(wires).to_string() + " differ from codomain " +
           cod.to_string();
  }
  return std::nullopt;
}

Diagram::Diagram(TypeSeq dom, TypeSeq cod, std::vector<Layer> layers)
    : dom_(std::move(dom)), cod_(std::move(cod)), layers_(std::move(layers)) {
  if (auto err = check_types(dom_, cod_, layers_)) throw TypeMismatch(*err);
}

Diagram Diagram::id(const TypeSeq& type) { return Diagram(type, type, {}); }

Diagram Diagram::from_box(const Box& box) {
  return Diagram(box_dom(box), box_cod(box), {Layer{box, 0}});
}

Diagram& Diagram::append(const Box& box, std::size_t offset) {
  if (auto err = check_box(box)) throw TypeMismatch(*err);
  const TypeSeq in = box_dom(box);
  if (offset + in.size() > cod_.size() || cod_.slice(offset, in.size()) != in) {
    throw TypeMismatch(
        "cannot apply " + box_label(box) + " at offset " + std::to_string(offset) +
        " to wires " + cod_.to_string());
  }
  cod_ = cod_.slice(0, offset) + box_cod(box) +
         cod_.slice(offset + in.size(), cod_.size() - offset - in.size());
  layers_.push_back(Layer{box, offset});
  return *this;
}

TypeSeq Diagram::wires_before(std::size_t i) const {
  TypeSeq wires = dom_;
  for (std::size_t k = 0; k < i && k < layers_.size(); ++k) {
    const Layer& layer = layers_[k];
    const std::size_t width = box_dom(layer.box).size();
    wires = wires.slice(0, layer.offset) + box_cod(layer.box) +
            wires.slice(layer.offset + width, wires.size() - layer.offset - width);
  }
  return wires;
}

Diagram compose(const Diagram& top, const Diagram& bottom) {
  if (top.cod() != bottom.dom()) {
    throw TypeMismatch(
        "cannot compose: codomain " + top.cod().to_string() + " does not match domain " +
        bottom.dom().to_string());
  }
  std::vector<Layer> layers = top.layers();
  layers.insert(layers.end(), bottom.layers().begin(), bottom.layers().end());
  return Diagram(top.dom(), bottom.cod(), std::move(layers));
}

Diagram tensor(const Diagram& left, const Diagram& right) {
  std::vector<Layer> layers = left.layers();
  const std::size_t shift = left.cod().size();
  for (const Layer& layer : right.layers()) {
    layers.push_back(Layer{layer.box, layer.offset + shift});
  }
  return Diagram(left.dom() + right.dom(), left.cod() + right.cod(), std::move(layers));
}

namespace {

// Exchanges layers k and k + 1 when their windows are disjoint.
void swap_adjacent(std::vector<Layer>& layers, std::size_t k) {
  Layer a = layers[k];
  Layer b = layers[k + 1];
  const std::size_t a_dom = box_dom(a.box).size();
  const std::size_t a_cod = box_cod(a.box).size();
  const std::size_t b_dom = box_dom(b.box).size();
  const std::size_t b_cod = box_cod(b.box).size();
  if (b.offset >= a.offset + a_cod) {
    b.offset = b.offset - a_cod + a_dom;
  } else if (b.offset + b_dom <= a.offset) {
    a.offset = a.offset - b_dom + b_cod;
  } else {
    throw std::logic_error(
        "cannot interchange overlapping layers " + box_label(a.box) + " and " +
        box_label(b.box));
  }
  layers[k] = b;
  layers[k + 1] = a;
}

}  // namespace

Diagram interchange(const Diagram& d, std::size_t from, std::size_t to) {
  std::vector<Layer> layers = d.layers();
  if (from >= layers.size() || to >= layers.size()) {
    throw std::out_of_range("interchange index out of range");
  }
  if (from < to) {
    for (std::size_t k = from; k < to; ++k) swap_adjacent(layers, k);
  } else {
    for (std::size_t k = from; k > to; --k) swap_adjacent(layers, k - 1);
  }
  return Diagram(d.dom(), d.cod(), std::move(layers));
}

BoxCounts count_boxes(const Diagram& d) {
  BoxCounts counts;
  for (const Layer& layer : d.layers()) {
    std::visit(
        overloaded{
            [&](const Word&) { ++counts.words; },
            [&](const Cup&) { ++counts.cups; },
            [&](const Cap&) { ++counts.caps; },
            [&](const Spider&) { ++counts.spiders; },
            [&](const Swap&) { ++counts.swaps; },
        },
        layer.box);
  }
  return counts;
}

}  // namespace qnlp
