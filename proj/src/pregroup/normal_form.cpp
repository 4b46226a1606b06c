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

// Snake removal for rigid diagrams. A cap leg is followed down to the box
// consuming it; when that box is a cup joined on the correct side the pair
// is a snake. Boxes between the two that sit left or right of the followed
// wire are interchanged out of the way until cap and cup are adjacent, at
// which point the pair composes to an identity and is deleted.

#include <variant>

#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {
namespace {

struct WireTrace {
  std::size_t consumer;  // layer index, or layers.size() for the codomain
  std::size_t position;  // wire index just above the consumer
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

WireTrace follow_wire(const std::vector<Layer>& layers, std::size_t from, std::size_t j) {
  WireTrace trace{layers.size(), j, {}, {}};
  for (std::size_t i = from + 1; i < layers.size(); ++i) {
    const Layer& layer = layers[i];
    const std::size_t width = box_dom(layer.box).size();
    if (layer.offset <= j && j < layer.offset + width) {
      trace.consumer = i;
      trace.position = j;
      return trace;
    }
    if (layer.offset <= j) {
      j = j + box_cod(layer.box).size() - width;
      trace.left.push_back(i);
    } else {
      trace.right.push_back(i);
    }
  }
  trace.position = j;
  return trace;
}

struct Snake {
  std::size_t cap;
  std::size_t cup;
  bool left;  // cap's left leg feeds the cup's right input
};

std::optional<Snake> find_snake(const std::vector<Layer>& layers) {
  for (std::size_t c = 0; c < layers.size(); ++c) {
    if (!std::holds_alternative<Cap>(layers[c].box)) continue;
    for (bool left : {true, false}) {
      const std::size_t wire = layers[c].offset + (left ? 0 : 1);
      const WireTrace t = follow_wire(layers, c, wire);
      if (t.consumer == layers.size()) continue;
      if (!std::holds_alternative<Cup>(layers[t.consumer].box)) continue;
      const std::size_t cup_off = layers[t.consumer].offset;
      if (left ? cup_off + 1 == t.position : cup_off == t.position) {
        return Snake{c, t.consumer, left};
      }
    }
  }
  return std::nullopt;
}

Diagram yank(Diagram d, Snake snake) {
  for (;;) {
    const auto& layers = d.layers();
    const std::size_t wire = layers[snake.cap].offset + (snake.left ? 0 : 1);
    const WireTrace t = follow_wire(layers, snake.cap, wire);
    // Boxes on the far side of the continuing leg go above the cap; boxes on
    // the side of the cup's other input go below the cup.
    const auto& above = snake.left ? t.left : t.right;
    const auto& below = snake.left ? t.right : t.left;
    std::vector<std::size_t> above_between, below_between;
    for (std::size_t i : above) {
      if (i < snake.cup) above_between.push_back(i);
    }
    for (std::size_t i : below) {
      if (i < snake.cup) below_between.push_back(i);
    }
    if (!above_between.empty()) {
      d = interchange(d, above_between.front(), snake.cap);
      ++snake.cap;
      continue;
    }
    if (!below_between.empty()) {
      d = interchange(d, below_between.back(), snake.cup);
      --snake.cup;
      continue;
    }
    break;
  }
  std::vector<Layer> layers;
  layers.reserve(d.size() - 2);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i != snake.cap && i != snake.cup) layers.push_back(d.layers()[i]);
  }
  return Diagram(d.dom(), d.cod(), std::move(layers));
}

}  // namespace

Diagram normal_form(const Diagram& d) {
  Diagram out = d;
  while (auto snake = find_snake(out.layers())) out = yank(std::move(out), *snake);
  return out;
}

}  // namespace qnlp
