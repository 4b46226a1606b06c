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

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qnlp/pregroup/types.hpp"

namespace qnlp {

/// A word state (or, with non-empty dom, a word process).
struct Word {
  std::string token;
  TypeSeq dom;
  TypeSeq cod;
  bool operator==(const Word&) const = default;
};

/// Evaluation a^(z) . a^(z+1) -> 1.
struct Cup {
  AtomicType base;
  int z = 0;
  bool operator==(const Cup&) const = default;
};

/// Coevaluation 1 -> a^(z+1) . a^(z). With this orientation both snake
/// equations hold without sign bookkeeping:
///   (id(a^z) x Cap(z)) ; (Cup(z) x id(a^z))       = id(a^z)
///   (Cap(z) x id(a^(z+1))) ; (id x Cup(z))        = id(a^(z+1))
struct Cap {
  AtomicType base;
  int z = 0;
  bool operator==(const Cap&) const = default;
};

/// Commutative merge/copy node; every leg carries a^(z).
struct Spider {
  AtomicType base;
  int z = 0;
  std::size_t n_in = 1;
  std::size_t n_out = 1;
  bool operator==(const Spider&) const = default;
};

/// Symmetry left . right -> right . left.
struct Swap {
  PType left;
  PType right;
  bool operator==(const Swap&) const = default;
};

using Box = std::variant<Word, Cup, Cap, Spider, Swap>;

TypeSeq box_dom(const Box& box);
TypeSeq box_cod(const Box& box);
/// Short human-readable description, e.g. `Word(John: 1 -> n)`.
std::string box_label(const Box& box);

/// One box applied to the wire window starting at `offset`.
struct Layer {
  Box box;
  std::size_t offset = 0;
  bool operator==(const Layer&) const = default;
};

/// A string diagram stored as a list of layers, one box per layer, applied
/// top to bottom. Instances always type-check: every constructor and
/// mutator validates and throws TypeMismatch otherwise.
class Diagram {
 public:
  /// The empty diagram (identity on the unit).
  Diagram() = default;
  Diagram(TypeSeq dom, TypeSeq cod, std::vector<Layer> layers);

  static Diagram id(const TypeSeq& type);
  static Diagram from_box(const Box& box);

  const TypeSeq& dom() const { return dom_; }
  const TypeSeq& cod() const { return cod_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t size() const { return layers_.size(); }

  /// Appends `box` at `offset` below the current codomain.
  Diagram& append(const Box& box, std::size_t offset);

  /// Wire types just above layer `i` (i == size() gives the codomain).
  TypeSeq wires_before(std::size_t i) const;

  bool operator==(const Diagram&) const = default;

 private:
  TypeSeq dom_;
  TypeSeq cod_;
  std::vector<Layer> layers_;
};

/// Type-checks a raw layer list; returns a description of the first
/// problem, or nothing when the layers are well typed.
std::optional<std::string> check_types(
    const TypeSeq& dom, const TypeSeq& cod, const std::vector<Layer>& layers);

/// Sequential composition: `top` then `bottom`. Throws TypeMismatch when
/// top.cod() != bottom.dom().
Diagram compose(const Diagram& top, const Diagram& bottom);

/// Parallel composition; `right` is placed to the right of `left`.
Diagram tensor(const Diagram& left, const Diagram& right);

/// Moves layer `from` to position `to` by successive interchanges of
/// adjacent, non-overlapping layers. Throws std::logic_error when a layer
/// in between shares wires with the moved one.
Diagram interchange(const Diagram& d, std::size_t from, std::size_t to);

/// Removes every yankable cap/cup pair (snake), iterating to a fixed point.
Diagram normal_form(const Diagram& d);

/// Counts of each box kind.
struct BoxCounts {
  std::size_t words = 0, cups = 0, caps = 0, spiders = 0, swaps = 0;
};
BoxCounts count_boxes(const Diagram& d);

}  // namespace qnlp
