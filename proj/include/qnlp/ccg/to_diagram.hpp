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
#include <optional>
#include <string>
#include <vector>

#include "qnlp/ccg/tree.hpp"
#include "qnlp/pregroup/diagram.hpp"

namespace qnlp::ccg {

/// Converts a derivation into a pregroup diagram with dom [] and cod
/// cat_to_typeseq(root). Leaves become words in sentence order; the
/// combinators wire them as follows:
///   FA, BA, FC, BC   cups across the junction of the two constituents
///   FX, BX           swaps carrying the crossed wires out of the way, then cups
///   TR               nested caps supplying T(X) . T(X)^l (or its mirror)
///   LEX              identity
///   UNARY            a bridge word of type T(child)^r . T(parent)
///   CONJ             the conj or punctuation word is retyped as a modifier
///                    of the neighbouring constituent
/// Throws DerivationError when the constituent types do not cancel.
Diagram tree_to_diagram(const CCGTree& tree);

struct SectionEntry {
  std::string id;
  std::optional<Diagram> diagram;
  std::string error;  // set when diagram is empty
};

/// Parses and converts every derivation in an AUTO file, or in every
/// `*.auto` file of a directory (sorted by name). Per-derivation failures
/// are recorded in the entry; ids come from the preceding `ID=` line or
/// fall back to `<file>:<line>`. Throws InvalidInput for unreadable paths.
std::vector<SectionEntry> section_to_diagrams(const std::filesystem::path& path);

}  // namespace qnlp::ccg
