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

#include <string>
#include <string_view>

#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

/// Compact, canonical JSON:
///   {"dom":[TypeRef],"cod":[TypeRef],"layers":[{"box":BoxRef,"offset":int}]}
/// TypeRef = {"base":"n","z":-1}; BoxRef carries "kind" in
/// {"word","cup","cap","spider","swap"}.
std::string to_json(const Diagram& d);

/// Inverse of to_json. Throws ParseError for malformed documents (with a
/// byte offset for syntax errors) and for ill-typed diagrams.
Diagram from_json(
    std::string_view text, const TypeRegistry& registry = TypeRegistry::standard());

/// Deterministic SVG drawing: words as labelled boxes (class "box"), cups
/// and caps as arcs (class "arc"), spiders as dots (class "spider"), wires
/// as lines (class "wire") labelled with their pregroup types.
std::string render_svg(const Diagram& d);

}  // namespace qnlp
