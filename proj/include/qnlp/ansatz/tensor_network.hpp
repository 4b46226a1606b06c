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
#include <string>
#include <vector>

#include "qnlp/ansatz/circuit.hpp"
#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

enum class NodeKind {
  Param,  // parameter tensor named by `symbol`
  Delta,  // order-2 identity from a cap
  Copy,   // generalized Kronecker delta from a spider or a split
};

struct TNNode {
  NodeKind kind = NodeKind::Param;
  std::string symbol;               // Param only
  std::vector<std::size_t> shape;   // one dimension per leg
  bool operator==(const TNNode&) const = default;
};

struct Endpoint {
  std::size_t node = 0;
  std::size_t leg = 0;
  bool operator==(const Endpoint&) const = default;
};

struct TNEdge {
  Endpoint a;
  Endpoint b;
  bool operator==(const TNEdge&) const = default;
};

/// Nodes joined by edges; legs without an edge are open and listed in
/// `open` in the order of the diagram codomain.
struct TensorNetwork {
  std::vector<TNNode> nodes;
  std::vector<TNEdge> edges;
  std::vector<Endpoint> open;

  std::size_t dim(const Endpoint& e) const { return nodes[e.node].shape[e.leg]; }
  std::vector<std::size_t> open_shape() const;
  /// Distinct Param symbols in node order.
  std::vector<std::string> symbols() const;
  /// Throws ShapeMismatch when a leg is not covered exactly once or an
  /// edge joins legs of different dimension.
  void validate() const;

  bool operator==(const TensorNetwork&) const = default;
};

std::string to_json(const TensorNetwork& tn);
/// Throws ParseError for malformed documents.
TensorNetwork network_from_json(const std::string& text);

/// One Param node per word state, shaped by the dimensions of its cod.
/// Cups become edges, caps order-2 Delta nodes, spiders Copy nodes and
/// swaps exchange dangling legs. Throws InvalidInput for a non-empty dom
/// and UnsupportedBox for word processes.
TensorNetwork tensor_ansatz(const Diagram& d, const TypeSizes& dims);

/// As tensor_ansatz, but words of order > max_order become a chain: first
/// factor (max_order - 1 data legs, bond), interior factors (bond,
/// max_order - 2 data legs, bond), last factor (bond, rest). Throws
/// InvalidConfig when max_order < 3 or bond_dim == 0.
TensorNetwork mps_ansatz(const Diagram& d, const TypeSizes& dims,
                         std::size_t bond_dim, std::size_t max_order);

/// As tensor_ansatz, but words of order > max_order are cut into chunks of
/// max_order consecutive legs, neighbours sharing one boundary wire through
/// a three-leg Copy node. Throws InvalidConfig when max_order < 2.
TensorNetwork spider_ansatz(const Diagram& d, const TypeSizes& dims, std::size_t max_order);

/// Leg groups of each factor produced by the MPS split of an order-k word.
std::vector<std::vector<std::size_t>> mps_split(std::size_t order, std::size_t max_order);
/// Leg groups of each factor produced by the spider split of an order-k word.
std::vector<std::vector<std::size_t>> spider_split(std::size_t order, std::size_t max_order);

}  // namespace qnlp
