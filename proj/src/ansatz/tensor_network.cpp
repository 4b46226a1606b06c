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

#include "qnlp/ansatz/tensor_network.hpp"

#include <json.hpp>
#include <set>

#include "qnlp/errors.hpp"

namespace qnlp {

using ordered_json = nlohmann::ordered_json;

std::vector<std::size_t> TensorNetwork::open_shape() const {
  std::vector<std::size_t> out;
  for (const auto& e : open) out.push_back(dim(e));
  return out;
}

std::vector<std::string> TensorNetwork::symbols() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& n : nodes)
    if (n.kind == NodeKind::Param && seen.insert(n.symbol).second) out.push_back(n.symbol);
  return out;
}

void TensorNetwork::validate() const {
  std::vector<std::vector<int>> used(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) used[i].assign(nodes[i].shape.size(), 0);
  auto mark = [&](const Endpoint& e) {
    if (e.node >= nodes.size() || e.leg >= nodes[e.node].shape.size())
      throw ShapeMismatch("endpoint out of range");
    ++used[e.node][e.leg];
  };
  for (const auto& e : edges) {
    mark(e.a);
    mark(e.b);
    if (dim(e.a) != dim(e.b))
      throw ShapeMismatch("edge joins legs of dimension " + std::to_string(dim(e.a)) +
                          " and " + std::to_string(dim(e.b)));
  }
  for (const auto& e : open) mark(e);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t l = 0; l < used[i].size(); ++l)
      if (used[i][l] != 1)
        throw ShapeMismatch("leg " + std::to_string(l) + " of node " + std::to_string(i) +
                            " is used " + std::to_string(used[i][l]) + " times");
}

namespace {

std::string kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Param: return "param";
    case NodeKind::Delta: return "delta";
    case NodeKind::Copy: return "copy";
  }
  return "?";
}

ordered_json endpoint_json(const Endpoint& e) { return ordered_json::array({e.node, e.leg}); }

Endpoint endpoint_from(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("endpoints are [node, leg]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace

std::string to_json(const TensorNetwork& tn) {
  ordered_json j;
  ordered_json nodes = ordered_json::array();
  for (std::size_t i = 0; i < tn.nodes.size(); ++i) {
    const auto& n = tn.nodes[i];
    ordered_json o;
    o["id"] = i;
    o["kind"] = kind_name(n.kind);
    if (n.kind == NodeKind::Param) o["symbol"] = n.symbol;
    o["shape"] = n.shape;
    nodes.push_back(std::move(o));
  }
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : tn.edges) edges.push_back({endpoint_json(e.a), endpoint_json(e.b)});
  j["edges"] = std::move(edges);
  ordered_json open = ordered_json::array();
  for (const auto& e : tn.open) open.push_back(endpoint_json(e));
  j["open"] = std::move(open);
  return j.dump();
}

TensorNetwork network_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  TensorNetwork tn;
  try {
    for (const auto& o : j.at("nodes")) {
      TNNode n;
      std::string kind = o.at("kind").get<std::string>();
      if (kind == "param") {
        n.kind = NodeKind::Param;
        n.symbol = o.at("symbol").get<std::string>();
      } else if (kind == "delta") {
        n.kind = NodeKind::Delta;
      } else if (kind == "copy") {
        n.kind = NodeKind::Copy;
      } else {
        throw ParseError("unknown node kind '" + kind + "'");
      }
      n.shape = o.at("shape").get<std::vector<std::size_t>>();
      tn.nodes.push_back(std::move(n));
    }
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edges are [endpoint, endpoint]");
      tn.edges.push_back({endpoint_from(e[0]), endpoint_from(e[1])});
    }
    for (const auto& e : j.at("open")) tn.open.push_back(endpoint_from(e));
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("network schema: ") + e.what());
  }
  try {
    tn.validate();
  } catch (const ShapeMismatch& e) {
    throw ParseError(std::string("network schema: ") + e.what());
  }
  return tn;
}

std::vector<std::vector<std::size_t>> mps_split(std::size_t order, std::size_t max_order) {
  if (max_order < 3) throw InvalidConfig("MPS ansatz needs max_order >= 3");
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> legs(order);
  for (std::size_t i = 0; i < order; ++i) legs[i] = i;
  if (order <= max_order) {
    out.push_back(legs);
    return out;
  }
  std::size_t next = max_order - 1;
  out.emplace_back(legs.begin(), legs.begin() + next);
  while (order - next > max_order - 1) {
    out.emplace_back(legs.begin() + next, legs.begin() + next + max_order - 2);
    next += max_order - 2;
  }
  out.emplace_back(legs.begin() + next, legs.end());
  return out;
}

std::vector<std::vector<std::size_t>> spider_split(std::size_t order, std::size_t max_order) {
  if (max_order < 2) throw InvalidConfig("spider ansatz needs max_order >= 2");
  std::vector<std::vector<std::size_t>> out;
  if (order <= max_order) {
    std::vector<std::size_t> legs(order);
    for (std::size_t i = 0; i < order; ++i) legs[i] = i;
    out.push_back(legs);
    return out;
  }
  for (std::size_t start = 0; start + 1 < order; start += max_order - 1) {
    std::vector<std::size_t> chunk;
    for (std::size_t i = start; i < std::min(order, start + max_order); ++i) chunk.push_back(i);
    out.push_back(chunk);
  }
  return out;
}

}  // namespace qnlp
