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

#include "qnlp/ansatz/circuit.hpp"

#include <json.hpp>
#include <set>
#include <sstream>

#include "qnlp/errors.hpp"

namespace qnlp {

using ordered_json = nlohmann::ordered_json;

std::string gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::Rx: return "Rx";
    case GateKind::Rz: return "Rz";
    case GateKind::CRz: return "CRz";
    case GateKind::CX: return "CX";
  }
  return "?";
}

namespace {

bool has_angle(GateKind k) {
  return k == GateKind::Rx || k == GateKind::Rz || k == GateKind::CRz;
}
std::size_t arity(GateKind k) {
  return k == GateKind::CRz || k == GateKind::CX ? 2 : 1;
}

}  // namespace

std::vector<std::string> Circuit::symbols() const {
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const Gate& g : ops)
    if (g.angle.is_symbol() && seen.insert(g.angle.symbol).second) out.push_back(g.angle.symbol);
  return out;
}

void Circuit::validate() const {
  for (const Gate& g : ops) {
    if (g.qubits.size() != arity(g.kind))
      throw InvalidInput(gate_name(g.kind) + " has wrong number of qubits");
    for (auto q : g.qubits)
      if (q >= n_qubits) throw InvalidInput("qubit index out of range");
    if (g.qubits.size() == 2 && g.qubits[0] == g.qubits[1])
      throw InvalidInput(gate_name(g.kind) + " acts twice on one qubit");
  }
  std::vector<int> seen(n_qubits, 0);
  for (const auto& p : postselect) {
    if (p.qubit >= n_qubits || (p.bit != 0 && p.bit != 1))
      throw InvalidInput("bad postselection entry");
    ++seen[p.qubit];
  }
  for (auto q : open) {
    if (q >= n_qubits) throw InvalidInput("open qubit out of range");
    ++seen[q];
  }
  for (std::size_t q = 0; q < n_qubits; ++q)
    if (seen[q] != 1)
      throw InvalidInput("qubit " + std::to_string(q) +
                         " must be exactly one of open or postselected");
}

std::string to_json(const Circuit& c) {
  ordered_json j;
  j["n_qubits"] = c.n_qubits;
  ordered_json ops = ordered_json::array();
  for (const Gate& g : c.ops) {
    ordered_json o;
    o["g"] = gate_name(g.kind);
    o["q"] = g.qubits;
    if (has_angle(g.kind)) {
      if (g.angle.is_symbol()) o["p"] = g.angle.symbol;
      else o["p"] = g.angle.value;
    }
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  ordered_json post = ordered_json::array();
  for (const auto& p : c.postselect) post.push_back({p.qubit, p.bit});
  j["postselect"] = std::move(post);
  j["open"] = c.open;
  return j.dump();
}

Circuit circuit_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  Circuit c;
  try {
    c.n_qubits = j.at("n_qubits").get<std::size_t>();
    for (const auto& o : j.at("ops")) {
      Gate g;
      std::string name = o.at("g").get<std::string>();
      if (name == "H") g.kind = GateKind::H;
      else if (name == "Rx") g.kind = GateKind::Rx;
      else if (name == "Rz") g.kind = GateKind::Rz;
      else if (name == "CRz") g.kind = GateKind::CRz;
      else if (name == "CX") g.kind = GateKind::CX;
      else throw ParseError("unknown gate '" + name + "'");
      g.qubits = o.at("q").get<std::vector<std::size_t>>();
      if (has_angle(g.kind)) {
        const auto& p = o.at("p");
        if (p.is_string()) g.angle = Angle::sym(p.get<std::string>());
        else g.angle = Angle::constant(p.get<double>());
      }
      c.ops.push_back(std::move(g));
    }
    for (const auto& p : j.at("postselect")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("postselect entries are [qubit, bit]");
      c.postselect.push_back({p[0].get<std::size_t>(), p[1].get<int>()});
    }
    c.open = j.at("open").get<std::vector<std::size_t>>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("circuit schema: ") + e.what());
  }
  try {
    c.validate();
  } catch (const InvalidInput& e) {
    throw ParseError(std::string("circuit schema: ") + e.what());
  }
  return c;
}

TypeSizes parse_type_sizes(const std::string& text) {
  TypeSizes out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto first = item.find_first_not_of(' ');
    if (first == std::string::npos) continue;
    auto eq = item.find('=');
    if (eq == std::string::npos) throw InvalidConfig("expected type=size, got '" + item + "'");
    std::string name = item.substr(first, eq - first);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    std::string value = item.substr(eq + 1);
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(value, &used);
    } catch (const std::exception&) {
      throw InvalidConfig("bad size '" + value + "' for type " + name);
    }
    if (value.find_first_not_of(' ', used) != std::string::npos || v < 1 || name.empty())
      throw InvalidConfig("bad size '" + value + "' for type " + name);
    out[name] = static_cast<std::size_t>(v);
  }
  if (out.empty()) throw InvalidConfig("empty type size map");
  return out;
}

std::size_t size_of(const TypeSizes& sizes, const PType& t) {
  auto it = sizes.find(t.base.name());
  if (it == sizes.end()) throw InvalidConfig("no size given for type " + t.base.name());
  return it->second;
}

std::string symbol_name(const std::string& token, const TypeSeq& type, std::size_t index) {
  return token + "__" + type.to_string() + "__" + std::to_string(index);
}

}  // namespace qnlp
