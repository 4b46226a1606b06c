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
#include "qnlp/errors.hpp"

namespace qnlp {

namespace {

using Wire = std::vector<std::size_t>;

void word_block(Circuit& c, const Word& w, const std::vector<std::size_t>& qs,
                std::size_t n_layers) {
  if (qs.size() == 1) {
    const std::size_t q = qs[0];
    c.ops.push_back({GateKind::Rx, {q}, Angle::sym(symbol_name(w.token, w.cod, 0))});
    c.ops.push_back({GateKind::Rz, {q}, Angle::sym(symbol_name(w.token, w.cod, 1))});
    c.ops.push_back({GateKind::Rx, {q}, Angle::sym(symbol_name(w.token, w.cod, 2))});
    return;
  }
  std::size_t index = 0;
  for (std::size_t layer = 0; layer < n_layers; ++layer) {
    for (auto q : qs) c.ops.push_back({GateKind::H, {q}, {}});
    for (std::size_t i = 0; i + 1 < qs.size(); ++i) {
      c.ops.push_back({GateKind::CRz, {qs[i], qs[i + 1]},
                       Angle::sym(symbol_name(w.token, w.cod, index++))});
    }
  }
}

}  // namespace

Circuit iqp_ansatz(const Diagram& d, const TypeSizes& qubits, std::size_t n_layers) {
  if (n_layers == 0) throw InvalidConfig("IQP ansatz needs at least one layer");
  Circuit c;
  std::vector<Wire> wires;
  auto fresh = [&](std::size_t n) {
    Wire w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(c.n_qubits++);
    return w;
  };
  // Domain wires enter as qubits prepared in |0>.
  for (const PType& t : d.dom()) wires.push_back(fresh(size_of(qubits, t)));

  for (const Layer& layer : d.layers()) {
    const std::size_t off = layer.offset;
    if (const auto* w = std::get_if<Word>(&layer.box)) {
      if (!w->dom.empty())
        throw UnsupportedBox("IQP ansatz cannot compile word process " + box_label(layer.box));
      std::vector<Wire> out;
      std::vector<std::size_t> all;
      for (const PType& t : w->cod) {
        out.push_back(fresh(size_of(qubits, t)));
        all.insert(all.end(), out.back().begin(), out.back().end());
      }
      if (!all.empty()) word_block(c, *w, all, n_layers);
      wires.insert(wires.begin() + off, out.begin(), out.end());
    } else if (std::get_if<Cup>(&layer.box)) {
      const Wire a = wires[off];
      const Wire b = wires[off + 1];
      const std::size_t m = a.size();
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t qa = a[m - 1 - j];
        const std::size_t qb = b[j];
        c.ops.push_back({GateKind::CX, {qa, qb}, {}});
        c.ops.push_back({GateKind::H, {qa}, {}});
        c.postselect.push_back({qa, 0});
        c.postselect.push_back({qb, 0});
      }
      wires.erase(wires.begin() + off, wires.begin() + off + 2);
    } else if (const auto* cap = std::get_if<Cap>(&layer.box)) {
      const std::size_t m = size_of(qubits, PType{cap->base, cap->z});
      Wire a = fresh(m);
      Wire b = fresh(m);
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t qa = a[m - 1 - j];
        const std::size_t qb = b[j];
        c.ops.push_back({GateKind::H, {qa}, {}});
        c.ops.push_back({GateKind::CX, {qa, qb}, {}});
      }
      wires.insert(wires.begin() + off, {a, b});
    } else {
      throw UnsupportedBox("IQP ansatz cannot compile " + box_label(layer.box));
    }
  }
  for (const Wire& w : wires) c.open.insert(c.open.end(), w.begin(), w.end());
  return c;
}

}  // namespace qnlp
