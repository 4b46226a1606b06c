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
#include <map>
#include <string>
#include <vector>

#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

/// Gate angle: a named symbol or a constant.
struct Angle {
  std::string symbol;  // empty for a constant
  double value = 0.0;

  static Angle sym(std::string name) { return {std::move(name), 0.0}; }
  static Angle constant(double v) { return {{}, v}; }
  bool is_symbol() const { return !symbol.empty(); }
  bool operator==(const Angle&) const = default;
};

enum class GateKind { H, Rx, Rz, CRz, CX };

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<std::size_t> qubits;  // (ctrl, tgt) for two-qubit gates
  Angle angle;                      // Rx, Rz, CRz only

  bool two_qubit() const { return qubits.size() == 2; }
  bool operator==(const Gate&) const = default;
};

std::string gate_name(GateKind kind);

struct Postselection {
  std::size_t qubit = 0;
  int bit = 0;
  bool operator==(const Postselection&) const = default;
};

/// Gate list acting on |0...0>, with postselected and open (output) qubits.
struct Circuit {
  std::size_t n_qubits = 0;
  std::vector<Gate> ops;
  std::vector<Postselection> postselect;
  std::vector<std::size_t> open;

  /// Distinct symbols in order of first use.
  std::vector<std::string> symbols() const;
  /// Throws InvalidInput when an index is out of range or the open and
  /// postselected sets overlap or leave a qubit unaccounted for.
  void validate() const;

  bool operator==(const Circuit&) const = default;
};

/// `{"n_qubits":k,"ops":[{"g":"CRz","q":[0,1],"p":"sym"}],"postselect":[[q,0]],"open":[...]}`
/// Constant angles are written as numbers.
std::string to_json(const Circuit& c);
/// Throws ParseError for malformed documents.
Circuit circuit_from_json(const std::string& text);

/// Number of qubits (or tensor dimension) per atomic type; adjoints inherit
/// the base value.
using TypeSizes = std::map<std::string, std::size_t>;
/// Parses `n=1,s=2`. Throws InvalidConfig for malformed entries or values < 1.
TypeSizes parse_type_sizes(const std::string& text);
/// Throws InvalidConfig when the base has no entry.
std::size_t size_of(const TypeSizes& sizes, const PType& t);

/// Symbol name `<token>__<type>__<index>`.
std::string symbol_name(const std::string& token, const TypeSeq& type, std::size_t index);

/// IQP ansatz. Each wire gets sizes(base) qubits. A word on one qubit gets
/// Rx Rz Rx; a word on k >= 2 qubits gets `n_layers` rounds of H on every
/// qubit followed by a CRz ladder on (i, i+1). Cups become CX, H and
/// postselection of both qubits on 0; caps prepare a Bell pair with H, CX.
/// Multi-qubit wires are paired in nested order. Domain wires start in |0>.
/// Throws UnsupportedBox for spiders, swaps and word processes and
/// InvalidConfig for n_layers == 0.
Circuit iqp_ansatz(const Diagram& d, const TypeSizes& qubits, std::size_t n_layers);

}  // namespace qnlp
