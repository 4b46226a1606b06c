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

#include <functional>

#include "qnlp/ansatz/tensor_network.hpp"
#include "qnlp/errors.hpp"

namespace qnlp {

namespace {

// Adds the nodes for one word state; returns the endpoint of each cod wire.
using WordBuilder = std::function<std::vector<Endpoint>(
    TensorNetwork&, const Word&, const std::vector<std::size_t>& dims)>;

std::vector<Endpoint> full_word(TensorNetwork& tn, const Word& w,
                                const std::vector<std::size_t>& dims) {
  const std::size_t id = tn.nodes.size();
  tn.nodes.push_back({NodeKind::Param, symbol_name(w.token, w.cod, 0), dims});
  std::vector<Endpoint> out;
  for (std::size_t i = 0; i < dims.size(); ++i) out.push_back({id, i});
  return out;
}

TensorNetwork build(const Diagram& d, const TypeSizes& sizes, const WordBuilder& word) {
  if (!d.dom().empty())
    throw InvalidInput("tensor ansatz expects a diagram with empty domain, got " + d.dom().to_string());
  TensorNetwork tn;
  std::vector<Endpoint> wires;
  for (const Layer& layer : d.layers()) {
    const std::size_t off = layer.offset;
    if (const auto* w = std::get_if<Word>(&layer.box)) {
      if (!w->dom.empty())
        throw UnsupportedBox("tensor ansatz cannot compile word process " + box_label(layer.box));
      std::vector<std::size_t> dims;
      for (const PType& t : w->cod) dims.push_back(size_of(sizes, t));
      auto out = word(tn, *w, dims);
      wires.insert(wires.begin() + off, out.begin(), out.end());
    } else if (std::get_if<Cup>(&layer.box)) {
      tn.edges.push_back({wires[off], wires[off + 1]});
      wires.erase(wires.begin() + off, wires.begin() + off + 2);
    } else if (const auto* cap = std::get_if<Cap>(&layer.box)) {
      const std::size_t dim = size_of(sizes, PType{cap->base, cap->z});
      const std::size_t id = tn.nodes.size();
      tn.nodes.push_back({NodeKind::Delta, {}, {dim, dim}});
      wires.insert(wires.begin() + off, {Endpoint{id, 0}, Endpoint{id, 1}});
    } else if (const auto* sp = std::get_if<Spider>(&layer.box)) {
      const std::size_t dim = size_of(sizes, PType{sp->base, sp->z});
      const std::size_t id = tn.nodes.size();
      tn.nodes.push_back({NodeKind::Copy, {}, std::vector<std::size_t>(sp->n_in + sp->n_out, dim)});
      for (std::size_t i = 0; i < sp->n_in; ++i) tn.edges.push_back({wires[off + i], {id, i}});
      wires.erase(wires.begin() + off, wires.begin() + off + sp->n_in);
      std::vector<Endpoint> out;
      for (std::size_t i = 0; i < sp->n_out; ++i) out.push_back({id, sp->n_in + i});
      wires.insert(wires.begin() + off, out.begin(), out.end());
    } else {
      std::swap(wires[off], wires[off + 1]);
    }
  }
  tn.open = wires;
  return tn;
}

}  // namespace

TensorNetwork tensor_ansatz(const Diagram& d, const TypeSizes& dims) {
  return build(d, dims, full_word);
}

TensorNetwork mps_ansatz(const Diagram& d, const TypeSizes& dims,
                         std::size_t bond_dim, std::size_t max_order) {
  if (max_order < 3) throw InvalidConfig("MPS ansatz needs max_order >= 3, got " + std::to_string(max_order));
  if (bond_dim == 0) throw InvalidConfig("MPS bond dimension must be positive");
  auto word = [&](TensorNetwork& tn, const Word& w, const std::vector<std::size_t>& shape) {
    auto groups = mps_split(shape.size(), max_order);
    if (groups.size() == 1) return full_word(tn, w, shape);
    std::vector<Endpoint> out;
    for (std::size_t f = 0; f < groups.size(); ++f) {
      const bool first = f == 0;
      const bool last = f + 1 == groups.size();
      std::vector<std::size_t> fshape;
      if (!first) fshape.push_back(bond_dim);
      for (auto leg : groups[f]) fshape.push_back(shape[leg]);
      if (!last) fshape.push_back(bond_dim);
      const std::size_t id = tn.nodes.size();
      tn.nodes.push_back({NodeKind::Param, symbol_name(w.token, w.cod, f), fshape});
      const std::size_t base = first ? 0 : 1;
      for (std::size_t i = 0; i < groups[f].size(); ++i) out.push_back({id, base + i});
      if (!first) tn.edges.push_back({{id - 1, tn.nodes[id - 1].shape.size() - 1}, {id, 0}});
    }
    return out;
  };
  return build(d, dims, word);
}

TensorNetwork spider_ansatz(const Diagram& d, const TypeSizes& dims, std::size_t max_order) {
  if (max_order < 2) throw InvalidConfig("spider ansatz needs max_order >= 2, got " + std::to_string(max_order));
  auto word = [&](TensorNetwork& tn, const Word& w, const std::vector<std::size_t>& shape) {
    auto groups = spider_split(shape.size(), max_order);
    if (groups.size() == 1) return full_word(tn, w, shape);
    std::vector<Endpoint> out(shape.size());
    std::vector<std::size_t> factor_ids;
    for (std::size_t f = 0; f < groups.size(); ++f) {
      std::vector<std::size_t> fshape;
      for (auto leg : groups[f]) fshape.push_back(shape[leg]);
      factor_ids.push_back(tn.nodes.size());
      tn.nodes.push_back({NodeKind::Param, symbol_name(w.token, w.cod, f), fshape});
    }
    for (std::size_t f = 0; f < groups.size(); ++f) {
      const auto& g = groups[f];
      const std::size_t id = factor_ids[f];
      const std::size_t lo = f == 0 ? 0 : 1;
      const std::size_t hi = f + 1 == groups.size() ? g.size() : g.size() - 1;
      for (std::size_t i = lo; i < hi; ++i) out[g[i]] = {id, i};
      if (f + 1 < groups.size()) {
        const std::size_t wire = g.back();
        const std::size_t copy = tn.nodes.size();
        tn.nodes.push_back({NodeKind::Copy, {}, {shape[wire], shape[wire], shape[wire]}});
        tn.edges.push_back({{id, g.size() - 1}, {copy, 0}});
        tn.edges.push_back({{factor_ids[f + 1], 0}, {copy, 1}});
        out[wire] = {copy, 2};
      }
    }
    return out;
  };
  return build(d, dims, word);
}

}  // namespace qnlp
