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

#include "qnlp/backend/contraction.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <limits>
#include <optional>

namespace qnlp {

namespace {

// A partially contracted tensor whose axes carry global leg labels.
struct Piece {
  DenseTensor<double> t;
  std::vector<long> labels;
};

DenseTensor<double> node_tensor(const TNNode& n, const ParameterStore& ps) {
  if (n.kind == NodeKind::Param) {
    DenseTensor<double> t = ps.tensor(n.symbol);
    if (t.shape() != n.shape)
      throw ShapeMismatch("symbol " + n.symbol + " does not match its node shape");
    return t;
  }
  return DenseTensor<double>::delta(n.shape.size(), n.shape.empty() ? 1 : n.shape[0]);
}

// Removes repeated labels inside a piece by tracing.
void self_trace(Piece& p) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < p.labels.size() && !again; ++i) {
      for (std::size_t j = i + 1; j < p.labels.size(); ++j) {
        if (p.labels[i] != p.labels[j]) continue;
        p.t = trace(p.t, i, j);
        p.labels.erase(p.labels.begin() + static_cast<long>(j));
        p.labels.erase(p.labels.begin() + static_cast<long>(i));
        again = true;
        break;
      }
    }
  }
}

Piece merge(const Piece& a, const Piece& b) {
  std::vector<std::size_t> ax_a, ax_b;
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    for (std::size_t j = 0; j < b.labels.size(); ++j)
      if (a.labels[i] == b.labels[j]) {
        ax_a.push_back(i);
        ax_b.push_back(j);
      }
  Piece out;
  out.t = tensordot(a.t, b.t, ax_a, ax_b);
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (std::find(ax_a.begin(), ax_a.end(), i) == ax_a.end()) out.labels.push_back(a.labels[i]);
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(ax_b.begin(), ax_b.end(), j) == ax_b.end()) out.labels.push_back(b.labels[j]);
  return out;
}

std::size_t merged_size(const Piece& a, const Piece& b) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < a.labels.size(); ++i)
    if (std::find(b.labels.begin(), b.labels.end(), a.labels[i]) == b.labels.end())
      size *= a.t.shape()[i];
  for (std::size_t j = 0; j < b.labels.size(); ++j)
    if (std::find(a.labels.begin(), a.labels.end(), b.labels[j]) == a.labels.end())
      size *= b.t.shape()[j];
  return size;
}

bool shares(const Piece& a, const Piece& b) {
  for (long l : a.labels)
    if (std::find(b.labels.begin(), b.labels.end(), l) != b.labels.end()) return true;
  return false;
}

// Contracts all pieces and orders the result axes by `want`.
DenseTensor<double> reduce_pieces(std::vector<Piece> pieces, const std::vector<long>& want,
                                  ContractionOrder order) {
  for (auto& p : pieces) self_trace(p);
  if (pieces.empty()) pieces.push_back({DenseTensor<double>::scalar(1.0), {}});
  while (pieces.size() > 1) {
    std::size_t bi = 0, bj = 1;
    if (order == ContractionOrder::Greedy) {
      std::optional<std::pair<bool, std::size_t>> best;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        for (std::size_t j = i + 1; j < pieces.size(); ++j) {
          // Prefer connected pairs, then the smallest intermediate.
          std::pair<bool, std::size_t> key{!shares(pieces[i], pieces[j]),
                                           merged_size(pieces[i], pieces[j])};
          if (!best || key < *best) {
            best = key;
            bi = i;
            bj = j;
          }
        }
      }
    }
    Piece m = merge(pieces[bi], pieces[bj]);
    pieces.erase(pieces.begin() + static_cast<long>(bj));
    pieces[bi] = std::move(m);
  }
  Piece& last = pieces.front();
  std::vector<std::size_t> perm;
  for (long l : want) {
    auto it = std::find(last.labels.begin(), last.labels.end(), l);
    if (it == last.labels.end()) throw ShapeMismatch("open leg lost during contraction");
    perm.push_back(static_cast<std::size_t>(it - last.labels.begin()));
  }
  if (perm.size() != last.labels.size()) throw ShapeMismatch("network has dangling legs");
  return permute(last.t, perm);
}

// Leg labels: edge e gets label e, open leg k gets label -(k + 1).
std::vector<std::vector<long>> leg_labels(const TensorNetwork& tn) {
  std::vector<std::vector<long>> labels(tn.nodes.size());
  for (std::size_t i = 0; i < tn.nodes.size(); ++i)
    labels[i].assign(tn.nodes[i].shape.size(), std::numeric_limits<long>::min());
  for (std::size_t e = 0; e < tn.edges.size(); ++e) {
    labels[tn.edges[e].a.node][tn.edges[e].a.leg] = static_cast<long>(e);
    labels[tn.edges[e].b.node][tn.edges[e].b.leg] = static_cast<long>(e);
  }
  for (std::size_t k = 0; k < tn.open.size(); ++k)
    labels[tn.open[k].node][tn.open[k].leg] = -static_cast<long>(k + 1);
  return labels;
}

std::vector<long> open_labels(const TensorNetwork& tn) {
  std::vector<long> out;
  for (std::size_t k = 0; k < tn.open.size(); ++k) out.push_back(-static_cast<long>(k + 1));
  return out;
}

}  // namespace

DenseTensor<double> contract(const TensorNetwork& tn, const ParameterStore& ps,
                             ContractionOrder order) {
  tn.validate();
  auto labels = leg_labels(tn);
  std::vector<Piece> pieces;
  for (std::size_t i = 0; i < tn.nodes.size(); ++i)
    pieces.push_back({node_tensor(tn.nodes[i], ps), labels[i]});
  return reduce_pieces(std::move(pieces), open_labels(tn), order);
}

Eigen::VectorXd contract_grad(const TensorNetwork& tn, const ParameterStore& ps,
                              const DenseTensor<double>& cotangent) {
  tn.validate();
  if (cotangent.shape() != tn.open_shape()) throw ShapeMismatch("cotangent does not match the open legs");
  auto labels = leg_labels(tn);
  std::vector<DenseTensor<double>> tensors;
  for (const auto& n : tn.nodes) tensors.push_back(node_tensor(n, ps));

  // The cotangent closes the open legs; the removed node's legs become the
  // environment's output, labelled past the edge range.
  const long out_base = static_cast<long>(tn.edges.size());
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ps.size()));
  for (std::size_t i = 0; i < tn.nodes.size(); ++i) {
    const TNNode& node = tn.nodes[i];
    if (node.kind != NodeKind::Param) continue;
    std::vector<Piece> pieces;
    for (std::size_t j = 0; j < tn.nodes.size(); ++j)
      if (j != i) pieces.push_back({tensors[j], labels[j]});
    pieces.push_back({cotangent, open_labels(tn)});

    std::vector<long> want;
    const auto& mine = labels[i];
    for (std::size_t leg = 0; leg < mine.size(); ++leg) want.push_back(out_base + static_cast<long>(leg));
    for (std::size_t leg = 0; leg < mine.size(); ++leg) {
      std::optional<std::size_t> partner;
      for (std::size_t other = 0; other < mine.size(); ++other)
        if (other != leg && mine[other] == mine[leg]) partner = other;
      if (partner) {
        // A self-loop; its environment is an identity.
        if (leg < *partner)
          pieces.push_back({DenseTensor<double>::delta(2, node.shape[leg]), {want[leg], want[*partner]}});
        continue;
      }
      bool found = false;
      for (auto& p : pieces) {
        auto it = std::find(p.labels.begin(), p.labels.end(), mine[leg]);
        if (it != p.labels.end()) {
          *it = want[leg];
          found = true;
          break;
        }
      }
      if (!found) throw ShapeMismatch("leg without partner in gradient contraction");
    }
    DenseTensor<double> env = reduce_pieces(std::move(pieces), want, ContractionOrder::Greedy);
    const auto& e = ps.entry(node.symbol);
    grad.segment(static_cast<Eigen::Index>(e.offset), static_cast<Eigen::Index>(e.size())) += env.data();
  }
  return grad;
}

void register_symbols(const TensorNetwork& tn, ParameterStore& ps) {
  for (const auto& n : tn.nodes)
    if (n.kind == NodeKind::Param) ps.add(n.symbol, n.shape);
}

std::vector<DenseTensor<double>> mps_from_tensor(const DenseTensor<double>& full,
                                                 std::size_t bond_dim, std::size_t max_order) {
  const Shape& shape = full.shape();
  auto groups = mps_split(shape.size(), max_order);
  if (groups.size() == 1) return {full};
  using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::vector<DenseTensor<double>> out;
  // Row-major (left bond, remaining legs) block still to be factored.
  Eigen::VectorXd rest = full.data();
  std::size_t left = 1;
  for (std::size_t f = 0; f + 1 < groups.size(); ++f) {
    std::size_t rows = left;
    for (auto leg : groups[f]) rows *= shape[leg];
    const std::size_t cols = static_cast<std::size_t>(rest.size()) / rows;
    Eigen::Map<const RowMatrix> m(rest.data(), static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(Eigen::MatrixXd(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto bond = static_cast<Eigen::Index>(bond_dim);
    const auto keep = std::min<Eigen::Index>(bond, svd.singularValues().size());
    RowMatrix u = RowMatrix::Zero(static_cast<Eigen::Index>(rows), bond);
    u.leftCols(keep) = svd.matrixU().leftCols(keep);
    RowMatrix sv = RowMatrix::Zero(bond, static_cast<Eigen::Index>(cols));
    sv.topRows(keep) = svd.singularValues().head(keep).asDiagonal() * svd.matrixV().leftCols(keep).transpose();

    Shape fshape;
    if (f > 0) fshape.push_back(bond_dim);
    for (auto leg : groups[f]) fshape.push_back(shape[leg]);
    fshape.push_back(bond_dim);
    out.emplace_back(fshape, Eigen::Map<const Eigen::VectorXd>(u.data(), u.size()));
    rest = Eigen::Map<const Eigen::VectorXd>(sv.data(), sv.size());
    left = bond_dim;
  }
  Shape lshape{bond_dim};
  for (auto leg : groups.back()) lshape.push_back(shape[leg]);
  out.emplace_back(lshape, Eigen::Map<const Eigen::VectorXd>(rest.data(), rest.size()));
  return out;
}

}  // namespace qnlp
