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

#include <Eigen/Core>

#include "qnlp/ansatz/tensor_network.hpp"
#include "qnlp/backend/dense_tensor.hpp"
#include "qnlp/backend/parameter_store.hpp"

namespace qnlp {

enum class ContractionOrder {
  Greedy,      // pair giving the smallest intermediate first
  Sequential,  // fold nodes in index order
};

/// Contracts the network; the result has one axis per open leg, in order.
/// Throws UnboundSymbol or ShapeMismatch.
DenseTensor<double> contract(const TensorNetwork& tn, const ParameterStore& ps,
                             ContractionOrder order = ContractionOrder::Greedy);

/// Gradient of <cotangent, contract(tn, ps)> with respect to every value in
/// `ps`, aligned with ps.values(). Each Param node contributes its
/// environment; nodes sharing a symbol add up.
Eigen::VectorXd contract_grad(const TensorNetwork& tn, const ParameterStore& ps,
                              const DenseTensor<double>& cotangent);

/// Registers every Param symbol of `tn` in `ps` with its node shape.
void register_symbols(const TensorNetwork& tn, ParameterStore& ps);

/// Factors for an MPS split of `full` (legs grouped as mps_split does),
/// obtained from a chain of SVDs truncated to `bond_dim`. Returns one
/// tensor per factor, shaped as mps_ansatz shapes them.
std::vector<DenseTensor<double>> mps_from_tensor(const DenseTensor<double>& full,
                                                 std::size_t bond_dim, std::size_t max_order);

}  // namespace qnlp
