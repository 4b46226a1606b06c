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

// Numerical evaluation of diagrams for semantic checks in the tests.

#include <cstdint>
#include <random>
#include <string>

#include "qnlp/ansatz/tensor_network.hpp"
#include "qnlp/backend/contraction.hpp"
#include "qnlp/backend/statevector.hpp"
#include "qnlp/pregroup/diagram.hpp"

namespace qnlp::testgen {

inline std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 1099511628211ULL;
  return h;
}

/// Values depend only on (seed, symbol name), so two networks sharing a word
/// see the same tensor.
inline void fill_by_name(ParameterStore& ps, std::uint64_t seed) {
  for (const auto& name : ps.names()) {
    const auto& e = ps.entry(name);
    std::mt19937_64 rng(derive_seed(seed, name_hash(name)));
    std::normal_distribution<double> nd(0.0, 1.0);
    for (std::size_t i = 0; i < e.size(); ++i)
      ps.values()(static_cast<Eigen::Index>(e.offset + i)) = nd(rng);
  }
}

inline DenseTensor<double> contract_diagram(const Diagram& d, const TypeSizes& dims,
                                            std::uint64_t seed) {
  const TensorNetwork tn = tensor_ansatz(d, dims);
  ParameterStore ps;
  register_symbols(tn, ps);
  fill_by_name(ps, seed);
  return contract(tn, ps);
}

inline double max_abs_diff(const DenseTensor<double>& a, const DenseTensor<double>& b) {
  if (a.shape() != b.shape()) return 1e300;
  return (a.data() - b.data()).cwiseAbs().maxCoeff();
}

}  // namespace qnlp::testgen
