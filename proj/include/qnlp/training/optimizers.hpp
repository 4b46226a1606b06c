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
#include <cstdint>
#include <functional>

namespace qnlp {

struct AdamConfig {
  double lr = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

struct AdamState {
  Eigen::VectorXd m;
  Eigen::VectorXd v;
  std::size_t t = 0;
};

/// One bias-corrected Adam update of `theta`. Throws InvalidConfig for
/// non-positive hyperparameters and ShapeMismatch for a misaligned gradient.
void adam_step(Eigen::VectorXd& theta, const Eigen::VectorXd& grad, AdamState& state,
               const AdamConfig& cfg = {});

struct SpsaConfig {
  double a = 0.05;
  double c = 0.06;
  double A = 0.0;  // the trainer sets 0.1 x iterations unless given
  double alpha = 0.602;
  double gamma = 0.101;
};

using LossFn = std::function<double(const Eigen::VectorXd&)>;

struct SpsaStepInfo {
  double loss_plus = 0.0;
  double loss_minus = 0.0;
  Eigen::VectorXd gradient;
};

/// One SPSA update at iteration k (0-based) with a Rademacher direction
/// drawn from `seed`. Calls `loss` exactly twice.
SpsaStepInfo spsa_step(Eigen::VectorXd& theta, const LossFn& loss, std::size_t k,
                       const SpsaConfig& cfg, std::uint64_t seed);

}  // namespace qnlp
