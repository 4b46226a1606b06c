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

#include "qnlp/training/optimizers.hpp"

#include <cmath>
#include <random>

#include "qnlp/errors.hpp"

namespace qnlp {

void adam_step(Eigen::VectorXd& theta, const Eigen::VectorXd& grad, AdamState& state,
               const AdamConfig& cfg) {
  if (!(cfg.lr > 0) || !(cfg.beta1 > 0 && cfg.beta1 < 1) || !(cfg.beta2 > 0 && cfg.beta2 < 1) ||
      !(cfg.eps > 0))
    throw InvalidConfig("Adam hyperparameters out of range");
  if (grad.size() != theta.size()) throw ShapeMismatch("gradient does not match parameters");
  if (state.m.size() != theta.size()) {
    state.m = Eigen::VectorXd::Zero(theta.size());
    state.v = Eigen::VectorXd::Zero(theta.size());
    state.t = 0;
  }
  ++state.t;
  state.m = cfg.beta1 * state.m + (1 - cfg.beta1) * grad;
  state.v = cfg.beta2 * state.v + (1 - cfg.beta2) * grad.cwiseProduct(grad);
  const double bc1 = 1 - std::pow(cfg.beta1, static_cast<double>(state.t));
  const double bc2 = 1 - std::pow(cfg.beta2, static_cast<double>(state.t));
  theta.array() -= cfg.lr * (state.m.array() / bc1) / ((state.v.array() / bc2).sqrt() + cfg.eps);
}

SpsaStepInfo spsa_step(Eigen::VectorXd& theta, const LossFn& loss, std::size_t k,
                       const SpsaConfig& cfg, std::uint64_t seed) {
  if (!(cfg.a > 0) || !(cfg.c > 0) || cfg.A < 0 || !(cfg.alpha > 0) || !(cfg.gamma > 0))
    throw InvalidConfig("SPSA hyperparameters out of range");
  const double kk = static_cast<double>(k);
  const double ck = cfg.c / std::pow(kk + 1, cfg.gamma);
  const double ak = cfg.a / std::pow(cfg.A + kk + 1, cfg.alpha);
  std::mt19937_64 rng(seed);
  Eigen::VectorXd delta(theta.size());
  for (Eigen::Index i = 0; i < delta.size(); ++i) delta(i) = (rng() >> 63) ? 1.0 : -1.0;

  SpsaStepInfo info;
  info.loss_plus = loss(theta + ck * delta);
  info.loss_minus = loss(theta - ck * delta);
  // 1 / delta_i == delta_i for Rademacher entries.
  info.gradient = ((info.loss_plus - info.loss_minus) / (2 * ck)) * delta;
  theta -= ak * info.gradient;
  return info;
}

}  // namespace qnlp
