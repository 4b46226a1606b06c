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

#include "qnlp/training/trainer.hpp"

#include <cstdio>

#include "qnlp/backend/contraction.hpp"
#include "qnlp/backend/statevector.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/training/loss.hpp"

namespace qnlp {

namespace {

constexpr std::uint64_t kStreamStep = 1;
constexpr std::uint64_t kStreamMetrics = 2;

std::vector<std::string> texts(const LabeledDataset& ds) {
  std::vector<std::string> out;
  for (const auto& item : ds.items) out.push_back(item.text);
  return out;
}

double mean_loss(const Model& model, const ParameterStore& ps, const LabeledDataset& ds,
                 std::uint64_t seed, std::size_t iter, std::size_t* degenerate) {
  double total = 0;
  for (auto i : ds.train) {
    Prediction p = predict(model, ps, i, shot_seed(seed, iter, i, kStreamStep));
    if (p.degenerate && degenerate) ++*degenerate;
    total += p.degenerate ? bce_ceiling() : bce_loss(p.p1, ds.items[i].label);
  }
  return total / static_cast<double>(ds.train.size());
}

// Mean BCE over the training split and its exact gradient.
Eigen::VectorXd tensor_gradient(const Model& model, const ParameterStore& ps,
                                const LabeledDataset& ds) {
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(ps.size()));
  for (auto i : ds.train) {
    const auto& tn = std::get<TensorNetwork>(model.artifacts[i]);
    const Eigen::VectorXd v = contract(tn, ps).data();
    if (v.squaredNorm() == 0.0) continue;
    const double dl = bce_grad(vector_p1(v), ds.items[i].label);
    const Eigen::VectorXd cot = dl * vector_p1_grad(v);
    grad += contract_grad(tn, ps, DenseTensor<double>({2}, cot));
  }
  return grad / static_cast<double>(ds.train.size());
}

}  // namespace

std::uint64_t shot_seed(std::uint64_t seed, std::size_t iter, std::size_t item, std::uint64_t stream) {
  return derive_seed(seed, iter, item, stream);
}

SplitMetrics split_metrics(const Model& model, const ParameterStore& ps,
                           const LabeledDataset& ds, const std::vector<std::size_t>& indices,
                           std::uint64_t seed, std::size_t iter) {
  SplitMetrics m;
  if (indices.empty()) return m;
  std::size_t correct = 0;
  for (auto i : indices) {
    Prediction p = predict(model, ps, i, shot_seed(seed, iter, i, kStreamMetrics));
    const int label = ds.items[i].label;
    if (p.degenerate) ++m.degenerate;
    m.loss += p.degenerate ? bce_ceiling() : bce_loss(p.p1, label);
    correct += ((p.p1 > 0.5) ? 1 : 0) == label;
  }
  m.loss /= static_cast<double>(indices.size());
  m.accuracy = static_cast<double>(correct) / static_cast<double>(indices.size());
  return m;
}

std::size_t final_eval_iter(const TrainConfig& cfg) { return cfg.iterations + 1; }

TrainResult train(const PipelineConfig& pipeline, const LabeledDataset& ds, const TrainConfig& cfg) {
  if (cfg.optimizer == OptimizerKind::Adam && pipeline.circuit())
    throw InvalidConfig("Adam needs exact gradients; use SPSA with the iqp ansatz");
  if (ds.train.empty() && cfg.iterations > 0) throw InvalidInput("training split is empty");
  Model model = compile_model(pipeline, texts(ds));

  TrainResult result;
  result.params = init_parameters(model, cfg.seed);
  ParameterStore& ps = result.params;
  AdamState adam;
  SpsaConfig spsa = cfg.spsa;
  if (cfg.spsa_A_auto) spsa.A = 0.1 * static_cast<double>(cfg.iterations);

  for (std::size_t k = 0; k < cfg.iterations; ++k) {
    const std::size_t iter = k + 1;
    if (cfg.optimizer == OptimizerKind::Adam) {
      adam_step(ps.values(), tensor_gradient(model, ps, ds), adam, cfg.adam);
    } else {
      ParameterStore probe = ps;
      LossFn loss = [&](const Eigen::VectorXd& theta) {
        probe.values() = theta;
        return mean_loss(model, probe, ds, cfg.seed, iter, &result.degenerate);
      };
      spsa_step(ps.values(), loss, k, spsa, derive_seed(cfg.seed, 0x73707361, iter));
    }
    SplitMetrics tr = split_metrics(model, ps, ds, ds.train, cfg.seed, iter);
    SplitMetrics dv = split_metrics(model, ps, ds, ds.dev, cfg.seed, iter);
    result.history.push_back({iter, tr.loss, tr.accuracy, dv.loss, dv.accuracy});
  }
  result.test = split_metrics(model, ps, ds, ds.test, cfg.seed, final_eval_iter(cfg));
  return result;
}

SplitMetrics evaluate_test(const PipelineConfig& pipeline, const LabeledDataset& ds,
                           const TrainConfig& cfg, const ParameterStore& ps) {
  Model model = compile_model(pipeline, texts(ds));
  for (const auto& a : model.artifacts) {
    std::vector<std::string> syms = std::holds_alternative<Circuit>(a)
                                        ? std::get<Circuit>(a).symbols()
                                        : std::get<TensorNetwork>(a).symbols();
    for (const auto& s : syms) ps.entry(s);
  }
  return split_metrics(model, ps, ds, ds.test, cfg.seed, final_eval_iter(cfg));
}

std::string history_csv(const std::vector<HistoryRow>& history) {
  std::string out = "iter,train_loss,train_acc,dev_loss,dev_acc\n";
  char buf[160];
  for (const auto& r : history) {
    std::snprintf(buf, sizeof buf, "%zu,%.10g,%.10g,%.10g,%.10g\n", r.iter, r.train_loss,
                  r.train_acc, r.dev_loss, r.dev_acc);
    out += buf;
  }
  return out;
}

}  // namespace qnlp
