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

#include <cstdint>
#include <string>
#include <vector>

#include "qnlp/backend/parameter_store.hpp"
#include "qnlp/training/dataset.hpp"
#include "qnlp/training/model.hpp"
#include "qnlp/training/optimizers.hpp"

namespace qnlp {

enum class OptimizerKind { Adam, Spsa };

struct TrainConfig {
  OptimizerKind optimizer = OptimizerKind::Adam;
  AdamConfig adam;
  SpsaConfig spsa;
  bool spsa_A_auto = true;  // A = 0.1 x iterations
  std::size_t iterations = 100;
  std::uint64_t seed = 0;
};

/// Metrics after the update of iteration `iter` (1-based).
struct HistoryRow {
  std::size_t iter = 0;
  double train_loss = 0, train_acc = 0, dev_loss = 0, dev_acc = 0;
};

struct SplitMetrics {
  double loss = 0;
  double accuracy = 0;
  std::size_t degenerate = 0;
};

struct TrainResult {
  ParameterStore params;
  std::vector<HistoryRow> history;
  SplitMetrics test;
  std::size_t degenerate = 0;  // predictions replaced by 0.5 during training
};

/// Shot seed for sentence `item` at evaluation `iter`, purpose `stream`.
std::uint64_t shot_seed(std::uint64_t seed, std::size_t iter, std::size_t item, std::uint64_t stream);

/// Mean BCE and accuracy (p1 > 0.5 predicts 1) over `indices`; model
/// artifact i belongs to dataset item i. Degenerate predictions are
/// charged bce_ceiling().
SplitMetrics split_metrics(const Model& model, const ParameterStore& ps,
                           const LabeledDataset& ds, const std::vector<std::size_t>& indices,
                           std::uint64_t seed, std::size_t iter);

/// Index used for the shots stream of the final test evaluation.
std::size_t final_eval_iter(const TrainConfig& cfg);

/// Full-batch training. Adam needs a tensor ansatz (exact gradients);
/// SPSA works with every ansatz. Throws CompileError before training when
/// a sentence fails to compile and InvalidConfig for Adam on circuits.
TrainResult train(const PipelineConfig& pipeline, const LabeledDataset& ds, const TrainConfig& cfg);

/// Test metrics for saved parameters, computed exactly as train() does.
SplitMetrics evaluate_test(const PipelineConfig& pipeline, const LabeledDataset& ds,
                           const TrainConfig& cfg, const ParameterStore& ps);

/// `iter,train_loss,train_acc,dev_loss,dev_acc` with one row per iteration.
std::string history_csv(const std::vector<HistoryRow>& history);

}  // namespace qnlp
