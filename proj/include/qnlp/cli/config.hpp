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

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qnlp/training/model.hpp"
#include "qnlp/training/trainer.hpp"

namespace qnlp::cli {

/// Pipeline, optimizer and file settings of a train or eval run.
struct RunConfig {
  PipelineConfig pipeline;
  TrainConfig train;
  std::string dataset;  // empty: generate with the run seed
};

/// Parses `key = value` lines; `#` starts a comment. Throws InvalidConfig
/// with the line number for lines without '='.
std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text);

/// Applies one setting. Keys:
///   reader, ccg_file, rewrite, wordlists, ansatz, sizes, layers, bond_dim,
///   max_order, backend, shots, noise, optimizer, iterations, seed, lr,
///   beta1, beta2, eps, spsa_a, spsa_c, spsa_A, spsa_alpha, spsa_gamma,
///   dataset
/// Relative paths are resolved against `base_dir`. Throws InvalidConfig for
/// unknown keys or malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir = {});

/// Reads a config file (if `file` is non-empty) and applies `overrides`
/// afterwards. Throws InvalidInput for unreadable files.
RunConfig load_run_config(const std::filesystem::path& file,
                          const std::vector<std::pair<std::string, std::string>>& overrides);

/// The effective settings as `key = value` lines.
std::string describe(const RunConfig& cfg);

}  // namespace qnlp::cli
