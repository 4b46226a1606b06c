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
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "qnlp/ansatz/circuit.hpp"
#include "qnlp/ansatz/tensor_network.hpp"
#include "qnlp/backend/parameter_store.hpp"
#include "qnlp/ccg/tree.hpp"
#include "qnlp/pregroup/diagram.hpp"

namespace qnlp {

enum class ReaderKind { Ccg, Cups, Spiders };
enum class AnsatzKind { Iqp, Tensor, Mps, Spider };
enum class BackendKind { Exact, Shots };

/// Everything that turns a sentence into an evaluable artifact.
struct PipelineConfig {
  ReaderKind reader = ReaderKind::Ccg;
  std::string ccg_file;  // AUTO derivations; empty uses the generator grammar
  std::vector<std::string> rewrite;
  std::string wordlist_dir;  // empty uses the built-in lists

  AnsatzKind ansatz = AnsatzKind::Iqp;
  TypeSizes sizes{{"n", 1}, {"s", 1}};  // qubits (iqp) or dimensions
  std::size_t layers = 1;
  std::size_t bond_dim = 4;
  std::size_t max_order = 3;

  BackendKind backend = BackendKind::Exact;
  std::size_t shots = 8192;
  double noise = 0.0;

  bool circuit() const { return ansatz == AnsatzKind::Iqp; }
  /// Throws InvalidConfig for inconsistent settings.
  void validate() const;
};

std::string reader_name(ReaderKind k);
std::string ansatz_name(AnsatzKind k);
std::string backend_name(BackendKind k);
ReaderKind parse_reader(const std::string& s);
AnsatzKind parse_ansatz(const std::string& s);
BackendKind parse_backend(const std::string& s);

/// Sentence diagrams keyed by their token sequence.
class DerivationIndex {
 public:
  /// Reads every derivation of an AUTO file. Throws on unreadable files.
  static DerivationIndex from_file(const std::string& path);
  void add(const ccg::CCGTree& tree);
  /// The stored derivation, or nullptr.
  const ccg::CCGTree* find(const std::vector<std::string>& tokens) const;

 private:
  std::map<std::string, ccg::CCGTree> trees_;
};

/// Reader, rewrite and normal form for one sentence. With the ccg reader,
/// the derivation comes from `index` when given, otherwise from the
/// generator grammar.
Diagram sentence_diagram(const PipelineConfig& cfg, const std::string& sentence,
                         const DerivationIndex* index = nullptr);

using Artifact = std::variant<Circuit, TensorNetwork>;

Artifact compile_diagram(const PipelineConfig& cfg, const Diagram& d);

/// Compiled artifacts for a list of sentences.
struct Model {
  PipelineConfig config;
  std::vector<std::string> sentences;
  std::vector<Artifact> artifacts;
};

/// Compiles every sentence. Throws CompileError listing each failing
/// sentence with its reason.
Model compile_model(const PipelineConfig& cfg, const std::vector<std::string>& sentences);

/// Registers all symbols and draws initial values: angles uniform on
/// [0, 2 pi), tensor entries normal with standard deviation 1/sqrt(d), d the
/// largest leg dimension of the tensor.
ParameterStore init_parameters(const Model& model, std::uint64_t seed);

struct Prediction {
  double p1 = 0.5;
  bool degenerate = false;  // postselection failed; p1 is 0.5
};

/// Probability of label 1 for sentence `i`. `shot_seed` is used by the shots
/// backend only.
Prediction predict(const Model& model, const ParameterStore& ps, std::size_t i,
                   std::uint64_t shot_seed = 0);

}  // namespace qnlp
