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

#include "qnlp/training/model.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <random>
#include <numbers>
#include <sstream>

#include "qnlp/backend/contraction.hpp"
#include "qnlp/backend/statevector.hpp"
#include "qnlp/ccg/to_diagram.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/readers.hpp"
#include "qnlp/rewrite.hpp"
#include "qnlp/training/dataset.hpp"
#include "qnlp/training/loss.hpp"

namespace qnlp {

std::string reader_name(ReaderKind k) {
  switch (k) {
    case ReaderKind::Ccg: return "ccg";
    case ReaderKind::Cups: return "cups";
    case ReaderKind::Spiders: return "spiders";
  }
  return "?";
}

std::string ansatz_name(AnsatzKind k) {
  switch (k) {
    case AnsatzKind::Iqp: return "iqp";
    case AnsatzKind::Tensor: return "tensor";
    case AnsatzKind::Mps: return "mps";
    case AnsatzKind::Spider: return "spider";
  }
  return "?";
}

std::string backend_name(BackendKind k) {
  return k == BackendKind::Exact ? "exact" : "shots";
}

ReaderKind parse_reader(const std::string& s) {
  if (s == "ccg") return ReaderKind::Ccg;
  if (s == "cups") return ReaderKind::Cups;
  if (s == "spiders") return ReaderKind::Spiders;
  throw InvalidConfig("unknown reader '" + s + "' (expected ccg, cups or spiders)");
}

AnsatzKind parse_ansatz(const std::string& s) {
  if (s == "iqp") return AnsatzKind::Iqp;
  if (s == "tensor") return AnsatzKind::Tensor;
  if (s == "mps") return AnsatzKind::Mps;
  if (s == "spider") return AnsatzKind::Spider;
  throw InvalidConfig("unknown ansatz '" + s + "' (expected iqp, tensor, mps or spider)");
}

BackendKind parse_backend(const std::string& s) {
  if (s == "exact") return BackendKind::Exact;
  if (s == "shots") return BackendKind::Shots;
  throw InvalidConfig("unknown backend '" + s + "' (expected exact or shots)");
}

void PipelineConfig::validate() const {
  if (circuit() && reader == ReaderKind::Spiders)
    throw InvalidConfig("the iqp ansatz cannot compile spiders; use the ccg or cups reader");
  if (!circuit() && backend == BackendKind::Shots)
    throw InvalidConfig("shot sampling needs the iqp ansatz");
  if (layers == 0) throw InvalidConfig("layers must be at least 1");
  if (ansatz == AnsatzKind::Mps && max_order < 3)
    throw InvalidConfig("mps ansatz needs max_order >= 3");
  if (ansatz == AnsatzKind::Mps && bond_dim == 0) throw InvalidConfig("bond dimension must be positive");
  if (ansatz == AnsatzKind::Spider && max_order < 2)
    throw InvalidConfig("spider ansatz needs max_order >= 2");
  if (shots == 0) throw InvalidConfig("shots must be positive");
  if (noise < 0 || noise > 1) throw InvalidConfig("noise must lie in [0, 1]");
  for (const auto& [name, v] : sizes)
    if (v == 0) throw InvalidConfig("size of type " + name + " must be positive");
  Rewriter::from_names(rewrite);
}

namespace {

std::string key_of(const std::vector<std::string>& tokens) {
  std::string k;
  for (const auto& t : tokens) k += t + " ";
  return k;
}

}  // namespace

DerivationIndex DerivationIndex::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read derivations " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  DerivationIndex idx;
  for (const auto& t : ccg::parse_auto(buf.str())) idx.add(t);
  return idx;
}

void DerivationIndex::add(const ccg::CCGTree& tree) {
  std::vector<std::string> tokens;
  for (const auto& t : tree.tokens()) {
    try {
      auto part = tokenize(t);
      tokens.insert(tokens.end(), part.begin(), part.end());
    } catch (const InvalidInput&) {
      // pure punctuation
    }
  }
  trees_.insert_or_assign(key_of(tokens), tree);
}

const ccg::CCGTree* DerivationIndex::find(const std::vector<std::string>& tokens) const {
  auto it = trees_.find(key_of(tokens));
  return it == trees_.end() ? nullptr : &it->second;
}

Diagram sentence_diagram(const PipelineConfig& cfg, const std::string& sentence,
                         const DerivationIndex* index) {
  const auto tokens = tokenize(sentence);
  Diagram d;
  switch (cfg.reader) {
    case ReaderKind::Spiders: d = spiders_read(tokens); break;
    case ReaderKind::Cups: d = cups_read(tokens); break;
    case ReaderKind::Ccg: {
      if (index) {
        const ccg::CCGTree* tree = index->find(tokens);
        if (!tree) throw InvalidInput("no derivation for '" + sentence + "'");
        d = ccg::tree_to_diagram(*tree);
      } else {
        d = ccg::tree_to_diagram(generator_derivation(sentence));
      }
      break;
    }
  }
  if (!cfg.rewrite.empty()) {
    const WordLists lists = cfg.wordlist_dir.empty() ? WordLists::builtin() : WordLists::load(cfg.wordlist_dir);
    d = normal_form(Rewriter::from_names(cfg.rewrite, lists).apply(d));
  }
  return d;
}

Artifact compile_diagram(const PipelineConfig& cfg, const Diagram& d) {
  switch (cfg.ansatz) {
    case AnsatzKind::Iqp: return iqp_ansatz(d, cfg.sizes, cfg.layers);
    case AnsatzKind::Tensor: return tensor_ansatz(d, cfg.sizes);
    case AnsatzKind::Mps: return mps_ansatz(d, cfg.sizes, cfg.bond_dim, cfg.max_order);
    case AnsatzKind::Spider: return spider_ansatz(d, cfg.sizes, cfg.max_order);
  }
  throw InvalidConfig("unknown ansatz");
}

Model compile_model(const PipelineConfig& cfg, const std::vector<std::string>& sentences) {
  cfg.validate();
  std::optional<DerivationIndex> index;
  if (cfg.reader == ReaderKind::Ccg && !cfg.ccg_file.empty())
    index = DerivationIndex::from_file(cfg.ccg_file);

  Model m;
  m.config = cfg;
  m.sentences = sentences;
  std::vector<std::string> failures;
  for (const auto& s : sentences) {
    try {
      Artifact a = compile_diagram(cfg, sentence_diagram(cfg, s, index ? &*index : nullptr));
      if (const auto* c = std::get_if<Circuit>(&a)) {
        if (c->open.size() != 1) throw InvalidConfig("sentence circuit must have exactly one open qubit");
      } else if (std::get<TensorNetwork>(a).open_shape() != Shape{2}) {
        throw InvalidConfig("sentence network must have one open leg of dimension 2");
      }
      m.artifacts.push_back(std::move(a));
    } catch (const Error& e) {
      failures.push_back("'" + s + "': " + e.what());
    }
  }
  if (!failures.empty()) {
    std::string msg = std::to_string(failures.size()) + " sentence(s) failed to compile:";
    for (const auto& f : failures) msg += "\n  " + f;
    throw CompileError(msg);
  }
  return m;
}

ParameterStore init_parameters(const Model& model, std::uint64_t seed) {
  ParameterStore ps;
  for (const auto& a : model.artifacts) {
    if (const auto* c = std::get_if<Circuit>(&a)) {
      for (const auto& s : c->symbols()) ps.add(s);
    } else {
      register_symbols(std::get<TensorNetwork>(a), ps);
    }
  }
  std::mt19937_64 rng(derive_seed(seed, 0x696e6974));
  for (const auto& name : ps.names()) {
    const auto& e = ps.entry(name);
    auto block = ps.values().segment(static_cast<Eigen::Index>(e.offset), static_cast<Eigen::Index>(e.size()));
    if (model.config.circuit()) {
      for (Eigen::Index i = 0; i < block.size(); ++i) block(i) = 2 * std::numbers::pi * uniform01(rng);
      continue;
    }
    std::size_t d = 1;
    for (auto s : e.shape) d = std::max(d, s);
    const double sigma = 1.0 / std::sqrt(static_cast<double>(d));
    for (Eigen::Index i = 0; i < block.size(); ++i) {
      // Box-Muller keeps the draw identical across standard libraries.
      const double u1 = 1.0 - uniform01(rng);
      const double u2 = uniform01(rng);
      block(i) = sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2 * std::numbers::pi * u2);
    }
  }
  return ps;
}

Prediction predict(const Model& model, const ParameterStore& ps, std::size_t i,
                   std::uint64_t shot_seed) {
  const Artifact& a = model.artifacts.at(i);
  if (const auto* tn = std::get_if<TensorNetwork>(&a)) {
    const Eigen::VectorXd v = contract(*tn, ps).data();
    if (v.squaredNorm() == 0.0) return {0.5, true};
    return {vector_p1(v), false};
  }
  const Circuit& c = std::get<Circuit>(a);
  try {
    if (model.config.backend == BackendKind::Exact) return {evaluate(c, ps)(1), false};
    auto counts = sample(c, ps, model.config.shots, shot_seed, model.config.noise);
    return {static_cast<double>(counts[1]) / static_cast<double>(counts[0] + counts[1]), false};
  } catch (const ZeroNorm&) {
    return {0.5, true};
  } catch (const AllShotsDiscarded&) {
    return {0.5, true};
  }
}

}  // namespace qnlp
