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

#include "qnlp/cli/commands.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "qnlp/ansatz/circuit.hpp"
#include "qnlp/ansatz/tensor_network.hpp"
#include "qnlp/ccg/to_diagram.hpp"
#include "qnlp/cli/config.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/pregroup/serialize.hpp"
#include "qnlp/readers.hpp"
#include "qnlp/rewrite.hpp"
#include "qnlp/training/dataset.hpp"
#include "qnlp/training/trainer.hpp"

namespace qnlp::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + p.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& p, const std::string& text) {
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + p.string());
  out << text;
  if (!out) throw InvalidInput("cannot write " + p.string());
}

// File name without a trailing ".diagram.json" (or ".json").
std::string diagram_stem(const std::string& path) {
  std::string stem = fs::path(path).filename().string();
  for (const std::string suffix : {".diagram.json", ".json"}) {
    if (stem.size() > suffix.size() && stem.ends_with(suffix)) {
      stem.erase(stem.size() - suffix.size());
      break;
    }
  }
  return stem;
}

std::string safe_name(const std::string& s) {
  std::string out;
  for (char c : s) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '_';
    out.push_back(ok ? c : '_');
  }
  return out.empty() ? "diagram" : out;
}

std::vector<std::pair<std::string, std::string>> parse_overrides(const std::vector<std::string>& sets) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& s : sets) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw InvalidConfig("--set expects key=value, got '" + s + "'");
    out.emplace_back(s.substr(0, eq), s.substr(eq + 1));
  }
  return out;
}

struct ParseArgs {
  std::string reader = "cups";
  std::string ccg;
  std::string sentence;
  std::string out_dir = ".";
  std::string name;
  bool svg = false;
};

void write_diagram(const Diagram& d, const fs::path& dir, const std::string& name, bool svg,
                   std::ostream& out) {
  const fs::path json = dir / (name + ".diagram.json");
  write_file(json, to_json(d) + "\n");
  out << json.string() << "\n";
  if (svg) {
    const fs::path file = dir / (name + ".svg");
    write_file(file, render_svg(d));
    out << file.string() << "\n";
  }
}

int cmd_parse(const ParseArgs& a, std::ostream& out, std::ostream& err) {
  const fs::path dir(a.out_dir);
  if (a.sentence.empty()) {
    if (a.ccg.empty()) throw InvalidConfig("parse needs a sentence or --ccg FILE");
    auto entries = ccg::section_to_diagrams(a.ccg);
    std::size_t ok = 0;
    for (const auto& e : entries) {
      if (!e.diagram) {
        err << "error: " << e.id << ": " << e.error << "\n";
        continue;
      }
      write_diagram(*e.diagram, dir, safe_name(a.name.empty() ? e.id : a.name + "_" + e.id), a.svg, out);
      ++ok;
    }
    err << ok << " of " << entries.size() << " derivations converted\n";
    return kExitOk;
  }
  PipelineConfig cfg;
  cfg.reader = parse_reader(a.reader);
  cfg.ccg_file = a.ccg;
  std::optional<DerivationIndex> index;
  if (!a.ccg.empty()) index = DerivationIndex::from_file(a.ccg);
  Diagram d = sentence_diagram(cfg, a.sentence, index ? &*index : nullptr);
  std::string name = a.name;
  if (name.empty()) {
    for (const auto& t : tokenize(a.sentence)) name += (name.empty() ? "" : "_") + t;
    name = safe_name(name.substr(0, 80));
  }
  write_diagram(d, dir, name, a.svg, out);
  return kExitOk;
}

struct RewriteArgs {
  std::string input;
  std::string rules;
  std::string wordlists;
  std::string output;
};

int cmd_rewrite(const RewriteArgs& a, std::ostream& out) {
  Diagram d = from_json(read_file(a.input));
  std::vector<std::string> names;
  std::stringstream in(a.rules);
  for (std::string r; std::getline(in, r, ',');)
    if (!r.empty()) names.push_back(r);
  const WordLists lists = a.wordlists.empty() ? WordLists::builtin() : WordLists::load(a.wordlists);
  Rewriter rw = Rewriter::from_names(names, lists);
  if (!names.empty()) d = normal_form(rw.apply(d));

  fs::path target = a.output;
  if (target.empty()) {
    target = fs::path(a.input).parent_path() / (diagram_stem(a.input) + ".rewritten.diagram.json");
  }
  write_file(target, to_json(d) + "\n");
  out << target.string() << "\n";
  return kExitOk;
}

struct CompileArgs {
  std::string input;
  std::string ansatz = "iqp";
  std::string qubits = "n=1,s=1";
  std::string dims = "n=2,s=2";
  std::size_t layers = 1;
  std::size_t bond = 4;
  std::size_t max_order = 0;  // 0: 3 for mps, 2 for spider
  std::string output;
};

int cmd_compile(const CompileArgs& a, std::ostream& out) {
  PipelineConfig cfg;
  cfg.ansatz = parse_ansatz(a.ansatz);
  cfg.sizes = parse_type_sizes(cfg.circuit() ? a.qubits : a.dims);
  cfg.layers = a.layers;
  cfg.bond_dim = a.bond;
  cfg.max_order = a.max_order != 0 ? a.max_order : (cfg.ansatz == AnsatzKind::Spider ? 2 : 3);
  if (cfg.ansatz == AnsatzKind::Mps && cfg.max_order < 3)
    throw InvalidConfig("mps ansatz needs --max-order >= 3, got " + std::to_string(cfg.max_order));
  if (cfg.ansatz == AnsatzKind::Spider && cfg.max_order < 2)
    throw InvalidConfig("spider ansatz needs --max-order >= 2, got " + std::to_string(cfg.max_order));

  Diagram d = from_json(read_file(a.input));
  Artifact art = compile_diagram(cfg, d);
  std::string text = std::holds_alternative<Circuit>(art) ? to_json(std::get<Circuit>(art))
                                                          : to_json(std::get<TensorNetwork>(art));
  fs::path target = a.output;
  if (target.empty()) {
    target = fs::path(a.input).parent_path() /
             (diagram_stem(a.input) + (cfg.circuit() ? ".circuit.json" : "." + a.ansatz + ".network.json"));
  }
  write_file(target, text + "\n");
  out << target.string() << "\n";
  return kExitOk;
}

struct RunArgs {
  std::string config;
  std::string dataset;
  std::string out_dir = ".";
  std::string params;
  std::vector<std::string> sets;
  std::optional<std::size_t> seed;
  std::optional<std::size_t> iterations;
};

RunConfig run_config(const RunArgs& a) {
  auto overrides = parse_overrides(a.sets);
  if (a.seed) overrides.emplace_back("seed", std::to_string(*a.seed));
  if (a.iterations) overrides.emplace_back("iterations", std::to_string(*a.iterations));
  RunConfig cfg = load_run_config(a.config, overrides);
  if (!a.dataset.empty()) cfg.dataset = a.dataset;
  return cfg;
}

LabeledDataset run_dataset(const RunConfig& cfg) {
  return cfg.dataset.empty() ? generate_dataset(cfg.train.seed) : load_dataset(cfg.dataset);
}

nlohmann::ordered_json metrics_json(const RunConfig& cfg, const SplitMetrics& test) {
  nlohmann::ordered_json j;
  j["test_accuracy"] = test.accuracy;
  j["test_loss"] = test.loss;
  j["test_degenerate"] = test.degenerate;
  j["seed"] = cfg.train.seed;
  j["iterations"] = cfg.train.iterations;
  j["ansatz"] = ansatz_name(cfg.pipeline.ansatz);
  j["backend"] = backend_name(cfg.pipeline.backend);
  return j;
}

int cmd_train(const RunArgs& a, std::ostream& out, std::ostream& err) {
  RunConfig cfg = run_config(a);
  LabeledDataset ds = run_dataset(cfg);
  TrainResult r = train(cfg.pipeline, ds, cfg.train);
  const fs::path dir(a.out_dir);
  write_file(dir / "history.csv", history_csv(r.history));
  write_file(dir / "params.json", r.params.to_json() + "\n");
  write_file(dir / "config.txt", describe(cfg));
  auto j = metrics_json(cfg, r.test);
  if (!r.history.empty()) {
    j["train_accuracy"] = r.history.back().train_acc;
    j["train_loss"] = r.history.back().train_loss;
    j["dev_accuracy"] = r.history.back().dev_acc;
    j["dev_loss"] = r.history.back().dev_loss;
  }
  j["degenerate_predictions"] = r.degenerate;
  write_file(dir / "metrics.json", j.dump(2) + "\n");
  if (r.degenerate > 0)
    err << "warning: " << r.degenerate << " predictions failed postselection and were charged the maximum loss\n";
  out << "test_accuracy=" << r.test.accuracy << " test_loss=" << r.test.loss << "\n";
  return kExitOk;
}

int cmd_eval(const RunArgs& a, std::ostream& out) {
  RunConfig cfg = run_config(a);
  if (a.params.empty()) throw InvalidConfig("eval needs --params FILE");
  LabeledDataset ds = run_dataset(cfg);
  ParameterStore ps = ParameterStore::from_json(read_file(a.params));
  SplitMetrics m = evaluate_test(cfg.pipeline, ds, cfg.train, ps);
  if (a.out_dir != ".") write_file(fs::path(a.out_dir) / "eval_metrics.json", metrics_json(cfg, m).dump(2) + "\n");
  out << "test_accuracy=" << m.accuracy << " test_loss=" << m.loss << "\n";
  return kExitOk;
}

int cmd_gen_dataset(std::size_t seed, const std::string& output, std::ostream& out) {
  LabeledDataset ds = generate_dataset(seed);
  fs::path target(output);
  write_file(target, dataset_to_text(ds));
  fs::path derivations = target;
  derivations.replace_extension(".auto");
  if (derivations == target) derivations += ".auto";
  write_file(derivations, dataset_to_auto(ds));
  out << target.string() << "\n" << derivations.string() << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Compositional sentence compiler and trainer", "qnlp"};
  app.require_subcommand(1);

  ParseArgs pa;
  auto* parse = app.add_subcommand("parse", "Sentence or AUTO derivations to diagram files");
  parse->add_option("sentence", pa.sentence, "Sentence text");
  parse->add_option("--reader", pa.reader, "Reader")->check(CLI::IsMember({"ccg", "cups", "spiders"}));
  parse->add_option("--ccg", pa.ccg, "AUTO file or directory");
  parse->add_option("--out", pa.out_dir, "Output directory");
  parse->add_option("--name", pa.name, "Output name");
  parse->add_flag("--svg", pa.svg, "Also write an SVG drawing");

  RewriteArgs ra;
  auto* rewrite = app.add_subcommand("rewrite", "Apply rewrite rules and normalize");
  rewrite->add_option("diagram", ra.input, "Diagram JSON file")->required();
  rewrite->add_option("--rules,--rewrite", ra.rules, "Comma-separated rule names");
  rewrite->add_option("--wordlists", ra.wordlists, "Directory of word lists");
  rewrite->add_option("--out", ra.output, "Output file");

  CompileArgs ca;
  auto* compile = app.add_subcommand("compile", "Diagram to circuit or tensor network");
  compile->add_option("diagram", ca.input, "Diagram JSON file")->required();
  compile->add_option("--ansatz", ca.ansatz, "Ansatz")->check(CLI::IsMember({"iqp", "tensor", "mps", "spider"}));
  compile->add_option("--q", ca.qubits, "Qubits per type, e.g. n=1,s=1");
  compile->add_option("--d", ca.dims, "Dimension per type, e.g. n=4,s=2");
  compile->add_option("--layers", ca.layers, "IQP layers");
  compile->add_option("--bond", ca.bond, "MPS bond dimension");
  compile->add_option("--max-order", ca.max_order, "Maximum tensor order for mps or spider");
  compile->add_option("--out", ca.output, "Output file");

  RunArgs ta, ea;
  auto run_options = [](CLI::App* sub, RunArgs& r) {
    sub->add_option("--config", r.config, "Config file");
    sub->add_option("--dataset", r.dataset, "Dataset file (label<TAB>sentence)");
    sub->add_option("--out", r.out_dir, "Output directory");
    sub->add_option("--set", r.sets, "Override a config key: key=value");
    sub->add_option("--seed", r.seed, "Random seed");
    sub->add_option("--iterations", r.iterations, "Training iterations");
  };
  auto* trn = app.add_subcommand("train", "Train a classifier");
  run_options(trn, ta);
  auto* evl = app.add_subcommand("eval", "Evaluate saved parameters on the test split");
  run_options(evl, ea);
  evl->add_option("--params", ea.params, "Parameter file from train")->required();

  std::size_t gen_seed = 0;
  std::string gen_out = "dataset.tsv";
  auto* gen = app.add_subcommand("gen-dataset", "Write the generated 130-sentence dataset");
  gen->add_option("--seed", gen_seed, "Random seed");
  gen->add_option("--out", gen_out, "Output file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    if (const CLI::App* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << sub->help();
    else
      err << app.help();
    return kExitUsage;
  }

  try {
    if (parse->parsed()) return cmd_parse(pa, out, err);
    if (rewrite->parsed()) return cmd_rewrite(ra, out);
    if (compile->parsed()) return cmd_compile(ca, out);
    if (trn->parsed()) return cmd_train(ta, out, err);
    if (evl->parsed()) return cmd_eval(ea, out);
    if (gen->parsed()) return cmd_gen_dataset(gen_seed, gen_out, out);
  } catch (const InvalidConfig& e) {
    err << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace qnlp::cli
