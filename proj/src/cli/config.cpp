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

#include "qnlp/cli/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "qnlp/errors.hpp"

namespace qnlp::cli {

namespace {

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return {};
  auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::size_t to_count(const std::string& key, const std::string& v) {
  std::size_t out = 0;
  auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || v.empty())
    throw InvalidConfig(key + ": expected a non-negative integer, got '" + v + "'");
  return out;
}

double to_real(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    double d = std::stod(v, &used);
    if (used == v.size()) return d;
  } catch (const std::exception&) {
  }
  throw InvalidConfig(key + ": expected a number, got '" + v + "'");
}

std::vector<std::string> split_list(const std::string& v) {
  std::vector<std::string> out;
  std::stringstream in(v);
  std::string item;
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string resolve(const std::string& v, const std::filesystem::path& base) {
  std::filesystem::path p(v);
  if (v.empty() || p.is_absolute() || base.empty()) return v;
  return (base / p).lexically_normal().string();
}

std::string format_real(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

std::vector<std::pair<std::string, std::string>> parse_key_values(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (trim(line).empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidConfig("config line " + std::to_string(line_no) + ": expected key = value");
    out.emplace_back(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
  return out;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir) {
  PipelineConfig& p = cfg.pipeline;
  TrainConfig& t = cfg.train;
  if (key == "reader") p.reader = parse_reader(value);
  else if (key == "ccg_file") p.ccg_file = resolve(value, base_dir);
  else if (key == "rewrite") p.rewrite = split_list(value);
  else if (key == "wordlists") p.wordlist_dir = resolve(value, base_dir);
  else if (key == "ansatz") p.ansatz = parse_ansatz(value);
  else if (key == "sizes") p.sizes = parse_type_sizes(value);
  else if (key == "layers") p.layers = to_count(key, value);
  else if (key == "bond_dim") p.bond_dim = to_count(key, value);
  else if (key == "max_order") p.max_order = to_count(key, value);
  else if (key == "backend") p.backend = parse_backend(value);
  else if (key == "shots") p.shots = to_count(key, value);
  else if (key == "noise") p.noise = to_real(key, value);
  else if (key == "optimizer") {
    if (value == "adam") t.optimizer = OptimizerKind::Adam;
    else if (value == "spsa") t.optimizer = OptimizerKind::Spsa;
    else throw InvalidConfig("unknown optimizer '" + value + "' (expected adam or spsa)");
  }
  else if (key == "iterations") t.iterations = to_count(key, value);
  else if (key == "seed") t.seed = to_count(key, value);
  else if (key == "lr") t.adam.lr = to_real(key, value);
  else if (key == "beta1") t.adam.beta1 = to_real(key, value);
  else if (key == "beta2") t.adam.beta2 = to_real(key, value);
  else if (key == "eps") t.adam.eps = to_real(key, value);
  else if (key == "spsa_a") t.spsa.a = to_real(key, value);
  else if (key == "spsa_c") t.spsa.c = to_real(key, value);
  else if (key == "spsa_A") {
    t.spsa.A = to_real(key, value);
    t.spsa_A_auto = false;
  }
  else if (key == "spsa_alpha") t.spsa.alpha = to_real(key, value);
  else if (key == "spsa_gamma") t.spsa.gamma = to_real(key, value);
  else if (key == "dataset") cfg.dataset = resolve(value, base_dir);
  else throw InvalidConfig("unknown config key '" + key + "'");
}

RunConfig load_run_config(const std::filesystem::path& file,
                          const std::vector<std::pair<std::string, std::string>>& overrides) {
  RunConfig cfg;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw InvalidInput("cannot read config " + file.string());
    std::stringstream buf;
    buf << in.rdbuf();
    for (const auto& [k, v] : parse_key_values(buf.str())) apply_setting(cfg, k, v, file.parent_path());
  }
  for (const auto& [k, v] : overrides) apply_setting(cfg, k, v);
  cfg.pipeline.validate();
  return cfg;
}

std::string describe(const RunConfig& cfg) {
  const PipelineConfig& p = cfg.pipeline;
  const TrainConfig& t = cfg.train;
  std::ostringstream out;
  std::string sizes;
  for (const auto& [k, v] : p.sizes) sizes += (sizes.empty() ? "" : ",") + k + "=" + std::to_string(v);
  std::string rewrite;
  for (const auto& r : p.rewrite) rewrite += (rewrite.empty() ? "" : ",") + r;
  out << "reader = " << reader_name(p.reader) << "\n";
  if (!p.ccg_file.empty()) out << "ccg_file = " << p.ccg_file << "\n";
  if (!rewrite.empty()) out << "rewrite = " << rewrite << "\n";
  if (!p.wordlist_dir.empty()) out << "wordlists = " << p.wordlist_dir << "\n";
  out << "ansatz = " << ansatz_name(p.ansatz) << "\n"
      << "sizes = " << sizes << "\n"
      << "layers = " << p.layers << "\n"
      << "bond_dim = " << p.bond_dim << "\n"
      << "max_order = " << p.max_order << "\n"
      << "backend = " << backend_name(p.backend) << "\n"
      << "shots = " << p.shots << "\n"
      << "noise = " << format_real(p.noise) << "\n"
      << "optimizer = " << (t.optimizer == OptimizerKind::Adam ? "adam" : "spsa") << "\n"
      << "iterations = " << t.iterations << "\n"
      << "seed = " << t.seed << "\n"
      << "lr = " << format_real(t.adam.lr) << "\n"
      << "beta1 = " << format_real(t.adam.beta1) << "\n"
      << "beta2 = " << format_real(t.adam.beta2) << "\n"
      << "eps = " << format_real(t.adam.eps) << "\n"
      << "spsa_a = " << format_real(t.spsa.a) << "\n"
      << "spsa_c = " << format_real(t.spsa.c) << "\n";
  if (!t.spsa_A_auto) out << "spsa_A = " << format_real(t.spsa.A) << "\n";
  out << "spsa_alpha = " << format_real(t.spsa.alpha) << "\n"
      << "spsa_gamma = " << format_real(t.spsa.gamma) << "\n";
  if (!cfg.dataset.empty()) out << "dataset = " << cfg.dataset << "\n";
  return out.str();
}

}  // namespace qnlp::cli
