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


#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "qnlp/backend/statevector.hpp"
#include "qnlp/ccg/to_diagram.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/readers.hpp"
#include "qnlp/training/dataset.hpp"
#include "qnlp/training/loss.hpp"
#include "qnlp/training/model.hpp"
#include "qnlp/training/optimizers.hpp"
#include "qnlp/training/trainer.hpp"

using namespace qnlp;

namespace {

std::set<std::string> words_of(const LabeledDataset& ds, int label) {
  std::set<std::string> out;
  for (const auto& it : ds.items)
    if (it.label == label)
      for (const auto& w : tokenize(it.text)) out.insert(w);
  return out;
}

std::size_t count_label(const LabeledDataset& ds, const std::vector<std::size_t>& idx, int label) {
  std::size_t n = 0;
  for (auto i : idx) n += ds.items[i].label == label;
  return n;
}

LabeledDataset small_dataset() {
  // 10 sentences spread over the three splits by parse_dataset.
  const LabeledDataset full = generate_dataset(0);
  std::ostringstream text;
  for (std::size_t k = 0; k < 10; ++k) {
    const auto& it = full.items[full.train[k]];
    text << it.label << '\t' << it.text << '\n';
  }
  return parse_dataset(text.str());
}

}  // namespace

TEST_CASE("generated dataset", "[training]") {
  const LabeledDataset ds = generate_dataset(0);
  REQUIRE(ds.items.size() == 130);
  CHECK(ds.train.size() == 70);
  CHECK(ds.dev.size() == 30);
  CHECK(ds.test.size() == 30);
  CHECK(count_label(ds, ds.train, 1) == 35);
  CHECK(count_label(ds, ds.dev, 1) == 15);
  CHECK(count_label(ds, ds.test, 1) == 15);

  std::set<std::size_t> all(ds.train.begin(), ds.train.end());
  all.insert(ds.dev.begin(), ds.dev.end());
  all.insert(ds.test.begin(), ds.test.end());
  CHECK(all.size() == 130);
  std::set<std::string> texts;
  for (const auto& it : ds.items) texts.insert(it.text);
  CHECK(texts.size() == 130);

  auto in_train = [&](const std::string& s, int label) {
    for (auto i : ds.train)
      if (ds.items[i].text == s) return ds.items[i].label == label;
    return false;
  };
  CHECK(in_train("skillful programmer creates software", 1));
  CHECK(in_train("chef prepares delicious meal", 0));

  const auto food = words_of(ds, 0);
  const auto it = words_of(ds, 1);
  std::vector<std::string> shared;
  std::set_intersection(food.begin(), food.end(), it.begin(), it.end(), std::back_inserter(shared));
  CHECK(shared.empty());

  CHECK(generate_dataset(0) == ds);
  CHECK_FALSE(generate_dataset(1) == ds);
}

TEST_CASE("generated sentences follow the grammar", "[training]") {
  const LabeledDataset ds = generate_dataset(3);
  for (const auto& item : ds.items) {
    const auto tokens = tokenize(item.text);
    REQUIRE(tokens.size() >= 3);
    REQUIRE(tokens.size() <= 5);
    const ccg::CCGTree tree = generator_derivation(item.text);
    const Diagram d = tree_to_diagram(tree);
    REQUIRE(d.cod() == TypeSeq{sent()});
  }
}

TEST_CASE("dataset files", "[training]") {
  const LabeledDataset ds = generate_dataset(0);
  const LabeledDataset back = parse_dataset(dataset_to_text(ds));
  REQUIRE(back.items.size() == 130);
  for (std::size_t k = 0; k < 70; ++k) CHECK(back.items[back.train[k]] == ds.items[ds.train[k]]);
  for (std::size_t k = 0; k < 30; ++k) CHECK(back.items[back.test[k]] == ds.items[ds.test[k]]);
  CHECK(load_dataset(std::filesystem::path(QNLP_DATA_DIR) / "dataset.tsv") == back);
  CHECK_THROWS_AS(parse_dataset("2\tfoo bar\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset("1 foo bar\n"), ParseError);
  CHECK_THROWS_AS(parse_dataset("1\t  \n"), ParseError);
  CHECK_THROWS_AS(load_dataset("/nonexistent/data.tsv"), InvalidInput);

  // Each line of the AUTO export parses back into a derivation.
  const std::string autotext = dataset_to_auto(ds);
  std::size_t ids = 0;
  for (std::size_t p = autotext.find("ID="); p != std::string::npos; p = autotext.find("ID=", p + 1)) ++ids;
  CHECK(ids == 130);
}

TEST_CASE("binary cross entropy", "[training]") {
  CHECK(bce_loss(1.0, 1) == Catch::Approx(1e-9).margin(1e-12));
  CHECK(bce_loss(0.5, 0) == Catch::Approx(std::log(2.0)));
  CHECK(bce_loss(0.5, 1) == Catch::Approx(0.693147).epsilon(1e-6));
  CHECK(bce_loss(0.0, 1) == Catch::Approx(std::log(1e9)));
  CHECK(bce_loss(0.0, 1) == Catch::Approx(20.723).epsilon(1e-4));
  CHECK(bce_ceiling() == Catch::Approx(std::log(1e9)));
  for (int k = 0; k <= 100; ++k) {
    const double p = k / 100.0;
    CHECK(bce_loss(p, 0) >= 0.0);
    CHECK(bce_loss(p, 1) >= 0.0);
    const double h = 1e-6;
    if (k > 0 && k < 100)
      CHECK(bce_grad(p, 1) == Catch::Approx((bce_loss(p + h, 1) - bce_loss(p - h, 1)) / (2 * h)).epsilon(1e-5));
  }
}

TEST_CASE("sentence vector probabilities", "[training]") {
  CHECK(vector_p1(Eigen::Vector2d(1, 0)) == 0.0);
  CHECK(vector_p1(Eigen::Vector2d(1, 1)) == 0.5);
  CHECK(vector_p1(Eigen::Vector2d(-3, 4)) == Catch::Approx(16.0 / 25.0));
  const Eigen::Vector2d v(0.3, -1.2);
  const Eigen::VectorXd g = vector_p1_grad(v);
  const double h = 1e-6;
  CHECK(g(0) == Catch::Approx((vector_p1(Eigen::Vector2d(0.3 + h, -1.2)) - vector_p1(Eigen::Vector2d(0.3 - h, -1.2))) / (2 * h)));
  CHECK(g(1) == Catch::Approx((vector_p1(Eigen::Vector2d(0.3, -1.2 + h)) - vector_p1(Eigen::Vector2d(0.3, -1.2 - h))) / (2 * h)));
}

TEST_CASE("circuit predictions", "[training]") {
  Model m;
  m.config.ansatz = AnsatzKind::Iqp;
  Circuit c;
  c.n_qubits = 1;
  c.ops = {{GateKind::Rx, {0}, Angle::constant(std::numbers::pi)}};
  c.open = {0};
  m.artifacts.push_back(c);
  CHECK(predict(m, {}, 0).p1 == Catch::Approx(1.0));
  m.config.backend = BackendKind::Shots;
  m.config.shots = 100;
  CHECK(predict(m, {}, 0, 9).p1 == 1.0);

  Circuit dead = c;
  dead.n_qubits = 2;
  dead.postselect = {{1, 1}};
  m.artifacts.push_back(dead);
  const Prediction p = predict(m, {}, 1, 9);
  CHECK(p.degenerate);
  CHECK(p.p1 == 0.5);
  m.config.backend = BackendKind::Exact;
  CHECK(predict(m, {}, 1).degenerate);
}

TEST_CASE("Adam", "[training]") {
  Eigen::VectorXd theta(3);
  theta << 1, -2, 3;
  const Eigen::VectorXd start = theta;
  AdamState st;
  adam_step(theta, Eigen::VectorXd::Zero(3), st);
  CHECK(theta == start);

  AdamState st2;
  Eigen::VectorXd g(3);
  g << 0.5, -4, 1e-3;
  adam_step(theta, g, st2);
  for (Eigen::Index i = 0; i < 3; ++i)
    CHECK(theta(i) - start(i) == Catch::Approx(-0.05 * g(i) / (std::abs(g(i)) + 1e-8)));

  Eigen::VectorXd target(4);
  target << 0.3, -1.1, 2.0, 0.0;
  Eigen::VectorXd x = Eigen::VectorXd::Zero(4);
  AdamState st3;
  std::size_t steps = 0;
  while ((x - target).norm() >= 1e-3 && steps < 500) {
    adam_step(x, 2 * (x - target), st3);
    ++steps;
  }
  CHECK((x - target).norm() < 1e-3);
  CHECK(steps <= 500);

  AdamConfig bad;
  bad.lr = -1;
  CHECK_THROWS_AS(adam_step(x, g.head(3), st3, bad), Error);
}

TEST_CASE("SPSA", "[training]") {
  SpsaConfig cfg;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Eigen::VectorXd theta(1);
    theta << 0.7;
    const auto info = spsa_step(theta, [](const Eigen::VectorXd& t) { return 3 * t(0); }, 4, cfg, seed);
    CHECK(info.gradient(0) == Catch::Approx(3.0).epsilon(1e-12));
  }
  Eigen::VectorXd flat = Eigen::VectorXd::Constant(5, 1.5);
  const Eigen::VectorXd before = flat;
  spsa_step(flat, [](const Eigen::VectorXd&) { return 2.0; }, 0, cfg, 1);
  CHECK(flat == before);

  std::size_t calls = 0;
  Eigen::VectorXd t2 = Eigen::VectorXd::Zero(4);
  spsa_step(t2, [&](const Eigen::VectorXd& t) { ++calls; return t.squaredNorm(); }, 0, cfg, 2);
  CHECK(calls == 2);

  // Deterministic given the seed.
  Eigen::VectorXd a = Eigen::VectorXd::Ones(6), b = a;
  auto bowl = [](const Eigen::VectorXd& t) { return t.squaredNorm(); };
  spsa_step(a, bowl, 3, cfg, 11);
  spsa_step(b, bowl, 3, cfg, 11);
  CHECK(a == b);
}

TEST_CASE("SPSA descends a quadratic bowl", "[training]") {
  SpsaConfig cfg;
  cfg.A = 30;
  Eigen::VectorXd theta(10);
  theta << 1, -1, 0.5, 2, -0.3, 0.8, -1.5, 0.2, 1.1, -0.7;
  auto bowl = [](const Eigen::VectorXd& t) { return t.squaredNorm(); };
  const double start = bowl(theta);
  for (std::size_t k = 0; k < 300; ++k) spsa_step(theta, bowl, k, cfg, derive_seed(17, k));
  CHECK(bowl(theta) <= 0.1 * start);
}

TEST_CASE("training loop contracts", "[training]") {
  const LabeledDataset ds = small_dataset();
  PipelineConfig classical;
  classical.ansatz = AnsatzKind::Spider;
  classical.sizes = {{"n", 2}, {"s", 2}};
  classical.max_order = 2;
  TrainConfig tc;
  tc.iterations = 0;
  const TrainResult none = train(classical, ds, tc);
  CHECK(none.history.empty());
  std::vector<std::string> sentences;
  for (const auto& it : ds.items) sentences.push_back(it.text);
  CHECK(none.params == init_parameters(compile_model(classical, sentences), tc.seed));

  tc.iterations = 7;
  const TrainResult seven = train(classical, ds, tc);
  CHECK(seven.history.size() == 7);
  CHECK(seven.history.front().iter == 1);
  CHECK(history_csv(seven.history).rfind("iter,train_loss,train_acc,dev_loss,dev_acc\n", 0) == 0);
  CHECK(train(classical, ds, tc).params == seven.params);
  CHECK(evaluate_test(classical, ds, tc, seven.params).accuracy == seven.test.accuracy);

  PipelineConfig iqp;
  CHECK_THROWS_AS(train(iqp, ds, tc), InvalidConfig);
  tc.optimizer = OptimizerKind::Spsa;
  tc.iterations = 3;
  const TrainResult q = train(iqp, ds, tc);
  CHECK(q.history.size() == 3);
  const Model qm = compile_model(iqp, sentences);
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    const double p = predict(qm, q.params, i).p1;
    CHECK(p >= 0.0);
    CHECK(p <= 1.0);
  }

  LabeledDataset broken = ds;
  broken.items[0].text = "qwerty zxcv";
  CHECK_THROWS_AS(train(iqp, broken, tc), CompileError);
  try {
    train(iqp, broken, tc);
  } catch (const CompileError& e) {
    CHECK(std::string(e.what()).find("qwerty zxcv") != std::string::npos);
  }
}

TEST_CASE("pipeline configuration checks", "[training]") {
  PipelineConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  cfg.reader = ReaderKind::Spiders;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  cfg = {};
  cfg.ansatz = AnsatzKind::Tensor;
  cfg.backend = BackendKind::Shots;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  cfg = {};
  cfg.noise = 2;
  CHECK_THROWS_AS(cfg.validate(), InvalidConfig);
  CHECK(parse_ansatz("mps") == AnsatzKind::Mps);
  CHECK(reader_name(parse_reader("cups")) == "cups");
  CHECK_THROWS_AS(parse_backend("tensor"), InvalidConfig);
}
