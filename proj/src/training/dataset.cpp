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

#include "qnlp/training/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "qnlp/backend/statevector.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/readers.hpp"

namespace qnlp {

namespace {

struct Vocabulary {
  std::vector<std::string> adjectives, subjects, verbs, objects;
};

const Vocabulary& vocabulary(Topic t) {
  static const Vocabulary food{
      {"delicious", "tasty", "fresh", "hearty"},
      {"chef", "cook", "baker", "waiter"},
      {"prepares", "cooks", "bakes", "serves"},
      {"meal", "dinner", "sauce", "soup", "bread", "pasta"}};
  static const Vocabulary it{
      {"skillful", "useful", "clever", "robust"},
      {"programmer", "developer", "engineer", "hacker"},
      {"creates", "debugs", "writes", "runs"},
      {"software", "application", "code", "program", "database", "website"}};
  return t == Topic::Food ? food : it;
}

const std::map<std::string, std::string>& pos_table() {
  static const std::map<std::string, std::string> table = [] {
    std::map<std::string, std::string> m;
    for (Topic t : {Topic::Food, Topic::IT}) {
      const auto& v = vocabulary(t);
      for (const auto& w : v.adjectives) m[w] = "ADJ";
      for (const auto& w : v.subjects) m[w] = "NOUN";
      for (const auto& w : v.objects) m[w] = "NOUN";
      for (const auto& w : v.verbs) m[w] = "VERB";
    }
    return m;
  }();
  return table;
}

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return std::min(n - 1, static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n)));
}

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[pick(rng, i)]);
}

std::string sample_sentence(const Vocabulary& v, std::mt19937_64& rng) {
  std::string s;
  if (uniform01(rng) < 0.5) s += v.adjectives[pick(rng, v.adjectives.size())] + " ";
  s += v.subjects[pick(rng, v.subjects.size())] + " ";
  s += v.verbs[pick(rng, v.verbs.size())] + " ";
  if (uniform01(rng) < 0.5) s += v.adjectives[pick(rng, v.adjectives.size())] + " ";
  s += v.objects[pick(rng, v.objects.size())];
  return s;
}

std::set<std::string> words_of(const std::string& s) {
  auto t = tokenize(s);
  return {t.begin(), t.end()};
}

struct TopicSplit {
  std::vector<std::string> train, dev, test;
};

// 65 unique sentences; the train part covers the topic vocabulary.
TopicSplit topic_split(Topic topic, const std::string& anchor, std::mt19937_64& rng) {
  const Vocabulary& v = vocabulary(topic);
  std::vector<std::string> pool{anchor};
  std::set<std::string> seen{anchor};
  while (pool.size() < 65) {
    std::string s = sample_sentence(v, rng);
    if (seen.insert(s).second) pool.push_back(s);
  }
  std::vector<std::string> rest(pool.begin() + 1, pool.end());
  shuffle(rest, rng);

  TopicSplit out;
  out.train.push_back(anchor);
  std::set<std::string> covered = words_of(anchor);
  std::set<std::string> vocab;
  for (const auto* list : {&v.adjectives, &v.subjects, &v.verbs, &v.objects})
    vocab.insert(list->begin(), list->end());
  // Greedy cover, then fill in shuffled order.
  while (covered.size() < vocab.size()) {
    auto best = rest.end();
    std::size_t gain = 0;
    for (auto it = rest.begin(); it != rest.end(); ++it) {
      std::size_t g = 0;
      for (const auto& w : words_of(*it)) g += covered.count(w) == 0;
      if (g > gain) {
        gain = g;
        best = it;
      }
    }
    if (best == rest.end()) break;
    auto w = words_of(*best);
    covered.insert(w.begin(), w.end());
    out.train.push_back(*best);
    rest.erase(best);
  }
  std::size_t i = 0;
  while (out.train.size() < 35) out.train.push_back(rest[i++]);
  while (out.dev.size() < 15) out.dev.push_back(rest[i++]);
  while (out.test.size() < 15) out.test.push_back(rest[i++]);
  shuffle(out.train, rng);
  return out;
}

}  // namespace

LabeledDataset generate_dataset(std::uint64_t seed) {
  std::mt19937_64 rng(derive_seed(seed, 0x64617461));
  TopicSplit food = topic_split(Topic::Food, "chef prepares delicious meal", rng);
  TopicSplit it = topic_split(Topic::IT, "skillful programmer creates software", rng);

  LabeledDataset ds;
  auto add_split = [&](const std::vector<std::string>& f, const std::vector<std::string>& t,
                       std::vector<std::size_t>& idx) {
    std::vector<LabeledItem> part;
    for (const auto& s : f) part.push_back({s, static_cast<int>(Topic::Food)});
    for (const auto& s : t) part.push_back({s, static_cast<int>(Topic::IT)});
    shuffle(part, rng);
    for (auto& item : part) {
      idx.push_back(ds.items.size());
      ds.items.push_back(std::move(item));
    }
  };
  add_split(food.train, it.train, ds.train);
  add_split(food.dev, it.dev, ds.dev);
  add_split(food.test, it.test, ds.test);
  return ds;
}

std::string generator_pos(const std::string& word) {
  auto it = pos_table().find(word);
  return it == pos_table().end() ? std::string() : it->second;
}

namespace {

using ccg::CCGTree;
using ccg::Rule;

CCGTree noun_phrase(const std::vector<std::string>& words, std::size_t& i,
                    const std::string& sentence) {
  const ccg::Category n = ccg::parse_category("N");
  const ccg::Category np = ccg::parse_category("NP");
  auto need = [&](const char* pos) {
    if (i >= words.size() || generator_pos(words[i]) != pos)
      throw InvalidInput("sentence outside the generator grammar: '" + sentence + "'");
  };
  if (i < words.size() && generator_pos(words[i]) == "ADJ") {
    CCGTree adj = CCGTree::leaf(words[i++], ccg::parse_category("N/N"));
    need("NOUN");
    CCGTree noun = CCGTree::leaf(words[i++], n);
    CCGTree nbar = CCGTree::node(n, Rule::FA, {adj, noun});
    return CCGTree::node(np, Rule::LEX, {nbar});
  }
  need("NOUN");
  return CCGTree::node(np, Rule::LEX, {CCGTree::leaf(words[i++], n)});
}

}  // namespace

ccg::CCGTree generator_derivation(const std::string& sentence) {
  const auto words = tokenize(sentence);
  std::size_t i = 0;
  CCGTree subj = noun_phrase(words, i, sentence);
  if (i >= words.size() || generator_pos(words[i]) != "VERB")
    throw InvalidInput("sentence outside the generator grammar: '" + sentence + "'");
  CCGTree verb = CCGTree::leaf(words[i++], ccg::parse_category("(S[dcl]\\NP)/NP"));
  CCGTree obj = noun_phrase(words, i, sentence);
  if (i != words.size()) throw InvalidInput("sentence outside the generator grammar: '" + sentence + "'");
  CCGTree vp = CCGTree::node(ccg::parse_category("S[dcl]\\NP"), Rule::FA, {verb, obj});
  return CCGTree::node(ccg::parse_category("S[dcl]"), Rule::BA, {subj, vp});
}

std::string dataset_to_text(const LabeledDataset& ds) {
  std::ostringstream out;
  for (const auto* split : {&ds.train, &ds.dev, &ds.test})
    for (auto i : *split) out << ds.items[i].label << '\t' << ds.items[i].text << '\n';
  return out.str();
}

std::string dataset_to_auto(const LabeledDataset& ds) {
  std::ostringstream out;
  std::size_t line = 0;
  for (const auto* split : {&ds.train, &ds.dev, &ds.test}) {
    for (auto i : *split) {
      out << "ID=" << line++ << '\n' << ccg::to_auto(generator_derivation(ds.items[i].text)) << '\n';
    }
  }
  return out.str();
}

LabeledDataset parse_dataset(const std::string& text) {
  LabeledDataset ds;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError("expected label<TAB>sentence", {}, line_no, 1);
    std::string label = line.substr(0, tab);
    if (label != "0" && label != "1") throw ParseError("label must be 0 or 1", {}, line_no, 1);
    std::string sentence = line.substr(tab + 1);
    if (sentence.find_first_not_of(" \t") == std::string::npos)
      throw ParseError("empty sentence", {}, line_no, tab + 2);
    ds.items.push_back({sentence, label == "1" ? 1 : 0});
  }
  const std::size_t n = ds.items.size();
  const std::size_t n_train = (n * 70 + 65) / 130;
  const std::size_t n_dev = (n * 30 + 65) / 130;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < n_train) ds.train.push_back(i);
    else if (i < n_train + n_dev) ds.dev.push_back(i);
    else ds.test.push_back(i);
  }
  return ds;
}

LabeledDataset load_dataset(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot read dataset " + file.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_dataset(buf.str());
}

}  // namespace qnlp
