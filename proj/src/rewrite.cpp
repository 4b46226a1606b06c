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

#include "qnlp/rewrite.hpp"

#include <algorithm>
#include <fstream>

#include "qnlp/errors.hpp"

namespace qnlp {

namespace {

const std::vector<std::string> kListNames = {
    "determiners", "auxiliaries", "connectors",
    "prepositions", "preadverbs", "postadverbs"};

WordLists make_builtin() {
  WordLists w;
  w.set("determiners", {"a", "an", "the"});
  w.set("auxiliaries", {"am", "are", "be", "been", "being", "can", "could",
                        "did", "do", "does", "had", "has", "have", "is",
                        "may", "might", "must", "shall", "should", "was",
                        "were", "will", "would"});
  w.set("connectors", {"that", "which", "who", "whom", "whose"});
  w.set("prepositions", {"about", "above", "across", "after", "against",
                         "along", "around", "at", "before", "behind",
                         "below", "beside", "between", "by", "during",
                         "for", "from", "in", "inside", "into", "near",
                         "of", "off", "on", "onto", "over", "through",
                         "to", "toward", "towards", "under", "with",
                         "within", "without"});
  w.set("preadverbs", {"almost", "always", "carefully", "never", "often",
                       "quickly", "rarely", "really", "seldom", "slowly",
                       "sometimes", "usually"});
  w.set("postadverbs", {"badly", "carefully", "early", "fast", "hard",
                        "late", "loudly", "quickly", "quietly", "slowly",
                        "today", "tomorrow", "well", "yesterday"});
  return w;
}

}  // namespace

const WordLists& WordLists::builtin() {
  static const WordLists lists = make_builtin();
  return lists;
}

std::set<std::string> read_word_list(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot read word list " + file.string());
  std::set<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    out.insert(line.substr(first, last - first + 1));
  }
  return out;
}

WordLists WordLists::load(const std::filesystem::path& dir) {
  WordLists w = builtin();
  for (const auto& name : kListNames) {
    auto file = dir / (name + ".txt");
    if (std::filesystem::exists(file)) w.set(name, read_word_list(file));
  }
  return w;
}

const std::set<std::string>& WordLists::get(const std::string& list) const {
  auto it = lists_.find(list);
  if (it == lists_.end()) throw InvalidConfig("unknown word list '" + list + "'");
  return it->second;
}

void WordLists::set(const std::string& list, std::set<std::string> tokens) {
  lists_[list] = std::move(tokens);
}

bool is_cap_shaped(const TypeSeq& type) {
  const std::size_t n = type.size();
  if (n == 0 || n % 2 != 0) return false;
  for (std::size_t i = 0; i < n / 2; ++i) {
    const PType& a = type[i];
    const PType& b = type[n - 1 - i];
    if (a.base != b.base || a.z != b.z + 1) return false;
  }
  return true;
}

Diagram nested_caps(const TypeSeq& type) {
  if (!is_cap_shaped(type))
    throw InvalidInput("type " + type.to_string() + " is not cap-shaped");
  Diagram d;
  const std::size_t n = type.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    const PType& inner = type[n - 1 - i];
    d.append(Cap{inner.base, inner.z}, i);
  }
  return d;
}

namespace {

bool word_state(const Word& w) { return w.dom.empty(); }

RewriteRule token_rule(std::string name, std::set<std::string> tokens,
                       std::function<bool(const TypeSeq&)> shape,
                       std::function<Diagram(const Word&)> transform) {
  auto matches = [tokens = std::move(tokens), shape = std::move(shape)](const Word& w) {
    return word_state(w) && tokens.count(w.token) > 0 && shape(w.cod);
  };
  return RewriteRule{std::move(name), std::move(matches), std::move(transform)};
}

const TypeSeq& prep_shape() {
  static const TypeSeq t{sent(1), noun(2), noun(1), sent(), noun(-1)};
  return t;
}
const TypeSeq& postadverb_shape() {
  static const TypeSeq t{sent(1), noun(2), noun(1), sent()};
  return t;
}
const TypeSeq& preadverb_shape() {
  static const TypeSeq t{noun(1), sent(), sent(-1), noun()};
  return t;
}

}  // namespace

RewriteRule determiner_rule(std::set<std::string> tokens) {
  return token_rule(
      "determiner", std::move(tokens),
      [](const TypeSeq& t) { return t == TypeSeq{noun(), noun(-1)}; },
      [](const Word&) { return Diagram::from_box(Cap{AtomicType::noun(), -1}); });
}

RewriteRule auxiliary_rule(std::set<std::string> tokens) {
  return token_rule("auxiliary", std::move(tokens), is_cap_shaped,
                    [](const Word& w) { return nested_caps(w.cod); });
}

RewriteRule connector_rule(std::set<std::string> tokens) {
  return token_rule("connector", std::move(tokens), is_cap_shaped,
                    [](const Word& w) { return nested_caps(w.cod); });
}

// s^r n^rr n^r s n^l  ->  word(s^r s n^l) with a cap n^rr n^r after s^r.
RewriteRule prepositional_phrase_rule(std::set<std::string> tokens) {
  return token_rule(
      "prepositional_phrase", std::move(tokens),
      [](const TypeSeq& t) { return t == prep_shape(); },
      [](const Word& w) {
        Diagram d = Diagram::from_box(Word{w.token, {}, {sent(1), sent(), noun(-1)}});
        d.append(Cap{AtomicType::noun(), 1}, 1);
        return d;
      });
}

// n^r s s^l n  ->  cap n^r n around word(s s^l).
RewriteRule preadverb_rule(std::set<std::string> tokens) {
  return token_rule(
      "preadverb", std::move(tokens),
      [](const TypeSeq& t) { return t == preadverb_shape(); },
      [](const Word& w) {
        Diagram d = Diagram::from_box(Cap{AtomicType::noun(), 0});
        d.append(Word{w.token, {}, {sent(), sent(-1)}}, 1);
        return d;
      });
}

// s^r n^rr n^r s  ->  word(s^r s) with a cap n^rr n^r in between.
RewriteRule postadverb_rule(std::set<std::string> tokens) {
  return token_rule(
      "postadverb", std::move(tokens),
      [](const TypeSeq& t) { return t == postadverb_shape(); },
      [](const Word& w) {
        Diagram d = Diagram::from_box(Word{w.token, {}, {sent(1), sent()}});
        d.append(Cap{AtomicType::noun(), 1}, 1);
        return d;
      });
}

const std::vector<std::string>& builtin_rule_names() {
  static const std::vector<std::string> names = {
      "auxiliary", "connector", "determiner",
      "postadverb", "preadverb", "prepositional_phrase"};
  return names;
}

Rewriter::Rewriter(std::vector<RewriteRule> rules) : rules_(std::move(rules)) {
  std::set<std::string> seen;
  for (const auto& r : rules_)
    if (!seen.insert(r.name).second)
      throw InvalidConfig("duplicate rewrite rule '" + r.name + "'");
}

Rewriter Rewriter::from_names(const std::vector<std::string>& names, const WordLists& lists) {
  std::vector<RewriteRule> rules;
  for (const auto& name : names) {
    if (name == "auxiliary") rules.push_back(auxiliary_rule(lists.get("auxiliaries")));
    else if (name == "connector") rules.push_back(connector_rule(lists.get("connectors")));
    else if (name == "determiner") rules.push_back(determiner_rule(lists.get("determiners")));
    else if (name == "prepositional_phrase")
      rules.push_back(prepositional_phrase_rule(lists.get("prepositions")));
    else if (name == "preadverb") rules.push_back(preadverb_rule(lists.get("preadverbs")));
    else if (name == "postadverb") rules.push_back(postadverb_rule(lists.get("postadverbs")));
    else throw InvalidConfig("unknown rewrite rule '" + name + "'");
  }
  return Rewriter(std::move(rules));
}

Diagram Rewriter::apply(const Diagram& d) const {
  if (rules_.empty()) return d;
  std::vector<Layer> out;
  out.reserve(d.size());
  for (const Layer& layer : d.layers()) {
    const Word* w = std::get_if<Word>(&layer.box);
    const RewriteRule* hit = nullptr;
    if (w) {
      for (const auto& r : rules_) {
        if (r.matches(*w)) {
          hit = &r;
          break;
        }
      }
    }
    if (!hit) {
      out.push_back(layer);
      continue;
    }
    Diagram fragment = hit->transform(*w);
    if (fragment.dom() != w->dom || fragment.cod() != w->cod) {
      throw TypeMismatch("rewrite rule '" + hit->name + "' changed the type of '" +
                         w->token + "'");
    }
    for (const Layer& inner : fragment.layers())
      out.push_back(Layer{inner.box, inner.offset + layer.offset});
  }
  return Diagram(d.dom(), d.cod(), std::move(out));
}

}  // namespace qnlp
