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

#include <filesystem>
#include <fstream>
#include <random>

#include "qnlp/ccg/category.hpp"
#include "qnlp/ccg/to_diagram.hpp"
#include "qnlp/ccg/tree.hpp"
#include "qnlp/errors.hpp"
#include "qnlp/pregroup/diagram.hpp"
#include "support/random_objects.hpp"

using namespace qnlp;
using namespace qnlp::ccg;

namespace {

const char* kFlower = "(<T NP 0 2> (<L NP/N DT DT a NP/N>) (<L N NN NN flower N>) )";
const char* kGave =
    "(<T S[dcl] 1 2> (<L NP NNP NNP John NP>) (<T S[dcl]\\NP 0 2> (<T (S[dcl]\\NP)/NP 0 2> "
    "(<L ((S[dcl]\\NP)/NP)/NP VBD VBD gave ((S[dcl]\\NP)/NP)/NP>) (<L NP NNP NNP Mary NP>) ) "
    "(<T NP 0 2> (<L NP/N DT DT a NP/N>) (<L N NN NN flower N>) ) ) )";

std::filesystem::path fixture() {
  return std::filesystem::path(QNLP_DATA_DIR) / "fixtures" / "derivations.auto";
}

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("qnlp_ccg_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

bool same_tree(const CCGTree& a, const CCGTree& b) {
  if (!(a.category == b.category) || a.token != b.token || a.rule != b.rule ||
      a.children.size() != b.children.size())
    return false;
  for (std::size_t i = 0; i < a.children.size(); ++i)
    if (!same_tree(a.children[i], b.children[i])) return false;
  return true;
}

std::vector<Rule> rules_of(const CCGTree& t) {
  std::vector<Rule> out;
  if (t.rule) out.push_back(*t.rule);
  for (const auto& c : t.children) {
    auto sub = rules_of(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

bool has_rule(const CCGTree& t, Rule r) {
  auto rs = rules_of(t);
  return std::find(rs.begin(), rs.end(), r) != rs.end();
}

}  // namespace

TEST_CASE("category parsing and printing", "[ccg]") {
  for (const char* text : {"N", "NP", "S[dcl]", "NP/N", "(S[dcl]\\NP)/NP", "((S\\NP)\\(S\\NP))/NP",
                           "conj", ",", ".", "NP[conj]", "(S[dcl]\\NP)[conj]", "PP/NP"}) {
    INFO(text);
    CHECK(parse_category(text).to_string() == text);
  }
  const Category c = parse_category("(S[dcl]\\NP)/NP");
  CHECK(c.kind() == Category::Kind::Forward);
  CHECK(c.result().kind() == Category::Kind::Backward);
  CHECK(c.result().result().feature() == std::optional<std::string>("dcl"));
  CHECK(parse_category("NP[conj]").conj());
  CHECK_THROWS_AS(parse_category("XYZ"), UnknownCategory);
  CHECK_THROWS_AS(parse_category("(NP/N"), UnknownCategory);
  CHECK_THROWS_AS(parse_category(""), UnknownCategory);
  CHECK(unifies(parse_category("S[dcl]"), parse_category("S")));
  CHECK_FALSE(unifies(parse_category("S[dcl]"), parse_category("S[b]")));
}

TEST_CASE("categories map to pregroup types", "[ccg]") {
  CHECK(cat_to_typeseq(parse_category("NP/N")) == TypeSeq{noun(), noun(-1)});
  CHECK(cat_to_typeseq(parse_category("(S\\NP)/NP")) == TypeSeq{noun(1), sent(), noun(-1)});
  CHECK(cat_to_typeseq(parse_category("((S\\NP)\\(S\\NP))/NP")) ==
        TypeSeq{sent(1), noun(2), noun(1), sent(), noun(-1)});
  CHECK(cat_to_typeseq(parse_category("PP")) == TypeSeq{noun()});
  CHECK(cat_to_typeseq(parse_category("S[em]")) == TypeSeq{sent()});
  CHECK(cat_to_typeseq(parse_category("conj")).empty());
  CHECK(cat_to_typeseq(parse_category(",")).empty());
}

TEST_CASE("category translation is compositional", "[ccg]") {
  std::mt19937_64 rng(31);
  for (int k = 0; k < 500; ++k) {
    const Category x = testgen::random_category(rng, 3);
    const Category y = testgen::random_category(rng, 2);
    const TypeSeq tx = cat_to_typeseq(x);
    const TypeSeq ty = cat_to_typeseq(y);
    INFO(x.to_string() << " / " << y.to_string());
    REQUIRE(reduces_to(cat_to_typeseq(Category::forward(x, y)) + ty, tx));
    REQUIRE(reduces_to(ty + cat_to_typeseq(Category::backward(x, y)), tx));
  }
}

TEST_CASE("AUTO parsing examples", "[ccg]") {
  const CCGTree leaf = parse_derivation("(<L N NN NN flower N>)");
  CHECK(leaf.is_leaf());
  CHECK(leaf.token == "flower");
  CHECK(leaf.category == parse_category("N"));

  const CCGTree node = parse_derivation(kFlower);
  REQUIRE(node.rule == Rule::FA);
  CHECK(node.category == parse_category("NP"));
  REQUIRE(node.children.size() == 2);
  CHECK(node.children[0].token == "a");
  CHECK(node.children[0].category == parse_category("NP/N"));
  CHECK(node.children[1].token == "flower");

  CHECK(parse_auto("").empty());
  CHECK(parse_auto("\n\nID=x\n").empty());
  CHECK(parse_auto(std::string("ID=1\n") + kFlower + "\nID=2\n" + kGave + "\n").size() == 2);
}

TEST_CASE("AUTO parse errors carry positions", "[ccg]") {
  try {
    parse_auto(std::string(kFlower) + "\n(<T NP 0 2> (<L NP/N DT DT a NP/N>) (<L N NN NN flower N>)\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == std::size_t{2});
    CHECK(e.column().has_value());
  }
  try {
    parse_derivation("(<L N NN NN flower N>) (<X>)", 4);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == std::size_t{4});
    CHECK(e.column() == std::size_t{24});
  }
  CHECK_THROWS_AS(parse_derivation("(<L N NN>)"), ParseError);
  CHECK_THROWS_AS(parse_derivation("(<T NP 0 3> (<L N NN NN a N>))"), ParseError);
  CHECK_THROWS_AS(parse_derivation("(<L QQ NN NN flower QQ>)"), UnknownCategory);
  // Well-formed but no combinator explains N N => S.
  CHECK_THROWS_AS(parse_derivation("(<T S 0 2> (<L N NN NN a N>) (<L N NN NN b N>) )"), ParseError);
}

TEST_CASE("combinator inference", "[ccg]") {
  auto cat = [](const char* s) { return parse_category(s); };
  CHECK(infer_binary_rule(cat("NP"), cat("NP/N"), cat("N")) == Rule::FA);
  CHECK(infer_binary_rule(cat("S[dcl]"), cat("NP"), cat("S[dcl]\\NP")) == Rule::BA);
  CHECK(infer_binary_rule(cat("S/NP"), cat("S/(S\\NP)"), cat("(S\\NP)/NP")) == Rule::FC);
  CHECK(infer_binary_rule(cat("(S\\NP)\\(S\\NP)"), cat("(S\\NP)\\(S\\NP)"), cat("(S\\NP)\\(S\\NP)")) ==
        Rule::BC);
  CHECK(infer_binary_rule(cat("S\\NP"), cat("S/S"), cat("S\\NP")) == Rule::FX);
  CHECK(infer_binary_rule(cat("(S\\NP)/NP"), cat("(S\\NP)/NP"), cat("(S\\NP)\\(S\\NP)")) == Rule::BX);
  CHECK(infer_binary_rule(cat("NP[conj]"), cat("conj"), cat("NP")) == Rule::CONJ);
  CHECK(infer_binary_rule(cat("S"), cat("S"), cat(".")) == Rule::CONJ);
  CHECK_FALSE(infer_binary_rule(cat("S"), cat("N"), cat("N")).has_value());
  CHECK(infer_unary_rule(cat("S/(S\\NP)"), cat("NP")) == Rule::TR);
  CHECK(infer_unary_rule(cat("S\\(S/NP)"), cat("NP")) == Rule::TR);
  CHECK(infer_unary_rule(cat("NP"), cat("N")) == Rule::LEX);
  CHECK(infer_unary_rule(cat("N\\N"), cat("S[ng]\\NP")) == Rule::UNARY);
  CHECK(conj_shape(cat("NP"), cat("NP"), cat("NP[conj]")) == ConjShape::CoordLeft);
  CHECK(conj_shape(cat("NP"), cat(","), cat("NP")) == ConjShape::PunctLeft);
}

TEST_CASE("tree nodes check their arity", "[ccg]") {
  const CCGTree a = CCGTree::leaf("a", parse_category("NP/N"));
  const CCGTree f = CCGTree::leaf("flower", parse_category("N"));
  CHECK_NOTHROW(CCGTree::node(parse_category("NP"), Rule::FA, {a, f}));
  CHECK_THROWS_AS(CCGTree::node(parse_category("NP"), Rule::FA, {a}), DerivationError);
  CHECK_THROWS_AS(CCGTree::node(parse_category("NP"), Rule::LEX, {a, f}), DerivationError);
  CHECK(CCGTree::node(parse_category("NP"), Rule::FA, {a, f}).tokens() ==
        std::vector<std::string>{"a", "flower"});
}

TEST_CASE("AUTO writing round trips", "[ccg]") {
  for (const auto& t : parse_auto(std::string(kFlower) + "\n" + kGave)) {
    CHECK(same_tree(parse_derivation(to_auto(t)), t));
  }
}

TEST_CASE("a flower becomes two words and a cup", "[ccg]") {
  const Diagram d = tree_to_diagram(parse_derivation(kFlower));
  REQUIRE(d.layers().size() == 3);
  CHECK(d.dom().empty());
  CHECK(d.cod() == TypeSeq{noun()});
  CHECK(d.layers()[0].box == Box{Word{"a", {}, {noun(), noun(-1)}}});
  CHECK(d.layers()[1].box == Box{Word{"flower", {}, {noun()}}});
  CHECK(d.layers()[2].box == Box{Cup{AtomicType::noun(), -1}});
  CHECK(d.layers()[2].offset == 1);
}

TEST_CASE("John gave Mary a flower", "[ccg]") {
  const Diagram d = tree_to_diagram(parse_derivation(kGave));
  const BoxCounts c = count_boxes(d);
  CHECK(c.words == 5);
  CHECK(c.cups == 4);
  CHECK(c.caps + c.spiders + c.swaps == 0);
  CHECK(d.cod() == TypeSeq{sent()});
  CHECK(d.layers()[1].box == Box{Word{"gave", {}, {noun(1), sent(), noun(-1), noun(-1)}}});
}

TEST_CASE("a single leaf is a single word", "[ccg]") {
  const Diagram d = tree_to_diagram(parse_derivation("(<L N NN NN flower N>)"));
  CHECK(d.size() == 1);
  CHECK(d.cod() == TypeSeq{noun()});
}

TEST_CASE("fixture derivations cover every combinator", "[ccg]") {
  std::ifstream in(fixture());
  std::stringstream buf;
  buf << in.rdbuf();
  const auto trees = parse_auto(buf.str());
  REQUIRE(trees.size() >= 20);
  std::set<Rule> seen;
  for (const auto& t : trees)
    for (Rule r : rules_of(t)) seen.insert(r);
  for (Rule r : {Rule::FA, Rule::BA, Rule::FC, Rule::BC, Rule::FX, Rule::BX, Rule::TR, Rule::LEX,
                 Rule::CONJ, Rule::UNARY})
    CHECK(seen.count(r) == 1);
  for (const auto& t : trees) {
    INFO(to_auto(t));
    const Diagram d = tree_to_diagram(t);
    CHECK(d.dom().empty());
    CHECK_FALSE(check_types(d.dom(), d.cod(), d.layers()).has_value());
    CHECK(reduce(d.cod()) == reduce(cat_to_typeseq(t.category)));
    if (t.category.is_atomic() && t.category.name() == "S") CHECK(reduce(d.cod()) == TypeSeq{sent()});
    // Every cup closes a cancelling pair.
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (!std::holds_alternative<Cup>(d.layers()[i].box)) continue;
      CHECK(reduce(d.wires_before(i).slice(d.layers()[i].offset, 2)).empty());
    }
  }
  CHECK(has_rule(trees[9], Rule::TR));
}

TEST_CASE("section conversion isolates failures", "[ccg]") {
  const auto dir = scratch_dir("section");
  {
    std::ofstream f(dir / "a.auto");
    f << "ID=good.1\n" << kFlower << "\nID=bad\n(<T NP 0 2> (<L NP/N DT DT a NP/N>)\nID=good.2\n" << kGave << "\n";
  }
  const auto entries = section_to_diagrams(dir / "a.auto");
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "good.1");
  CHECK(entries[0].diagram.has_value());
  CHECK(entries[1].id == "bad");
  CHECK_FALSE(entries[1].diagram.has_value());
  CHECK_FALSE(entries[1].error.empty());
  CHECK(entries[2].diagram.has_value());
  CHECK(section_to_diagrams(dir).size() == 3);

  const auto empty = scratch_dir("empty");
  CHECK(section_to_diagrams(empty).empty());
  CHECK_THROWS_AS(section_to_diagrams(empty / "missing.auto"), InvalidInput);

  {
    std::ofstream f(empty / "two.auto");
    f << kFlower << "\n" << kGave << "\n";
  }
  const auto two = section_to_diagrams(empty / "two.auto");
  REQUIRE(two.size() == 2);
  CHECK(two[0].diagram.has_value());
  CHECK(two[1].diagram.has_value());
  CHECK(two[1].id.find(":2") != std::string::npos);
}

TEST_CASE("bundled fixture converts completely", "[ccg]") {
  const auto entries = section_to_diagrams(fixture());
  REQUIRE(entries.size() >= 20);
  for (const auto& e : entries) {
    INFO(e.id << " " << e.error);
    CHECK(e.diagram.has_value());
  }
}
