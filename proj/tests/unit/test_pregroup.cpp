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

#include <chrono>
#include <random>

#include "qnlp/errors.hpp"
#include "qnlp/pregroup/diagram.hpp"
#include "qnlp/pregroup/serialize.hpp"
#include "qnlp/pregroup/types.hpp"
#include "support/numeric.hpp"
#include "support/oracles.hpp"
#include "support/random_objects.hpp"

using namespace qnlp;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

Diagram word(const std::string& token, TypeSeq cod) {
  return Diagram::from_box(Word{token, {}, std::move(cod)});
}

// Word states for "John gave Mary a flower" wired with four cups.
Diagram gave_diagram() {
  Diagram d = tensor(tensor(tensor(tensor(word("John", {noun()}),
                                          word("gave", {noun(1), sent(), noun(-1), noun(-1)})),
                                   word("Mary", {noun()})),
                            word("a", {noun(), noun(-1)})),
                     word("flower", {noun()}));
  d.append(Cup{AtomicType::noun(), -1}, 7);  // a . flower
  d.append(Cup{AtomicType::noun(), -1}, 4);  // gave . Mary
  d.append(Cup{AtomicType::noun(), -1}, 3);  // gave . (a flower)
  d.append(Cup{AtomicType::noun(), 0}, 0);   // John . gave
  return d;
}

}  // namespace

TEST_CASE("atomic and adjoint types", "[pregroup]") {
  CHECK(noun().l() == noun(-1));
  CHECK(noun().r().r() == noun(2));
  CHECK(noun(-1).to_string() == "n.l");
  CHECK(sent(2).to_string() == "s.r.r");
  CHECK(TypeSeq{}.to_string() == "1");
  CHECK(cancels(noun(-1), noun()));
  CHECK(cancels(noun(), noun(1)));
  CHECK_FALSE(cancels(noun(1), noun()));
  CHECK_FALSE(cancels(noun(), sent(1)));
  CHECK_THROWS_AS(TypeRegistry::standard().get("pp"), InvalidInput);
  TypeRegistry reg;
  reg.add("pp");
  CHECK(reg.contains("pp"));
}

TEST_CASE("adjoints of a product reverse and shift windings", "[pregroup]") {
  const TypeSeq t{noun(1), sent()};
  CHECK(t.l() == TypeSeq{sent(-1), noun()});
  CHECK(t.r() == TypeSeq{sent(1), noun(2)});
  CHECK(t.l().r() == t);
  CHECK(t.r().l() == t);
}

TEST_CASE("concatenation is associative with the unit as identity", "[pregroup]") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    TypeSeq a = testgen::random_typeseq(rng, testgen::uniform_index(rng, 4));
    TypeSeq b = testgen::random_typeseq(rng, testgen::uniform_index(rng, 4));
    TypeSeq c = testgen::random_typeseq(rng, testgen::uniform_index(rng, 4));
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE(a + TypeSeq{} == a);
    REQUIRE(TypeSeq{} + a == a);
  }
}

TEST_CASE("reduce examples", "[pregroup]") {
  CHECK(reduce({noun(), noun(1), sent()}) == TypeSeq{sent()});
  const TypeSeq gave = TypeSeq{noun()} + TypeSeq{noun(1), sent(), noun(-1), noun(-1)} +
                       TypeSeq{noun()} + TypeSeq{noun(), noun(-1)} + TypeSeq{noun()};
  CHECK(reduce(gave) == TypeSeq{sent()});
  CHECK(reduces_to(gave, {sent()}));
  CHECK(reduce({noun(), sent()}) == TypeSeq{noun(), sent()});
  CHECK(reduce({}) == TypeSeq{});
  CHECK(reduces_to({}, {}));
  CHECK_FALSE(reduces_to({noun(), sent()}, {sent()}));
}

TEST_CASE("adjacent-pair deletion is not confluent", "[pregroup]") {
  // n.l n n.r: deleting the left pair leaves n.r, the right pair leaves n.l.
  const TypeSeq t{noun(-1), noun(), noun(1)};
  const auto forms = oracle::irreducible_forms(t);
  CHECK(forms.size() == 2);
  CHECK(reduces_to(t, {noun(1)}));
  CHECK(reduces_to(t, {noun(-1)}));
  CHECK(forms.count(reduce(t)) == 1);
  CHECK(reduce(t) == oracle::canonical_form(t));
}

TEST_CASE("reduce agrees with exhaustive search on random sequences", "[pregroup]") {
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const TypeSeq t = testgen::random_typeseq(rng, testgen::uniform_index(rng, 13));
    const auto forms = oracle::irreducible_forms(t);
    INFO(t.to_string());
    REQUIRE(reduce(t) == oracle::canonical_form(t));
    REQUIRE(forms.count(reduce_greedy(t)) == 1);
    // Reachability: every irreducible form is reachable, a random other target is not
    // unless the oracle agrees.
    for (const auto& f : forms) REQUIRE(reduces_to(t, f));
    const TypeSeq other = testgen::random_typeseq(rng, testgen::uniform_index(rng, 3));
    REQUIRE(reduces_to(t, other) == oracle::reaches(t, other));
  }
}

TEST_CASE("box domains and codomains", "[pregroup]") {
  const AtomicType n = AtomicType::noun();
  CHECK(box_dom(Cup{n, 2}) == TypeSeq{noun(2), noun(3)});
  CHECK(box_cod(Cup{n, 2}).empty());
  CHECK(box_dom(Cap{n, -1}).empty());
  CHECK(box_cod(Cap{n, -1}) == TypeSeq{noun(0), noun(-1)});
  CHECK(box_dom(Spider{n, 1, 3, 2}) == TypeSeq{noun(1), noun(1), noun(1)});
  CHECK(box_cod(Spider{n, 1, 3, 2}) == TypeSeq{noun(1), noun(1)});
  CHECK(box_dom(Swap{noun(), sent()}) == TypeSeq{noun(), sent()});
  CHECK(box_cod(Swap{noun(), sent()}) == TypeSeq{sent(), noun()});
}

TEST_CASE("type checking rejects bad layers", "[pregroup]") {
  CHECK(check_types({}, {noun()}, {{Word{"a", {}, {noun()}}, 0}}) == std::nullopt);
  CHECK(check_types({}, {noun()}, {{Word{"a", {}, {noun()}}, 1}}).has_value());
  CHECK(check_types({noun()}, {}, {{Cup{AtomicType::noun(), 0}, 0}}).has_value());
  CHECK(check_types({}, {sent()}, {{Word{"a", {}, {noun()}}, 0}}).has_value());
  CHECK_THROWS_AS(Diagram({}, {noun(), noun()}, {{Word{"a", {}, {noun()}}, 0}}), TypeMismatch);
  CHECK_THROWS_AS(Diagram::from_box(Spider{AtomicType::noun(), 0, 0, 0}), Error);
}

TEST_CASE("compose identity laws and mismatch", "[pregroup]") {
  const Diagram d = gave_diagram();
  CHECK(compose(d, Diagram::id(d.cod())) == d);
  CHECK(compose(Diagram::id(d.dom()), d) == d);
  const Diagram john = word("John", {noun()});
  const Diagram cup = Diagram::from_box(Cup{AtomicType::noun(), 0});
  try {
    compose(john, cup);
    FAIL("expected TypeMismatch");
  } catch (const TypeMismatch& e) {
    const std::string what = e.what();
    CHECK(what.find("n.r") != std::string::npos);
  }
}

TEST_CASE("tensor examples", "[pregroup]") {
  const Diagram d = gave_diagram();
  CHECK(tensor(Diagram(), d) == d);
  CHECK(tensor(d, Diagram()) == d);
  const Diagram ab = tensor(word("A", {noun()}), word("B", {noun()}));
  CHECK(ab.cod() == TypeSeq{noun(), noun()});
  CHECK(ab.layers()[1].offset == 1);
}

TEST_CASE("compose, tensor and normal form preserve type checking", "[pregroup]") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Diagram a = testgen::random_diagram(rng, 1 + testgen::uniform_index(rng, 8));
    const Diagram b = testgen::random_diagram(rng, 1 + testgen::uniform_index(rng, 8));
    const Diagram c = testgen::random_diagram(rng, 1 + testgen::uniform_index(rng, 8));
    const Diagram ab = tensor(a, b);
    REQUIRE(ab.cod() == a.cod() + b.cod());
    REQUIRE(ab.dom() == a.dom() + b.dom());
    REQUIRE(tensor(ab, c) == tensor(a, tensor(b, c)));
    REQUIRE_FALSE(check_types(ab.dom(), ab.cod(), ab.layers()).has_value());
    const Diagram composed = compose(ab, Diagram::id(ab.cod()));
    REQUIRE_FALSE(check_types(composed.dom(), composed.cod(), composed.layers()).has_value());
    const Diagram nf = normal_form(ab);
    REQUIRE(nf.dom() == ab.dom());
    REQUIRE(nf.cod() == ab.cod());
    REQUIRE_FALSE(check_types(nf.dom(), nf.cod(), nf.layers()).has_value());
    REQUIRE(normal_form(nf) == nf);
  }
}

TEST_CASE("interchange keeps the diagram well typed", "[pregroup]") {
  Diagram d = tensor(word("A", {noun()}), word("B", {sent()}));
  const Diagram swapped = interchange(d, 1, 0);
  CHECK(swapped.cod() == d.cod());
  CHECK(std::get<Word>(swapped.layers()[0].box).token == "B");
  CHECK(swapped.layers()[1].offset == 0);
}

TEST_CASE("snake equations hold for every type and winding", "[pregroup]") {
  for (const AtomicType base : {AtomicType::noun(), AtomicType::sentence()}) {
    for (int z = -2; z <= 2; ++z) {
      const PType t{base, z};
      // Left snake: cap to the right, cup on the left pair.
      Diagram left = Diagram::id({t});
      left.append(Cap{base, z}, 1);
      left.append(Cup{base, z}, 0);
      // Right snake: cap to the left, cup on the right pair.
      Diagram right = Diagram::id({t});
      right.append(Cap{base, z - 1}, 0);
      right.append(Cup{base, z - 1}, 1);
      INFO(t.to_string());
      CHECK(normal_form(left) == Diagram::id({t}));
      CHECK(normal_form(right) == Diagram::id({t}));

      // Numerically, with a word state feeding the snake.
      const Diagram state = word("v", {t});
      const TypeSizes dims{{"n", 3}, {"s", 2}};
      const auto expected = testgen::contract_diagram(state, dims, 7);
      CHECK(testgen::max_abs_diff(testgen::contract_diagram(compose(state, left), dims, 7), expected) < 1e-10);
      CHECK(testgen::max_abs_diff(testgen::contract_diagram(compose(state, right), dims, 7), expected) < 1e-10);
      CHECK(normal_form(compose(state, left)) == state);
    }
  }
}

TEST_CASE("normal form leaves cap-free diagrams unchanged", "[pregroup]") {
  const Diagram d = gave_diagram();
  CHECK(normal_form(d) == d);
}

TEST_CASE("normal form preserves contraction on random diagrams", "[pregroup]") {
  std::mt19937_64 rng(99);
  const TypeSizes dims{{"n", 2}, {"s", 3}};
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    const Diagram d = testgen::random_diagram(rng, 2 + testgen::uniform_index(rng, 8));
    if (!d.dom().empty() || d.cod().size() > 5) continue;
    const auto a = testgen::contract_diagram(d, dims, 3);
    const auto b = testgen::contract_diagram(normal_form(d), dims, 3);
    REQUIRE(testgen::max_abs_diff(a, b) < 1e-10);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("diagram JSON round trip", "[pregroup]") {
  CHECK(to_json(Diagram()) == R"({"dom":[],"cod":[],"layers":[]})");
  const Diagram d = gave_diagram();
  CHECK(from_json(to_json(d)) == d);
  std::mt19937_64 rng(8);
  for (int k = 0; k < 200; ++k) {
    const Diagram r = testgen::random_diagram(rng, testgen::uniform_index(rng, 10));
    REQUIRE(from_json(to_json(r)) == r);
  }
}

TEST_CASE("malformed diagram JSON", "[pregroup]") {
  const std::string text = to_json(gave_diagram());
  try {
    from_json(text.substr(0, text.size() / 2));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset().has_value());
  }
  CHECK_THROWS_AS(from_json(R"({"dom":[],"cod":[]})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"dom":[{"base":"q","z":0}],"cod":[],"layers":[]})"), ParseError);
  CHECK_THROWS_AS(from_json(R"({"dom":[],"cod":[],"layers":[{"box":{"kind":"blob"},"offset":0}]})"),
                  ParseError);
  // Well-formed JSON whose layers do not type-check.
  CHECK_THROWS_AS(from_json(R"({"dom":[],"cod":[{"base":"s","z":0}],"layers":[]})"), Error);
}

TEST_CASE("svg rendering", "[pregroup]") {
  const std::string id = render_svg(Diagram::id({noun()}));
  CHECK(count_of(id, "<line class=\"wire\"") == 1);
  CHECK(count_of(id, ">n</text>") == 1);
  const Diagram d = gave_diagram();
  const std::string a = render_svg(d);
  CHECK(a == render_svg(d));
  CHECK(count_of(a, "<rect class=\"box\"") == 5);
  CHECK(count_of(a, "<path class=\"arc\"") == 4);
  CHECK(a.rfind("<svg", 0) == 0);
}
