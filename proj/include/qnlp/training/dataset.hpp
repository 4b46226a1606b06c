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
#include <filesystem>
#include <string>
#include <vector>

#include "qnlp/ccg/tree.hpp"

namespace qnlp {

struct LabeledItem {
  std::string text;
  int label = 0;
  bool operator==(const LabeledItem&) const = default;
};

/// Sentences with binary labels and disjoint train/dev/test index sets.
struct LabeledDataset {
  std::vector<LabeledItem> items;
  std::vector<std::size_t> train, dev, test;
  bool operator==(const LabeledDataset&) const = default;
};

/// Label 0: food. Label 1: IT.
enum class Topic { Food = 0, IT = 1 };

/// 130 unique sentences `[ADJ] NOUN VERB [ADJ] NOUN` over two disjoint
/// topic vocabularies, 65 per topic, split 35/15/15 per topic into
/// train/dev/test. Every content word of dev and test also occurs in train.
LabeledDataset generate_dataset(std::uint64_t seed);

/// Part of speech of a generator word: "ADJ", "NOUN", "VERB", or empty.
std::string generator_pos(const std::string& word);
/// CCG derivation of a generator sentence. Throws InvalidInput for
/// sentences outside the grammar.
ccg::CCGTree generator_derivation(const std::string& sentence);

/// `label<TAB>sentence` lines ordered train, dev, test.
std::string dataset_to_text(const LabeledDataset& ds);
/// AUTO derivations of every item in file order, each preceded by `ID=<n>`.
std::string dataset_to_auto(const LabeledDataset& ds);

/// Parses `label<TAB>sentence` lines. Splits are positional, in proportion
/// 70:30:30 (exactly 70/30/30 for 130 lines). Throws ParseError with the
/// line number for malformed lines or labels other than 0 and 1.
LabeledDataset parse_dataset(const std::string& text);
LabeledDataset load_dataset(const std::filesystem::path& file);

}  // namespace qnlp
