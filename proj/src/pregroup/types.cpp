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

#include "qnlp/pregroup/types.hpp"

#include <algorithm>
#include <optional>

#include "qnlp/errors.hpp"

namespace qnlp {

AtomicType::AtomicType(std::string name) : name_(std::move(name)) {
  if (name_.empty()) throw InvalidInput("atomic type name must be non-empty");
}

TypeRegistry::TypeRegistry() : names_{"n", "s"} {}

const TypeRegistry& TypeRegistry::standard() {
  static const TypeRegistry registry;
  return registry;
}

AtomicType TypeRegistry::add(const std::string& name) {
  AtomicType t(name);
  names_.insert(name);
  return t;
}

bool TypeRegistry::contains(const std::string& name) const {
  return names_.count(name) > 0;
}

AtomicType TypeRegistry::get(const std::string& name) const {
  if (!contains(name)) throw InvalidInput("unregistered atomic type '" + name + "'");
  return AtomicType(name);
}

std::string PType::to_string() const {
  std::string out = base.name();
  const char* suffix = z < 0 ? ".l" : ".r";
  for (int i = 0; i < std::abs(z); ++i) out += suffix;
  return out;
}

TypeSeq TypeSeq::slice(std::size_t pos, std::size_t len) const {
  return TypeSeq(std::vector<PType>(
      items_.begin() + static_cast<std::ptrdiff_t>(pos),
      items_.begin() + static_cast<std::ptrdiff_t>(pos + len)));
}

TypeSeq TypeSeq::l() const {
  std::vector<PType> out;
  out.reserve(items_.size());
  for (auto it = items_.rbegin(); it != items_.rend(); ++it) out.push_back(it->l());
  return TypeSeq(std::move(out));
}

TypeSeq TypeSeq::r() const {
  std::vector<PType> out;
  out.reserve(items_.size());
  for (auto it = items_.rbegin(); it != items_.rend(); ++it) out.push_back(it->r());
  return TypeSeq(std::move(out));
}

std::string TypeSeq::to_string() const {
  if (items_.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < items_.size(); ++i) {
    if (i) out += '@';
    out += items_[i].to_string();
  }
  return out;
}

TypeSeq operator+(const TypeSeq& a, const TypeSeq& b) {
  std::vector<PType> out = a.items();
  out.insert(out.end(), b.begin(), b.end());
  return TypeSeq(std::move(out));
}

namespace {

// deletable[i][j]: the half-open window [i, j) cancels completely.
std::vector<std::vector<char>> deletable_windows(const TypeSeq& seq) {
  const std::size_t n = seq.size();
  std::vector<std::vector<char>> del(n + 1, std::vector<char>(n + 1, 0));
  for (std::size_t i = 0; i <= n; ++i) del[i][i] = 1;
  for (std::size_t len = 2; len <= n; len += 2) {
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t j = i + len;
      // seq[i] cancels against seq[k]; the inside and the rest cancel alone.
      for (std::size_t k = i + 1; k < j; k += 2) {
        if (cancels(seq[i], seq[k]) && del[i + 1][k] && del[k + 1][j]) {
          del[i][j] = 1;
          break;
        }
      }
    }
  }
  return del;
}

bool shorter_or_lex_less(const std::vector<PType>& a, const std::vector<PType>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

TypeSeq reduce(const TypeSeq& seq) {
  const std::size_t n = seq.size();
  const auto del = deletable_windows(seq);
  // best[i]: canonical reduced form of the suffix starting at i.
  std::vector<std::vector<PType>> best(n + 1);
  for (std::size_t i = n; i-- > 0;) {
    std::vector<PType> candidate{seq[i]};
    candidate.insert(candidate.end(), best[i + 1].begin(), best[i + 1].end());
    for (std::size_t j = i + 2; j <= n; j += 2) {
      if (del[i][j] && shorter_or_lex_less(best[j], candidate)) candidate = best[j];
    }
    best[i] = std::move(candidate);
  }
  return TypeSeq(std::move(best[0]));
}

bool reduces_to(const TypeSeq& seq, const TypeSeq& target) {
  const std::size_t n = seq.size();
  const std::size_t m = target.size();
  if (m > n || (n - m) % 2 != 0) return false;
  const auto del = deletable_windows(seq);
  // can[i][k]: seq[0, i) reduces to target[0, k).
  std::vector<std::vector<char>> can(n + 1, std::vector<char>(m + 1, 0));
  can[0][0] = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t k = 0; k <= std::min(i, m); ++k) {
      bool ok = k > 0 && can[i - 1][k - 1] && seq[i - 1] == target[k - 1];
      for (std::size_t j = i; !ok && j >= 2;) {
        j -= 2;
        ok = del[j][i] && can[j][k];
      }
      can[i][k] = ok;
    }
  }
  return can[n][m];
}

TypeSeq reduce_greedy(const TypeSeq& seq) {
  std::vector<PType> stack;
  for (const PType& t : seq) {
    if (!stack.empty() && cancels(stack.back(), t)) {
      stack.pop_back();
    } else {
      stack.push_back(t);
    }
  }
  return TypeSeq(std::move(stack));
}

}  // namespace qnlp
