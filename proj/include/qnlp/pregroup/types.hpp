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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace qnlp {

/// A basic grammatical type such as `n` (noun) or `s` (sentence).
class AtomicType {
 public:
  AtomicType() : name_("n") {}
  explicit AtomicType(std::string name);

  static AtomicType noun() { return AtomicType("n"); }
  static AtomicType sentence() { return AtomicType("s"); }

  const std::string& name() const { return name_; }

  auto operator<=>(const AtomicType&) const = default;

 private:
  std::string name_;
};

/// Set of atomic type names that may appear in a diagram. `n` and `s` are
/// always registered.
class TypeRegistry {
 public:
  TypeRegistry();

  static const TypeRegistry& standard();

  /// Registers `name`; registering an existing name is a no-op.
  AtomicType add(const std::string& name);
  bool contains(const std::string& name) const;
  /// Throws InvalidInput for an unregistered name.
  AtomicType get(const std::string& name) const;

 private:
  std::set<std::string> names_;
};

/// An atomic type with an adjoint winding number: z = -1 is the left
/// adjoint p^l, z = +1 the right adjoint p^r, |z| >= 2 iterated adjoints.
struct PType {
  AtomicType base;
  int z = 0;

  PType l() const { return {base, z - 1}; }
  PType r() const { return {base, z + 1}; }

  /// `n`, `n.l`, `n.r.r`, ...
  std::string to_string() const;

  auto operator<=>(const PType&) const = default;
};

/// True when (left, right) can be cancelled by a cup: a^(z) . a^(z+1) -> 1.
inline bool cancels(const PType& left, const PType& right) {
  return left.base == right.base && right.z == left.z + 1;
}

/// Ordered product of PTypes; the empty sequence is the monoidal unit.
class TypeSeq {
 public:
  using value_type = PType;
  using const_iterator = std::vector<PType>::const_iterator;

  TypeSeq() = default;
  TypeSeq(std::initializer_list<PType> items) : items_(items) {}
  explicit TypeSeq(std::vector<PType> items) : items_(std::move(items)) {}
  TypeSeq(const PType& single) : items_{single} {}  // NOLINT(implicit)

  std::size_t size() const { return items_.size(); }
  bool empty() const { return items_.empty(); }
  const PType& operator[](std::size_t i) const { return items_[i]; }
  const_iterator begin() const { return items_.begin(); }
  const_iterator end() const { return items_.end(); }
  const std::vector<PType>& items() const { return items_; }

  /// Contiguous window [pos, pos + len).
  TypeSeq slice(std::size_t pos, std::size_t len) const;

  /// Left adjoint of a product: order reversed, every winding decremented.
  TypeSeq l() const;
  /// Right adjoint of a product: order reversed, every winding incremented.
  TypeSeq r() const;

  /// `n.r@s@n.l`; the unit prints as `1`.
  std::string to_string() const;

  void push_back(const PType& t) { items_.push_back(t); }

  auto operator<=>(const TypeSeq&) const = default;
  bool operator==(const TypeSeq&) const = default;

 private:
  std::vector<PType> items_;
};

TypeSeq operator+(const TypeSeq& a, const TypeSeq& b);

inline PType noun(int z = 0) { return {AtomicType::noun(), z}; }
inline PType sent(int z = 0) { return {AtomicType::sentence(), z}; }

/// Canonical irreducible form: among all sequences reachable by deleting
/// adjacent pairs a^(z) . a^(z+1) that admit no further deletion, the one of
/// minimum length, ties broken by lexicographic order on (base, z).
/// Deletion is not confluent (n^l . n . n^r reaches n^l and n^r), so the
/// choice is made explicitly.
TypeSeq reduce(const TypeSeq& seq);

/// Whether some order of adjacent-pair deletions turns `seq` into `target`.
bool reduces_to(const TypeSeq& seq, const TypeSeq& target);

/// Left-to-right stack scan. Always returns an irreducible form reachable
/// from `seq`, though not necessarily the canonical one.
TypeSeq reduce_greedy(const TypeSeq& seq);

}  // namespace qnlp
