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

#include <Eigen/Core>
#include <map>
#include <string>
#include <vector>

#include "qnlp/backend/dense_tensor.hpp"

namespace qnlp {

/// Symbol values stored in one flat vector; each symbol owns a contiguous
/// row-major block with a recorded shape (empty shape = scalar angle).
class ParameterStore {
 public:
  struct Entry {
    std::size_t offset = 0;
    Shape shape;
    std::size_t size() const { return shape_size(shape); }
  };

  /// Registers a zero-initialized symbol. Re-adding with the same shape is a
  /// no-op; a different shape throws ShapeMismatch.
  void add(const std::string& name, const Shape& shape = {});

  bool contains(const std::string& name) const { return index_.count(name) > 0; }
  /// Throws UnboundSymbol for unknown names.
  const Entry& entry(const std::string& name) const;
  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  Eigen::VectorXd& values() { return values_; }
  const Eigen::VectorXd& values() const { return values_; }

  /// Scalar symbol value. Throws UnboundSymbol or ShapeMismatch.
  double scalar(const std::string& name) const;
  DenseTensor<double> tensor(const std::string& name) const;
  void set(const std::string& name, const DenseTensor<double>& value);

  /// `{"layout":[{"name":..,"shape":[..]}],"values":[..]}`
  std::string to_json() const;
  /// Throws ParseError.
  static ParameterStore from_json(const std::string& text);

  bool operator==(const ParameterStore& other) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Entry> index_;
  Eigen::VectorXd values_;
};

}  // namespace qnlp
