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

#include "qnlp/backend/parameter_store.hpp"

#include <json.hpp>

namespace qnlp {

void ParameterStore::add(const std::string& name, const Shape& shape) {
  if (auto it = index_.find(name); it != index_.end()) {
    if (it->second.shape != shape) throw ShapeMismatch("symbol " + name + " re-registered with a different shape");
    return;
  }
  Entry e{static_cast<std::size_t>(values_.size()), shape};
  const auto old = values_.size();
  values_.conservativeResize(old + static_cast<Eigen::Index>(e.size()));
  values_.tail(static_cast<Eigen::Index>(e.size())).setZero();
  index_.emplace(name, e);
  names_.push_back(name);
}

const ParameterStore::Entry& ParameterStore::entry(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw UnboundSymbol("unbound symbol '" + name + "'");
  return it->second;
}

double ParameterStore::scalar(const std::string& name) const {
  const Entry& e = entry(name);
  if (!e.shape.empty()) throw ShapeMismatch("symbol " + name + " is not a scalar");
  return values_(static_cast<Eigen::Index>(e.offset));
}

DenseTensor<double> ParameterStore::tensor(const std::string& name) const {
  const Entry& e = entry(name);
  return DenseTensor<double>(
      e.shape, values_.segment(static_cast<Eigen::Index>(e.offset), static_cast<Eigen::Index>(e.size())));
}

void ParameterStore::set(const std::string& name, const DenseTensor<double>& value) {
  const Entry& e = entry(name);
  if (value.shape() != e.shape) throw ShapeMismatch("value for " + name + " has the wrong shape");
  values_.segment(static_cast<Eigen::Index>(e.offset), static_cast<Eigen::Index>(e.size())) = value.data();
}

std::string ParameterStore::to_json() const {
  nlohmann::ordered_json j;
  auto layout = nlohmann::ordered_json::array();
  for (const auto& n : names_) {
    nlohmann::ordered_json o;
    o["name"] = n;
    o["shape"] = index_.at(n).shape;
    layout.push_back(std::move(o));
  }
  j["layout"] = std::move(layout);
  j["values"] = std::vector<double>(values_.data(), values_.data() + values_.size());
  return j.dump();
}

ParameterStore ParameterStore::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }
  ParameterStore ps;
  try {
    for (const auto& o : j.at("layout"))
      ps.add(o.at("name").get<std::string>(), o.at("shape").get<Shape>());
    auto values = j.at("values").get<std::vector<double>>();
    if (values.size() != ps.size()) throw ParseError("parameter values do not match the layout");
    ps.values_ = Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("parameter schema: ") + e.what());
  }
  return ps;
}

bool ParameterStore::operator==(const ParameterStore& other) const {
  if (names_ != other.names_ || values_.size() != other.values_.size()) return false;
  for (const auto& n : names_)
    if (index_.at(n).shape != other.index_.at(n).shape) return false;
  return values_ == other.values_;
}

}  // namespace qnlp
