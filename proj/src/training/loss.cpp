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

#include "qnlp/training/loss.hpp"

#include <algorithm>
#include <cmath>

#include "qnlp/errors.hpp"

namespace qnlp {

double bce_loss(double p1, int label) {
  const double p = std::clamp(p1, kProbClamp, 1.0 - kProbClamp);
  return label == 1 ? -std::log(p) : -std::log(1.0 - p);
}

double bce_grad(double p1, int label) {
  if (p1 < kProbClamp || p1 > 1.0 - kProbClamp) return 0.0;
  return label == 1 ? -1.0 / p1 : 1.0 / (1.0 - p1);
}

double bce_ceiling() { return -std::log(kProbClamp); }

double vector_p1(const Eigen::VectorXd& v) {
  if (v.size() != 2) throw ShapeMismatch("sentence vector must have dimension 2");
  const double a = v(0) * v(0), b = v(1) * v(1);
  if (a + b == 0.0) return 0.5;
  return b / (a + b);
}

Eigen::VectorXd vector_p1_grad(const Eigen::VectorXd& v) {
  if (v.size() != 2) throw ShapeMismatch("sentence vector must have dimension 2");
  const double a = v(0) * v(0), b = v(1) * v(1);
  const double s = a + b;
  Eigen::VectorXd g(2);
  if (s == 0.0) return g.setZero();
  g(0) = -2.0 * v(0) * b / (s * s);
  g(1) = 2.0 * v(1) * a / (s * s);
  return g;
}

}  // namespace qnlp
