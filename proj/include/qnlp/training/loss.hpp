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

namespace qnlp {

inline constexpr double kProbClamp = 1e-9;

/// Binary cross entropy with the prediction clamped to [1e-9, 1 - 1e-9].
double bce_loss(double p1, int label);
/// d bce / d p1; zero where the clamp is active.
double bce_grad(double p1, int label);
/// Loss charged for a prediction that could not be evaluated.
double bce_ceiling();

/// p1 = v1^2 / (v0^2 + v1^2) for a two-dimensional sentence vector.
double vector_p1(const Eigen::VectorXd& v);
/// d p1 / d v for vector_p1.
Eigen::VectorXd vector_p1_grad(const Eigen::VectorXd& v);

}  // namespace qnlp
