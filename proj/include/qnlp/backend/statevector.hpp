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
#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qnlp/ansatz/circuit.hpp"
#include "qnlp/backend/parameter_store.hpp"

namespace qnlp {

using Complex = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;

Matrix2c gate_h();
Matrix2c gate_rx(double theta);
Matrix2c gate_rz(double theta);

/// Applies a single-qubit matrix to qubit q (bit q of the basis index).
void apply_1q(Eigen::VectorXcd& psi, std::size_t q, const Matrix2c& u);
void apply_crz(Eigen::VectorXcd& psi, std::size_t ctrl, std::size_t tgt, double theta);
void apply_cx(Eigen::VectorXcd& psi, std::size_t ctrl, std::size_t tgt);

/// Angle of a gate; symbols are looked up in `ps` (UnboundSymbol if absent).
double gate_angle(const Gate& g, const ParameterStore& ps);

/// Applies the circuit to |0...0>; little-endian, no postselection.
Eigen::VectorXcd statevector(const Circuit& c, const ParameterStore& ps);

/// Distribution over open-qubit outcomes after postselection, normalized.
/// Index bit k is the value of qubit open[k]. Throws ZeroNorm when the
/// postselection probability is below 1e-12.
Eigen::VectorXd evaluate(const Circuit& c, const ParameterStore& ps);

/// Shot counts indexed like evaluate(). Shots that violate postselection
/// are discarded. With noise p > 0, each qubit touched by a two-qubit gate
/// suffers a uniformly random Pauli with probability p after that gate,
/// independently per shot. Shot outcomes and noise draw from separate
/// streams of `seed`, so p = 0 reproduces the noiseless counts exactly.
/// Throws AllShotsDiscarded when no shot survives postselection.
std::vector<std::uint64_t> sample(const Circuit& c, const ParameterStore& ps,
                                  std::size_t n_shots, std::uint64_t seed, double noise = 0.0);

/// `b0b1...` with character k the value of open qubit k.
std::string outcome_bitstring(std::size_t index, std::size_t n_open);

/// SplitMix64 finalizer, used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0);
/// Uniform double in [0, 1) from the top 53 bits, identical on every platform.
double uniform01(std::mt19937_64& rng);

}  // namespace qnlp
