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

#include "qnlp/backend/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace qnlp {

namespace {
constexpr double kZeroNorm = 1e-12;
const Complex kI{0.0, 1.0};
}  // namespace

Matrix2c gate_h() {
  const double s = 1.0 / std::sqrt(2.0);
  Matrix2c m;
  m << s, s, s, -s;
  return m;
}

Matrix2c gate_rx(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Matrix2c m;
  m << c, -kI * s, -kI * s, c;
  return m;
}

Matrix2c gate_rz(double theta) {
  Matrix2c m;
  m << std::exp(-kI * (theta / 2)), 0, 0, std::exp(kI * (theta / 2));
  return m;
}

void apply_1q(Eigen::VectorXcd& psi, std::size_t q, const Matrix2c& u) {
  const std::size_t bit = std::size_t{1} << q;
  const std::size_t n = static_cast<std::size_t>(psi.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i & bit) continue;
    const Complex a = psi(static_cast<Eigen::Index>(i));
    const Complex b = psi(static_cast<Eigen::Index>(i | bit));
    psi(static_cast<Eigen::Index>(i)) = u(0, 0) * a + u(0, 1) * b;
    psi(static_cast<Eigen::Index>(i | bit)) = u(1, 0) * a + u(1, 1) * b;
  }
}

void apply_crz(Eigen::VectorXcd& psi, std::size_t ctrl, std::size_t tgt, double theta) {
  const std::size_t cb = std::size_t{1} << ctrl, tb = std::size_t{1} << tgt;
  const Complex lo = std::exp(-kI * (theta / 2)), hi = std::exp(kI * (theta / 2));
  for (std::size_t i = 0; i < static_cast<std::size_t>(psi.size()); ++i)
    if (i & cb) psi(static_cast<Eigen::Index>(i)) *= (i & tb) ? hi : lo;
}

void apply_cx(Eigen::VectorXcd& psi, std::size_t ctrl, std::size_t tgt) {
  const std::size_t cb = std::size_t{1} << ctrl, tb = std::size_t{1} << tgt;
  for (std::size_t i = 0; i < static_cast<std::size_t>(psi.size()); ++i)
    if ((i & cb) && !(i & tb))
      std::swap(psi(static_cast<Eigen::Index>(i)), psi(static_cast<Eigen::Index>(i | tb)));
}

double gate_angle(const Gate& g, const ParameterStore& ps) {
  return g.angle.is_symbol() ? ps.scalar(g.angle.symbol) : g.angle.value;
}

namespace {

Matrix2c pauli(int which) {
  Matrix2c m;
  if (which == 1) m << 0, 1, 1, 0;
  else if (which == 2) m << 0, -kI, kI, 0;
  else m << 1, 0, 0, -1;
  return m;
}

// A Pauli error: after op `gate`, Pauli `which` (1=X, 2=Y, 3=Z) on `qubit`.
struct Fault {
  std::size_t gate;
  std::size_t qubit;
  int which;
  auto operator<=>(const Fault&) const = default;
};

void apply_gate(Eigen::VectorXcd& psi, const Gate& g, const ParameterStore& ps) {
  switch (g.kind) {
    case GateKind::H: apply_1q(psi, g.qubits[0], gate_h()); break;
    case GateKind::Rx: apply_1q(psi, g.qubits[0], gate_rx(gate_angle(g, ps))); break;
    case GateKind::Rz: apply_1q(psi, g.qubits[0], gate_rz(gate_angle(g, ps))); break;
    case GateKind::CRz: apply_crz(psi, g.qubits[0], g.qubits[1], gate_angle(g, ps)); break;
    case GateKind::CX: apply_cx(psi, g.qubits[0], g.qubits[1]); break;
  }
}

// Runs ops[from..] on psi, inserting the (sorted) faults.
void run(Eigen::VectorXcd& psi, const Circuit& c, const ParameterStore& ps,
         const std::vector<Fault>& faults, std::size_t from) {
  auto fault = faults.begin();
  while (fault != faults.end() && fault->gate < from) ++fault;
  for (std::size_t k = from; k < c.ops.size(); ++k) {
    apply_gate(psi, c.ops[k], ps);
    for (; fault != faults.end() && fault->gate == k; ++fault)
      apply_1q(psi, fault->qubit, pauli(fault->which));
  }
}

Eigen::VectorXcd initial_state(const Circuit& c) {
  if (c.n_qubits > 30) throw InvalidInput("circuit too large to simulate");
  Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(std::size_t{1} << c.n_qubits));
  psi(0) = 1.0;
  return psi;
}

bool passes(std::size_t basis, const Circuit& c) {
  for (const auto& p : c.postselect)
    if (static_cast<int>((basis >> p.qubit) & 1) != p.bit) return false;
  return true;
}

std::size_t open_index(std::size_t basis, const Circuit& c) {
  std::size_t out = 0;
  for (std::size_t k = 0; k < c.open.size(); ++k) out |= ((basis >> c.open[k]) & 1) << k;
  return out;
}

std::vector<double> cumulative(const Eigen::VectorXcd& psi) {
  std::vector<double> cdf(static_cast<std::size_t>(psi.size()));
  double acc = 0.0;
  for (std::size_t i = 0; i < cdf.size(); ++i) {
    acc += std::norm(psi(static_cast<Eigen::Index>(i)));
    cdf[i] = acc;
  }
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, double u) {
  const double x = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), x);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

Eigen::VectorXcd statevector(const Circuit& c, const ParameterStore& ps) {
  Eigen::VectorXcd psi = initial_state(c);
  run(psi, c, ps, {}, 0);
  return psi;
}

Eigen::VectorXd evaluate(const Circuit& c, const ParameterStore& ps) {
  const Eigen::VectorXcd psi = statevector(c, ps);
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(std::size_t{1} << c.open.size()));
  for (std::size_t i = 0; i < static_cast<std::size_t>(psi.size()); ++i)
    if (passes(i, c)) probs(static_cast<Eigen::Index>(open_index(i, c))) += std::norm(psi(static_cast<Eigen::Index>(i)));
  const double total = probs.sum();
  if (total < kZeroNorm)
    throw ZeroNorm("postselection probability " + std::to_string(total) + " is below 1e-12");
  return probs / total;
}

std::vector<std::uint64_t> sample(const Circuit& c, const ParameterStore& ps,
                                  std::size_t n_shots, std::uint64_t seed, double noise) {
  if (n_shots == 0) throw InvalidConfig("number of shots must be positive");
  if (noise < 0.0 || noise > 1.0) throw InvalidConfig("noise probability must lie in [0, 1]");
  std::mt19937_64 shot_rng(derive_seed(seed, 1));
  std::mt19937_64 noise_rng(derive_seed(seed, 2));

  std::vector<std::size_t> two_qubit;
  for (std::size_t k = 0; k < c.ops.size(); ++k)
    if (c.ops[k].two_qubit()) two_qubit.push_back(k);

  // Trajectories are cached by fault pattern; most shots see none. Fault
  // sites are drawn by geometric skips over the stream of opportunities.
  const std::size_t sites = 2 * two_qubit.size();
  std::geometric_distribution<std::uint64_t> skip(noise > 0.0 ? noise : 0.5);
  std::uint64_t gap = noise > 0.0 && sites > 0 ? skip(noise_rng) : std::numeric_limits<std::uint64_t>::max();
  // Noiseless states right after each two-qubit gate; a faulty trajectory
  // resumes from the one preceding its first fault.
  std::vector<Eigen::VectorXcd> prefix;
  Eigen::VectorXcd psi = initial_state(c);
  for (std::size_t k = 0; k < c.ops.size(); ++k) {
    apply_gate(psi, c.ops[k], ps);
    if (noise > 0.0 && c.ops[k].two_qubit()) prefix.push_back(psi);
  }
  const std::vector<double> clean = cumulative(psi);
  std::map<std::vector<Fault>, std::vector<double>> cdfs;
  std::vector<std::uint64_t> counts(std::size_t{1} << c.open.size(), 0);
  std::uint64_t kept = 0;
  std::vector<Fault> faults;
  for (std::size_t shot = 0; shot < n_shots; ++shot) {
    faults.clear();
    std::uint64_t pos = 0;
    while (gap < sites - pos) {
      pos += gap;
      const std::size_t k = two_qubit[pos / 2];
      faults.push_back({k, c.ops[k].qubits[pos % 2], 1 + static_cast<int>(noise_rng() % 3)});
      ++pos;
      gap = skip(noise_rng);
    }
    if (gap != std::numeric_limits<std::uint64_t>::max()) gap -= sites - pos;
    const std::vector<double>* cdf = &clean;
    if (!faults.empty()) {
      auto it = cdfs.find(faults);
      if (it == cdfs.end()) {
        const std::size_t first = faults.front().gate;
        const auto at = std::lower_bound(two_qubit.begin(), two_qubit.end(), first) - two_qubit.begin();
        Eigen::VectorXcd traj = prefix[static_cast<std::size_t>(at)];
        for (auto f = faults.begin(); f != faults.end() && f->gate == first; ++f)
          apply_1q(traj, f->qubit, pauli(f->which));
        run(traj, c, ps, faults, first + 1);
        it = cdfs.emplace(faults, cumulative(traj)).first;
      }
      cdf = &it->second;
    }
    const std::size_t basis = draw(*cdf, uniform01(shot_rng));
    if (!passes(basis, c)) continue;
    ++counts[open_index(basis, c)];
    ++kept;
  }
  if (kept == 0) throw AllShotsDiscarded("all " + std::to_string(n_shots) + " shots failed postselection");
  return counts;
}

std::string outcome_bitstring(std::size_t index, std::size_t n_open) {
  std::string s(n_open, '0');
  for (std::size_t k = 0; k < n_open; ++k)
    if ((index >> k) & 1) s[k] = '1';
  return s;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  return splitmix64(h ^ c);
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace qnlp
