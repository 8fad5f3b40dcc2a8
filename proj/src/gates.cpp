// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qent/gates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qent/entmeas.hpp"
#include "qent/error.hpp"

namespace qent {

namespace {

constexpr double kQuarterPi = std::numbers::pi / 4.0;

CMat hadamard() {
  CMat h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

// U acting on qubits 0 and 1 of an n-qubit vector.
CVec apply_leading(const CMat& u, const CVec& psi) {
  const Eigen::Index rest = psi.size() / 4;
  Eigen::Map<const CMat> m(psi.data(), rest, 4);  // column index = leading pair
  CMat out = m * u.transpose();
  return Eigen::Map<CVec>(out.data(), psi.size());
}

double pair_eof(const CVec& psi, int n_qubits) {
  if (n_qubits == 2) return eof_pure(psi);
  return eof(reduced_from_pure(psi, Dims(n_qubits, 2), {0, 1}));
}

}  // namespace

GateSpec GateSpec::cnot() {
  GateSpec g;
  g.kind = GateKind::kCnot;
  return g;
}

GateSpec GateSpec::hadamard_on(int qubit) {
  require(qubit == 0 || qubit == 1, "Hadamard qubit must be 0 or 1");
  GateSpec g;
  g.kind = GateKind::kHadamard;
  g.qubit = qubit;
  return g;
}

GateSpec GateSpec::u_theta(double theta) {
  GateSpec g;
  g.kind = GateKind::kUTheta;
  g.theta = theta;
  return g;
}

GateSpec GateSpec::nonlocal(double l1, double l2, double l3) {
  const double tol = 1e-12;
  require(l1 >= l2 - tol && l2 >= std::abs(l3) - tol, "need l1 >= l2 >= |l3|");
  require(l1 >= -tol && l1 <= kQuarterPi + tol && l2 >= -tol && l2 <= kQuarterPi + tol,
          "l1 and l2 must lie in [0, pi/4]");
  require(l3 > -kQuarterPi && l3 <= kQuarterPi + tol, "l3 must lie in (-pi/4, pi/4]");
  GateSpec g;
  g.kind = GateKind::kNonlocal;
  g.l1 = l1;
  g.l2 = l2;
  g.l3 = l3;
  return g;
}

GateSpec GateSpec::explicit_unitary(const CMat& u) {
  require(u.rows() == 4 && u.cols() == 4, "explicit gate must be 4x4");
  require((u.adjoint() * u - CMat::Identity(4, 4)).norm() <= 1e-10, "explicit gate is not unitary");
  GateSpec g;
  g.kind = GateKind::kExplicit;
  g.matrix = u;
  return g;
}

CMat build_gate(const GateSpec& spec) {
  CMat u = identity(4);
  switch (spec.kind) {
    case GateKind::kIdentity:
      break;
    case GateKind::kCnot:
      u(2, 2) = u(3, 3) = 0.0;
      u(2, 3) = u(3, 2) = 1.0;
      break;
    case GateKind::kHadamard:
      u = spec.qubit == 0 ? kron(hadamard(), identity(2)) : kron(identity(2), hadamard());
      break;
    case GateKind::kUTheta:
      u(2, 2) = u(3, 3) = std::cos(spec.theta);
      u(2, 3) = std::sin(spec.theta);
      u(3, 2) = -std::sin(spec.theta);
      break;
    case GateKind::kNonlocal: {
      const CMat gen = spec.l1 * kron(pauli_x(), pauli_x()) + spec.l2 * kron(pauli_y(), pauli_y()) +
                       spec.l3 * kron(pauli_z(), pauli_z());
      u = expm_hermitian(gen);
      break;
    }
    case GateKind::kExplicit:
      u = spec.matrix;
      break;
  }
  return u;
}

int DeltaEHistogram::bin_of(double delta_e) {
  const int b = static_cast<int>(std::floor((delta_e + 1.0) / kWidth));
  return std::clamp(b, 0, kBins - 1);
}

void DeltaEHistogram::add(double delta_e) {
  ++counts_[bin_of(delta_e)];
  ++total_;
}

void DeltaEHistogram::merge(const DeltaEHistogram& o) {
  for (int i = 0; i < kBins; ++i) counts_[i] += o.counts_[i];
  total_ += o.total_;
}

double DeltaEHistogram::mass(int bin) const {
  return total_ == 0 ? 0.0 : static_cast<double>(counts_[bin]) / static_cast<double>(total_);
}

double histogram_sup_distance(const DeltaEHistogram& a, const DeltaEHistogram& b) {
  double d = 0.0;
  for (int i = 0; i < DeltaEHistogram::kBins; ++i) d = std::max(d, std::abs(a.mass(i) - b.mass(i)));
  return d;
}

DeltaEHistogram delta_e_survey(const CMat& gate, const DeltaEInputs& in, long long samples, std::uint64_t seed,
                               int threads) {
  require(samples >= 1, "sample count must be positive");
  require(gate.rows() == 4 && gate.cols() == 4, "gate must be 4x4");
  require(in.n_qubits >= 2 && in.n_qubits <= 10, "qubit count must lie in [2,10]");
  require(in.pure || in.n_qubits == 2, "mixed inputs are two-qubit only");
  const CMat gate_adj = gate.adjoint();
  return run_chunked<DeltaEHistogram>(samples, seed, threads, [&](Rng& rng, long long, long long count) {
    DeltaEHistogram h;
    if (in.pure) {
      const Dims dims(in.n_qubits, 2);
      for (long long i = 0; i < count; ++i) {
        const CVec psi = sample_pure_state(dims, rng);
        h.add(pair_eof(apply_leading(gate, psi), in.n_qubits) - pair_eof(psi, in.n_qubits));
      }
    } else {
      SimplexSampler sampler(4, in.measure);
      for (long long i = 0; i < count; ++i) {
        const CMat rho = sample_mixed_state({2, 2}, sampler, rng);
        CMat out = gate * rho * gate_adj;
        out = 0.5 * (out + out.adjoint());
        h.add(eof(out) - eof(rho));
      }
    }
    return h;
  });
}

SurveyEstimate entangling_power(const CMat& gate, long long samples, std::uint64_t seed, int threads,
                                double alpha) {
  require(samples >= 1, "sample count must be positive");
  require(gate.rows() == 4 && gate.cols() == 4, "gate must be 4x4");
  const MeanAccumulator acc = survey_mean(samples, seed, threads, [&](Rng& rng) {
    const CVec a = sample_pure_state({2}, rng);
    const CVec b = sample_pure_state({2}, rng);
    return eof_pure(gate * kron(a, b));
  });
  return make_estimate(acc, alpha);
}

HalfWidth width_half_max(const DeltaEHistogram& hist) {
  HalfWidth out;
  const auto& c = hist.counts();
  const int nonzero = static_cast<int>(std::count_if(c.begin(), c.end(), [](long long v) { return v > 0; }));
  if (nonzero <= 1) return out;  // delta-like
  const int n = DeltaEHistogram::kBins;
  std::vector<double> raw(n), smooth(n);
  for (int i = 0; i < n; ++i) raw[i] = hist.density(i);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int j = i - 1; j <= i + 1; ++j)
      if (j >= 0 && j < n) s += raw[j];
    smooth[i] = s / 3.0;
  }
  auto width = [n](const std::vector<double>& d) {
    const int zero_hi = DeltaEHistogram::bin_of(0.0);
    const double peak = std::max(d[zero_hi - 1], d[zero_hi]);
    double w = 0.0;
    for (int i = 0; i < n; ++i)
      if (d[i] >= 0.5 * peak && peak > 0.0) w = std::max(w, std::abs(DeltaEHistogram::center(i)));
    return w;
  };
  out.raw = width(raw);
  out.smoothed = width(smooth);
  return out;
}

std::pair<double, double> hadamard_cnot_trace(const CVec& psi) {
  require(psi.size() == 4, "Hadamard-CNOT circuit acts on two qubits");
  const CMat u = build_gate(GateSpec::cnot()) * build_gate(GateSpec::hadamard_on(0));
  return {eof_pure(psi), eof_pure(u * psi)};
}

std::pair<double, double> hadamard_cnot_trace(const CMat& rho) {
  require(rho.rows() == 4 && rho.cols() == 4, "Hadamard-CNOT circuit acts on two qubits");
  const CMat u = build_gate(GateSpec::cnot()) * build_gate(GateSpec::hadamard_on(0));
  CMat out = u * rho * u.adjoint();
  out = 0.5 * (out + out.adjoint());
  return {eof(rho), eof(out)};
}

}  // namespace qent
