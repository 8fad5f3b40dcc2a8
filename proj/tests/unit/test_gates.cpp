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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracle/oracle.hpp"
#include "qent/entmeas.hpp"
#include "qent/error.hpp"
#include "qent/families.hpp"
#include "qent/gates.hpp"
#include "qent/randgen.hpp"

namespace qent {
namespace {

constexpr double kPi = std::numbers::pi;

CVec basis_ket(int i) {
  CVec v = CVec::Zero(4);
  v[i] = 1.0;
  return v;
}

TEST(Gates, Unitarity) {
  for (const GateSpec& g : {GateSpec::identity(), GateSpec::cnot(), GateSpec::hadamard_on(0), GateSpec::hadamard_on(1),
                            GateSpec::u_theta(0.7), GateSpec::nonlocal(0.6, 0.3, -0.1)}) {
    const CMat u = build_gate(g);
    EXPECT_LT((u.adjoint() * u - CMat::Identity(4, 4)).norm(), 1e-12);
  }
}

TEST(Gates, TruthTables) {
  const CMat cnot = build_gate(GateSpec::cnot());
  EXPECT_LT((cnot * basis_ket(2) - basis_ket(3)).norm(), 1e-15);
  EXPECT_LT((cnot * basis_ket(1) - basis_ket(1)).norm(), 1e-15);
  EXPECT_LT((build_gate(GateSpec::u_theta(0.0)) - CMat::Identity(4, 4)).norm(), 1e-15);
  EXPECT_THROW(GateSpec::nonlocal(0.1, 0.3, 0.0), DomainError);
  EXPECT_THROW(GateSpec::nonlocal(1.0, 0.3, 0.0), DomainError);
  EXPECT_THROW(GateSpec::explicit_unitary(2.0 * CMat::Identity(4, 4)), DomainError);
}

TEST(Gates, NonlocalMatchesSeriesExponential) {
  const double l1 = 0.5, l2 = 0.2, l3 = 0.1;
  const CMat gen = l1 * kron(pauli_x(), pauli_x()) + l2 * kron(pauli_y(), pauli_y()) + l3 * kron(pauli_z(), pauli_z());
  CMat series = CMat::Identity(4, 4), term = CMat::Identity(4, 4);
  for (int k = 1; k < 40; ++k) {
    term = term * (cplx(0.0, -1.0) * gen) / static_cast<double>(k);
    series += term;
  }
  EXPECT_LT((build_gate(GateSpec::nonlocal(l1, l2, l3)) - series).norm(), 1e-12);
}

TEST(DeltaE, IdentityIsDelta) {
  const DeltaEHistogram h = delta_e_survey(build_gate(GateSpec::identity()), {}, 5000, 71, 1);
  EXPECT_EQ(h.counts()[DeltaEHistogram::bin_of(0.0)], 5000);
  EXPECT_EQ(width_half_max(h).raw, 0.0);
  EXPECT_EQ(width_half_max(h).smoothed, 0.0);
  const SurveyEstimate ep = entangling_power(build_gate(GateSpec::identity()), 2000, 72, 1);
  EXPECT_EQ(ep.mean, 0.0);
}

TEST(DeltaE, CnotOnPlusZeroIsMaximal) {
  CVec plus_zero = CVec::Zero(4);
  plus_zero[0] = plus_zero[2] = M_SQRT1_2;
  const CVec out = build_gate(GateSpec::cnot()) * plus_zero;
  EXPECT_NEAR(eof_pure(out) - eof_pure(plus_zero), 1.0, 1e-12);
}

TEST(DeltaE, DeterministicAndThreadInvariant) {
  const CMat cnot = build_gate(GateSpec::cnot());
  const DeltaEHistogram a = delta_e_survey(cnot, {}, 20000, 73, 1);
  const DeltaEHistogram b = delta_e_survey(cnot, {}, 20000, 73, 3);
  EXPECT_EQ(a.counts(), b.counts());
  EXPECT_EQ(a.total(), 20000);
}

TEST(DeltaE, PureInputsStayInRange) {
  Rng rng(74);
  const CMat u = build_gate(GateSpec::nonlocal(0.7, 0.4, 0.2));
  for (int i = 0; i < 2000; ++i) {
    const CVec psi = sample_pure_state({2, 2}, rng);
    const double de = eof_pure(u * psi) - eof_pure(psi);
    EXPECT_GE(de, -1.0 - 1e-12);
    EXPECT_LE(de, 1.0 + 1e-12);
    const CMat rho = sample_mixed_state({2, 2}, SimplexMeasure::lebesgue(), rng);
    EXPECT_NEAR(purity(u * rho * u.adjoint()), purity(rho), 1e-12);
  }
}

// Identical-gate control: two seeds of the same gate set the noise floor.
double control_distance(const CMat& u, long long samples) {
  return histogram_sup_distance(delta_e_survey(u, {}, samples, 75, 1), delta_e_survey(u, {}, samples, 76, 1));
}

TEST(DeltaE, LocalEquivalence) {
  const long long samples = 100000;
  const CMat cnot = build_gate(GateSpec::cnot());
  const double floor = control_distance(cnot, samples);
  Rng rng(77);
  const CMat left = kron(sample_haar_unitary(2, rng), sample_haar_unitary(2, rng));
  const CMat right = kron(sample_haar_unitary(2, rng), sample_haar_unitary(2, rng));
  const double d = histogram_sup_distance(delta_e_survey(cnot, {}, samples, 78, 1),
                                          delta_e_survey(left * cnot * right, {}, samples, 79, 1));
  EXPECT_LT(d, 3.0 * std::max(floor, 1.0 / std::sqrt(static_cast<double>(samples))));
}

TEST(DeltaE, CnotMatchesEquivalentGates) {
  const long long samples = 100000;
  const CMat cnot = build_gate(GateSpec::cnot());
  const double floor = control_distance(cnot, samples);
  const double tol = 3.0 * std::max(floor, 1.0 / std::sqrt(static_cast<double>(samples)));
  EXPECT_LT(histogram_sup_distance(delta_e_survey(cnot, {}, samples, 80, 1),
                                   delta_e_survey(build_gate(GateSpec::u_theta(kPi / 2.0)), {}, samples, 81, 1)),
            tol);
  EXPECT_LT(histogram_sup_distance(delta_e_survey(cnot, {}, samples, 82, 1),
                                   delta_e_survey(build_gate(GateSpec::nonlocal(kPi / 4.0, 0.0, 0.0)), {}, samples, 83, 1)),
            tol);
}

TEST(EntanglingPower, Ordering) {
  const SurveyEstimate cnot = entangling_power(build_gate(GateSpec::cnot()), 100000, 84, 1);
  const SurveyEstimate weak = entangling_power(build_gate(GateSpec::nonlocal(kPi / 8.0, 0.0, 0.0)), 100000, 85, 1);
  EXPECT_GT(cnot.mean - weak.mean, 3.0 * std::hypot(cnot.std_error, weak.std_error));
  CMat swap = CMat::Zero(4, 4);
  swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
  const SurveyEstimate s = entangling_power(build_gate(GateSpec::explicit_unitary(swap)), 2000, 86, 1);
  EXPECT_NEAR(s.mean, 0.0, 1e-9);
}

TEST(HalfWidth, KnownHistogram) {
  // Triangle-shaped mass centred at 0: half height is reached at |dE| = 0.1.
  DeltaEHistogram h;
  for (int b = 0; b < DeltaEHistogram::kBins; ++b) {
    const double c = DeltaEHistogram::center(b);
    const int copies = std::max(0, static_cast<int>(std::lround(1000.0 * (1.0 - std::abs(c) / 0.2))));
    for (int k = 0; k < copies; ++k) h.add(c);
  }
  const HalfWidth w = width_half_max(h);
  EXPECT_NEAR(w.raw, 0.1, 0.011);
  EXPECT_NEAR(w.smoothed, 0.1, 0.011);
}

TEST(HadamardCnot, Examples) {
  const auto [before, after] = hadamard_cnot_trace(basis_ket(0));
  EXPECT_NEAR(before, 0.0, 1e-12);
  EXPECT_NEAR(after, 1.0, 1e-12);
  const auto [mb, ma] = hadamard_cnot_trace(CMat(CMat::Identity(4, 4) / 4.0));
  EXPECT_NEAR(mb, 0.0, 1e-12);
  EXPECT_NEAR(ma, 0.0, 1e-12);
  EXPECT_THROW(hadamard_cnot_trace(CVec(CVec::Zero(3))), DomainError);
}

TEST(HadamardCnot, MeanOutputDecreasesWithInputEntanglement) {
  Rng rng(87);
  double previous = 2.0;
  std::vector<SurveyEstimate> means;
  for (double angle : {0.0, 0.2, 0.4, 0.6, kPi / 4.0}) {
    CVec schmidt = CVec::Zero(4);
    schmidt[0] = std::cos(angle);
    schmidt[3] = std::sin(angle);
    MeanAccumulator acc;
    for (int i = 0; i < 20000; ++i) {
      const CVec psi = kron(sample_haar_unitary(2, rng), sample_haar_unitary(2, rng)) * schmidt;
      acc.add(hadamard_cnot_trace(psi).second);
    }
    const SurveyEstimate e = make_estimate(acc);
    EXPECT_LT(e.mean, previous) << angle;
    previous = e.mean + 3.0 * e.std_error;
    means.push_back(e);
  }
  EXPECT_GT(means.front().mean - means.back().mean, 5.0 * std::hypot(means.front().std_error, means.back().std_error));
}

}  // namespace
}  // namespace qent
