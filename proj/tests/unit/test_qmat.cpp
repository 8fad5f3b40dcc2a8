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

#include "oracle/oracle.hpp"
#include "qent/error.hpp"
#include "qent/families.hpp"
#include "qent/qmat.hpp"
#include "qent/randgen.hpp"
#include "qent/rng.hpp"

namespace qent {
namespace {

CMat random_hermitian(int n, Rng& rng) {
  CMat a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = cplx(rng.normal(), rng.normal());
  return a + a.adjoint();
}

TEST(HermitianEig, PauliX) {
  const EigResult e = hermitian_eig(pauli_x());
  EXPECT_NEAR(e.values[0], 1.0, 1e-14);
  EXPECT_NEAR(e.values[1], -1.0, 1e-14);
}

TEST(HermitianEig, Identity) {
  const EigResult e = hermitian_eig(identity(4));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(e.values[i], 1.0, 1e-14);
  EXPECT_LT((e.vectors.adjoint() * e.vectors - identity(4)).norm(), 1e-12);
}

TEST(HermitianEig, ReconstructionResidual) {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 7;
    const CMat h = random_hermitian(n, rng);
    const EigResult e = hermitian_eig(h);
    const CMat back = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
    EXPECT_LT((h - back).norm(), 1e-10);
    EXPECT_LT((e.vectors.adjoint() * e.vectors - identity(n)).norm(), 1e-10);
    for (int i = 1; i < n; ++i) EXPECT_GE(e.values[i - 1], e.values[i]);
  }
}

TEST(HermitianEig, RejectsNonHermitian) {
  CMat m = pauli_x();
  m(0, 1) = 2.0;
  EXPECT_THROW(hermitian_eig(m), DomainError);
  EXPECT_THROW(eigvalsh(m), DomainError);
}

TEST(Kron, PauliZ) {
  const CMat zz = kron(pauli_z(), pauli_z());
  CMat expected = CMat::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_LT((zz - expected).norm(), 1e-15);
  EXPECT_LT((kron(identity(2), identity(2)) - identity(4)).norm(), 1e-15);
}

TEST(Kron, YYMatchesEntrywiseOracle) {
  EXPECT_LT((kron(pauli_y(), pauli_y()) - oracle::yy()).norm(), 1e-15);
}

TEST(PartialTranspose, MovesCornerElement) {
  CMat rho = CMat::Zero(4, 4);
  rho(0, 3) = 1.0;  // |00><11|
  const CMat pt = partial_transpose(rho, {2, 2}, 0);
  EXPECT_EQ(pt(2, 1), cplx(1.0));  // |10><01|
  EXPECT_NEAR(pt.cwiseAbs().sum(), 1.0, 1e-15);
}

TEST(PartialTranspose, ProductStateStaysPsd) {
  Rng rng(3);
  const CMat a = sample_mixed_state({2}, SimplexMeasure::lebesgue(), rng);
  const CMat b = sample_mixed_state({3}, SimplexMeasure::lebesgue(), rng);
  const CMat pt = partial_transpose(kron(a, b), {2, 3}, 0);
  EXPECT_LT((pt - kron(a.transpose(), b)).norm(), 1e-14);
  EXPECT_GE(min_eigenvalue(pt), -1e-12);
}

TEST(PartialTranspose, WernerHalf) {
  const CMat pt = partial_transpose(werner(0.5), {2, 2}, 0);
  EXPECT_NEAR(oracle::min_eig(pt), -0.125, 1e-12);
}

TEST(PartialTranspose, MatchesIndexLoopOracle) {
  Rng rng(5);
  for (const Dims& d : {Dims{2, 2}, Dims{2, 3}, Dims{3, 2}, Dims{3, 3}}) {
    const CMat rho = sample_mixed_state(d, SimplexMeasure::lebesgue(), rng);
    EXPECT_LT((partial_transpose(rho, d, 0) - oracle::partial_transpose_a(rho, d[0], d[1])).norm(), 1e-14);
  }
}

TEST(PartialTranspose, InvolutionAndFullTranspose) {
  Rng rng(6);
  const Dims d{2, 3};
  const CMat rho = sample_mixed_state(d, SimplexMeasure::lebesgue(), rng);
  EXPECT_LT((partial_transpose(partial_transpose(rho, d, 1), d, 1) - rho).norm(), 1e-15);
  EXPECT_LT((partial_transpose(partial_transpose(rho, d, 0), d, 1) - rho.transpose()).norm(), 1e-15);
  EXPECT_THROW(partial_transpose(rho, d, 2), DomainError);
}

TEST(PartialTrace, BellReducesToHalfIdentity) {
  const CVec phi = bell(BellLabel::kPhiPlus);
  EXPECT_LT((partial_trace(projector(phi), {2, 2}, {0}) - 0.5 * identity(2)).norm(), 1e-15);
  EXPECT_LT((reduced_from_pure(phi, {2, 2}, {1}) - 0.5 * identity(2)).norm(), 1e-15);
}

TEST(PartialTrace, ProductAndOracle) {
  Rng rng(8);
  const CMat a = sample_mixed_state({3}, SimplexMeasure::lebesgue(), rng);
  const CMat b = sample_mixed_state({2}, SimplexMeasure::lebesgue(), rng);
  EXPECT_LT((partial_trace(kron(a, b), {3, 2}, {0}) - a).norm(), 1e-14);
  const CMat rho = sample_mixed_state({3, 4}, SimplexMeasure::lebesgue(), rng);
  EXPECT_LT((partial_trace(rho, {3, 4}, {0}) - oracle::trace_out_b(rho, 3, 4)).norm(), 1e-14);
  EXPECT_LT((partial_trace(rho, {3, 4}, {1}) - oracle::trace_out_a(rho, 3, 4)).norm(), 1e-14);
  EXPECT_NEAR(partial_trace(rho, {3, 4}, {1}).trace().real(), 1.0, 1e-12);
}

TEST(PartialTrace, GhzDropLastQubit) {
  const CMat r = partial_trace(projector(ghz(3)), {2, 2, 2}, {0, 1});
  CMat expected = CMat::Zero(4, 4);
  expected(0, 0) = expected(3, 3) = 0.5;
  EXPECT_LT((r - expected).norm(), 1e-15);
  EXPECT_LT((reduced_from_pure(ghz(3), {2, 2, 2}, {0, 1}) - expected).norm(), 1e-15);
  EXPECT_THROW(partial_trace(r, {2, 2}, {}), DomainError);
  EXPECT_THROW(partial_trace(r, {2, 2}, {2}), DomainError);
}

TEST(ValidateDensity, Contract) {
  EXPECT_NO_THROW(validate_density(0.25 * identity(4), {2, 2}));
  EXPECT_THROW(validate_density(0.5 * identity(4), {2, 2}), DomainError);
  CMat bad = 0.25 * identity(4);
  bad(0, 0) = 0.5;
  bad(1, 1) = 0.0;
  bad(2, 2) = 0.75;
  bad(3, 3) = -0.25;
  EXPECT_THROW(validate_density(bad, {2, 2}), DomainError);
  EXPECT_THROW(validate_density(0.25 * identity(4), {2, 3}), DomainError);
}

TEST(ExpmHermitian, PauliRotation) {
  const double t = 0.7;
  const CMat u = expm_hermitian(t * pauli_z());
  EXPECT_NEAR(std::abs(u(0, 0) - std::exp(cplx(0, -t))), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(u(1, 1) - std::exp(cplx(0, t))), 0.0, 1e-14);
}

}  // namespace
}  // namespace qent
