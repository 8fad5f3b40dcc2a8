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

// Random pure and mixed states under the measures used by the surveys.

#ifndef QENT_RANDGEN_HPP_
#define QENT_RANDGEN_HPP_

#include <string>
#include <vector>

#include "qent/qmat.hpp"
#include "qent/rng.hpp"

namespace qent {

enum class SimplexKind { kLebesgue, kDirichlet, kBures, kHilbertSchmidt };

struct SimplexMeasure {
  SimplexKind kind = SimplexKind::kLebesgue;
  double eta = 1.0;  // Dirichlet exponent; ignored by the other kinds

  static SimplexMeasure lebesgue() { return {SimplexKind::kLebesgue, 1.0}; }
  static SimplexMeasure dirichlet(double eta);
  static SimplexMeasure bures() { return {SimplexKind::kBures, 0.5}; }
  static SimplexMeasure hilbert_schmidt() { return {SimplexKind::kHilbertSchmidt, 1.0}; }

  // "lebesgue", "dirichlet:ETA", "bures", "hs".
  static SimplexMeasure parse(const std::string& text);
  std::string name() const;
};

// Euler angles of the Hurwitz parameterization. phi[s-1][r] and psi[s-1][r]
// belong to the r-th elementary rotation inside block E_s (r = 0..s-1);
// chi[s-1] is the extra phase carried by the r = 0 rotation of block s.
struct HurwitzAngles {
  int n = 0;
  std::vector<std::vector<double>> phi;
  std::vector<std::vector<double>> psi;
  std::vector<double> chi;
  double alpha = 0.0;
};

// Draws angles so the resulting unitary is Haar distributed: psi, chi, alpha
// uniform, and (sin phi)^(2(r+1)) uniform on [0,1].
HurwitzAngles sample_hurwitz_angles(int n, Rng& rng);
CMat hurwitz_unitary(const HurwitzAngles& angles);
// U applied to a vector without forming U.
CVec hurwitz_apply(const HurwitzAngles& angles, const CVec& v);

CMat sample_haar_unitary(int n, Rng& rng);
CVec sample_pure_state(const Dims& dims, Rng& rng);

// Independence Metropolis chain for the Bures and HS simplex densities, and a
// direct sampler for the Dirichlet family. One sampler per worker stream.
class SimplexSampler {
 public:
  static constexpr int kBurnIn = 1000;
  static constexpr int kThin = 10;

  SimplexSampler(int n, SimplexMeasure measure);

  // Descending spectrum.
  RVec next(Rng& rng);

  long long proposals() const { return proposals_; }
  long long accepted() const { return accepted_; }
  double acceptance_rate() const;

 private:
  RVec dirichlet(Rng& rng) const;
  double log_weight(const RVec& lam) const;
  void step(Rng& rng);

  int n_;
  SimplexMeasure measure_;
  bool warmed_ = false;
  RVec state_;
  double state_logw_ = 0.0;
  long long proposals_ = 0;
  long long accepted_ = 0;
};

// One spectrum; Bures/HS draws run a fresh burned-in chain per call.
RVec sample_simplex(int n, const SimplexMeasure& measure, Rng& rng);

// rho = U diag(lam) U^dagger.
CMat conjugate_diagonal(const CMat& u, const RVec& lam);

CMat sample_mixed_state(const Dims& dims, const SimplexMeasure& measure, Rng& rng);
CMat sample_mixed_state(const Dims& dims, SimplexSampler& sampler, Rng& rng);

// Two-qubit geometry used by fixed-R sampling.
struct FixedRRadii {
  static double h1();  // inscribed sphere
  static double h2();  // sphere tangent to edges
  static double h3();  // circumscribed sphere
};

// Cosine of the cap half-angle around a vertex for radius r in [h2, h3].
double region3_cap_cosine(double r);

// Spectrum with sum of squares 1/R, drawn on the sphere-in-tetrahedron picture.
RVec sample_fixed_R_spectrum(double r_target, Rng& rng);
CMat sample_fixed_R(double r_target, Rng& rng);

RMat sample_orthogonal(int n, Rng& rng);
// Real unit vector, uniform on the sphere.
RVec sample_rebit_pure(int n, Rng& rng);
RMat sample_rebit_state(const Dims& dims, const SimplexMeasure& measure, Rng& rng);
RMat sample_rebit_fixed_R(double r_target, Rng& rng);

}  // namespace qent

#endif  // QENT_RANDGEN_HPP_
