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

#include "qent/randgen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qent/error.hpp"
#include "qent/simplexgeo.hpp"

namespace qent {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Rotation {
  cplx ii, ij, ji, jj;
};

Rotation rotation(double phi, double psi, double chi) {
  const double c = std::cos(phi), s = std::sin(phi);
  return {c * std::exp(cplx(0.0, psi)), s * std::exp(cplx(0.0, chi)),
          -s * std::exp(cplx(0.0, -chi)), c * std::exp(cplx(0.0, -psi))};
}

// Rotation r of block s acts on the adjacent pair (n-2-r, n-1-r).
int row_i(int n, int r) { return n - 2 - r; }

RVec sorted_desc(RVec v) {
  std::sort(v.data(), v.data() + v.size(), [](double a, double b) { return a > b; });
  return v;
}

}  // namespace

SimplexMeasure SimplexMeasure::dirichlet(double eta) {
  require(eta > 0.0, "Dirichlet exponent must be positive");
  return {SimplexKind::kDirichlet, eta};
}

SimplexMeasure SimplexMeasure::parse(const std::string& text) {
  if (text == "lebesgue") return lebesgue();
  if (text == "bures") return bures();
  if (text == "hs" || text == "hilbert-schmidt") return hilbert_schmidt();
  const std::string prefix = "dirichlet:";
  if (text.rfind(prefix, 0) == 0) {
    std::size_t used = 0;
    double eta = 0.0;
    try {
      eta = std::stod(text.substr(prefix.size()), &used);
    } catch (const std::exception&) {
      throw DomainError("bad Dirichlet exponent in '" + text + "'");
    }
    require(used == text.size() - prefix.size(), "bad Dirichlet exponent in '" + text + "'");
    return dirichlet(eta);
  }
  throw DomainError("unknown measure '" + text + "'");
}

std::string SimplexMeasure::name() const {
  switch (kind) {
    case SimplexKind::kLebesgue:
      return "lebesgue";
    case SimplexKind::kDirichlet:
      return "dirichlet:" + std::to_string(eta);
    case SimplexKind::kBures:
      return "bures";
    case SimplexKind::kHilbertSchmidt:
      return "hs";
  }
  return "unknown";
}

HurwitzAngles sample_hurwitz_angles(int n, Rng& rng) {
  require(n >= 1, "dimension must be positive");
  HurwitzAngles a;
  a.n = n;
  a.phi.resize(n - 1);
  a.psi.resize(n - 1);
  a.chi.resize(n - 1);
  for (int s = 1; s < n; ++s) {
    a.phi[s - 1].resize(s);
    a.psi[s - 1].resize(s);
    for (int r = 0; r < s; ++r) {
      a.phi[s - 1][r] = std::asin(std::pow(rng.uniform(), 1.0 / (2.0 * (r + 1))));
      a.psi[s - 1][r] = kTwoPi * rng.uniform();
    }
    a.chi[s - 1] = kTwoPi * rng.uniform();
  }
  a.alpha = kTwoPi * rng.uniform();
  return a;
}

CMat hurwitz_unitary(const HurwitzAngles& a) {
  const int n = a.n;
  CMat u = std::exp(cplx(0.0, a.alpha)) * CMat::Identity(n, n);
  for (int s = 1; s < n; ++s) {
    for (int r = s - 1; r >= 0; --r) {
      const Rotation e = rotation(a.phi[s - 1][r], a.psi[s - 1][r], r == 0 ? a.chi[s - 1] : 0.0);
      const int i = row_i(n, r), j = i + 1;
      CVec ci = u.col(i), cj = u.col(j);
      u.col(i) = ci * e.ii + cj * e.ji;
      u.col(j) = ci * e.ij + cj * e.jj;
    }
  }
  return u;
}

CVec hurwitz_apply(const HurwitzAngles& a, const CVec& v) {
  const int n = a.n;
  require(v.size() == n, "vector size does not match the angle set");
  CVec out = v;
  for (int s = n - 1; s >= 1; --s) {
    for (int r = 0; r < s; ++r) {
      const Rotation e = rotation(a.phi[s - 1][r], a.psi[s - 1][r], r == 0 ? a.chi[s - 1] : 0.0);
      const int i = row_i(n, r), j = i + 1;
      const cplx vi = out[i], vj = out[j];
      out[i] = e.ii * vi + e.ij * vj;
      out[j] = e.ji * vi + e.jj * vj;
    }
  }
  return std::exp(cplx(0.0, a.alpha)) * out;
}

CMat sample_haar_unitary(int n, Rng& rng) {
  require(n >= 1, "dimension must be positive");
  return hurwitz_unitary(sample_hurwitz_angles(n, rng));
}

CVec sample_pure_state(const Dims& dims, Rng& rng) {
  const int n = total_dim(dims);
  CVec ref = CVec::Zero(n);
  ref[0] = 1.0;
  if (n == 1) return ref;
  return hurwitz_apply(sample_hurwitz_angles(n, rng), ref);
}

SimplexSampler::SimplexSampler(int n, SimplexMeasure measure) : n_(n), measure_(measure) {
  require(n >= 1, "simplex dimension must be positive");
  if (measure_.kind == SimplexKind::kDirichlet) require(measure_.eta > 0.0, "Dirichlet exponent must be positive");
}

double SimplexSampler::acceptance_rate() const {
  return proposals_ == 0 ? 0.0 : static_cast<double>(accepted_) / static_cast<double>(proposals_);
}

RVec SimplexSampler::dirichlet(Rng& rng) const {
  double eta = 1.0;
  if (measure_.kind == SimplexKind::kDirichlet) eta = measure_.eta;
  if (measure_.kind == SimplexKind::kBures) eta = 0.5;
  RVec g(n_);
  for (int i = 0; i < n_; ++i) g[i] = eta == 1.0 ? -std::log1p(-rng.uniform()) : rng.gamma(eta);
  return g / g.sum();
}

// Log of target density over proposal density.
double SimplexSampler::log_weight(const RVec& lam) const {
  double lw = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      const double d = lam[i] - lam[j];
      lw += std::log(d * d);
      if (measure_.kind == SimplexKind::kBures) lw -= std::log(lam[i] + lam[j]);
    }
  }
  return lw;
}

void SimplexSampler::step(Rng& rng) {
  RVec prop = dirichlet(rng);
  const double lw = log_weight(prop);
  ++proposals_;
  if (std::log(rng.uniform()) < lw - state_logw_) {
    state_ = std::move(prop);
    state_logw_ = lw;
    ++accepted_;
  }
}

RVec SimplexSampler::next(Rng& rng) {
  if (n_ == 1) return RVec::Ones(1);
  if (measure_.kind == SimplexKind::kLebesgue || measure_.kind == SimplexKind::kDirichlet)
    return sorted_desc(dirichlet(rng));
  if (!warmed_) {
    state_ = dirichlet(rng);
    state_logw_ = log_weight(state_);
    for (int i = 0; i < kBurnIn; ++i) step(rng);
    warmed_ = true;
  }
  for (int i = 0; i < kThin; ++i) step(rng);
  return sorted_desc(state_);
}

RVec sample_simplex(int n, const SimplexMeasure& measure, Rng& rng) {
  SimplexSampler sampler(n, measure);
  return sampler.next(rng);
}

CMat conjugate_diagonal(const CMat& u, const RVec& lam) {
  return u * lam.cast<cplx>().asDiagonal() * u.adjoint();
}

CMat sample_mixed_state(const Dims& dims, SimplexSampler& sampler, Rng& rng) {
  const int n = total_dim(dims);
  RVec lam = sampler.next(rng);
  require(lam.size() == n, "sampler dimension does not match dims");
  CMat rho = conjugate_diagonal(sample_haar_unitary(n, rng), lam);
  return 0.5 * (rho + rho.adjoint());
}

CMat sample_mixed_state(const Dims& dims, const SimplexMeasure& measure, Rng& rng) {
  SimplexSampler sampler(total_dim(dims), measure);
  return sample_mixed_state(dims, sampler, rng);
}

double FixedRRadii::h1() { return 0.25 * std::sqrt(2.0 / 3.0); }
double FixedRRadii::h2() { return std::sqrt(2.0) / 4.0; }
double FixedRRadii::h3() { return std::sqrt(6.0) / 4.0; }

double region3_cap_cosine(double r) {
  require(r >= FixedRRadii::h2() - 1e-12 && r <= FixedRRadii::h3() + 1e-12,
          "cap cosine defined only between the edge and vertex spheres");
  // 3 r^2 w^2 - sqrt(3/2) r w + 3/8 - 2 r^2 = 0, larger root.
  const double a = 3.0 * r * r, b = -std::sqrt(1.5) * r, c = 0.375 - 2.0 * r * r;
  const double disc = std::max(0.0, b * b - 4.0 * a * c);
  return std::clamp((-b + std::sqrt(disc)) / (2.0 * a), -1.0, 1.0);
}

RVec sample_fixed_R_spectrum(double r_target, Rng& rng) {
  const double radius = radius_for_R(r_target);
  if (r_target <= 1.0) {
    RVec pure = RVec::Zero(4);
    pure[0] = 1.0;
    return pure;
  }
  const bool cap = radius > FixedRRadii::h2();
  const double w_min = cap ? region3_cap_cosine(radius) : -1.0;
  const auto& v = tetra_vertices();
  for (;;) {
    const double w = w_min + (1.0 - w_min) * rng.uniform();
    const double az = kTwoPi * rng.uniform();
    const double s = std::sqrt(std::max(0.0, 1.0 - w * w));
    const TetraPoint p = radius * TetraPoint(s * std::cos(az), s * std::sin(az), w);
    RVec lam(4);
    for (int i = 0; i < 4; ++i) lam[i] = 2.0 * p.dot(v[i]) + 0.25;
    // Inside the inscribed sphere no draw can leave the solid.
    if (radius > FixedRRadii::h1() && lam.minCoeff() < 0.0) continue;
    return sorted_desc(lam.cwiseMax(0.0));
  }
}

CMat sample_fixed_R(double r_target, Rng& rng) {
  RVec lam = sample_fixed_R_spectrum(r_target, rng);
  CMat rho = conjugate_diagonal(sample_haar_unitary(4, rng), lam);
  return 0.5 * (rho + rho.adjoint());
}

RMat sample_orthogonal(int n, Rng& rng) {
  require(n >= 1, "dimension must be positive");
  RMat g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.normal();
  Eigen::HouseholderQR<RMat> qr(g);
  RMat q = qr.householderQ();
  const RMat r = qr.matrixQR();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0.0) q.col(j) = -q.col(j);
  return q;
}

RVec sample_rebit_pure(int n, Rng& rng) {
  require(n >= 1, "dimension must be positive");
  RVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rng.normal();
  return v / v.norm();
}

RMat sample_rebit_state(const Dims& dims, const SimplexMeasure& measure, Rng& rng) {
  const int n = total_dim(dims);
  RVec lam = sample_simplex(n, measure, rng);
  RMat o = sample_orthogonal(n, rng);
  RMat rho = o * lam.asDiagonal() * o.transpose();
  return 0.5 * (rho + rho.transpose());
}

RMat sample_rebit_fixed_R(double r_target, Rng& rng) {
  RVec lam = sample_fixed_R_spectrum(r_target, rng);
  RMat o = sample_orthogonal(4, rng);
  RMat rho = o * lam.asDiagonal() * o.transpose();
  return 0.5 * (rho + rho.transpose());
}

}  // namespace qent
