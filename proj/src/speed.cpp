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

#include "qent/speed.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qent/entmeas.hpp"
#include "qent/error.hpp"
#include "qent/randgen.hpp"

namespace qent {

namespace {

constexpr double kPi = std::numbers::pi;
// Residual |overlap| accepted after polishing a root of the general polynomial.
constexpr double kOverlapTol = 1e-9;

// Roots of c0 + c1 z + c2 z^2 (non-negative coefficients) on the unit circle.
std::optional<double> quadratic_time(double c0, double c1, double c2) {
  if (c2 <= 0.0) {
    if (c1 <= 0.0) return std::nullopt;
    if (std::abs(c0 / c1 - 1.0) <= kUnitCircleTol) return kPi;
    return std::nullopt;
  }
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  // A double root (disc = 0 up to round-off) belongs to the conjugate-pair branch.
  if (disc <= 1e-12 * c1 * c1) {
    const double modulus = std::sqrt(c0 / c2);
    if (std::abs(modulus - 1.0) > kUnitCircleTol) return std::nullopt;
    return std::acos(std::clamp(-c1 / (2.0 * std::sqrt(c2 * c0)), -1.0, 1.0));
  }
  const double r = std::sqrt(disc);
  for (double z : {(-c1 + r) / (2.0 * c2), (-c1 - r) / (2.0 * c2)})
    if (std::abs(std::abs(z) - 1.0) <= kUnitCircleTol) return kPi;
  return std::nullopt;
}

cplx overlap(const RVec& p, double t) {
  cplx s = 0.0;
  for (Eigen::Index e = 0; e < p.size(); ++e) s += p[e] * std::exp(cplx(0.0, -static_cast<double>(e) * t));
  return s;
}

cplx overlap_deriv(const RVec& p, double t) {
  cplx s = 0.0;
  for (Eigen::Index e = 0; e < p.size(); ++e)
    s += p[e] * cplx(0.0, -static_cast<double>(e)) * std::exp(cplx(0.0, -static_cast<double>(e) * t));
  return s;
}

RVec pair_level_weights(const CMat& w) {
  const CVec a = fermion_pair_amplitudes(w);
  static constexpr int kPairEnergy[6] = {1, 2, 3, 3, 4, 5};
  RVec p = RVec::Zero(6);
  for (int i = 0; i < 6; ++i) p[kPairEnergy[i]] += std::norm(a[i]);
  return p;
}

std::optional<SpeedPoint> point_from(double c, const RVec& p, std::optional<double> tau) {
  if (!tau) return std::nullopt;
  const auto [e, de] = level_moments(p);
  return SpeedPoint{c, *tau / qsl_bound(e, de)};
}

}  // namespace

double qsl_bound(double e_mean, double e_spread) {
  require(e_mean > 0.0 && e_spread > 0.0, "energy and spread must be positive");
  return std::max(kPi / (2.0 * e_mean), kPi / (2.0 * e_spread));
}

std::pair<double, double> level_moments(const RVec& p) {
  double m1 = 0.0, m2 = 0.0;
  for (Eigen::Index e = 0; e < p.size(); ++e) {
    m1 += p[e] * static_cast<double>(e);
    m2 += p[e] * static_cast<double>(e * e);
  }
  return {m1, std::sqrt(std::max(0.0, m2 - m1 * m1))};
}

std::optional<double> orthogonality_time_levels(const RVec& p) {
  require(p.size() >= 1 && p.minCoeff() >= 0.0, "level populations must be non-negative");
  Eigen::Index lo = 0, hi = p.size() - 1;
  while (lo <= hi && p[lo] == 0.0) ++lo;
  while (hi >= lo && p[hi] == 0.0) --hi;
  if (hi <= lo) return std::nullopt;
  const Eigen::Index deg = hi - lo;
  RMat comp = RMat::Zero(deg, deg);
  for (Eigen::Index i = 1; i < deg; ++i) comp(i, i - 1) = 1.0;
  for (Eigen::Index i = 0; i < deg; ++i) comp(i, deg - 1) = -p[lo + i] / p[hi];
  Eigen::EigenSolver<RMat> es(comp, false);
  std::optional<double> best;
  for (Eigen::Index i = 0; i < deg; ++i) {
    const cplx z = es.eigenvalues()[i];
    if (std::abs(std::abs(z) - 1.0) > 1e-3) continue;
    double t = -std::arg(z);
    if (t <= 0.0) t += 2.0 * kPi;
    // Newton along the real time axis; multiple roots converge linearly.
    for (int it = 0; it < 200; ++it) {
      const cplx d = overlap_deriv(p, t);
      if (std::abs(d) == 0.0) break;
      const double step = std::real(overlap(p, t) / d);
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    if (std::abs(overlap(p, t)) > kOverlapTol || t <= 0.0) continue;
    if (!best || t < *best) best = t;
  }
  return best;
}

std::optional<double> orthogonality_time(const CVec& c) {
  require(c.size() == 4, "two-qubit amplitudes needed");
  require(std::abs(c.squaredNorm() - 1.0) <= 1e-10, "amplitudes must be normalized");
  return quadratic_time(std::norm(c[0]), std::norm(c[1]) + std::norm(c[2]), std::norm(c[3]));
}

double min_overlap_time(const CVec& c) {
  require(c.size() == 4, "two-qubit amplitudes needed");
  const double a = std::norm(c[3]), b = std::norm(c[1]) + std::norm(c[2]), cc = std::norm(c[0]);
  if (a <= 0.0 || cc <= 0.0) return kPi;
  return std::acos(std::clamp(-b * (a + cc) / (4.0 * a * cc), -1.0, 1.0));
}

double tau_over_tmin_gamma(double gamma) {
  require(gamma >= 0.25 - 1e-12 && gamma <= 0.5 + 1e-12, "Gamma must lie in [1/4, 1/2]");
  const double arg = std::clamp((2.0 * gamma - 1.0) / (2.0 * gamma), -1.0, 1.0);
  return 2.0 / kPi * std::sqrt(2.0 * gamma) * std::acos(arg);
}

Band two_qubit_band(double c) {
  require(c >= 0.0 && c <= 1.0, "concurrence must lie in [0,1]");
  return {tau_over_tmin_gamma((1.0 + c) / 4.0), tau_over_tmin_gamma(0.25)};
}

CVec sample_gamma_family(Rng& rng) {
  const double gamma = 0.25 + 0.25 * rng.uniform();
  const double split = rng.uniform();
  const double rest = 1.0 - 2.0 * gamma;
  const double mod[4] = {std::sqrt(gamma), std::sqrt(split * rest), std::sqrt((1.0 - split) * rest),
                         std::sqrt(gamma)};
  CVec c(4);
  for (int i = 0; i < 4; ++i) c[i] = std::polar(mod[i], 2.0 * kPi * rng.uniform());
  return c;
}

std::optional<SpeedPoint> two_qubit_speed_point(const CVec& c) {
  RVec p(3);
  p << std::norm(c[0]), std::norm(c[1]) + std::norm(c[2]), std::norm(c[3]);
  return point_from(concurrence_pure(c), p, orthogonality_time(c));
}

CMat boson_state(double alpha, double phase) {
  require(alpha >= kPi / 2.0 - 1e-12 && alpha <= kPi + 1e-12, "alpha must lie in [pi/2, pi]");
  const double cs = std::min(0.0, std::cos(alpha));
  const double g = 1.0 / (4.0 * (1.0 - cs));
  CMat v(2, 2);
  v(0, 0) = std::sqrt(g);
  v(1, 1) = std::polar(std::sqrt(g), phase);
  v(0, 1) = v(1, 0) = std::sqrt(-g * cs);
  return v;
}

std::optional<SpeedPoint> boson_speed_point(const CMat& v) {
  const double c = boson_concurrence(v);
  RVec p(3);
  p << 2.0 * std::norm(v(0, 0)), 4.0 * std::norm(v(0, 1)), 2.0 * std::norm(v(1, 1));
  return point_from(c, p, quadratic_time(p[0], p[1], p[2]));
}

Band boson_band(double c) {
  require(c >= 0.0 && c <= 1.0, "concurrence must lie in [0,1]");
  // Reachable concurrences at alpha are [4G(1 + cos alpha), 1]; tau/T_min grows with alpha.
  const double alpha_c = std::acos((c - 1.0) / (c + 1.0));
  const auto lo = boson_speed_point(boson_state(std::max(alpha_c, kPi / 2.0), 0.0));
  const auto hi = boson_speed_point(boson_state(kPi, 2.0 * std::asin(c)));
  if (!lo || !hi) throw ConvergenceError("boson family lost orthogonal evolution");
  return {lo->tau_over_tmin, hi->tau_over_tmin};
}

CMat fermion_family_state(double alpha, double split, const std::array<double, 4>& phases) {
  require(alpha >= kPi / 3.0 - 1e-12 && alpha <= kPi + 1e-12, "alpha must lie in [pi/3, pi]");
  require(split >= 0.0 && split <= 1.0, "split must lie in [0,1]");
  const double cs = std::min(0.5, std::cos(alpha));
  const double outer = std::sqrt(1.0 / (32.0 * (1.0 - cs)));
  const double mid = std::max(0.0, (1.0 - 2.0 * cs) / (16.0 * (1.0 - cs)));
  CMat w = CMat::Zero(4, 4);
  w(0, 1) = std::polar(outer, phases[0]);
  w(2, 3) = outer;
  w(0, 2) = std::polar(0.25, phases[1]);
  w(1, 3) = 0.25;
  w(0, 3) = std::polar(std::sqrt(split * mid), phases[2]);
  w(1, 2) = std::polar(std::sqrt((1.0 - split) * mid), phases[3]);
  return w - w.transpose().eval();
}

std::optional<SpeedPoint> fermion_speed_point(const CMat& w) {
  const RVec p = pair_level_weights(w);
  return point_from(fermion_concurrence_pure(w), p, orthogonality_time_levels(p));
}

std::vector<SpeedPoint> fermion_scan(long long samples, std::uint64_t seed) {
  require(samples >= 1, "sample count must be positive");
  Rng rng(seed);
  std::vector<SpeedPoint> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (long long i = 0; i < samples; ++i) {
    const double alpha = kPi / 3.0 + (2.0 * kPi / 3.0) * rng.uniform();
    const double split = rng.uniform();
    std::array<double, 4> ph{};
    for (double& x : ph) x = 2.0 * kPi * rng.uniform();
    if (auto pt = fermion_speed_point(fermion_family_state(alpha, split, ph))) out.push_back(*pt);
  }
  return out;
}

SurveyEstimate fraction_below_min_curve(long long samples, std::uint64_t seed, int threads, double alpha) {
  require(samples >= 1, "sample count must be positive");
  const MeanAccumulator acc = survey_mean(samples, seed, threads, [](Rng& rng) {
    const CVec c = sample_pure_state({2, 2}, rng);
    const double gamma = (1.0 + concurrence_pure(c)) / 4.0;
    const double curve = std::acos(std::clamp((2.0 * gamma - 1.0) / (2.0 * gamma), -1.0, 1.0));
    return min_overlap_time(c) < curve ? 1.0 : 0.0;
  });
  return make_estimate(acc, alpha);
}

}  // namespace qent
