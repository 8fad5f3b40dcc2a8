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

#include "qent/simplexgeo.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qent/error.hpp"

namespace qent {

namespace {

constexpr double kPi = std::numbers::pi;

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

double safe_asin(double x) { return std::asin(clamp_unit(x)); }
double safe_acos(double x) { return std::acos(clamp_unit(x)); }

// Part of the sphere inside the solid when the sphere also crosses the edges.
double area_region3(double r) {
  const double h1 = 0.25 * std::sqrt(2.0 / 3.0);
  const double d1 = 0.5 * (0.5 - std::sqrt(std::max(0.0, r * r - 0.125)));
  const double big_a = 2.0 * safe_asin(d1 / r);
  const double ca = std::cos(big_a);
  const double sa2 = std::sin(big_a) * std::sin(big_a);
  if (sa2 <= 0.0) return 0.0;
  const double alpha = safe_acos((ca - ca * ca) / sa2);
  const double s_a = r * r * (3.0 * alpha - kPi);
  const double h = h1 / r;
  const double c1 = h / std::sqrt(1.0 - h * h);
  const double d2 = r * std::sqrt(1.0 - h * h);
  const double denom = r * r - d1 * d1;
  const double cb2 = std::clamp((d2 * d2 - d1 * d1) / denom, 0.0, 1.0);
  if (cb2 >= 1.0) return 0.0;
  const double c2 = std::sqrt(cb2) / std::sqrt(1.0 - cb2);
  const double s_b =
      r * r *
      (h * (-kPi + 2.0 * safe_asin(c1 * c2)) +
       2.0 * safe_asin(std::sqrt(std::max(0.0, (1.0 - c1 * c1 * c2 * c2) / (1.0 + c2 * c2)))));
  return std::max(0.0, 4.0 * (s_a - 3.0 * s_b));
}

std::array<TetraPoint, 4> make_vertices() {
  const double z = 0.25 * std::sqrt(2.0 / 3.0);
  return {TetraPoint(-1.0 / (2.0 * std::sqrt(3.0)), -0.5, -z),
          TetraPoint(1.0 / std::sqrt(3.0), 0.0, -z),
          TetraPoint(-1.0 / (2.0 * std::sqrt(3.0)), 0.5, -z),
          TetraPoint(0.0, 0.0, 3.0 * z)};
}

std::array<TetraPoint, 4> make_vertices_alt() {
  const double z = 0.25 * std::sqrt(2.0 / 3.0);
  return {TetraPoint(-0.5, -1.0 / (2.0 * std::sqrt(3.0)), -z),
          TetraPoint(0.5, -1.0 / (2.0 * std::sqrt(3.0)), -z),
          TetraPoint(0.0, 1.0 / std::sqrt(3.0), -z),
          TetraPoint(0.0, 0.0, 3.0 * z)};
}

// lam_max = 2 l sqrt(3/8) + 1/4 for four levels.
const double kLambdaSlope = 2.0 * std::sqrt(3.0 / 8.0);

}  // namespace

const std::array<TetraPoint, 4>& tetra_vertices() {
  static const std::array<TetraPoint, 4> v = make_vertices();
  return v;
}

const std::array<TetraPoint, 4>& tetra_vertices_alt() {
  static const std::array<TetraPoint, 4> v = make_vertices_alt();
  return v;
}

TetraPoint simplex_to_tetra(const RVec& lam) {
  require(lam.size() == 4, "tetrahedron picture needs four eigenvalues");
  require(std::abs(lam.sum() - 1.0) <= 1e-12, "eigenvalues must sum to 1");
  require(lam.minCoeff() >= -1e-12, "eigenvalues must be non-negative");
  TetraPoint r = TetraPoint::Zero();
  const auto& v = tetra_vertices();
  for (int i = 0; i < 4; ++i) r += lam[i] * v[i];
  return r;
}

RVec tetra_to_simplex(const TetraPoint& r) {
  RVec lam(4);
  const auto& v = tetra_vertices();
  for (int i = 0; i < 4; ++i) lam[i] = 2.0 * r.dot(v[i]) + 0.25;
  require(lam.minCoeff() >= -1e-12, "point lies outside the tetrahedron");
  return lam;
}

double radius_for_R(double r_val) {
  require(r_val >= 1.0 - 1e-12 && r_val <= 4.0 + 1e-12, "participation ratio must lie in [1,4]");
  return std::sqrt(std::max(0.0, -0.125 + 0.5 / r_val));
}

double R_for_radius(double radius) { return 1.0 / (2.0 * radius * radius + 0.25); }

double sphere_area_inside(double radius) {
  const double h1 = 0.25 * std::sqrt(2.0 / 3.0);
  const double h2 = std::sqrt(2.0) / 4.0;
  const double h3 = std::sqrt(6.0) / 4.0;
  require(radius >= 0.0, "radius must be non-negative");
  if (radius <= h1) return 4.0 * kPi * radius * radius;
  if (radius <= h2) return 4.0 * kPi * (radius * radius - 2.0 * radius * (radius - h1));
  if (radius >= h3) return 0.0;
  return area_region3(radius);
}

double lambda_level_area(double l) {
  const double h1 = 0.25 * std::sqrt(2.0 / 3.0);
  const double s3 = std::sqrt(3.0);
  require(l >= 0.0, "distance must be non-negative");
  if (l <= h1 / 3.0) return 24.0 * s3 * l * l;
  if (l <= h1) return 3.0 * s3 * (8.0 * l * l - 1.5 * (3.0 * l - h1) * (3.0 * l - h1));
  if (l >= 3.0 * h1) return 0.0;
  return 1.5 * s3 * (3.0 * h1 - l) * (3.0 * h1 - l);
}

double l_for_lambda_max(double lm) { return (lm - 0.25) / kLambdaSlope; }

double f_R(double r_val) {
  const double radius = radius_for_R(r_val);
  if (radius == 0.0) return 0.0;
  // |dr/dR| = 1 / (4 R^2 r)
  const double jac = 1.0 / (4.0 * r_val * r_val * radius);
  return sphere_area_inside(radius) / kTetraVolume * jac;
}

double f_lambda_max(double lm) {
  require(lm >= 0.25 - 1e-12 && lm <= 1.0 + 1e-12, "largest eigenvalue must lie in [1/4,1]");
  const double l = std::max(0.0, l_for_lambda_max(lm));
  return lambda_level_area(l) / kTetraVolume / kLambdaSlope;
}

double avg_purity_dirichlet(int n, double eta) {
  require(n >= 2, "dimension must be at least 2");
  require(eta > 0.0, "Dirichlet exponent must be positive");
  return 1.0 / (n - (n - 1) / (eta + 1.0));
}

}  // namespace qent
