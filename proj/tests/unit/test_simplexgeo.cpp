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

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oracle/oracle.hpp"
#include "qent/error.hpp"
#include "qent/randgen.hpp"
#include "qent/simplexgeo.hpp"

namespace qent {
namespace {

using boost::math::quadrature::gauss_kronrod;

template <class F>
double integrate(F f, double lo, double hi) {
  return gauss_kronrod<double, 61>::integrate(f, lo, hi, 15, 1e-12);
}

TEST(Tetra, VertexLayout) {
  const auto& v = tetra_vertices();
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(v[i].norm(), std::sqrt(6.0) / 4.0, 1e-15);
    for (int j = i + 1; j < 4; ++j) EXPECT_NEAR((v[i] - v[j]).norm(), 1.0, 1e-14);
  }
  EXPECT_NEAR(v[3].x(), 0.0, 1e-15);
  EXPECT_NEAR(v[3].y(), 0.0, 1e-15);
  EXPECT_GT(v[3].z(), 0.0);
  EXPECT_GT(v[1].x(), 0.0);
  EXPECT_NEAR(v[1].y(), 0.0, 1e-15);
}

TEST(Tetra, Examples) {
  EXPECT_NEAR(simplex_to_tetra(RVec::Constant(4, 0.25)).norm(), 0.0, 1e-15);
  RVec vertex = RVec::Zero(4);
  vertex[0] = 1.0;
  EXPECT_NEAR(simplex_to_tetra(vertex).norm(), std::sqrt(6.0) / 4.0, 1e-15);
  EXPECT_THROW(tetra_to_simplex(TetraPoint(0.0, 0.0, 1.0)), DomainError);
  EXPECT_THROW(simplex_to_tetra(RVec::Constant(3, 1.0 / 3.0)), DomainError);
}

TEST(Tetra, RoundTripAndRadius) {
  Rng rng(61);
  for (int i = 0; i < 1000; ++i) {
    const RVec lam = sample_simplex(4, SimplexMeasure::dirichlet(0.7), rng);
    const TetraPoint r = simplex_to_tetra(lam);
    EXPECT_LT((tetra_to_simplex(r) - lam).norm(), 1e-12);
    EXPECT_NEAR(r.squaredNorm(), -0.125 + 0.5 * lam.squaredNorm(), 1e-12);
    // The rotated vertex set gives the same radius.
    TetraPoint alt = TetraPoint::Zero();
    for (int k = 0; k < 4; ++k) alt += lam[k] * tetra_vertices_alt()[k];
    EXPECT_NEAR(alt.norm(), r.norm(), 1e-12);
    EXPECT_NEAR(R_for_radius(r.norm()), 1.0 / lam.squaredNorm(), 1e-9);
  }
}

TEST(Tetra, AlternateFrameIsARotation) {
  const auto& a = tetra_vertices();
  const auto& b = tetra_vertices_alt();
  Eigen::Matrix3d pa, pb;
  for (int i = 0; i < 3; ++i) {
    pa.col(i) = a[i];
    pb.col(i) = b[i];
  }
  const Eigen::Matrix3d rot = pb * pa.inverse();
  EXPECT_LT((rot.transpose() * rot - Eigen::Matrix3d::Identity()).norm(), 1e-12);
  EXPECT_NEAR(rot.determinant(), 1.0, 1e-12);
  EXPECT_LT((rot * a[3] - b[3]).norm(), 1e-12);
}

TEST(DensityR, Normalization) {
  EXPECT_NEAR(integrate([](double r) { return f_R(r); }, 1.0, 2.0) +
                  integrate([](double r) { return f_R(r); }, 2.0, 3.0) +
                  integrate([](double r) { return f_R(r); }, 3.0, 4.0),
              1.0, 1e-6);
  for (double r = 1.0; r <= 4.0; r += 0.01) EXPECT_GE(f_R(r), 0.0);
  EXPECT_THROW(f_R(0.5), DomainError);
}

TEST(DensityR, ContinuityAtRegionBoundaries) {
  for (double boundary : {2.0, 3.0}) EXPECT_NEAR(f_R(boundary - 1e-12), f_R(boundary + 1e-12), 1e-9) << boundary;
}

TEST(DensityR, FirstRegionShape) {
  auto shape = [](double r) { return std::sqrt(1.0 / r - 0.25) / (r * r); };
  const double ratio = f_R(3.5) / shape(3.5);
  for (double r : {3.05, 3.3, 3.7, 3.95}) EXPECT_NEAR(f_R(r) / shape(r), ratio, 1e-9 * ratio);
  // Full-sphere area over tetra volume times |dr/dR|.
  const double radius = radius_for_R(3.5);
  const double expected = 4.0 * M_PI * radius * radius / kTetraVolume / (4.0 * 3.5 * 3.5 * radius);
  EXPECT_NEAR(f_R(3.5), expected, 1e-10);
}

// Histogram of product-measure spectra against bin averages of the density.
template <class Value, class Density>
double histogram_sup_error(Value value, Density density, double lo, double hi, int bins, int samples,
                           std::uint64_t seed) {
  Rng rng(seed);
  std::vector<double> counts(bins, 0.0);
  for (int i = 0; i < samples; ++i) {
    const double x = value(sample_simplex(4, SimplexMeasure::lebesgue(), rng));
    const int b = std::min(bins - 1, static_cast<int>((x - lo) / (hi - lo) * bins));
    counts[b] += 1.0;
  }
  const double width = (hi - lo) / bins;
  double worst = 0.0;
  for (int b = 0; b < bins; ++b) {
    const double a = lo + b * width;
    const double analytic = integrate(density, a, a + width) / width;
    worst = std::max(worst, std::abs(counts[b] / (samples * width) - analytic));
  }
  return worst;
}

TEST(DensityR, MonteCarloHistogram) {
  const double err = histogram_sup_error([](const RVec& l) { return 1.0 / l.squaredNorm(); },
                                         [](double r) { return f_R(r); }, 1.0, 4.0, 60, 1000000, 62);
  EXPECT_LT(err, 0.02);
}

TEST(DensityLambdaMax, NormalizationAndEndpoint) {
  EXPECT_NEAR(integrate([](double x) { return f_lambda_max(x); }, 0.25, 1.0 / 3.0) +
                  integrate([](double x) { return f_lambda_max(x); }, 1.0 / 3.0, 0.5) +
                  integrate([](double x) { return f_lambda_max(x); }, 0.5, 1.0),
              1.0, 1e-6);
  EXPECT_NEAR(f_lambda_max(1.0), 0.0, 1e-12);
  for (double x = 0.25; x <= 1.0; x += 0.005) EXPECT_GE(f_lambda_max(x), 0.0);
  EXPECT_THROW(f_lambda_max(0.2), DomainError);
}

TEST(DensityLambdaMax, SmoothAcrossRegions) {
  // One-sided difference quotients agree at the region boundaries.
  for (double x : {1.0 / 3.0, 0.5}) {
    const double h = 1e-5;
    const double left = (f_lambda_max(x) - f_lambda_max(x - h)) / h;
    const double right = (f_lambda_max(x + h) - f_lambda_max(x)) / h;
    EXPECT_NEAR(left, right, 1e-2 * std::max(1.0, std::abs(left))) << x;
    EXPECT_NEAR(f_lambda_max(x - 1e-10), f_lambda_max(x + 1e-10), 1e-7);
  }
}

TEST(DensityLambdaMax, LevelGeometry) {
  for (double lm : {0.3, 0.5, 0.8}) EXPECT_NEAR(lm, 2.0 * l_for_lambda_max(lm) * std::sqrt(3.0 / 8.0) + 0.25, 1e-14);
  EXPECT_NEAR(lambda_level_area(0.0), 0.0, 1e-15);
}

TEST(DensityLambdaMax, MonteCarloHistogram) {
  // Bin width 0.05 as for f_R; 60 bins would put the peak-bin noise near 0.016.
  const double err = histogram_sup_error([](const RVec& l) { return l.maxCoeff(); },
                                         [](double x) { return f_lambda_max(x); }, 0.25, 1.0, 15, 1000000, 63);
  EXPECT_LT(err, 0.02);
}

TEST(DensityR, SixLevelFirstRegionShape) {
  // For N = 6 the region R in [5, 6] has density ~ (1/R - 1/6)^(3/2) / R^2,
  // whose conditional CDF is 1 - (u / u(5))^(5/2) with u = 1/R - 1/6.
  Rng rng(64);
  std::vector<double> tail;
  for (int i = 0; i < 400000; ++i) {
    const double r = 1.0 / sample_simplex(6, SimplexMeasure::lebesgue(), rng).squaredNorm();
    if (r >= 5.0) tail.push_back(r);
  }
  ASSERT_GT(tail.size(), 10000u);
  auto cdf = [](double r) {
    const double u = std::max(0.0, 1.0 / std::clamp(r, 5.0, 6.0) - 1.0 / 6.0);
    return 1.0 - std::pow(u * 30.0, 2.5);
  };
  EXPECT_GT(oracle::ks_pvalue(tail, cdf), 1e-3);
}

TEST(Dirichlet, AveragePurity) {
  EXPECT_NEAR(avg_purity_dirichlet(4, 1.0), 0.4, 1e-15);
  EXPECT_NEAR(avg_purity_dirichlet(4, 0.5), 0.5, 1e-15);
  EXPECT_NEAR(avg_purity_dirichlet(4, 1e9), 0.25, 1e-8);
  EXPECT_THROW(avg_purity_dirichlet(1, 1.0), DomainError);
  EXPECT_THROW(avg_purity_dirichlet(4, 0.0), DomainError);
}

}  // namespace
}  // namespace qent
