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
#include "qent/error.hpp"
#include "qent/xychain.hpp"

namespace qent {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> grid(double t_end, int points) {
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = t_end * i / (points - 1);
  return t;
}

TEST(Static, PurityBranches) {
  EXPECT_NEAR(static_purity(1.0, 1.0), 0.5, 1e-15);
  for (double gamma : {0.2, 0.6, 1.0}) {
    EXPECT_NEAR(static_purity(0.0, gamma), 1.0, 1e-14);
    EXPECT_NEAR(static_purity(0.5, gamma), 1.0 / (1.0 + gamma), 1e-12);
    EXPECT_NEAR(static_purity(0.5 + 1e-12, gamma), static_purity(0.5 - 1e-12, gamma), 1e-9);
    EXPECT_NEAR(static_purity(2.0, gamma), 1.0 / (1.0 + gamma), 1e-15);
  }
  // Near gamma = 1 the expansion joins the exact branch.
  const double g = 0.3;
  EXPECT_NEAR(static_purity(g, 1.0 - 1e-7), static_purity(g, 1.0 - 1e-3), 1e-3);
  EXPECT_NEAR(static_purity(g, 1.0 - 4e-7), (1.0 - std::pow(1.0 - 4e-7, 2) / std::sqrt(1.0 - 4 * g * g * (1.0 - std::pow(1.0 - 4e-7, 2)))) / (1.0 - std::pow(1.0 - 4e-7, 2)), 1e-6);
  EXPECT_THROW(static_purity(0.3, 0.0), DomainError);
  EXPECT_THROW(static_purity(-0.1, 0.5), DomainError);
}

TEST(Static, ModesReproduceClosedForm) {
  for (double gamma : {0.4, 0.6, 1.0}) {
    for (double g : {0.1, 0.3, 0.45, 0.7, 1.2}) {
      EXPECT_NEAR(purity_of(init_ground_modes(10000, g, 1.0, gamma)), static_purity(g, gamma), 1e-3)
          << g << " " << gamma;
    }
  }
}

TEST(Static, ThermodynamicConvergence) {
  const double p100 = purity_of(init_ground_modes(100, 0.3, 1.0, 0.6));
  const double p1000 = purity_of(init_ground_modes(1000, 0.3, 1.0, 0.6));
  const double p10000 = purity_of(init_ground_modes(10000, 0.3, 1.0, 0.6));
  const double d1 = std::abs(p100 - p1000), d2 = std::abs(p1000 - p10000);
  EXPECT_LE(d2, d1 / 5.0 + 1e-14);
}

TEST(Init, Limits) {
  EXPECT_NEAR(purity_of(init_ground_modes(200, 0.0, 1.0, 0.5)), 1.0, 1e-12);
  EXPECT_NEAR(purity_of(init_ground_modes(200, -0.25, -1e6, 0.5)), 1.0, 1e-6);
  EXPECT_NEAR(purity_of(init_ground_modes(200, -0.25, -5.0, 0.5)), 1.0, 0.02);
  // cos(phi) < 0 for h -> -inf, so phi -> pi and every mode sits at x1 = 1.
  for (const ModeState& m : init_ground_modes(50, -0.25, -1e6, 0.5)) EXPECT_NEAR(m.x1, 1.0, 1e-6);
  EXPECT_EQ(mode_momenta(4).size(), 4u);
  EXPECT_NEAR(mode_momenta(4)[0], kPi / 8.0, 1e-15);
}

TEST(Init, AngleConvention) {
  // cos(phi) carries the sign of h - 2 g cos k.
  for (double k : {0.3, 1.5, 2.8}) {
    for (double h : {-3.0, 0.1, 2.0}) {
      const double g = 0.7, gamma = 0.5;
      const double phi = mode_angle(k, g, h, gamma);
      EXPECT_GE(std::cos(phi) * (h - 2.0 * g * std::cos(k)), -1e-15);
      EXPECT_NEAR(std::tan(phi), 2.0 * g * gamma * std::sin(k) / (2.0 * g * std::cos(k) - h), 1e-9);
    }
  }
}

TEST(Evolve, StationaryGroundState) {
  const auto modes = init_ground_modes(20, 0.4, 1.0, 0.7);
  const ModeSeries s = evolve(modes, FieldSchedule::constant(0.4), FieldSchedule::constant(1.0), 0.7, grid(10.0, 11));
  for (std::size_t m = 0; m < modes.size(); ++m) {
    EXPECT_NEAR(s.back()[m].x1, modes[m].x1, 1e-10);
    EXPECT_NEAR(std::abs(s.back()[m].x2 - modes[m].x2), 0.0, 1e-10);
  }
}

TEST(Evolve, StepFieldAgainstClosedFormAndOracle) {
  const double g0 = -0.25, h0 = -5.0, hf = -1.0, gamma = 0.5;
  const auto modes = init_ground_modes(20, g0, h0, gamma);
  const std::vector<double> t = grid(50.0, 101);
  const ModeSeries s = evolve(modes, FieldSchedule::constant(g0), FieldSchedule::step(h0, hf), gamma, t);
  double worst = 0.0, worst_oracle = 0.0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const double k = modes[m].k;
      worst = std::max(worst, std::abs(s[i][m].x1 - step_mode_x1(k, g0, h0, hf, gamma, t[i])));
      worst_oracle = std::max(worst_oracle, std::abs(s[i][m].x1 - oracle::xy_mode_x1(k, g0, h0, hf, gamma, t[i])));
    }
  }
  EXPECT_LT(worst, 1e-8);
  EXPECT_LT(worst_oracle, 1e-8);
}

TEST(Evolve, ConstantFieldPeriod) {
  const double g = 0.6, gamma = 0.8, h = 0.3;
  const auto modes = init_ground_modes(6, g, 1.5, gamma);
  for (const ModeState& m : modes) {
    const double period = 2.0 * kPi / mode_frequency(m.k, g, h, gamma);
    const ModeSeries s = evolve({m}, FieldSchedule::constant(g), FieldSchedule::step(1.5, h), gamma, {0.0, period});
    EXPECT_NEAR(s.back()[0].x1, m.x1, 1e-8);
  }
}

TEST(Evolve, ModeInvariantConserved) {
  const auto modes = init_ground_modes(30, 0.2, 1.0, 0.6);
  const ModeSeries s = evolve(modes, FieldSchedule::exponential(0.2, 1.0, 0.5), FieldSchedule::hyperbolic(1.0, 0.3),
                              0.6, grid(20.0, 21));
  for (const auto& snapshot : s) {
    for (std::size_t m = 0; m < modes.size(); ++m) {
      const double c0 = modes[m].x1 * (1.0 - modes[m].x1) - std::norm(modes[m].x2);
      const double ct = snapshot[m].x1 * (1.0 - snapshot[m].x1) - std::norm(snapshot[m].x2);
      EXPECT_NEAR(ct, c0, 1e-8);
    }
  }
}

TEST(Evolve, RejectsBadGrid) {
  const auto modes = init_ground_modes(4, 0.2, 1.0, 0.6);
  EXPECT_THROW(evolve(modes, FieldSchedule::constant(0.2), FieldSchedule::constant(1.0), 0.6, {1.0, 0.5}), DomainError);
}

TEST(Schedules, Values) {
  EXPECT_DOUBLE_EQ(FieldSchedule::step(-5.0, -1.0).at(-1.0), -5.0);
  EXPECT_DOUBLE_EQ(FieldSchedule::step(-5.0, -1.0).at(0.5), -1.0);
  EXPECT_NEAR(FieldSchedule::exponential(0.0, 1.0, 0.1).at(10.0), 1.0 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(FieldSchedule::hyperbolic(2.0, 1.0).at(1.0), 1.5, 1e-15);
}

TEST(Observables, SeriesAndRanges) {
  const auto modes = init_ground_modes(50, -0.25, -5.0, 0.5);
  const ModeSeries s = evolve(modes, FieldSchedule::constant(-0.25), FieldSchedule::step(-5.0, -1.0), 0.5, grid(5.0, 6));
  const std::vector<double> p = purity_series(s), mz = magnetization_series(s);
  ASSERT_EQ(p.size(), 6u);
  for (std::size_t i = 0; i < p.size(); ++i) {
    EXPECT_GE(p[i], 0.0);
    EXPECT_LE(p[i], 1.0 + 1e-12);
    EXPECT_GE(mz[i], -1.0 - 1e-12);
    EXPECT_LE(mz[i], 1.0 + 1e-12);
  }
  EXPECT_GT(p[0], 0.98);
}

TEST(Asymptotic, GammaOneClosedForm) {
  for (double h0 : {-5.0, -3.0, -1.0, -0.3, 0.2, 2.0}) {
    EXPECT_NEAR(asymptotic_step(h0, -0.25, 1.0).purity, asymptotic_purity_gamma1(h0, -0.25), 1e-8) << h0;
  }
}

TEST(Asymptotic, ZeroFieldLimit) {
  for (double gamma : {0.3, 0.7, 1.0}) EXPECT_NEAR(asymptotic_step(-1e-7, -0.25, gamma).purity, 1.0 / (1.0 + gamma), 1e-5);
}

TEST(Asymptotic, KinkAtCriticalField) {
  auto slope = [](double h0, double dh) {
    return (asymptotic_step(h0 + dh, -0.25, 0.5).purity - asymptotic_step(h0, -0.25, 0.5).purity) / dh;
  };
  const double jump_at_critical = std::abs(slope(-0.5, 1e-4) - slope(-0.5, -1e-4));
  const double jump_elsewhere = std::abs(slope(-1.5, 1e-4) - slope(-1.5, -1e-4));
  EXPECT_GT(jump_at_critical, 0.05);
  EXPECT_LT(jump_elsewhere, 1e-3);
}

TEST(TimeAverage, MatchesAsymptoteForZeroFinalField) {
  const TimeAverage avg = step_time_average(-0.25, -5.0, 0.0, 1.0, 2000);
  EXPECT_NEAR(avg.purity.mean, asymptotic_purity_gamma1(-5.0, -0.25), 5e-3);
  EXPECT_NEAR(avg.magnetization.mean, asymptotic_step(-5.0, -0.25, 1.0).magnetization, 5e-3);
}

TEST(TimeAverage, NonErgodic) {
  const TimeAverage a = step_time_average(-0.25, -5.0, -1.0, 0.5, 1000);
  const TimeAverage b = step_time_average(-0.25, -2.0, -1.0, 0.5, 1000);
  EXPECT_GT(std::abs(a.purity.mean - b.purity.mean), 5.0 * std::hypot(a.purity.std_error, b.purity.std_error));
  EXPECT_GT(std::abs(a.magnetization.mean - b.magnetization.mean),
            5.0 * std::hypot(a.magnetization.std_error, b.magnetization.std_error));
}

TEST(Adiabatic, FastRampDeparts) {
  const AdiabaticTrace fast = adiabatic_passage(10.0, 200, 5.0);
  EXPECT_TRUE(fast.reached_final);
  EXPECT_GT(fast.sup_distance, 0.05);
}

TEST(Adiabatic, SlowerRampsTrackStaticCurve) {
  double previous = 1e9;
  for (double kappa : {1.0, 0.1, 0.01}) {
    const AdiabaticTrace tr = adiabatic_passage(kappa, 200, 8.0 / kappa);
    EXPECT_TRUE(tr.reached_final) << kappa;
    EXPECT_LT(tr.sup_distance, previous) << kappa;
    previous = tr.sup_distance;
  }
}

TEST(Adiabatic, UnfinishedRampIsReported) {
  const AdiabaticTrace tr = adiabatic_passage(0.01, 20, 10.0);
  EXPECT_FALSE(tr.reached_final);
  EXPECT_THROW(adiabatic_passage(0.0, 20, 10.0), DomainError);
}

}  // namespace
}  // namespace qent
