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

// Anisotropic XY chain in a transverse field, reduced to independent momentum
// modes. Each mode k carries x1 = <b_k b_k^dagger>-type population and a
// complex coherence x2; fields may change in time.

#ifndef QENT_XYCHAIN_HPP_
#define QENT_XYCHAIN_HPP_

#include <vector>

#include "qent/qmat.hpp"
#include "qent/survey.hpp"

namespace qent {

struct ModeState {
  double k = 0.0;
  double x1 = 0.0;
  cplx x2 = 0.0;
};

enum class ScheduleKind { kConstant, kStep, kExponential, kHyperbolic };

// Value before t = 0 is initial; afterwards
//   step:        final
//   exponential: final + (initial - final) exp(-rate t)
//   hyperbolic:  final + (initial - final) / (1 + t)
struct FieldSchedule {
  ScheduleKind kind = ScheduleKind::kConstant;
  double initial = 0.0;
  double final_value = 0.0;
  double rate = 0.0;

  static FieldSchedule constant(double v) { return {ScheduleKind::kConstant, v, v, 0.0}; }
  static FieldSchedule step(double from, double to) { return {ScheduleKind::kStep, from, to, 0.0}; }
  static FieldSchedule exponential(double from, double to, double kappa);
  static FieldSchedule hyperbolic(double from, double to) { return {ScheduleKind::kHyperbolic, from, to, 0.0}; }
  double at(double t) const;
};

struct IntegratorOptions {
  double max_step = 0.01;
  double omega_fraction = 0.05;  // step <= omega_fraction / omega_max
};

// Momenta pi/N, 3pi/N, ..., (N-1)pi/N for a chain of N = 2 n_modes sites.
std::vector<double> mode_momenta(int n_modes);

// Ground-state angle: tan(phi) = 2 g gamma sin k / (2 g cos k - h), quadrant
// fixed so that cos(phi) has the sign of h - 2 g cos k.
double mode_angle(double k, double g, double h, double gamma);

// u(N) purity of the ground state at h = 1, gamma in (0,1], g >= 0.
double static_purity(double g, double gamma);

std::vector<ModeState> init_ground_modes(int n_modes, double g0, double h0, double gamma);

// Instantaneous mode frequency sqrt(4 a^2 + b^2), a = 4 g gamma sin k, b = -4(2 g cos k - h).
double mode_frequency(double k, double g, double h, double gamma);

using ModeSeries = std::vector<std::vector<ModeState>>;

// Classical RK4 from t = 0 through every point of t_grid (ascending, >= 0).
ModeSeries evolve(const std::vector<ModeState>& modes, const FieldSchedule& g_sched, const FieldSchedule& h_sched,
                  double gamma, const std::vector<double>& t_grid, const IntegratorOptions& opts = {});

// (4/N) sum over +-k of (x1 - 1/2)^2.
double purity_of(const std::vector<ModeState>& modes);
// Total z magnetization scaled by 2/N into [-1, 1].
double magnetization_of(const std::vector<ModeState>& modes);
std::vector<double> purity_series(const ModeSeries& series);
std::vector<double> magnetization_series(const ModeSeries& series);

// Closed-form x1(t) of one mode after a sudden change h0 -> hf at t = 0 (g fixed).
double step_mode_x1(double k, double g0, double h0, double hf, double gamma, double t);

struct Asymptote {
  double purity = 0.0;
  double magnetization = 0.0;
};
// Long-time limits after the step h0 -> 0, from the integrals over y = cos k.
Asymptote asymptotic_step(double h0, double g0, double gamma);
// gamma = 1 closed form of the purity limit.
double asymptotic_purity_gamma1(double h0, double g0);

struct TimeAverage {
  SurveyEstimate purity;
  SurveyEstimate magnetization;
  double t_end = 0.0;
};
// Mean over the last half of t in [0, 200 / min_k omega_k] after h0 -> hf.
TimeAverage step_time_average(double g0, double h0, double hf, double gamma, int n_modes, int n_times = 2000,
                              double alpha = 0.05);

struct AdiabaticTrace {
  std::vector<double> t;
  std::vector<double> g;
  std::vector<double> purity;
  std::vector<double> static_curve;
  double final_average = 0.0;  // mean purity over the last half of the run
  double sup_distance = 0.0;   // max |purity - static_curve|
  bool reached_final = false;  // g(t_max) within 1e-3 of its target
};

// g ramps 0 -> 1 as 1 - exp(-kappa t) at fixed h; purity against instantaneous g.
AdiabaticTrace adiabatic_passage(double kappa, int n_modes, double t_max, double gamma = 1.0, double h = 1.0,
                                 int records = 2000);

}  // namespace qent

#endif  // QENT_XYCHAIN_HPP_
