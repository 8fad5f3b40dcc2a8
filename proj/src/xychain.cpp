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

#include "qent/xychain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "qent/error.hpp"

namespace qent {

namespace {

constexpr double kPi = std::numbers::pi;

void check_gamma(double gamma) { require(gamma > 0.0 && gamma <= 1.0, "anisotropy must lie in (0, 1]"); }

void check_modes(int n_modes) { require(n_modes >= 1, "need at least one mode"); }

}  // namespace

FieldSchedule FieldSchedule::exponential(double from, double to, double kappa) {
  require(kappa > 0.0, "exponential schedule needs a positive rate");
  return {ScheduleKind::kExponential, from, to, kappa};
}

double FieldSchedule::at(double t) const {
  if (kind == ScheduleKind::kConstant) return initial;
  if (t < 0.0) return initial;
  switch (kind) {
    case ScheduleKind::kStep:
      return final_value;
    case ScheduleKind::kExponential:
      return final_value + (initial - final_value) * std::exp(-rate * t);
    case ScheduleKind::kHyperbolic:
      return final_value + (initial - final_value) / (1.0 + t);
    default:
      return initial;
  }
}

std::vector<double> mode_momenta(int n_modes) {
  check_modes(n_modes);
  std::vector<double> k(static_cast<std::size_t>(n_modes));
  for (int m = 0; m < n_modes; ++m) k[m] = kPi * (2.0 * m + 1.0) / (2.0 * n_modes);
  return k;
}

double mode_angle(double k, double g, double h, double gamma) {
  return std::atan2(-2.0 * g * gamma * std::sin(k), -(2.0 * g * std::cos(k) - h));
}

double mode_frequency(double k, double g, double h, double gamma) {
  const double a = 4.0 * g * gamma * std::sin(k);
  const double b = -4.0 * (2.0 * g * std::cos(k) - h);
  return std::sqrt(4.0 * a * a + b * b);
}

double static_purity(double g, double gamma) {
  check_gamma(gamma);
  require(g >= 0.0, "coupling must be non-negative");
  if (g > 0.5) return 1.0 / (1.0 + gamma);
  const double e = 1.0 - gamma * gamma;
  const double s = 4.0 * g * g;
  if (e < 1e-6) {
    // Expansion in e = 1 - gamma^2 around the isotropic point.
    return 1.0 - s / 2.0 + e * (s / 2.0 - 3.0 * s * s / 8.0);
  }
  return (1.0 - gamma * gamma / std::sqrt(1.0 - s * e)) / e;
}

std::vector<ModeState> init_ground_modes(int n_modes, double g0, double h0, double gamma) {
  check_gamma(gamma);
  std::vector<ModeState> out;
  out.reserve(static_cast<std::size_t>(n_modes));
  for (double k : mode_momenta(n_modes)) {
    const double phi = mode_angle(k, g0, h0, gamma);
    const double s = std::sin(phi / 2.0);
    out.push_back({k, s * s, cplx(0.0, -std::sin(phi) / 2.0)});
  }
  return out;
}

ModeSeries evolve(const std::vector<ModeState>& modes, const FieldSchedule& g_sched, const FieldSchedule& h_sched,
                  double gamma, const std::vector<double>& t_grid, const IntegratorOptions& opts) {
  check_gamma(gamma);
  require(opts.max_step > 0.0 && opts.omega_fraction > 0.0, "integrator step controls must be positive");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    require(t_grid[i] >= 0.0, "time grid must be non-negative");
    require(i == 0 || t_grid[i] >= t_grid[i - 1], "time grid must be ascending");
  }
  const std::size_t n = modes.size();
  std::vector<double> sk(n), ck(n), x1(n), xr(n), xi(n);
  for (std::size_t m = 0; m < n; ++m) {
    sk[m] = std::sin(modes[m].k);
    ck[m] = std::cos(modes[m].k);
    x1[m] = modes[m].x1;
    xr[m] = modes[m].x2.real();
    xi[m] = modes[m].x2.imag();
  }
  // The frequency is the norm of a map linear in (g, h), so its largest value
  // over the schedule sits at a corner of the field ranges.
  double omega_max = 0.0;
  for (double g : {g_sched.initial, g_sched.final_value})
    for (double h : {h_sched.initial, h_sched.final_value})
      for (const ModeState& md : modes) omega_max = std::max(omega_max, mode_frequency(md.k, g, h, gamma));
  double dt_nominal = opts.max_step;
  if (omega_max > 0.0) dt_nominal = std::min(dt_nominal, opts.omega_fraction / omega_max);

  std::vector<double> k1a(n), k1b(n), k1c(n), k2a(n), k2b(n), k2c(n), k3a(n), k3b(n), k3c(n), k4a(n), k4b(n),
      k4c(n), ya(n), yb(n), yc(n);
  auto rhs = [&](double t, const std::vector<double>& a, const std::vector<double>& b, const std::vector<double>& c,
                 std::vector<double>& da, std::vector<double>& db, std::vector<double>& dc) {
    const double g = g_sched.at(t);
    const double h = h_sched.at(t);
    for (std::size_t m = 0; m < n; ++m) {
      const double at = 4.0 * g * gamma * sk[m];
      const double be = -4.0 * (2.0 * g * ck[m] - h);
      da[m] = 2.0 * at * b[m];
      db[m] = at - 2.0 * at * a[m] - be * c[m];
      dc[m] = be * b[m];
    }
  };
  auto rk4 = [&](double t, double dt) {
    rhs(t, x1, xr, xi, k1a, k1b, k1c);
    for (std::size_t m = 0; m < n; ++m) {
      ya[m] = x1[m] + 0.5 * dt * k1a[m];
      yb[m] = xr[m] + 0.5 * dt * k1b[m];
      yc[m] = xi[m] + 0.5 * dt * k1c[m];
    }
    rhs(t + 0.5 * dt, ya, yb, yc, k2a, k2b, k2c);
    for (std::size_t m = 0; m < n; ++m) {
      ya[m] = x1[m] + 0.5 * dt * k2a[m];
      yb[m] = xr[m] + 0.5 * dt * k2b[m];
      yc[m] = xi[m] + 0.5 * dt * k2c[m];
    }
    rhs(t + 0.5 * dt, ya, yb, yc, k3a, k3b, k3c);
    for (std::size_t m = 0; m < n; ++m) {
      ya[m] = x1[m] + dt * k3a[m];
      yb[m] = xr[m] + dt * k3b[m];
      yc[m] = xi[m] + dt * k3c[m];
    }
    rhs(t + dt, ya, yb, yc, k4a, k4b, k4c);
    for (std::size_t m = 0; m < n; ++m) {
      x1[m] += dt / 6.0 * (k1a[m] + 2.0 * k2a[m] + 2.0 * k3a[m] + k4a[m]);
      xr[m] += dt / 6.0 * (k1b[m] + 2.0 * k2b[m] + 2.0 * k3b[m] + k4b[m]);
      xi[m] += dt / 6.0 * (k1c[m] + 2.0 * k2c[m] + 2.0 * k3c[m] + k4c[m]);
    }
  };

  ModeSeries series;
  series.reserve(t_grid.size());
  double t = 0.0;
  for (double target : t_grid) {
    const double span = target - t;
    if (span > 0.0) {
      // Equal steps no longer than the nominal one so each grid point is hit exactly.
      const long long steps = static_cast<long long>(std::ceil(span / dt_nominal - 1e-9));
      const double dt = span / static_cast<double>(steps);
      for (long long s = 0; s < steps; ++s) rk4(t + s * dt, dt);
      t = target;
    }
    std::vector<ModeState> frame(n);
    for (std::size_t m = 0; m < n; ++m) frame[m] = {modes[m].k, x1[m], cplx(xr[m], xi[m])};
    series.push_back(std::move(frame));
  }
  return series;
}

double purity_of(const std::vector<ModeState>& modes) {
  require(!modes.empty(), "no modes");
  double s = 0.0;
  for (const ModeState& m : modes) s += (m.x1 - 0.5) * (m.x1 - 0.5);
  return 4.0 * s / static_cast<double>(modes.size());
}

double magnetization_of(const std::vector<ModeState>& modes) {
  require(!modes.empty(), "no modes");
  double s = 0.0;
  for (const ModeState& m : modes) s += 2.0 * m.x1 - 1.0;
  return s / static_cast<double>(modes.size());
}

std::vector<double> purity_series(const ModeSeries& series) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& f : series) out.push_back(purity_of(f));
  return out;
}

std::vector<double> magnetization_series(const ModeSeries& series) {
  std::vector<double> out;
  out.reserve(series.size());
  for (const auto& f : series) out.push_back(magnetization_of(f));
  return out;
}

double step_mode_x1(double k, double g0, double h0, double hf, double gamma, double t) {
  const double phi = mode_angle(k, g0, h0, gamma);
  const double at = 4.0 * g0 * gamma * std::sin(k);
  const double be = -4.0 * (2.0 * g0 * std::cos(k) - hf);
  const double s = std::sin(phi / 2.0);
  const double omega = std::sqrt(4.0 * at * at + be * be);
  if (omega == 0.0) return s * s;
  const double amp = (at * std::cos(phi) + be * std::sin(phi) / 2.0) / omega;
  return s * s + 2.0 * at / omega * amp * (1.0 - std::cos(omega * t));
}

Asymptote asymptotic_step(double h0, double g0, double gamma) {
  check_gamma(gamma);
  require(h0 != 0.0 || g0 != 0.0, "fields must not both vanish");
  const double gg = gamma * gamma;
  auto parts = [&](double k, bool want_purity) {
    const double y = std::cos(k);
    const double sk = std::sin(k);
    const double w = sk * sk;
    // 2 g0 cos k - h0 in half-angle form, free of cancellation near k = 0 and pi.
    const double half = k < 0.5 * kPi ? std::sin(0.5 * k) : std::cos(0.5 * k);
    const double lin = k < 0.5 * kPi ? (2.0 * g0 - h0) - 4.0 * g0 * half * half : 4.0 * g0 * half * half - (2.0 * g0 + h0);
    const double den = lin * lin + 4.0 * g0 * g0 * gg * w;
    const double q = gg + (1.0 - gg) * y * y;
    if (den <= 0.0) return 0.0;
    if (want_purity)
      return 0.25 * lin * lin / den + 1.5 * gg * gg * w * w * h0 * h0 / (4.0 * q * q * den) +
             gg * w * h0 * lin / (2.0 * q * den);
    return lin / std::sqrt(den) + gg * w * h0 / (q * std::sqrt(den));
  };
  // Near criticality den vanishes at k = 0 or pi; k = (pi/2)(1 - cos u)
  // stretches both ends.
  auto stretched = [&](double u, bool want_purity) {
    return parts(0.5 * kPi * (1.0 - std::cos(u)), want_purity) * 0.5 * kPi * std::sin(u);
  };
  using Quad = boost::math::quadrature::gauss_kronrod<double, 61>;
  double err_p = 0.0, err_m = 0.0;
  const double ip = Quad::integrate([&](double u) { return stretched(u, true); }, 0.0, kPi, 20, 1e-13, &err_p);
  const double im = Quad::integrate([&](double u) { return stretched(u, false); }, 0.0, kPi, 20, 1e-13, &err_m);
  if (!(err_p <= 1e-9 * std::max(1.0, std::abs(ip))) || !(err_m <= 1e-9 * std::max(1.0, std::abs(im))))
    throw ConvergenceError("asymptotic quadrature did not converge");
  return {4.0 / kPi * ip, im / kPi};
}

double asymptotic_purity_gamma1(double h0, double g0) {
  require(h0 != 0.0 && g0 != 0.0, "closed form needs nonzero fields");
  // The purity limit is even in h0 and in g0 separately (k -> pi - k).
  const double r = std::abs(h0 / g0);
  const double root = std::sqrt(r * r - 8.0 + 16.0 / (r * r));
  require(root > 0.0, "closed form is singular at h0 = 2 g0");
  return -3.0 * std::pow(r, 4) / 512.0 + r * r / 128.0 + 17.0 / 32.0 - 3.0 / (8.0 * r * r) +
         (3.0 * std::pow(r, 5) / 512.0 - std::pow(r, 3) / 32.0 + r / 16.0 - 1.0 / (2.0 * r) + 3.0 / (2.0 * std::pow(r, 3))) /
             root;
}

TimeAverage step_time_average(double g0, double h0, double hf, double gamma, int n_modes, int n_times, double alpha) {
  check_modes(n_modes);
  require(n_times >= 2, "need at least two time samples");
  auto modes = init_ground_modes(n_modes, g0, h0, gamma);
  double omega_min = INFINITY;
  for (const ModeState& m : modes) omega_min = std::min(omega_min, mode_frequency(m.k, g0, hf, gamma));
  require(omega_min > 0.0, "a mode has zero frequency after the quench");
  const double t_end = 200.0 / omega_min;
  std::vector<double> grid(static_cast<std::size_t>(n_times));
  for (int i = 0; i < n_times; ++i) grid[i] = t_end * (0.5 + 0.5 * i / (n_times - 1.0));
  const ModeSeries series =
      evolve(modes, FieldSchedule::constant(g0), FieldSchedule::step(h0, hf), gamma, grid);
  MeanAccumulator p, m;
  for (const auto& f : series) {
    p.add(purity_of(f));
    m.add(magnetization_of(f));
  }
  return {make_estimate(p, alpha), make_estimate(m, alpha), t_end};
}

AdiabaticTrace adiabatic_passage(double kappa, int n_modes, double t_max, double gamma, double h, int records) {
  require(kappa > 0.0, "ramp rate must be positive");
  require(t_max > 0.0, "run length must be positive");
  require(records >= 2, "need at least two records");
  const FieldSchedule g_sched = FieldSchedule::exponential(0.0, 1.0, kappa);
  auto modes = init_ground_modes(n_modes, 0.0, h, gamma);
  std::vector<double> grid(static_cast<std::size_t>(records));
  for (int i = 0; i < records; ++i) grid[i] = t_max * (i + 1.0) / records;
  const ModeSeries series = evolve(modes, g_sched, FieldSchedule::constant(h), gamma, grid);

  AdiabaticTrace out;
  MeanAccumulator tail;
  for (int i = 0; i < records; ++i) {
    const double g = g_sched.at(grid[i]);
    const double p = purity_of(series[i]);
    const double ref = static_purity(g / h, gamma);
    out.t.push_back(grid[i]);
    out.g.push_back(g);
    out.purity.push_back(p);
    out.static_curve.push_back(ref);
    out.sup_distance = std::max(out.sup_distance, std::abs(p - ref));
    if (2 * i >= records) tail.add(p);
  }
  out.final_average = tail.mean();
  out.reached_final = std::abs(1.0 - out.g.back()) <= 1e-3;
  return out;
}

}  // namespace qent
