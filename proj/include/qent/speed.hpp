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

// Orthogonality times under local Hamiltonians and their quantum speed limit.
// Units: hbar = 1 and single-particle level spacing eps = 1.

#ifndef QENT_SPEED_HPP_
#define QENT_SPEED_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qent/qmat.hpp"
#include "qent/rng.hpp"
#include "qent/survey.hpp"

namespace qent {

inline constexpr double kUnitCircleTol = 1e-9;

struct SpeedPoint {
  double concurrence = 0.0;
  double tau_over_tmin = 0.0;
};

struct Band {
  double min = 0.0;
  double max = 0.0;
};

// max(pi/(2E), pi/(2 dE)).
double qsl_bound(double e_mean, double e_spread);

// Mean energy and spread of populations p_E on integer levels E = 0, 1, ...
std::pair<double, double> level_moments(const RVec& weights);

// Smallest t > 0 with sum_E p_E exp(-i E t) = 0, from the unit-circle roots
// of the polynomial sum_E p_E z^E.
std::optional<double> orthogonality_time_levels(const RVec& weights);

// Two qubits, levels 0, 1, 1, 2 for |00>, |01>, |10>, |11>: the overlap is
// |c0|^2 + (|c1|^2 + |c2|^2) z + |c3|^2 z^2.
std::optional<double> orthogonality_time(const CVec& c);
// Time of least overlap; equals the orthogonality time when that exists.
double min_overlap_time(const CVec& c);

// (2/pi) sqrt(2 Gamma) arccos((2 Gamma - 1)/(2 Gamma)).
double tau_over_tmin_gamma(double gamma);
Band two_qubit_band(double c);

// Two-qubit states |c0|^2 = |c3|^2 = Gamma that reach an orthogonal state.
CVec sample_gamma_family(Rng& rng);
std::optional<SpeedPoint> two_qubit_speed_point(const CVec& c);

// Two bosons in levels 0 and 1: |v00|^2 = |v11|^2 = G, |v01|^2 = -G cos(alpha),
// G = 1/(4(1 - cos alpha)), alpha in [pi/2, pi]; phase is arg(v00 v11) - arg(v01^2).
CMat boson_state(double alpha, double phase);
std::optional<SpeedPoint> boson_speed_point(const CMat& v);
Band boson_band(double c);

// Two fermions in levels 0..3 with orthogonal evolution at time alpha,
// alpha in [pi/3, pi]; split in [0,1] shares weight between w03 and w12;
// phases are the arguments of w01, w02, w03, w12 (the rest real).
CMat fermion_family_state(double alpha, double split, const std::array<double, 4>& phases);
std::optional<SpeedPoint> fermion_speed_point(const CMat& w);
std::vector<SpeedPoint> fermion_scan(long long samples, std::uint64_t seed);

// Fraction of Haar two-qubit pure states whose least-overlap time lies below
// the minimum curve at their concurrence.
SurveyEstimate fraction_below_min_curve(long long samples, std::uint64_t seed, int threads = 0,
                                        double alpha = 0.05);

}  // namespace qent

#endif  // QENT_SPEED_HPP_
