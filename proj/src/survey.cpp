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

#include "qent/survey.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include <boost/math/distributions/students_t.hpp>

#include "qent/error.hpp"

namespace qent {

void MeanAccumulator::add(double x) {
  ++n_;
  const double d = x - mean_;
  mean_ += d / static_cast<double>(n_);
  m2_ += d * (x - mean_);
}

void MeanAccumulator::merge(const MeanAccumulator& o) {
  if (o.n_ == 0) return;
  if (n_ == 0) {
    *this = o;
    return;
  }
  const double na = static_cast<double>(n_), nb = static_cast<double>(o.n_);
  const double d = o.mean_ - mean_;
  const double n = na + nb;
  mean_ += d * nb / n;
  m2_ += o.m2_ + d * d * na * nb / n;
  n_ += o.n_;
}

double student_t_critical(long long dof, double alpha) {
  require(dof >= 1, "Student-t needs at least one degree of freedom");
  require(alpha > 0.0 && alpha < 1.0, "confidence level alpha must lie in (0,1)");
  boost::math::students_t dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, alpha / 2.0));
}

SurveyEstimate make_estimate(const MeanAccumulator& acc, double alpha) {
  SurveyEstimate e;
  e.samples = acc.count();
  e.mean = acc.mean();
  if (acc.count() >= 2) {
    e.std_error = std::sqrt(acc.variance() / static_cast<double>(acc.count() - 1));
    e.half_width = student_t_critical(acc.count() - 1, alpha) * e.std_error;
  }
  return e;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("QENT_THREADS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace qent
