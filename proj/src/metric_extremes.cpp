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

#include "qent/metric_extremes.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qent/error.hpp"
#include "qent/families.hpp"
#include "qent/rng.hpp"
#include "qent/sepcrit.hpp"

namespace qent {

namespace {

const Dims kTwoQubits{2, 2};

bool is_entangled(const CMat& rho) { return !ppt(rho, kTwoQubits).pass; }

double distance_from_spectrum(const RVec& lam, Metric m) {
  if (m == Metric::kHilbertSchmidt) return std::sqrt(std::max(0.0, lam.squaredNorm() - 0.25));
  double roots = 0.0;
  for (Eigen::Index i = 0; i < lam.size(); ++i) roots += std::sqrt(std::max(0.0, lam[i]));
  return std::sqrt(std::max(0.0, 2.0 - roots));
}

RVec jitter_simplex(const RVec& lam, double scale, Rng& rng) {
  RVec out = lam;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] = std::max(0.0, out[i] + scale * rng.normal());
  const double s = out.sum();
  if (s <= 0.0) return lam;
  return out / s;
}

// exp(-i s H) with H drawn from the Gaussian unitary ensemble.
CMat small_rotation(int n, double scale, Rng& rng) {
  CMat h(n, n);
  for (int i = 0; i < n; ++i) {
    h(i, i) = rng.normal();
    for (int j = i + 1; j < n; ++j) {
      h(i, j) = cplx(rng.normal(), rng.normal()) / std::sqrt(2.0);
      h(j, i) = std::conj(h(i, j));
    }
  }
  return expm_hermitian(scale * h);
}

CVec jitter_unit(const CVec& v, double scale, Rng& rng) {
  CVec out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] += scale * cplx(rng.normal(), rng.normal());
  return out / out.norm();
}

struct WalkResult {
  double best = 0.0;
  CMat state;
  long long accepted = 0;
  long long violations = 0;
};

// Runs walks in parallel on substreams (seed, w) and merges in walk order.
template <class WalkFn>
ExtremeSearch run_walks(const AnnealOptions& opts, std::uint64_t seed, bool maximize, WalkFn walk) {
  require(opts.steps >= 1, "annealing needs at least one step");
  require(opts.walks >= 1, "annealing needs at least one walk");
  require(opts.t0 > 0.0 && opts.step0 > 0.0 && opts.cooling > 0.0 && opts.cooling < 1.0, "invalid annealing schedule");
  std::vector<WalkResult> results(static_cast<std::size_t>(opts.walks));
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int w = next.fetch_add(1);
      if (w >= opts.walks) return;
      try {
        Rng rng(seed, static_cast<std::uint64_t>(w));
        results[w] = walk(rng);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(opts.walks);
      }
    }
  };
  const int t = std::max(1, std::min(resolve_threads(opts.threads), opts.walks));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  ExtremeSearch out;
  MeanAccumulator acc;
  std::vector<double> values;
  std::size_t best = 0;
  for (std::size_t w = 0; w < results.size(); ++w) {
    acc.add(results[w].best);
    values.push_back(results[w].best);
    out.accepted += results[w].accepted;
    out.constraint_violations += results[w].violations;
    const bool better = maximize ? results[w].best > results[best].best : results[w].best < results[best].best;
    if (better) best = w;
  }
  out.best = results[best].best;
  out.state = results[best].state;
  out.walks = make_estimate(acc);
  if (values.size() >= 2) {
    std::sort(values.begin(), values.end());
    const double gap = maximize ? values[values.size() - 1] - values[values.size() - 2] : values[1] - values[0];
    out.converged = gap <= 1e-4;
  }
  return out;
}

bool metropolis_accept(double delta, double temperature, Rng& rng) {
  if (delta <= 0.0) return true;
  return rng.uniform() < std::exp(-delta / temperature);
}

}  // namespace

Metric parse_metric(const std::string& text) {
  if (text == "bures") return Metric::kBures;
  if (text == "hs" || text == "hilbert-schmidt") return Metric::kHilbertSchmidt;
  throw DomainError("unknown metric '" + text + "'");
}

std::string metric_name(Metric m) { return m == Metric::kBures ? "bures" : "hs"; }

double distance_to_mixed(const CMat& rho, Metric m) {
  require(rho.rows() == 4 && rho.cols() == 4, "distance to I/4 needs a two-qubit state");
  return distance_from_spectrum(eigvalsh(rho), m);
}

CMat min_witness_state() { return bell_diagonal({0.5, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0}); }

CMat max_witness_state() {
  CMat rho = CMat::Zero(4, 4);
  rho(0, 0) = 1.0;
  return rho;
}

ExtremeSearch min_distance_to_mm(Metric m, std::uint64_t seed, const AnnealOptions& opts) {
  return run_walks(opts, seed, false, [&](Rng& rng) {
    // Start inside the entangled region: a Bell state with weight 0.9, in a
    // slightly rotated frame.
    RVec lam(4);
    lam << 0.9, 0.1 / 3.0, 0.1 / 3.0, 0.1 / 3.0;
    CMat frame = small_rotation(4, 0.05, rng) * bell_basis();
    CMat rho = frame * lam.cast<cplx>().asDiagonal() * frame.adjoint();
    while (!is_entangled(rho)) {
      frame = small_rotation(4, 0.05, rng) * bell_basis();
      rho = frame * lam.cast<cplx>().asDiagonal() * frame.adjoint();
    }
    double energy = distance_from_spectrum(lam, m);
    WalkResult res{energy, rho, 0, 0};
    double temp = opts.t0;
    for (int s = 0; s < opts.steps; ++s, temp *= opts.cooling) {
      const double scale = opts.step0 * temp / opts.t0;
      const RVec lam_new = jitter_simplex(lam, scale, rng);
      const CMat frame_new = small_rotation(4, scale, rng) * frame;
      CMat cand = frame_new * lam_new.cast<cplx>().asDiagonal() * frame_new.adjoint();
      cand = 0.5 * (cand + cand.adjoint());
      if (!is_entangled(cand)) continue;
      const double e = distance_from_spectrum(lam_new, m);
      if (!metropolis_accept(e - energy, temp, rng)) continue;
      lam = lam_new;
      frame = frame_new;
      energy = e;
      ++res.accepted;
      if (e < res.best) {
        res.best = e;
        res.state = cand;
      }
    }
    if (!is_entangled(res.state)) ++res.violations;
    return res;
  });
}

ExtremeSearch max_distance_in_sep(Metric m, std::uint64_t seed, const AnnealOptions& opts) {
  constexpr int kTerms = 4;
  return run_walks(opts, seed, true, [&](Rng& rng) {
    std::array<CVec, kTerms> left, right;
    RVec weights = RVec::Constant(kTerms, 1.0 / kTerms);
    for (int i = 0; i < kTerms; ++i) {
      left[i] = jitter_unit(CVec::Zero(2), 1.0, rng);
      right[i] = jitter_unit(CVec::Zero(2), 1.0, rng);
    }
    auto build = [&](const std::array<CVec, kTerms>& l, const std::array<CVec, kTerms>& r, const RVec& p) {
      CMat rho = CMat::Zero(4, 4);
      for (int i = 0; i < kTerms; ++i) {
        const CVec v = kron(l[i], r[i]);
        rho += p[i] * v * v.adjoint();
      }
      return CMat(0.5 * (rho + rho.adjoint()));
    };
    CMat rho = build(left, right, weights);
    double energy = -distance_to_mixed(rho, m);
    WalkResult res{-energy, rho, 0, 0};
    double temp = opts.t0;
    for (int s = 0; s < opts.steps; ++s, temp *= opts.cooling) {
      const double scale = opts.step0 * temp / opts.t0;
      auto l2 = left;
      auto r2 = right;
      for (int i = 0; i < kTerms; ++i) {
        l2[i] = jitter_unit(left[i], scale, rng);
        r2[i] = jitter_unit(right[i], scale, rng);
      }
      const RVec w2 = jitter_simplex(weights, scale, rng);
      const CMat cand = build(l2, r2, w2);
      const double e = -distance_to_mixed(cand, m);
      if (!metropolis_accept(e - energy, temp, rng)) continue;
      if (!ppt(cand, kTwoQubits).pass) ++res.violations;
      left = l2;
      right = r2;
      weights = w2;
      energy = e;
      ++res.accepted;
      if (-e > res.best) {
        res.best = -e;
        res.state = cand;
      }
    }
    return res;
  });
}

}  // namespace qent
