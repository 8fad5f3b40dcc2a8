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

// Monte Carlo survey harness: fixed-size chunks, each on its own seeded
// substream, merged in chunk order. The result depends on (seed, samples)
// only, never on the worker count.

#ifndef QENT_SURVEY_HPP_
#define QENT_SURVEY_HPP_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "qent/rng.hpp"

namespace qent {

struct SurveyEstimate {
  double mean = 0.0;
  double std_error = 0.0;   // sigma_x / sqrt(M - 1), sigma_x the population deviation
  double half_width = 0.0;  // t_{M-1, alpha/2} * std_error
  long long samples = 0;
};

// Streaming mean and variance (Welford), mergeable (Chan et al.).
class MeanAccumulator {
 public:
  void add(double x);
  void merge(const MeanAccumulator& other);
  long long count() const { return n_; }
  double mean() const { return mean_; }
  // Population variance sum (x - mean)^2 / M.
  double variance() const { return n_ > 0 ? m2_ / static_cast<double>(n_) : 0.0; }

 private:
  long long n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

SurveyEstimate make_estimate(const MeanAccumulator& acc, double alpha = 0.05);
// Student-t critical value t_{dof, alpha/2}.
double student_t_critical(long long dof, double alpha);

// Worker count: requested if positive, else QENT_THREADS, else hardware threads.
int resolve_threads(int requested);

inline constexpr long long kChunkSize = 4096;

// Calls chunk_fn(rng, first_index, count) for every chunk of the sample range
// and merges the returned accumulators in chunk order. Acc needs merge().
template <class Acc, class ChunkFn>
Acc run_chunked(long long samples, std::uint64_t seed, int threads, ChunkFn chunk_fn) {
  const long long n_chunks = (samples + kChunkSize - 1) / kChunkSize;
  std::vector<Acc> parts(static_cast<std::size_t>(n_chunks));
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const long long c = next.fetch_add(1);
      if (c >= n_chunks) return;
      try {
        Rng rng(seed, static_cast<std::uint64_t>(c));
        const long long first = c * kChunkSize;
        parts[static_cast<std::size_t>(c)] = chunk_fn(rng, first, std::min(kChunkSize, samples - first));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(n_chunks);
      }
    }
  };
  const int t = std::max(1, std::min<int>(resolve_threads(threads), static_cast<int>(std::max<long long>(1, n_chunks))));
  if (t == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);
  Acc total{};
  for (const Acc& p : parts) total.merge(p);
  return total;
}

// Convenience form: one scalar per sample, sample_fn(rng) -> double.
template <class SampleFn>
MeanAccumulator survey_mean(long long samples, std::uint64_t seed, int threads, SampleFn sample_fn) {
  return run_chunked<MeanAccumulator>(samples, seed, threads, [&](Rng& rng, long long, long long count) {
    MeanAccumulator acc;
    for (long long i = 0; i < count; ++i) acc.add(sample_fn(rng));
    return acc;
  });
}

}  // namespace qent

#endif  // QENT_SURVEY_HPP_
