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

// Seeded random streams. Substream i of master seed S is a pure function of
// (S, i), so surveys split into fixed chunks reproduce bit-for-bit regardless
// of how many worker threads consume them.

#ifndef QENT_RNG_HPP_
#define QENT_RNG_HPP_

#include <cstdint>
#include <random>

namespace qent {

class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream = 0);

  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  double gamma(double shape);
  std::uint64_t bits() { return engine_(); }

  // Independent child stream, derived from this stream's seed pair.
  Rng substream(std::uint64_t index) const;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream() const { return stream_; }

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

}  // namespace qent

#endif  // QENT_RNG_HPP_
