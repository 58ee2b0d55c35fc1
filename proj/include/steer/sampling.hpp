// Copyright 2026 The steerlab Authors
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

#pragma once

#include <cmath>
#include <cstdint>
#include <sstream>
#include <vector>

#include "steer/errors.hpp"
#include "steer/linalg.hpp"

namespace steer {

/// Counter-based generator: output k of stream (seed, stream) is
/// mix(key + k * gamma), so any draw can be reproduced without replaying
/// the sequence and distinct streams never share state.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632BE59BD9B4E019ULL))) {}

  std::uint64_t next() { return mix(key_ + (counter_++) * kGamma); }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z) {
    z += kGamma;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Uniformly distributed unit vector.
inline Vec3 uniform_unit_vector(CounterRng& rng) {
  const double z = 2.0 * rng.uniform() - 1.0;
  const double phi = 2.0 * kPi * rng.uniform();
  const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {r * std::cos(phi), r * std::sin(phi), z};
}

struct SampleBatch {
  std::vector<Vec3> points;
  std::uint64_t proposals = 0;

  double acceptance_rate() const {
    return proposals ? static_cast<double>(points.size()) / proposals : 0.0;
  }
};

/// One accepted draw by rejection against the uniform sphere measure;
/// `proposals` is incremented per candidate.
template <class Density>
Vec3 draw_by_rejection(Density& density, double bound, CounterRng& rng,
                       std::uint64_t& proposals) {
  for (;;) {
    const Vec3 n = uniform_unit_vector(rng);
    const double d = density(n);
    ++proposals;
    if (d > bound * (1.0 + 1e-12)) {
      std::ostringstream msg;
      msg << "density " << d << " exceeds rejection bound " << bound;
      throw BoundViolated(msg.str());
    }
    if (rng.uniform() * bound < d) return n;
  }
}

/// Draws `count` unit vectors with density (w.r.t. d^2n) proportional to
/// `density`. Throws BoundViolated if density(n) exceeds `bound`.
template <class Density>
SampleBatch sample_density(Density&& density, double bound, std::uint64_t seed,
                           std::size_t count, std::uint64_t stream = 0) {
  CounterRng rng(seed, stream);
  SampleBatch batch;
  batch.points.reserve(count);
  while (batch.points.size() < count) {
    batch.points.push_back(draw_by_rejection(density, bound, rng, batch.proposals));
  }
  return batch;
}

}  // namespace steer
