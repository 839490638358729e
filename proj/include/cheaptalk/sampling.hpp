// Copyright 2026 The cheaptalk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CHEAPTALK_SAMPLING_HPP
#define CHEAPTALK_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "cheaptalk/rational.hpp"

namespace cheaptalk {

// Deterministic sampler over the dyadic grid of resolution 2^-16. The
// modulo reduction is hand-rolled so the byte stream is identical across
// standard library implementations.
class DyadicSampler {
 public:
  explicit DyadicSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t m) { return engine_() % m; }

  // Uniform grid point in [-radius, radius].
  Rat offset(const Rat& radius) {
    const long long j =
        static_cast<long long>(below((1ull << 17) + 1)) - (1ll << 16);
    return radius * Rat(j) / Rat(1ll << 16);
  }

  Vec offset_vec(Eigen::Index n, const Rat& radius) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = offset(radius);
    return v;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cheaptalk

#endif  // CHEAPTALK_SAMPLING_HPP
