// Copyright 2026 Stopline Toolkit Contributors
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

#ifndef STOPLINE_RNG_HPP
#define STOPLINE_RNG_HPP

#include <cmath>
#include <cstdint>

namespace stopline {

/// Counter-free splitmix64 generator.
///
/// All randomized fixtures in the toolkit use this generator so that a
/// (seed, stream) pair reproduces the same byte stream on every platform;
/// std::random distributions are implementation-defined and are avoided.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * next_double(); }

  /// Uniform integer in [lo, hi] (inclusive).
  int next_int(int lo, int hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
  }

  bool next_bool(double p_true) { return next_double() < p_true; }

  /// Standard normal via Box-Muller (deterministic, no cached spare).
  double next_normal(double mean = 0.0, double sigma = 1.0) {
    double u1 = next_double();
    double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double two_pi = 6.283185307179586476925286766559;
    return mean + sigma * r * std::cos(two_pi * u2);
  }

 private:
  std::uint64_t state_;
};

/// Derives an independent seed for a named sub-stream of a scene seed, so
/// e.g. marking erasure and occlusion placement do not share a sequence.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream_tag) {
  SplitMix64 mixer(seed ^ (0xA0761D6478BD642FULL * (stream_tag + 1)));
  return mixer.next_u64();
}

}  // namespace stopline

#endif  // STOPLINE_RNG_HPP
