// Copyright 2026 The qsnn Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file rng.hpp
 * Deterministic random number generation and seed derivation for
 * reproducible experiments.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace qsnn::util {

/// splitmix64 finalizer. Bijective 64-bit mix with good avalanche.
inline constexpr std::uint64_t hash_mix(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Derives the seed of the sub-stream identified by (a, b, c) from a base
/// seed. The result depends only on the inputs, never on thread schedule or
/// call order, so per-sample streams stay reproducible under any execution
/// plan.
inline constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                           std::uint64_t b = 0,
                                           std::uint64_t c = 0) noexcept {
    return hash_mix(hash_mix(hash_mix(hash_mix(base) ^ a) ^ b) ^ c);
}

// Stream tags used throughout the training pipeline.
inline constexpr std::uint64_t kStreamInit = 0x01;
inline constexpr std::uint64_t kStreamShuffle = 0x02;
inline constexpr std::uint64_t kStreamSpikes = 0x03;
inline constexpr std::uint64_t kStreamEval = 0x04;
inline constexpr std::uint64_t kStreamNoise = 0x05;
inline constexpr std::uint64_t kStreamSubset = 0x06;

/**
 * @brief Seeded generator with hand-rolled distributions.
 *
 * Only the raw mt19937_64 stream is consumed; the uniform/normal mappings
 * are implemented here rather than with std:: distributions, whose output
 * is implementation-defined and would break bit-reproducibility across
 * standard libraries.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n); n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) { return next_u64() % n; }

    bool bernoulli(double p) { return uniform01() < p; }

    /// Standard normal deviate via the Box-Muller transform. Consumes two
    /// raw draws per value.
    double gaussian() {
        const double u1 = 1.0 - uniform01();  // (0, 1], keeps the log finite
        const double u2 = uniform01();
        return std::sqrt(-2.0 * std::log(u1)) *
               std::cos(2.0 * std::numbers::pi * u2);
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qsnn::util
