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
 * @file transforms.hpp
 * Per-sample data transforms: dimensionality reduction to circuit angles,
 * noise injection, and deterministic subsetting.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/data/mnist.hpp"
#include "qsnn/util/rng.hpp"

namespace qsnn::data {

/**
 * @brief Reduces a pixel vector to n angles in [0, pi/2].
 *
 * The vector is split into n contiguous chunks whose sizes differ by at most
 * one; each angle is the chunk mean scaled by pi/2. Deterministic and
 * parameter-free, so the quantum head's input needs no training.
 */
inline std::vector<double> reduce_to_angles(std::span<const double> pixels,
                                            int n) {
    const int len = static_cast<int>(pixels.size());
    if (n < 1 || n > len) {
        throw std::invalid_argument("reduce_to_angles: n must be in [1, " +
                                    std::to_string(len) + "], got " +
                                    std::to_string(n));
    }
    std::vector<double> angles(n);
    for (int k = 0; k < n; ++k) {
        const int lo = static_cast<int>(static_cast<std::int64_t>(k) * len / n);
        const int hi =
            static_cast<int>(static_cast<std::int64_t>(k + 1) * len / n);
        double mean = 0.0;
        for (int i = lo; i < hi; ++i) mean += pixels[i];
        mean /= (hi - lo);
        angles[k] = mean * std::numbers::pi / 2.0;
    }
    return angles;
}

struct NoiseSpec {
    enum class Kind { uniform, gaussian };
    Kind kind = Kind::uniform;
    double level = 0.0;      // uniform: half-range of U(-NL, +NL); gaussian: std dev
    std::uint64_t seed = 0;

    void validate() const {
        if (!(level >= 0.0)) {
            throw std::invalid_argument("NoiseSpec: level must be >= 0");
        }
    }
};

inline const char* noise_kind_name(NoiseSpec::Kind k) {
    return k == NoiseSpec::Kind::uniform ? "uniform" : "gaussian";
}

/// Adds i.i.d. noise to every pixel and clips the result back to [0, 1].
/// Uniform noise is U(-level, +level); Gaussian noise is N(0, level^2).
/// One draw is consumed per pixel in order, so the output is determined by
/// the generator state even at level 0.
inline std::vector<double> add_noise(std::span<const double> pixels,
                                     const NoiseSpec& spec, util::Rng& rng) {
    spec.validate();
    std::vector<double> out(pixels.size());
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        double noise;
        if (spec.kind == NoiseSpec::Kind::uniform) {
            noise = rng.uniform(-spec.level, spec.level);
        } else {
            noise = spec.level * rng.gaussian();
        }
        out[i] = std::clamp(pixels[i] + noise, 0.0, 1.0);
    }
    return out;
}

/// Noisy copy of a whole dataset. Each sample uses its own derived stream,
/// so the result is independent of iteration order.
inline Dataset add_noise(const Dataset& ds, const NoiseSpec& spec) {
    spec.validate();
    Dataset out;
    out.rows = ds.rows;
    out.cols = ds.cols;
    out.samples.resize(ds.samples.size());
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        util::Rng rng(util::derive_seed(spec.seed, util::kStreamNoise, i));
        out.samples[i].pixels = add_noise(ds.samples[i].pixels, spec, rng);
        out.samples[i].label = ds.samples[i].label;
    }
    return out;
}

/// Seeded Fisher-Yates shuffle, then the first k samples.
inline Dataset subset(const Dataset& ds, std::size_t k, std::uint64_t seed) {
    if (k < 1 || k > ds.samples.size()) {
        throw std::invalid_argument("subset: k must be in [1, " +
                                    std::to_string(ds.samples.size()) +
                                    "], got " + std::to_string(k));
    }
    std::vector<std::size_t> order(ds.samples.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    util::Rng rng(util::derive_seed(seed, util::kStreamSubset));
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        const std::size_t j = rng.uniform_index(i + 1);
        std::swap(order[i], order[j]);
    }
    Dataset out;
    out.rows = ds.rows;
    out.cols = ds.cols;
    out.samples.reserve(k);
    for (std::size_t i = 0; i < k; ++i) {
        out.samples.push_back(ds.samples[order[i]]);
    }
    return out;
}

}  // namespace qsnn::data
