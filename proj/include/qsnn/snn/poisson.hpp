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
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "qsnn/snn/spike_train.hpp"
#include "qsnn/util/rng.hpp"

namespace qsnn::snn {

struct EncoderConfig {
    int steps = 20;
    double r_max = 1.0;     // per-step firing probability at intensity 1.0
    std::uint64_t seed = 0; // base seed; pipelines derive per-sample streams

    void validate() const {
        if (steps < 1 || steps > 10000) {
            throw std::invalid_argument("EncoderConfig: steps must be in [1, 10000]");
        }
        if (!(r_max > 0.0 && r_max <= 1.0)) {
            throw std::invalid_argument("EncoderConfig: r_max must be in (0, 1]");
        }
    }
};

/// Rate-codes intensities into independent Bernoulli spike trains: neuron i
/// fires at step t with probability pixels[i] * r_max. Draws are consumed in
/// (step, neuron) order, so the output is fully determined by the generator
/// state.
inline SpikeTrain poisson_encode(std::span<const double> pixels,
                                 const EncoderConfig& cfg, util::Rng& rng) {
    cfg.validate();
    for (std::size_t i = 0; i < pixels.size(); ++i) {
        if (!(pixels[i] >= 0.0 && pixels[i] <= 1.0)) {
            throw std::invalid_argument("poisson_encode: pixel " +
                                        std::to_string(i) + " outside [0, 1]");
        }
    }
    SpikeTrain train(cfg.steps, static_cast<int>(pixels.size()));
    for (int t = 0; t < cfg.steps; ++t) {
        for (std::size_t i = 0; i < pixels.size(); ++i) {
            train.set(t, static_cast<int>(i),
                      rng.bernoulli(pixels[i] * cfg.r_max));
        }
    }
    return train;
}

}  // namespace qsnn::snn
