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
#include <stdexcept>
#include <vector>

namespace qsnn::snn {

/// Binary spike raster over discrete time: entry (t, i) is 1 when neuron i
/// fired at step t. Stored row-major by step.
struct SpikeTrain {
    int steps = 0;
    int neurons = 0;
    std::vector<std::uint8_t> bits;

    SpikeTrain() = default;
    SpikeTrain(int t, int d)
        : steps(t), neurons(d),
          bits(static_cast<std::size_t>(t) * static_cast<std::size_t>(d), 0) {}

    std::uint8_t at(int t, int i) const {
        return bits[static_cast<std::size_t>(t) * neurons + i];
    }
    void set(int t, int i, bool fired) {
        bits[static_cast<std::size_t>(t) * neurons + i] = fired ? 1 : 0;
    }
};

/// Mean firing rate per neuron over the whole window; each entry in [0, 1].
inline std::vector<double> temporal_avg_pool(const SpikeTrain& spikes) {
    if (spikes.steps < 1) {
        throw std::invalid_argument("temporal_avg_pool: empty spike train");
    }
    std::vector<double> rates(spikes.neurons, 0.0);
    for (int t = 0; t < spikes.steps; ++t) {
        for (int i = 0; i < spikes.neurons; ++i) {
            rates[i] += spikes.at(t, i);
        }
    }
    for (double& r : rates) r /= spikes.steps;
    return rates;
}

}  // namespace qsnn::snn
