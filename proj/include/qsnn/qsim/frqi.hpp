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
 * @file frqi.hpp
 * Flexible-representation quantum image encoding: pixel intensities become
 * rotation angles on a colour qubit entangled with a position register.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/qsim/statevector.hpp"

namespace qsnn::qsim {

/**
 * @brief Amplitude-encodes an image of 4^n pixels into a (2n+1)-qubit state.
 *
 * Pixel values in [0, 1] map to angles theta_i = pixel_i * pi/2. The colour
 * qubit is the most-significant one: the amplitude at index c * 4^n + i is
 * cos(theta_i) / 2^n for c = 0 and sin(theta_i) / 2^n for c = 1, where i is
 * the pixel position. The result has unit norm for any valid input.
 */
inline StateVector frqi_encode(std::span<const double> pixels) {
    const std::size_t len = pixels.size();
    // length must be 4^n: a power of two with an even exponent
    int exponent = 0;
    while ((std::size_t{1} << exponent) < len) ++exponent;
    if (len == 0 || (std::size_t{1} << exponent) != len || exponent % 2 != 0) {
        throw std::invalid_argument(
            "frqi_encode: pixel count must be a power of 4, got " +
            std::to_string(len));
    }
    for (std::size_t i = 0; i < len; ++i) {
        if (!(pixels[i] >= 0.0 && pixels[i] <= 1.0)) {
            throw std::invalid_argument("frqi_encode: pixel " +
                                        std::to_string(i) +
                                        " outside [0, 1]");
        }
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(len));
    std::vector<Complex> amps(2 * len);
    for (std::size_t i = 0; i < len; ++i) {
        const double theta = pixels[i] * std::numbers::pi / 2.0;
        amps[i] = Complex{scale * std::cos(theta), 0.0};
        amps[len + i] = Complex{scale * std::sin(theta), 0.0};
    }
    return StateVector::from_amps(std::move(amps));
}

}  // namespace qsnn::qsim
