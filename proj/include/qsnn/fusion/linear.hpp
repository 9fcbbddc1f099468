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

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/util/matrix.hpp"
#include "qsnn/util/rng.hpp"

namespace qsnn::fusion {

struct LinearLayer {
    util::Matrix w;         // d_out x d_in
    std::vector<double> b;  // d_out

    int in_dim() const { return w.cols; }
    int out_dim() const { return w.rows; }
};

/// w * x + b.
inline std::vector<double> linear_forward(const LinearLayer& layer,
                                          std::span<const double> x) {
    if (static_cast<int>(x.size()) != layer.in_dim()) {
        throw std::invalid_argument("linear_forward: input length " +
                                    std::to_string(x.size()) +
                                    " != layer in_dim " +
                                    std::to_string(layer.in_dim()));
    }
    std::vector<double> y(layer.b);
    for (int r = 0; r < layer.w.rows; ++r) {
        const double* row = layer.w.data.data() +
                            static_cast<std::size_t>(r) * layer.w.cols;
        double acc = 0.0;
        for (int c = 0; c < layer.w.cols; ++c) acc += row[c] * x[c];
        y[r] += acc;
    }
    return y;
}

inline std::vector<double> relu(std::span<const double> x) {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) y[i] = std::max(0.0, x[i]);
    return y;
}

/// Uniform init in +-sqrt(6 / (d_in + d_out)), zero biases.
inline LinearLayer glorot_init(int d_out, int d_in, util::Rng& rng) {
    LinearLayer layer;
    layer.w = util::Matrix(d_out, d_in);
    layer.b.assign(d_out, 0.0);
    const double limit = std::sqrt(6.0 / (d_in + d_out));
    for (double& v : layer.w.data) v = rng.uniform(-limit, limit);
    return layer;
}

}  // namespace qsnn::fusion
