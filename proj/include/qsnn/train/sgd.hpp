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

#include <span>
#include <stdexcept>

namespace qsnn::train {

/// One SGD update with classical momentum:
///   v <- momentum * v + g;  p <- p - lr * v.
inline void sgd_step(std::span<double> params, std::span<const double> grads,
                     double lr, double momentum, std::span<double> velocity) {
    if (params.size() != grads.size() || params.size() != velocity.size()) {
        throw std::invalid_argument("sgd_step: size mismatch");
    }
    for (std::size_t i = 0; i < params.size(); ++i) {
        velocity[i] = momentum * velocity[i] + grads[i];
        params[i] -= lr * velocity[i];
    }
}

}  // namespace qsnn::train
