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
 * @file param_shift.hpp
 * Exact circuit-parameter gradients via the +-pi/2 parameter-shift rule.
 */
#pragma once

#include <algorithm>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/qsim/circuit.hpp"

namespace qsnn::qsim {

/**
 * @brief Gradient of sum_k upstream[k] * <Z_k> with respect to each circuit
 * parameter.
 *
 * Exact for Pauli-rotation generators: d<Z>/dtheta =
 * (<Z>(theta + pi/2) - <Z>(theta - pi/2)) / 2. A parameter feeding several
 * rotation slots (shared_theta layouts) accumulates one shift term per slot,
 * which realizes the product rule exactly.
 */
inline std::vector<double> param_shift_grad(int n_qubits,
                                            std::span<const CompiledGate> gates,
                                            int n_params,
                                            std::span<const double> upstream) {
    if (static_cast<int>(upstream.size()) != n_qubits) {
        throw std::invalid_argument(
            "param_shift_grad: upstream length " +
            std::to_string(upstream.size()) + " != n_qubits " +
            std::to_string(n_qubits));
    }
    std::vector<double> grad(n_params, 0.0);
    const bool all_zero = std::all_of(upstream.begin(), upstream.end(),
                                      [](double u) { return u == 0.0; });
    if (all_zero) return grad;

    std::vector<CompiledGate> shifted(gates.begin(), gates.end());
    constexpr double kShift = std::numbers::pi / 2.0;
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        const int p = shifted[i].param_index;
        if (p < 0) continue;
        const double original = shifted[i].angle;

        shifted[i].angle = original + kShift;
        const std::vector<double> z_plus =
            measure_all_z(run_compiled(n_qubits, shifted));
        shifted[i].angle = original - kShift;
        const std::vector<double> z_minus =
            measure_all_z(run_compiled(n_qubits, shifted));
        shifted[i].angle = original;

        double contribution = 0.0;
        for (int k = 0; k < n_qubits; ++k) {
            contribution += upstream[k] * (z_plus[k] - z_minus[k]) / 2.0;
        }
        grad[p] += contribution;
    }
    return grad;
}

/// Layout-level convenience wrapper: compiles and differentiates.
inline std::vector<double> param_shift_grad(const CircuitSpec& spec,
                                            std::span<const double> data_angles,
                                            std::span<const double> params,
                                            std::span<const double> upstream) {
    const std::vector<CompiledGate> gates = compile(spec, data_angles, params);
    return param_shift_grad(spec.n_qubits, gates, spec.n_params, upstream);
}

}  // namespace qsnn::qsim
