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
 * @file circuit.hpp
 * Declarative circuit layouts, their compilation to concrete gate lists,
 * and execution with per-qubit Pauli-Z readout.
 */
#pragma once

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/qsim/gates.hpp"
#include "qsnn/qsim/statevector.hpp"

namespace qsnn::qsim {

enum class LayerKind { HadamardAll, DataRY, ROmegaAll, CnotChain };

/// One layer of the layout. DataRY uses `slots` (the data-angle index fed to
/// each qubit); ROmegaAll uses `param_offset` (index of the first trainable
/// angle it consumes).
struct Layer {
    LayerKind kind = LayerKind::HadamardAll;
    std::vector<int> slots;
    int param_offset = 0;
};

/**
 * @brief Declarative gate layout of the variational circuit.
 *
 * The standard layout is: Hadamard on every qubit, one data-encoding RY per
 * qubit, one trainable Rz-Rx-Rz block per qubit, then a CNOT chain
 * entangling neighbours. Three independent angles per block by default;
 * `shared_theta` collapses each block to a single shared angle.
 */
struct CircuitSpec {
    int n_qubits = 5;
    std::vector<Layer> layers;
    int n_data_slots = 5;
    int n_params = 15;
    bool shared_theta = false;
    bool ring_entangler = false;  // adds the closing CNOT (n-1 -> 0)

    int params_per_block() const { return shared_theta ? 1 : 3; }

    static CircuitSpec standard(int n_qubits, bool shared_theta = false,
                                bool ring_entangler = false) {
        CircuitSpec spec;
        spec.n_qubits = n_qubits;
        spec.n_data_slots = n_qubits;
        spec.shared_theta = shared_theta;
        spec.ring_entangler = ring_entangler;
        spec.n_params = spec.params_per_block() * n_qubits;
        std::vector<int> identity_slots(n_qubits);
        for (int q = 0; q < n_qubits; ++q) identity_slots[q] = q;
        spec.layers = {{LayerKind::HadamardAll, {}, 0},
                       {LayerKind::DataRY, identity_slots, 0},
                       {LayerKind::ROmegaAll, {}, 0},
                       {LayerKind::CnotChain, {}, 0}};
        return spec;
    }

    void validate() const {
        if (n_qubits < 1 || n_qubits > StateVector::kMaxQubits) {
            throw std::invalid_argument("CircuitSpec: n_qubits out of range");
        }
        for (const Layer& layer : layers) {
            switch (layer.kind) {
                case LayerKind::DataRY:
                    if (static_cast<int>(layer.slots.size()) != n_qubits) {
                        throw std::invalid_argument(
                            "CircuitSpec: DataRY layer needs one slot per qubit");
                    }
                    for (int s : layer.slots) {
                        if (s < 0 || s >= n_data_slots) {
                            throw std::invalid_argument(
                                "CircuitSpec: data slot index out of range");
                        }
                    }
                    break;
                case LayerKind::ROmegaAll: {
                    const int last =
                        layer.param_offset + params_per_block() * n_qubits;
                    if (layer.param_offset < 0 || last > n_params) {
                        throw std::invalid_argument(
                            "CircuitSpec: parameter index out of range");
                    }
                    break;
                }
                case LayerKind::HadamardAll:
                case LayerKind::CnotChain:
                    break;
            }
        }
    }
};

/**
 * @brief One concrete gate after layout compilation.
 *
 * `param_index >= 0` marks a trainable rotation angle slot; the stored angle
 * already includes the parameter value, and gradient routines shift it in
 * place.
 */
struct CompiledGate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;
    double angle = 0.0;
    int param_index = -1;
};

/// Resolves a layout against concrete data angles and parameter values.
inline std::vector<CompiledGate> compile(const CircuitSpec& spec,
                                         std::span<const double> data_angles,
                                         std::span<const double> params) {
    spec.validate();
    if (static_cast<int>(data_angles.size()) != spec.n_data_slots) {
        throw std::invalid_argument(
            "compile: expected " + std::to_string(spec.n_data_slots) +
            " data angles, got " + std::to_string(data_angles.size()));
    }
    if (static_cast<int>(params.size()) != spec.n_params) {
        throw std::invalid_argument(
            "compile: expected " + std::to_string(spec.n_params) +
            " parameters, got " + std::to_string(params.size()));
    }

    std::vector<CompiledGate> gates;
    for (const Layer& layer : spec.layers) {
        switch (layer.kind) {
            case LayerKind::HadamardAll:
                for (int q = 0; q < spec.n_qubits; ++q) {
                    gates.push_back({GateKind::H, q, -1, 0.0, -1});
                }
                break;
            case LayerKind::DataRY:
                for (int q = 0; q < spec.n_qubits; ++q) {
                    gates.push_back(
                        {GateKind::RY, q, -1, data_angles[layer.slots[q]], -1});
                }
                break;
            case LayerKind::ROmegaAll:
                for (int q = 0; q < spec.n_qubits; ++q) {
                    const int p0 =
                        layer.param_offset + spec.params_per_block() * q;
                    if (spec.shared_theta) {
                        const double t = params[p0];
                        gates.push_back({GateKind::RZ, q, -1, t, p0});
                        gates.push_back({GateKind::RX, q, -1, t, p0});
                        gates.push_back({GateKind::RZ, q, -1, t, p0});
                    } else {
                        gates.push_back({GateKind::RZ, q, -1, params[p0], p0});
                        gates.push_back(
                            {GateKind::RX, q, -1, params[p0 + 1], p0 + 1});
                        gates.push_back(
                            {GateKind::RZ, q, -1, params[p0 + 2], p0 + 2});
                    }
                }
                break;
            case LayerKind::CnotChain:
                for (int q = 0; q + 1 < spec.n_qubits; ++q) {
                    gates.push_back({GateKind::CNOT, q + 1, q, 0.0, -1});
                }
                if (spec.ring_entangler && spec.n_qubits > 1) {
                    gates.push_back(
                        {GateKind::CNOT, 0, spec.n_qubits - 1, 0.0, -1});
                }
                break;
        }
    }
    return gates;
}

/// Runs a compiled gate list on |0...0>.
inline StateVector run_compiled(int n_qubits,
                                std::span<const CompiledGate> gates) {
    StateVector sv(n_qubits);
    for (const CompiledGate& g : gates) {
        switch (g.kind) {
            case GateKind::H:
                sv.apply_1q(g.target, hadamard());
                break;
            case GateKind::RX:
                sv.apply_1q(g.target, rx(g.angle));
                break;
            case GateKind::RY:
                sv.apply_1q(g.target, ry(g.angle));
                break;
            case GateKind::RZ:
                sv.apply_1q(g.target, rz(g.angle));
                break;
            case GateKind::CNOT:
                sv.apply_cnot(g.control, g.target);
                break;
            case GateKind::ROmega:
                sv.apply_1q(g.target,
                            romega_matrix(g.angle, g.angle, g.angle));
                break;
        }
    }
    return sv;
}

inline std::vector<double> measure_all_z(const StateVector& sv) {
    std::vector<double> z(sv.n_qubits());
    for (int q = 0; q < sv.n_qubits(); ++q) z[q] = sv.expval_z(q);
    return z;
}

/// Prepares |0...0>, applies the layout, and returns <Z> for every qubit.
inline std::vector<double> run_circuit(const CircuitSpec& spec,
                                       std::span<const double> data_angles,
                                       std::span<const double> params) {
    return measure_all_z(
        run_compiled(spec.n_qubits, compile(spec, data_angles, params)));
}

}  // namespace qsnn::qsim
