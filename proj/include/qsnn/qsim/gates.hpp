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
 * @file gates.hpp
 * Gate set of the simulator: Hadamard, Pauli rotations, CNOT and the
 * composite Rz-Rx-Rz phase-encoding rotation.
 */
#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace qsnn::qsim {

using Complex = std::complex<double>;

/// 2x2 complex matrix, row-major: {m00, m01, m10, m11}.
using Mat2 = std::array<Complex, 4>;

enum class GateKind { H, RX, RY, RZ, CNOT, ROmega };

/**
 * @brief One gate instance in a circuit.
 *
 * Rotation kinds read params[0]; ROmega reads three angles (z1, x, z2) in
 * application order; CNOT uses control/target and no angles.
 */
struct Gate {
    GateKind kind = GateKind::H;
    int target = 0;
    int control = -1;  // CNOT only
    std::array<double, 3> params{};
};

inline Mat2 matmul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    return {Complex{s, 0}, Complex{s, 0}, Complex{s, 0}, Complex{-s, 0}};
}

inline Mat2 rx(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return {Complex{c, 0}, Complex{0, -s}, Complex{0, -s}, Complex{c, 0}};
}

inline Mat2 ry(double theta) {
    const double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    return {Complex{c, 0}, Complex{-s, 0}, Complex{s, 0}, Complex{c, 0}};
}

inline Mat2 rz(double theta) {
    return {std::polar(1.0, -theta / 2.0), Complex{0, 0}, Complex{0, 0},
            std::polar(1.0, theta / 2.0)};
}

/// Composite rotation Rz(theta_z2) * Rx(theta_x) * Rz(theta_z1); the z1
/// factor acts on the state first.
inline Mat2 romega_matrix(double theta_z1, double theta_x, double theta_z2) {
    return matmul(rz(theta_z2), matmul(rx(theta_x), rz(theta_z1)));
}

/// Largest entry of |U^dagger U - I|; zero for an exact unitary.
inline double unitarity_defect(const Mat2& u) {
    // U^dagger U with U = [[a,b],[c,d]]
    const Complex a = u[0], b = u[1], c = u[2], d = u[3];
    const Complex g00 = std::conj(a) * a + std::conj(c) * c;
    const Complex g01 = std::conj(a) * b + std::conj(c) * d;
    const Complex g10 = std::conj(b) * a + std::conj(d) * c;
    const Complex g11 = std::conj(b) * b + std::conj(d) * d;
    double defect = std::abs(g00 - 1.0);
    defect = std::max(defect, std::abs(g01));
    defect = std::max(defect, std::abs(g10));
    defect = std::max(defect, std::abs(g11 - 1.0));
    return defect;
}

/// Matrix realization of a single-qubit gate. CNOT has no 2x2 form and is
/// rejected.
inline Mat2 gate_matrix(const Gate& g) {
    switch (g.kind) {
        case GateKind::H:
            return hadamard();
        case GateKind::RX:
            return rx(g.params[0]);
        case GateKind::RY:
            return ry(g.params[0]);
        case GateKind::RZ:
            return rz(g.params[0]);
        case GateKind::ROmega:
            return romega_matrix(g.params[0], g.params[1], g.params[2]);
        case GateKind::CNOT:
            break;
    }
    throw std::invalid_argument("gate_matrix: CNOT is not a single-qubit gate");
}

}  // namespace qsnn::qsim
