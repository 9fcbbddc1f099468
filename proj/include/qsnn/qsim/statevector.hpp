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
 * @file statevector.hpp
 * Dense statevector simulation of an n-qubit register.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qsnn/qsim/gates.hpp"

namespace qsnn::qsim {

/**
 * @brief Pure state of n qubits as 2^n complex amplitudes.
 *
 * Qubit 0 is the least-significant bit of the amplitude index
 * (little-endian). Freshly constructed states start in |0...0>.
 */
class StateVector {
  public:
    /// Memory guard: 2^24 amplitudes = 256 MiB of doubles.
    static constexpr int kMaxQubits = 24;

    explicit StateVector(int n_qubits) : n_(n_qubits) {
        if (n_qubits < 1 || n_qubits > kMaxQubits) {
            throw std::invalid_argument("n_qubits must be in [1, " +
                                        std::to_string(kMaxQubits) + "], got " +
                                        std::to_string(n_qubits));
        }
        amps_.assign(std::size_t{1} << n_qubits, Complex{0.0, 0.0});
        amps_[0] = Complex{1.0, 0.0};
    }

    /// Wraps an existing amplitude array (length must be 2^n, n in
    /// [1, kMaxQubits]). The amplitudes are taken as-is; no renormalization.
    static StateVector from_amps(std::vector<Complex> amps) {
        int n = 0;
        while ((std::size_t{1} << n) < amps.size() && n <= kMaxQubits) ++n;
        if (amps.empty() || (std::size_t{1} << n) != amps.size()) {
            throw std::invalid_argument(
                "from_amps: length must be a power of two >= 2");
        }
        StateVector sv(n);
        sv.amps_ = std::move(amps);
        return sv;
    }

    int n_qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<Complex>& amps() const { return amps_; }

    /// Applies a 2x2 unitary to the target qubit.
    void apply_1q(int target, const Mat2& u) {
        check_qubit(target);
        const std::size_t step = std::size_t{1} << target;
        for (std::size_t base = 0; base < amps_.size(); base += 2 * step) {
            for (std::size_t i = base; i < base + step; ++i) {
                const Complex a0 = amps_[i];
                const Complex a1 = amps_[i + step];
                amps_[i] = u[0] * a0 + u[1] * a1;
                amps_[i + step] = u[2] * a0 + u[3] * a1;
            }
        }
    }

    /// Flips the target qubit on every basis state whose control bit is set.
    void apply_cnot(int control, int target) {
        check_qubit(control);
        check_qubit(target);
        if (control == target) {
            throw std::invalid_argument("apply_cnot: control == target");
        }
        const std::size_t cbit = std::size_t{1} << control;
        const std::size_t tbit = std::size_t{1} << target;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            if ((i & cbit) != 0 && (i & tbit) == 0) {
                std::swap(amps_[i], amps_[i | tbit]);
            }
        }
    }

    void apply_gate(const Gate& g) {
        if (g.kind == GateKind::CNOT) {
            apply_cnot(g.control, g.target);
        } else {
            apply_1q(g.target, gate_matrix(g));
        }
    }

    double norm_sq() const {
        double s = 0.0;
        for (const Complex& a : amps_) s += std::norm(a);
        return s;
    }

    /// Pauli-Z expectation of one qubit: P(bit = 0) - P(bit = 1), in [-1, 1].
    double expval_z(int qubit) const {
        check_qubit(qubit);
        const std::size_t bit = std::size_t{1} << qubit;
        double v = 0.0;
        for (std::size_t i = 0; i < amps_.size(); ++i) {
            const double p = std::norm(amps_[i]);
            v += (i & bit) ? -p : p;
        }
        return v;
    }

  private:
    void check_qubit(int q) const {
        if (q < 0 || q >= n_) {
            throw std::out_of_range("qubit index " + std::to_string(q) +
                                    " out of range for " + std::to_string(n_) +
                                    "-qubit state");
        }
    }

    int n_;
    std::vector<Complex> amps_;
};

}  // namespace qsnn::qsim
