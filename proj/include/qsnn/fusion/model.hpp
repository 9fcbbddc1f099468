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
 * @file model.hpp
 * The two-head hybrid classifier: a classical MLP over pooled firing rates
 * and a variational-circuit head over reduced data angles, fused in
 * probability space. Includes the exact analytic backward pass through the
 * fusion, softmax and linear stages.
 */
#pragma once

#include <cmath>
#include <numbers>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsnn/fusion/linear.hpp"
#include "qsnn/fusion/softmax.hpp"
#include "qsnn/qsim/circuit.hpp"
#include "qsnn/util/rng.hpp"

namespace qsnn::fusion {

struct QuantumHead {
    qsim::CircuitSpec spec;
    std::vector<double> thetas;  // trainable circuit parameters
    LinearLayer readout;         // n_qubits -> n_classes
};

/**
 * @brief Trainable state of the hybrid classifier.
 *
 * hidden == 0 collapses the classical head to a single linear layer
 * (l1: input -> classes, l2 unused).
 */
struct HybridModel {
    LinearLayer l1;  // input -> hidden (or input -> classes when hidden == 0)
    LinearLayer l2;  // hidden -> classes
    int hidden = 100;
    QuantumHead quantum;
    double xi = 0.8;  // quantum proportion of the fused output

    int n_classes() const {
        return hidden > 0 ? l2.out_dim() : l1.out_dim();
    }
};

/// Initializes all trainable state. Weight draws are consumed in a fixed
/// order (l1, l2, readout, thetas) so a seed pins the whole model. Circuit
/// parameters start uniform in [-pi, pi).
inline HybridModel init_model(int n_inputs, int hidden, int n_classes,
                              const qsim::CircuitSpec& spec, double xi,
                              util::Rng& rng) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("init_model: xi must be in [0, 1]");
    }
    if (hidden < 0) {
        throw std::invalid_argument("init_model: hidden must be >= 0");
    }
    spec.validate();
    HybridModel m;
    m.hidden = hidden;
    m.xi = xi;
    if (hidden > 0) {
        m.l1 = glorot_init(hidden, n_inputs, rng);
        m.l2 = glorot_init(n_classes, hidden, rng);
    } else {
        m.l1 = glorot_init(n_classes, n_inputs, rng);
    }
    m.quantum.spec = spec;
    m.quantum.readout = glorot_init(n_classes, spec.n_qubits, rng);
    m.quantum.thetas.resize(spec.n_params);
    for (double& t : m.quantum.thetas) {
        t = rng.uniform(-std::numbers::pi, std::numbers::pi);
    }
    return m;
}

/// Every intermediate of one sample's forward pass, kept for the backward
/// pass.
struct ForwardCache {
    std::vector<double> rates;     // pooled firing rates (classical input)
    std::vector<double> h_pre;     // hidden pre-activation
    std::vector<double> h_act;     // hidden activation (ReLU)
    std::vector<double> logits_c;  // classical logits
    std::vector<double> q_c;       // classical probabilities
    std::vector<double> angles;    // reduced data angles (quantum input)
    std::vector<double> z;         // per-qubit <Z> measurements
    std::vector<double> logits_q;  // quantum-readout logits
    std::vector<double> q_q;       // quantum probabilities
    std::vector<double> q_h;       // fused probabilities
};

/// Runs both heads on precomputed inputs and fuses the probabilities.
inline ForwardCache forward_heads(const HybridModel& m,
                                  std::vector<double> rates,
                                  std::vector<double> angles) {
    ForwardCache fc;
    fc.rates = std::move(rates);
    fc.angles = std::move(angles);

    if (m.hidden > 0) {
        fc.h_pre = linear_forward(m.l1, fc.rates);
        fc.h_act = relu(fc.h_pre);
        fc.logits_c = linear_forward(m.l2, fc.h_act);
    } else {
        fc.logits_c = linear_forward(m.l1, fc.rates);
    }
    fc.q_c = softmax(fc.logits_c);

    fc.z = qsim::run_circuit(m.quantum.spec, fc.angles, m.quantum.thetas);
    fc.logits_q = linear_forward(m.quantum.readout, fc.z);
    fc.q_q = softmax(fc.logits_q);

    fc.q_h = fuse(fc.q_q, fc.q_c, m.xi);
    return fc;
}

/// Gradient accumulator shaped like the trainable state.
struct Gradients {
    util::Matrix w1, w2, wq;
    std::vector<double> b1, b2, bq;
    std::vector<double> thetas;

    static Gradients zeros_like(const HybridModel& m) {
        Gradients g;
        g.w1 = util::Matrix(m.l1.w.rows, m.l1.w.cols);
        g.b1.assign(m.l1.b.size(), 0.0);
        if (m.hidden > 0) {
            g.w2 = util::Matrix(m.l2.w.rows, m.l2.w.cols);
            g.b2.assign(m.l2.b.size(), 0.0);
        }
        g.wq = util::Matrix(m.quantum.readout.w.rows, m.quantum.readout.w.cols);
        g.bq.assign(m.quantum.readout.b.size(), 0.0);
        g.thetas.assign(m.quantum.thetas.size(), 0.0);
        return g;
    }

    void zero() {
        w1.fill(0.0);
        w2.fill(0.0);
        wq.fill(0.0);
        b1.assign(b1.size(), 0.0);
        b2.assign(b2.size(), 0.0);
        bq.assign(bq.size(), 0.0);
        thetas.assign(thetas.size(), 0.0);
    }
};

namespace detail {

/// dL/dlogits from dL/dprobs for a softmax output p.
inline std::vector<double> softmax_backward(std::span<const double> p,
                                            std::span<const double> dp) {
    double inner = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) inner += dp[i] * p[i];
    std::vector<double> dlogits(p.size());
    for (std::size_t j = 0; j < p.size(); ++j) {
        dlogits[j] = p[j] * (dp[j] - inner);
    }
    return dlogits;
}

inline void accumulate_linear(const std::vector<double>& dlogits,
                              std::span<const double> input,
                              util::Matrix& dw, std::vector<double>& db) {
    for (std::size_t r = 0; r < dlogits.size(); ++r) {
        db[r] += dlogits[r];
        double* row = dw.data.data() + r * input.size();
        const double g = dlogits[r];
        for (std::size_t c = 0; c < input.size(); ++c) row[c] += g * input[c];
    }
}

}  // namespace detail

/**
 * @brief Exact chain-rule backward pass for one sample of a batch of size
 * `batch_n`, under the mean NLL loss of the fused probabilities.
 *
 * Accumulates the classical-weight and readout gradients into `acc` and
 * returns dLoss/d<Z_k>, the upstream vector for the circuit-parameter
 * gradient. The quantum branch is scaled by xi and the classical branch by
 * (1 - xi); at the endpoints the other head's gradients are exactly zero.
 */
inline std::vector<double> backward(const HybridModel& m,
                                    const ForwardCache& fc, int label,
                                    int batch_n, Gradients& acc) {
    const int classes = m.n_classes();
    if (label < 0 || label >= classes) {
        throw std::invalid_argument("backward: label out of range");
    }
    if (fc.q_h.empty() || fc.q_c.empty() || fc.q_q.empty() ||
        fc.rates.empty() || fc.z.empty()) {
        throw std::logic_error("backward: forward cache is incomplete");
    }

    // d(mean NLL)/dQ_h: only the true-class entry is nonzero.
    std::vector<double> dqh(classes, 0.0);
    dqh[label] = -1.0 / (batch_n * std::max(fc.q_h[label], kProbFloor));

    std::vector<double> dqc(classes), dqq(classes);
    for (int i = 0; i < classes; ++i) {
        dqc[i] = (1.0 - m.xi) * dqh[i];
        dqq[i] = m.xi * dqh[i];
    }

    // Classical head.
    const std::vector<double> dlc = detail::softmax_backward(fc.q_c, dqc);
    if (m.hidden > 0) {
        detail::accumulate_linear(dlc, fc.h_act, acc.w2, acc.b2);
        std::vector<double> dh(m.hidden, 0.0);
        for (int r = 0; r < classes; ++r) {
            const double g = dlc[r];
            if (g == 0.0) continue;
            const double* row =
                m.l2.w.data.data() + static_cast<std::size_t>(r) * m.hidden;
            for (int c = 0; c < m.hidden; ++c) dh[c] += g * row[c];
        }
        for (int c = 0; c < m.hidden; ++c) {
            if (fc.h_pre[c] <= 0.0) dh[c] = 0.0;  // ReLU gate
        }
        detail::accumulate_linear(dh, fc.rates, acc.w1, acc.b1);
    } else {
        detail::accumulate_linear(dlc, fc.rates, acc.w1, acc.b1);
    }

    // Quantum readout, then the upstream for the circuit parameters.
    const std::vector<double> dlq = detail::softmax_backward(fc.q_q, dqq);
    detail::accumulate_linear(dlq, fc.z, acc.wq, acc.bq);
    const int n_qubits = m.quantum.spec.n_qubits;
    std::vector<double> dz(n_qubits, 0.0);
    for (int r = 0; r < classes; ++r) {
        const double g = dlq[r];
        if (g == 0.0) continue;
        const double* row = m.quantum.readout.w.data.data() +
                            static_cast<std::size_t>(r) * n_qubits;
        for (int k = 0; k < n_qubits; ++k) dz[k] += g * row[k];
    }
    return dz;
}

}  // namespace qsnn::fusion
