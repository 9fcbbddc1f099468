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
 * @file lif.hpp
 * Discrete-time leaky integrate-and-fire layer.
 */
#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsnn/snn/spike_train.hpp"
#include "qsnn/util/matrix.hpp"

namespace qsnn::snn {

struct LIFParams {
    double tau_m = 2.0;    // membrane time constant, in units of dt
    double v_rest = 0.0;   // resting potential
    double v_th = 0.75;    // firing threshold
    double r_m = 1.0;      // membrane resistance
    double dt = 1.0;       // integration step

    bool soft_reset = false;   // subtract v_th on spike instead of resetting to v_rest
    bool exp_synapse = false;  // exponential synaptic kernel instead of one-step rectangular
    double tau_syn = 1.0;      // decay constant of the exponential kernel

    void validate() const {
        if (!(tau_m > 0.0)) throw std::invalid_argument("LIFParams: tau_m must be > 0");
        if (!(v_th > v_rest)) throw std::invalid_argument("LIFParams: v_th must be > v_rest");
        if (!(dt > 0.0)) throw std::invalid_argument("LIFParams: dt must be > 0");
        if (!(tau_syn > 0.0)) throw std::invalid_argument("LIFParams: tau_syn must be > 0");
    }
};

namespace detail {

/// Shared integration loop. Each step: synaptic current from the incoming
/// spikes, forward-Euler membrane update, threshold test, reset. When `trace`
/// is non-null it receives the post-update membrane potential of every
/// neuron at every step, sampled before the reset.
inline SpikeTrain lif_integrate(const SpikeTrain& input,
                                const util::Matrix* weights,
                                const LIFParams& p, util::Matrix* trace) {
    p.validate();
    const int d_in = input.neurons;
    const int d_out = weights ? weights->rows : d_in;
    if (weights && weights->cols != d_in) {
        throw std::invalid_argument("lif_run: weight matrix has " +
                                    std::to_string(weights->cols) +
                                    " columns but input has " +
                                    std::to_string(d_in) + " neurons");
    }
    if (trace) *trace = util::Matrix(input.steps, d_out);

    std::vector<double> v(d_out, p.v_rest);
    std::vector<double> current(d_out, 0.0);
    std::vector<double> syn(d_out, 0.0);
    const double leak = p.dt / p.tau_m;
    const double syn_decay = std::exp(-p.dt / p.tau_syn);

    SpikeTrain out(input.steps, d_out);
    for (int t = 0; t < input.steps; ++t) {
        if (weights) {
            for (int j = 0; j < d_out; ++j) current[j] = 0.0;
            for (int i = 0; i < d_in; ++i) {
                if (!input.at(t, i)) continue;
                for (int j = 0; j < d_out; ++j) {
                    current[j] += weights->at(j, i);
                }
            }
        } else {
            for (int j = 0; j < d_out; ++j) current[j] = input.at(t, j);
        }
        for (int j = 0; j < d_out; ++j) {
            double drive = current[j];
            if (p.exp_synapse) {
                syn[j] = syn[j] * syn_decay + current[j];
                drive = syn[j];
            }
            v[j] += leak * (-(v[j] - p.v_rest) + p.r_m * drive);
            if (trace) trace->at(t, j) = v[j];
            if (v[j] >= p.v_th) {
                out.set(t, j, true);
                v[j] = p.soft_reset ? v[j] - p.v_th : p.v_rest;
            }
        }
    }
    return out;
}

}  // namespace detail

/// Runs a spike train through a LIF layer. `weights` maps input neurons to
/// output neurons (d_out x d_in); nullptr couples input i to neuron i
/// one-to-one.
inline SpikeTrain lif_run(const SpikeTrain& input, const util::Matrix* weights,
                          const LIFParams& p) {
    return detail::lif_integrate(input, weights, p, nullptr);
}

/// Same dynamics, also recording the membrane trajectory for analysis.
inline SpikeTrain lif_run_traced(const SpikeTrain& input,
                                 const util::Matrix* weights,
                                 const LIFParams& p, util::Matrix& v_trace) {
    return detail::lif_integrate(input, weights, p, &v_trace);
}

}  // namespace qsnn::snn
