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
 * @file trainer.hpp
 * End-to-end training and evaluation of the hybrid model: seeded shuffling,
 * minibatch SGD over both heads, per-epoch metrics, confusion matrices.
 *
 * Everything is deterministic given the config seed: model init, epoch
 * shuffles, per-(epoch, sample) spike streams and evaluation streams all
 * derive from it through fixed stream tags.
 */
#pragma once

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsnn/data/mnist.hpp"
#include "qsnn/data/transforms.hpp"
#include "qsnn/fusion/model.hpp"
#include "qsnn/qsim/param_shift.hpp"
#include "qsnn/snn/lif.hpp"
#include "qsnn/snn/poisson.hpp"
#include "qsnn/train/sgd.hpp"
#include "qsnn/util/rng.hpp"

namespace qsnn::train {

struct TrainConfig {
    int epochs = 10;
    int batch_size = 32;
    double lr = 0.05;
    double momentum = 0.0;
    double xi = 0.8;
    int n_qubits = 5;
    int hidden = 100;
    int timesteps = 20;  // spike-train length T
    double r_max = 1.0;
    std::uint64_t seed = 1;
    std::size_t train_k = 0;  // subset sizes; 0 = whole split
    std::size_t test_k = 0;
    bool freeze_spikes = false;  // reuse the epoch-0 spike streams every epoch
    bool shared_theta = false;
    bool ring_entangler = false;
    snn::LIFParams lif{};

    void validate() const {
        if (epochs < 1) throw std::invalid_argument("epochs: must be >= 1");
        if (batch_size < 1) throw std::invalid_argument("batch_size: must be >= 1");
        if (!(lr > 0.0)) throw std::invalid_argument("lr: must be > 0");
        if (!(momentum >= 0.0 && momentum < 1.0)) {
            throw std::invalid_argument("momentum: must be in [0, 1)");
        }
        if (!(xi >= 0.0 && xi <= 1.0)) {
            throw std::invalid_argument("xi: must be in [0, 1]");
        }
        if (n_qubits < 1 || n_qubits > qsim::StateVector::kMaxQubits) {
            throw std::invalid_argument("n_qubits: must be in [1, 24]");
        }
        if (hidden < 0) throw std::invalid_argument("hidden: must be >= 0");
        if (timesteps < 1 || timesteps > 10000) {
            throw std::invalid_argument("timesteps: must be in [1, 10000]");
        }
        if (!(r_max > 0.0 && r_max <= 1.0)) {
            throw std::invalid_argument("r_max: must be in (0, 1]");
        }
        lif.validate();
    }
};

/// 10-class confusion counts; rows = true class, columns = predicted class.
struct ConfusionMatrix {
    static constexpr int kClasses = 10;
    std::array<std::int64_t, kClasses * kClasses> counts{};

    void add(int truth, int predicted) {
        if (truth < 0 || truth >= kClasses || predicted < 0 ||
            predicted >= kClasses) {
            throw std::out_of_range("ConfusionMatrix: class out of range");
        }
        ++counts[truth * kClasses + predicted];
    }
    std::int64_t at(int truth, int predicted) const {
        return counts[truth * kClasses + predicted];
    }
    std::int64_t total() const {
        std::int64_t t = 0;
        for (std::int64_t c : counts) t += c;
        return t;
    }
    std::int64_t trace() const {
        std::int64_t t = 0;
        for (int i = 0; i < kClasses; ++i) t += counts[i * kClasses + i];
        return t;
    }
    double accuracy() const {
        const std::int64_t t = total();
        return t == 0 ? 0.0 : static_cast<double>(trace()) / t;
    }
};

struct EpochMetrics {
    double train_acc = 0.0;
    double test_acc = 0.0;
    double train_loss = 0.0;
    double test_loss = 0.0;
};

struct RunRecord {
    TrainConfig config;
    std::vector<EpochMetrics> epochs;
    ConfusionMatrix confusion;  // final test confusion
    double wall_seconds = 0.0;

    const EpochMetrics& final_metrics() const { return epochs.back(); }
};

/// The fixed (non-trainable) forward transform shared by both heads.
struct Pipeline {
    snn::EncoderConfig enc;
    snn::LIFParams lif;
};

inline Pipeline make_pipeline(const TrainConfig& cfg) {
    Pipeline p;
    p.enc.steps = cfg.timesteps;
    p.enc.r_max = cfg.r_max;
    p.enc.seed = cfg.seed;
    p.lif = cfg.lif;
    return p;
}

inline fusion::HybridModel make_model(const TrainConfig& cfg, int n_inputs,
                                      int n_classes = ConfusionMatrix::kClasses) {
    const qsim::CircuitSpec spec = qsim::CircuitSpec::standard(
        cfg.n_qubits, cfg.shared_theta, cfg.ring_entangler);
    util::Rng rng(util::derive_seed(cfg.seed, util::kStreamInit));
    return fusion::init_model(n_inputs, cfg.hidden, n_classes, spec, cfg.xi, rng);
}

/// One sample through the whole forward pipeline; `spike_seed` pins the
/// Poisson encoding.
inline fusion::ForwardCache forward_sample(const fusion::HybridModel& model,
                                           const Pipeline& pipe,
                                           std::span<const double> pixels,
                                           std::uint64_t spike_seed) {
    util::Rng rng(spike_seed);
    const snn::SpikeTrain spikes = snn::poisson_encode(pixels, pipe.enc, rng);
    const snn::SpikeTrain lif_out = snn::lif_run(spikes, nullptr, pipe.lif);
    std::vector<double> rates = snn::temporal_avg_pool(lif_out);
    std::vector<double> angles =
        data::reduce_to_angles(pixels, model.quantum.spec.n_data_slots);
    return fusion::forward_heads(model, std::move(rates), std::move(angles));
}

enum class HeadMode { fused, classical, quantum };

struct EvalResult {
    double accuracy = 0.0;
    double mean_nll = 0.0;
    ConfusionMatrix confusion;
    std::vector<int> predictions;
};

/**
 * @brief Evaluates a model on a dataset.
 *
 * Predictions take the argmax of the selected head's probabilities; ties
 * resolve to the lowest class index. Sample i always draws its spikes from
 * the stream derive_seed(seed, kStreamEval, i), so repeated evaluations of
 * the same model and data are identical.
 */
inline EvalResult evaluate(const fusion::HybridModel& model,
                           const Pipeline& pipe, const data::Dataset& ds,
                           std::uint64_t seed,
                           HeadMode mode = HeadMode::fused) {
    if (ds.samples.empty()) {
        throw std::invalid_argument("evaluate: empty dataset");
    }
    EvalResult result;
    result.predictions.reserve(ds.samples.size());
    double nll = 0.0;
    for (std::size_t i = 0; i < ds.samples.size(); ++i) {
        const data::Sample& s = ds.samples[i];
        const fusion::ForwardCache fc = forward_sample(
            model, pipe, s.pixels,
            util::derive_seed(seed, util::kStreamEval, i));
        const std::vector<double>& probs = mode == HeadMode::fused ? fc.q_h
                                           : mode == HeadMode::classical
                                               ? fc.q_c
                                               : fc.q_q;
        const int pred = fusion::argmax(probs);
        result.predictions.push_back(pred);
        result.confusion.add(s.label, pred);
        nll += -std::log(std::max(probs[s.label], fusion::kProbFloor));
    }
    result.accuracy = result.confusion.accuracy();
    result.mean_nll = nll / static_cast<double>(ds.samples.size());
    return result;
}

namespace detail {

inline void apply_sgd(fusion::HybridModel& model, fusion::Gradients& grads,
                      fusion::Gradients& velocity, double lr,
                      double momentum) {
    sgd_step(model.l1.w.data, grads.w1.data, lr, momentum, velocity.w1.data);
    sgd_step(model.l1.b, grads.b1, lr, momentum, velocity.b1);
    if (model.hidden > 0) {
        sgd_step(model.l2.w.data, grads.w2.data, lr, momentum,
                 velocity.w2.data);
        sgd_step(model.l2.b, grads.b2, lr, momentum, velocity.b2);
    }
    sgd_step(model.quantum.readout.w.data, grads.wq.data, lr, momentum,
             velocity.wq.data);
    sgd_step(model.quantum.readout.b, grads.bq, lr, momentum, velocity.bq);
    sgd_step(model.quantum.thetas, grads.thetas, lr, momentum,
             velocity.thetas);
}

}  // namespace detail

struct TrainResult {
    RunRecord record;
    fusion::HybridModel model;
};

/**
 * @brief Trains a fresh model on train_set, tracking per-epoch metrics on
 * both splits.
 *
 * Per epoch: seeded shuffle, minibatch forward/backward through both heads
 * (circuit parameters via the parameter-shift rule), one SGD step per batch.
 * Gradients accumulate in ascending batch order, so single-threaded results
 * are bit-reproducible. A non-finite batch loss aborts with a diagnostic.
 */
inline TrainResult train_model(const data::Dataset& train_set,
                               const data::Dataset& test_set,
                               const TrainConfig& cfg) {
    cfg.validate();
    if (train_set.samples.empty() || test_set.samples.empty()) {
        throw std::invalid_argument("train_model: empty dataset");
    }
    const auto t_start = std::chrono::steady_clock::now();

    const Pipeline pipe = make_pipeline(cfg);
    const int n_inputs = train_set.rows * train_set.cols;
    fusion::HybridModel model = make_model(cfg, n_inputs);
    fusion::Gradients grads = fusion::Gradients::zeros_like(model);
    fusion::Gradients velocity = fusion::Gradients::zeros_like(model);

    RunRecord record;
    record.config = cfg;

    const std::size_t n = train_set.samples.size();
    std::vector<std::size_t> order(n);
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        util::Rng shuffle_rng(
            util::derive_seed(cfg.seed, util::kStreamShuffle, epoch));
        for (std::size_t i = n - 1; i > 0; --i) {
            std::swap(order[i], order[shuffle_rng.uniform_index(i + 1)]);
        }

        const std::uint64_t spike_epoch = cfg.freeze_spikes ? 0 : epoch;
        for (std::size_t start = 0; start < n; start += cfg.batch_size) {
            const int batch_n =
                static_cast<int>(std::min<std::size_t>(cfg.batch_size, n - start));
            grads.zero();
            double batch_loss = 0.0;
            for (int b = 0; b < batch_n; ++b) {
                const std::size_t idx = order[start + b];
                const data::Sample& s = train_set.samples[idx];
                const fusion::ForwardCache fc = forward_sample(
                    model, pipe, s.pixels,
                    util::derive_seed(cfg.seed, util::kStreamSpikes,
                                      spike_epoch, idx));
                batch_loss -= std::log(
                    std::max(fc.q_h[s.label], fusion::kProbFloor));
                const std::vector<double> dz =
                    fusion::backward(model, fc, s.label, batch_n, grads);
                const std::vector<double> dtheta = qsim::param_shift_grad(
                    model.quantum.spec, fc.angles, model.quantum.thetas, dz);
                for (std::size_t j = 0; j < dtheta.size(); ++j) {
                    grads.thetas[j] += dtheta[j];
                }
            }
            batch_loss /= batch_n;
            if (!std::isfinite(batch_loss)) {
                throw std::runtime_error(
                    "training loss is not finite at epoch " +
                    std::to_string(epoch + 1) + ", batch " +
                    std::to_string(start / cfg.batch_size + 1) +
                    "; the learning rate is likely too high");
            }
            detail::apply_sgd(model, grads, velocity, cfg.lr, cfg.momentum);
        }

        const EvalResult on_train = evaluate(model, pipe, train_set, cfg.seed);
        const EvalResult on_test = evaluate(model, pipe, test_set, cfg.seed);
        record.epochs.push_back({on_train.accuracy, on_test.accuracy,
                                 on_train.mean_nll, on_test.mean_nll});
        record.confusion = on_test.confusion;
    }

    record.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                      t_start)
            .count();
    return {std::move(record), std::move(model)};
}

}  // namespace qsnn::train
