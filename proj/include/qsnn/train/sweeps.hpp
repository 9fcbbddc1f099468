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
 * @file sweeps.hpp
 * Experiment harnesses: quantum-proportion sweep, qubit-count sweep and
 * noise-robustness sweep. Every run inside a sweep shares the same seed and
 * therefore the same data order, so points differ only in the swept value.
 */
#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "qsnn/data/transforms.hpp"
#include "qsnn/train/trainer.hpp"

namespace qsnn::train {

/// Trains one model per (xi, seed repeat) pair. Repeat r uses seed
/// base.seed + r. Records are ordered xi-major, repeat-minor.
inline std::vector<RunRecord> sweep_xi(const data::Dataset& train_set,
                                       const data::Dataset& test_set,
                                       const TrainConfig& base,
                                       std::span<const double> xi_values,
                                       int n_seeds = 1) {
    if (xi_values.empty()) {
        throw std::invalid_argument("sweep_xi: empty value list");
    }
    if (n_seeds < 1) {
        throw std::invalid_argument("sweep_xi: n_seeds must be >= 1");
    }
    std::vector<RunRecord> records;
    records.reserve(xi_values.size() * n_seeds);
    for (double xi : xi_values) {
        for (int r = 0; r < n_seeds; ++r) {
            TrainConfig cfg = base;
            cfg.xi = xi;
            cfg.seed = base.seed + static_cast<std::uint64_t>(r);
            records.push_back(train_model(train_set, test_set, cfg).record);
        }
    }
    return records;
}

/// Trains one model per (qubit count, seed repeat) pair.
inline std::vector<RunRecord> sweep_qubits(const data::Dataset& train_set,
                                           const data::Dataset& test_set,
                                           const TrainConfig& base,
                                           std::span<const int> qubit_counts,
                                           int n_seeds = 1) {
    if (qubit_counts.empty()) {
        throw std::invalid_argument("sweep_qubits: empty value list");
    }
    if (n_seeds < 1) {
        throw std::invalid_argument("sweep_qubits: n_seeds must be >= 1");
    }
    std::vector<RunRecord> records;
    records.reserve(qubit_counts.size() * n_seeds);
    for (int q : qubit_counts) {
        for (int r = 0; r < n_seeds; ++r) {
            TrainConfig cfg = base;
            cfg.n_qubits = q;
            cfg.seed = base.seed + static_cast<std::uint64_t>(r);
            records.push_back(train_model(train_set, test_set, cfg).record);
        }
    }
    return records;
}

struct NoiseRow {
    data::NoiseSpec::Kind kind = data::NoiseSpec::Kind::uniform;
    double level = 0.0;
    std::uint64_t seed = 0;  // seed of the evaluated model's training run
    double accuracy = 0.0;
};

/**
 * @brief Evaluates a trained model on noise-corrupted copies of the test
 * set, one row per (kind, level).
 *
 * Level 0 leaves every pixel untouched and the evaluation stream is the
 * same, so its accuracy reproduces the clean evaluation exactly.
 */
inline std::vector<NoiseRow> sweep_noise(
    const fusion::HybridModel& model, const Pipeline& pipe,
    const data::Dataset& test_set,
    std::span<const data::NoiseSpec::Kind> kinds,
    std::span<const double> levels, std::uint64_t eval_seed,
    std::uint64_t noise_seed, std::uint64_t seed_label) {
    if (kinds.empty() || levels.empty()) {
        throw std::invalid_argument("sweep_noise: empty value list");
    }
    std::vector<NoiseRow> rows;
    rows.reserve(kinds.size() * levels.size());
    for (const data::NoiseSpec::Kind kind : kinds) {
        for (std::size_t li = 0; li < levels.size(); ++li) {
            data::NoiseSpec spec;
            spec.kind = kind;
            spec.level = levels[li];
            spec.seed = util::derive_seed(
                noise_seed, static_cast<std::uint64_t>(kind), li);
            const data::Dataset noisy = data::add_noise(test_set, spec);
            const EvalResult res = evaluate(model, pipe, noisy, eval_seed);
            rows.push_back({kind, levels[li], seed_label, res.accuracy});
        }
    }
    return rows;
}

}  // namespace qsnn::train
