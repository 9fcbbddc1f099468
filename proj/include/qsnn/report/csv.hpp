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
 * @file csv.hpp
 * CSV artifact writers. All numeric formatting goes through snprintf with
 * fixed format strings, so identical inputs always produce identical bytes.
 */
#pragma once

#include <cstdio>
#include <fstream>
#include <span>
#include <stdexcept>
#include <string>

#include "qsnn/train/sweeps.hpp"
#include "qsnn/train/trainer.hpp"

namespace qsnn::report {

namespace detail {

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path);
    return out;
}

inline std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string compact(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

}  // namespace detail

/// Header: epoch,train_acc,test_acc,train_loss,test_loss
inline void write_epochs_csv(const std::string& path,
                             const train::RunRecord& rec) {
    std::ofstream out = detail::open_out(path);
    out << "epoch,train_acc,test_acc,train_loss,test_loss\n";
    for (std::size_t e = 0; e < rec.epochs.size(); ++e) {
        const train::EpochMetrics& m = rec.epochs[e];
        out << (e + 1) << ',' << detail::fixed6(m.train_acc) << ','
            << detail::fixed6(m.test_acc) << ','
            << detail::fixed6(m.train_loss) << ','
            << detail::fixed6(m.test_loss) << '\n';
    }
}

/// Header: true_class,pred_0,...,pred_9 (rows = true class).
inline void write_confusion_csv(const std::string& path,
                                const train::ConfusionMatrix& cm) {
    std::ofstream out = detail::open_out(path);
    out << "true_class";
    for (int p = 0; p < train::ConfusionMatrix::kClasses; ++p) {
        out << ",pred_" << p;
    }
    out << '\n';
    for (int t = 0; t < train::ConfusionMatrix::kClasses; ++t) {
        out << t;
        for (int p = 0; p < train::ConfusionMatrix::kClasses; ++p) {
            out << ',' << cm.at(t, p);
        }
        out << '\n';
    }
}

/// Header: xi,seed,train_acc,test_acc,train_loss,test_loss (final epoch).
inline void write_xi_sweep_csv(const std::string& path,
                               std::span<const train::RunRecord> records) {
    std::ofstream out = detail::open_out(path);
    out << "xi,seed,train_acc,test_acc,train_loss,test_loss\n";
    for (const train::RunRecord& rec : records) {
        const train::EpochMetrics& m = rec.final_metrics();
        out << detail::compact(rec.config.xi) << ',' << rec.config.seed << ','
            << detail::fixed6(m.train_acc) << ',' << detail::fixed6(m.test_acc)
            << ',' << detail::fixed6(m.train_loss) << ','
            << detail::fixed6(m.test_loss) << '\n';
    }
}

/// Header: qubits,seed,train_acc,test_acc,train_loss,test_loss.
inline void write_qubit_sweep_csv(const std::string& path,
                                  std::span<const train::RunRecord> records) {
    std::ofstream out = detail::open_out(path);
    out << "qubits,seed,train_acc,test_acc,train_loss,test_loss\n";
    for (const train::RunRecord& rec : records) {
        const train::EpochMetrics& m = rec.final_metrics();
        out << rec.config.n_qubits << ',' << rec.config.seed << ','
            << detail::fixed6(m.train_acc) << ',' << detail::fixed6(m.test_acc)
            << ',' << detail::fixed6(m.train_loss) << ','
            << detail::fixed6(m.test_loss) << '\n';
    }
}

/// Header: kind,level,seed,accuracy.
inline void write_noise_sweep_csv(const std::string& path,
                                  std::span<const train::NoiseRow> rows) {
    std::ofstream out = detail::open_out(path);
    out << "kind,level,seed,accuracy\n";
    for (const train::NoiseRow& row : rows) {
        out << data::noise_kind_name(row.kind) << ','
            << detail::compact(row.level) << ',' << row.seed << ','
            << detail::fixed6(row.accuracy) << '\n';
    }
}

}  // namespace qsnn::report
