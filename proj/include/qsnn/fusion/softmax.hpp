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
 * @file softmax.hpp
 * Probability-space operations of the fused classifier head: softmax
 * normalization, the proportional mixture of the two heads, and the
 * negative log-likelihood loss.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace qsnn::fusion {

/// Probability floor applied before any log: keeps the loss finite when a
/// head assigns (numerically) zero mass to the true class.
inline constexpr double kProbFloor = 1e-12;

/// Numerically stable softmax: the max logit is subtracted before
/// exponentiation, so arbitrarily large inputs cannot overflow.
inline std::vector<double> softmax(std::span<const double> logits) {
    if (logits.empty()) {
        throw std::invalid_argument("softmax: empty input");
    }
    const double m = *std::max_element(logits.begin(), logits.end());
    std::vector<double> p(logits.size());
    double sum = 0.0;
    for (std::size_t i = 0; i < logits.size(); ++i) {
        p[i] = std::exp(logits[i] - m);
        sum += p[i];
    }
    for (double& v : p) v /= sum;
    return p;
}

/// Convex combination of the two heads' probability vectors:
/// xi * q_quantum + (1 - xi) * q_classical. The result is again a
/// probability vector for any xi in [0, 1].
inline std::vector<double> fuse(std::span<const double> q_quantum,
                                std::span<const double> q_classical,
                                double xi) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("fuse: xi must be in [0, 1], got " +
                                    std::to_string(xi));
    }
    if (q_quantum.size() != q_classical.size()) {
        throw std::invalid_argument("fuse: head output lengths differ");
    }
    std::vector<double> fused(q_quantum.size());
    for (std::size_t i = 0; i < fused.size(); ++i) {
        fused[i] = xi * q_quantum[i] + (1.0 - xi) * q_classical[i];
    }
    return fused;
}

/// Index of the largest entry; ties resolve to the lowest index.
inline int argmax(std::span<const double> v) {
    return static_cast<int>(
        std::max_element(v.begin(), v.end()) - v.begin());
}

/// True when entries are in [0, 1] and sum to 1 within `tol`.
inline bool is_prob_vector(std::span<const double> p, double tol = 1e-9) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= 0.0 && v <= 1.0)) return false;
        sum += v;
    }
    return std::abs(sum - 1.0) <= tol;
}

/// Mean of -log p(true class) over the batch. Probabilities are clamped at
/// kProbFloor before the log.
inline double nll_loss(const std::vector<std::vector<double>>& batch_probs,
                       std::span<const int> labels) {
    if (batch_probs.empty()) {
        throw std::invalid_argument("nll_loss: empty batch");
    }
    if (batch_probs.size() != labels.size()) {
        throw std::invalid_argument("nll_loss: batch/label size mismatch");
    }
    double total = 0.0;
    for (std::size_t i = 0; i < batch_probs.size(); ++i) {
        const int y = labels[i];
        if (y < 0 || y >= static_cast<int>(batch_probs[i].size())) {
            throw std::invalid_argument("nll_loss: label " +
                                        std::to_string(y) + " out of range");
        }
        total += -std::log(std::max(batch_probs[i][y], kProbFloor));
    }
    return total / static_cast<double>(batch_probs.size());
}

}  // namespace qsnn::fusion
