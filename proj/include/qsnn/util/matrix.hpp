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
#pragma once

#include <cstddef>
#include <vector>

namespace qsnn::util {

/// Dense row-major matrix of doubles. Deliberately minimal: the model
/// dimensions here (at most 784x100) do not warrant a BLAS dependency.
struct Matrix {
    int rows = 0;
    int cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(int r, int c)
        : rows(r), cols(c),
          data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0.0) {}

    double& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    double at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * cols + c];
    }
    std::size_t size() const { return data.size(); }
    void fill(double v) { data.assign(data.size(), v); }
};

}  // namespace qsnn::util
