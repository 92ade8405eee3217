// Copyright 2026 The Stylo Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef STYLO_MATRIX_HPP_
#define STYLO_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace stylo {

// Dense row-major matrix of doubles. Deliberately minimal; the workloads
// here never need linear algebra, just rows of features.
struct Matrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c, double fill = 0.0)
        : rows(r), cols(c), data(r * c, fill) {}

    double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

    std::span<const double> row(std::size_t r) const {
        return {data.data() + r * cols, cols};
    }
    std::span<double> row(std::size_t r) {
        return {data.data() + r * cols, cols};
    }
};

}  // namespace stylo

#endif  // STYLO_MATRIX_HPP_
