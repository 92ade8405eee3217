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

#ifndef STYLO_TRANSFORM_HPP_
#define STYLO_TRANSFORM_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "stylo/matrix.hpp"

namespace stylo {

// Signed power transform: for x >= 0, ((x+1)^l - 1)/l, or ln(x+1) at l = 0;
// for x < 0, -((1-x)^(2-l) - 1)/(2-l), or -ln(1-x) at l = 2. Continuous in
// both arguments and strictly increasing in x.
double yeo_johnson(double x, double lambda);

// Profile log-likelihood of the transformed column under a normality
// objective; the quantity fit_lambda maximizes.
double yeo_johnson_log_likelihood(std::span<const double> column, double lambda);

struct LambdaFit {
    double lambda = 1.0;
    bool degenerate = false;  // zero-variance column, identity kept
};

// Coarse scan over [-5, 5] followed by golden-section refinement of the
// bracketing interval down to |delta| < 1e-6.
LambdaFit fit_lambda(std::span<const double> column);

// Per-column lambda plus post-transform mean/std. Fitted on training rows
// only and frozen.
struct FeatureTransform {
    std::vector<double> lambda;
    std::vector<double> mean;
    std::vector<double> stddev;  // 1.0 sentinel for zero-variance columns

    std::size_t columns() const { return lambda.size(); }
};

// Requires >= 2 rows. Zero-variance columns keep lambda = 1 and map to zero.
FeatureTransform fit_transform(const Matrix& matrix, std::size_t threads = 1);

// yeo_johnson then (v - mean) / std, elementwise.
Matrix apply_transform(const FeatureTransform& transform, const Matrix& matrix);

void save_transform(const FeatureTransform& transform, const std::filesystem::path& path);
FeatureTransform load_transform(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_TRANSFORM_HPP_
