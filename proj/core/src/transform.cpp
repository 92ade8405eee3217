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

#include "stylo/transform.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

double yeo_johnson(double x, double lambda) {
    // expm1/log1p keep the near-zero branches accurate and avoid overflow in
    // pow for large |x|.
    if (x >= 0.0) {
        if (std::abs(lambda) < 1e-12) return std::log1p(x);
        return std::expm1(lambda * std::log1p(x)) / lambda;
    }
    const double two_minus = 2.0 - lambda;
    if (std::abs(two_minus) < 1e-12) return -std::log1p(-x);
    return -std::expm1(two_minus * std::log1p(-x)) / two_minus;
}

double yeo_johnson_log_likelihood(std::span<const double> column, double lambda) {
    const std::size_t n = column.size();
    double sum = 0.0;
    double sum_sq = 0.0;
    double skew_term = 0.0;
    for (const double x : column) {
        const double t = yeo_johnson(x, lambda);
        sum += t;
        sum_sq += t * t;
        skew_term += (x >= 0.0 ? 1.0 : -1.0) * std::log1p(std::abs(x));
    }
    const double count = static_cast<double>(n);
    double variance = sum_sq / count - (sum / count) * (sum / count);
    if (variance < 1e-300) variance = 1e-300;
    return -(count / 2.0) * std::log(variance) + (lambda - 1.0) * skew_term;
}

namespace {

constexpr double kLambdaLo = -5.0;
constexpr double kLambdaHi = 5.0;
constexpr double kGridStep = 0.1;

double golden_section_max(std::span<const double> column, double lo, double hi) {
    constexpr double kInvPhi = 0.6180339887498948482;
    double a = lo;
    double b = hi;
    double x1 = b - kInvPhi * (b - a);
    double x2 = a + kInvPhi * (b - a);
    double f1 = yeo_johnson_log_likelihood(column, x1);
    double f2 = yeo_johnson_log_likelihood(column, x2);
    while (b - a > 1e-6) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + kInvPhi * (b - a);
            f2 = yeo_johnson_log_likelihood(column, x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - kInvPhi * (b - a);
            f1 = yeo_johnson_log_likelihood(column, x1);
        }
    }
    return (a + b) / 2.0;
}

}  // namespace

LambdaFit fit_lambda(std::span<const double> column) {
    if (column.empty()) {
        throw Error(ErrorKind::kInvalidData, "fit_lambda: empty column");
    }
    double min = column[0];
    double max = column[0];
    for (const double v : column) {
        min = std::min(min, v);
        max = std::max(max, v);
    }
    if (min == max) return {1.0, true};

    double best_lambda = 1.0;
    double best_value = -std::numeric_limits<double>::infinity();
    const int steps = static_cast<int>(std::lround((kLambdaHi - kLambdaLo) / kGridStep));
    for (int i = 0; i <= steps; ++i) {
        const double lambda = kLambdaLo + kGridStep * i;
        const double value = yeo_johnson_log_likelihood(column, lambda);
        if (value > best_value) {
            best_value = value;
            best_lambda = lambda;
        }
    }
    const double lo = std::max(kLambdaLo, best_lambda - kGridStep);
    const double hi = std::min(kLambdaHi, best_lambda + kGridStep);
    const double refined = golden_section_max(column, lo, hi);
    // Keep the coarse optimum when refinement doesn't actually improve on it
    // (possible at the very edge of the bracket).
    double result = best_lambda;
    if (yeo_johnson_log_likelihood(column, refined) >= best_value) result = refined;
    // The fit must never lose to the identity.
    if (yeo_johnson_log_likelihood(column, 1.0) >
        yeo_johnson_log_likelihood(column, result)) {
        result = 1.0;
    }
    return {result, false};
}

FeatureTransform fit_transform(const Matrix& matrix, std::size_t threads) {
    if (matrix.rows < 2) {
        throw Error(ErrorKind::kInvalidData, "fit_transform needs at least 2 rows");
    }
    FeatureTransform transform;
    transform.lambda.assign(matrix.cols, 1.0);
    transform.mean.assign(matrix.cols, 0.0);
    transform.stddev.assign(matrix.cols, 1.0);
    parallel_for(matrix.cols, threads, [&](std::size_t c) {
        std::vector<double> column(matrix.rows);
        for (std::size_t r = 0; r < matrix.rows; ++r) column[r] = matrix.at(r, c);
        const LambdaFit fit = fit_lambda(column);
        transform.lambda[c] = fit.lambda;
        double sum = 0.0;
        for (auto& v : column) {
            v = yeo_johnson(v, fit.lambda);
            sum += v;
        }
        const double mean = sum / static_cast<double>(column.size());
        double var = 0.0;
        for (const double v : column) var += (v - mean) * (v - mean);
        var /= static_cast<double>(column.size());
        transform.mean[c] = mean;
        transform.stddev[c] = var > 0.0 ? std::sqrt(var) : 1.0;
    });
    return transform;
}

Matrix apply_transform(const FeatureTransform& transform, const Matrix& matrix) {
    if (matrix.cols != transform.columns()) {
        throw Error(ErrorKind::kInvalidData, "transform/matrix column count mismatch");
    }
    Matrix out(matrix.rows, matrix.cols);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        for (std::size_t c = 0; c < matrix.cols; ++c) {
            const double t = yeo_johnson(matrix.at(r, c), transform.lambda[c]);
            out.at(r, c) = (t - transform.mean[c]) / transform.stddev[c];
        }
    }
    return out;
}

void save_transform(const FeatureTransform& transform, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "stylo.transform v1\n";
    out << "columns " << transform.columns() << "\n";
    for (std::size_t c = 0; c < transform.columns(); ++c) {
        out << "col " << c << ' ' << format_double(transform.lambda[c]) << ' '
            << format_double(transform.mean[c]) << ' ' << format_double(transform.stddev[c])
            << "\n";
    }
    atomic_write_file(path, out.str());
}

FeatureTransform load_transform(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "stylo.transform v1") {
        throw Error(ErrorKind::kInvalidData, "unrecognized transform file: " + path.string());
    }
    std::string tag;
    std::size_t n = 0;
    if (!(in >> tag >> n) || tag != "columns") {
        throw Error(ErrorKind::kInvalidData, "malformed transform file: " + path.string());
    }
    FeatureTransform transform;
    transform.lambda.reserve(n);
    transform.mean.reserve(n);
    transform.stddev.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t index = 0;
        std::string lambda_text, mean_text, std_text;
        if (!(in >> tag >> index >> lambda_text >> mean_text >> std_text) || tag != "col" ||
            index != c) {
            throw Error(ErrorKind::kInvalidData, "malformed transform file: " + path.string());
        }
        transform.lambda.push_back(parse_double(lambda_text));
        transform.mean.push_back(parse_double(mean_text));
        transform.stddev.push_back(parse_double(std_text));
    }
    return transform;
}

}  // namespace stylo
