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

#include <doctest.h>

#include <cmath>
#include <limits>

#include "stylo/error.hpp"
#include "stylo/rng.hpp"
#include "testutil.hpp"

using namespace stylo;
using doctest::Approx;

namespace {

// Independent oracle: dense grid argmax of the profile log-likelihood,
// written without reusing the production likelihood code.
double oracle_lambda(const std::vector<double>& column) {
    double best_lambda = -5.0;
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 100; ++i) {
        const double lambda = -5.0 + 0.1 * i;
        double sum = 0.0, sum_sq = 0.0, skew = 0.0;
        for (const double x : column) {
            double t;
            if (x >= 0.0) {
                t = std::abs(lambda) < 1e-12 ? std::log1p(x)
                                             : (std::pow(x + 1.0, lambda) - 1.0) / lambda;
            } else {
                const double m = 2.0 - lambda;
                t = std::abs(m) < 1e-12 ? -std::log1p(-x) : -(std::pow(1.0 - x, m) - 1.0) / m;
            }
            sum += t;
            sum_sq += t * t;
            skew += (x >= 0.0 ? 1.0 : -1.0) * std::log1p(std::abs(x));
        }
        const double n = double(column.size());
        double var = sum_sq / n - (sum / n) * (sum / n);
        if (var < 1e-300) var = 1e-300;
        const double ll = -(n / 2.0) * std::log(var) + (lambda - 1.0) * skew;
        if (ll > best) {
            best = ll;
            best_lambda = lambda;
        }
    }
    return best_lambda;
}

}  // namespace

TEST_CASE("yeo_johnson branch values") {
    CHECK(yeo_johnson(3.7, 1.0) == Approx(3.7).epsilon(1e-12));
    CHECK(yeo_johnson(0.0, 1.0) == 0.0);
    CHECK(yeo_johnson(-2.5, 1.0) == Approx(-2.5).epsilon(1e-12));
    CHECK(yeo_johnson(std::exp(1.0) - 1.0, 0.0) == Approx(1.0).epsilon(1e-12));
    CHECK(yeo_johnson(-(std::exp(1.0) - 1.0), 2.0) == Approx(-1.0).epsilon(1e-12));
    // Positive branch ignores the negative-side pole and vice versa.
    CHECK(std::isfinite(yeo_johnson(10.0, 0.0)));
    CHECK(std::isfinite(yeo_johnson(-10.0, 2.0)));
    CHECK(std::isfinite(yeo_johnson(1e6, 5.0)));
    CHECK(std::isfinite(yeo_johnson(-1e6, -5.0)));
}

TEST_CASE("yeo_johnson is strictly increasing in x") {
    Rng rng(17);
    for (int i = 0; i < 2000; ++i) {
        const double lambda = rng.next_uniform(-5.0, 5.0);
        double x = rng.next_uniform(-30.0, 30.0);
        double y = rng.next_uniform(-30.0, 30.0);
        if (x == y) continue;
        if (x > y) std::swap(x, y);
        REQUIRE(yeo_johnson(x, lambda) < yeo_johnson(y, lambda));
    }
}

TEST_CASE("yeo_johnson is continuous across the lambda branch points") {
    Rng rng(18);
    for (int i = 0; i < 200; ++i) {
        const double x = rng.next_uniform(-10.0, 10.0);
        for (const double branch : {0.0, 2.0}) {
            const double at = yeo_johnson(x, branch);
            CHECK(std::abs(yeo_johnson(x, branch + 1e-9) - at) < 1e-6);
            CHECK(std::abs(yeo_johnson(x, branch - 1e-9) - at) < 1e-6);
        }
    }
}

TEST_CASE("fit_lambda stays near identity for symmetric data") {
    Rng rng(29);
    std::vector<double> column(400);
    for (auto& x : column) x = rng.next_normal();
    const auto fit = fit_lambda(column);
    CHECK_FALSE(fit.degenerate);
    CHECK(fit.lambda > 0.8);
    CHECK(fit.lambda < 1.2);
    CHECK(std::abs(fit.lambda - oracle_lambda(column)) <= 0.1);
}

TEST_CASE("fit_lambda compresses right-skewed data") {
    Rng rng(30);
    std::vector<double> column(400);
    for (auto& x : column) x = std::exp(rng.next_normal());
    const auto fit = fit_lambda(column);
    CHECK(fit.lambda < 0.5);
    CHECK(std::abs(fit.lambda - oracle_lambda(column)) <= 0.1);
}

TEST_CASE("fit_lambda expands left-skewed data") {
    Rng rng(31);
    std::vector<double> column(400);
    for (auto& x : column) x = -std::exp(rng.next_normal());
    const auto fit = fit_lambda(column);
    CHECK(fit.lambda > 1.5);
    CHECK(std::abs(fit.lambda - oracle_lambda(column)) <= 0.1);
}

TEST_CASE("fit_lambda on a constant column is the flagged identity") {
    const std::vector<double> column(10, 3.25);
    const auto fit = fit_lambda(column);
    CHECK(fit.lambda == 1.0);
    CHECK(fit.degenerate);
    CHECK_THROWS_AS(fit_lambda(std::vector<double>{}), Error);
}

TEST_CASE("fitted likelihood never loses to the identity") {
    Rng rng(32);
    for (int i = 0; i < 20; ++i) {
        std::vector<double> column(120);
        for (auto& x : column) {
            x = rng.next_real() < 0.5 ? rng.next_normal() : std::exp(rng.next_normal()) - 1.5;
        }
        const auto fit = fit_lambda(column);
        REQUIRE(yeo_johnson_log_likelihood(column, fit.lambda) >=
                yeo_johnson_log_likelihood(column, 1.0) - 1e-12);
    }
}

TEST_CASE("fit_transform standardizes the training matrix") {
    Rng rng(33);
    Matrix matrix(60, 5);
    for (std::size_t r = 0; r < matrix.rows; ++r) {
        matrix.at(r, 0) = rng.next_normal();
        matrix.at(r, 1) = std::exp(rng.next_normal());
        matrix.at(r, 2) = -std::exp(rng.next_normal());
        matrix.at(r, 3) = rng.next_uniform(-2.0, 9.0);
        matrix.at(r, 4) = 42.0;  // degenerate column
    }
    const auto transform = fit_transform(matrix, 2);
    const Matrix out = apply_transform(transform, matrix);
    for (std::size_t c = 0; c < 4; ++c) {
        double mean = 0.0;
        for (std::size_t r = 0; r < out.rows; ++r) mean += out.at(r, c);
        mean /= double(out.rows);
        double var = 0.0;
        for (std::size_t r = 0; r < out.rows; ++r) {
            var += (out.at(r, c) - mean) * (out.at(r, c) - mean);
        }
        var /= double(out.rows);
        REQUIRE(std::abs(mean) < 1e-9);
        REQUIRE(std::abs(std::sqrt(var) - 1.0) < 1e-9);
    }
    for (std::size_t r = 0; r < out.rows; ++r) REQUIRE(out.at(r, 4) == 0.0);

    // Applying twice gives identical bits.
    const Matrix out2 = apply_transform(transform, matrix);
    CHECK(out.data == out2.data);

    // Held-out rows stay finite and order-preserved.
    Matrix held(3, 5);
    for (std::size_t c = 0; c < 5; ++c) {
        held.at(0, c) = -7.5;
        held.at(1, c) = 0.25;
        held.at(2, c) = 123.0;
    }
    const Matrix held_out = apply_transform(transform, held);
    for (const double v : held_out.data) REQUIRE(std::isfinite(v));
    for (std::size_t c = 0; c < 5; ++c) {
        if (transform.stddev[c] == 1.0 && transform.lambda[c] == 1.0) continue;
        REQUIRE(held_out.at(0, c) < held_out.at(1, c));
        REQUIRE(held_out.at(1, c) < held_out.at(2, c));
    }

    CHECK_THROWS_AS(fit_transform(Matrix(1, 3), 1), Error);
    CHECK_THROWS_AS(apply_transform(transform, Matrix(2, 7)), Error);
}

TEST_CASE("transform serialization round-trips") {
    Rng rng(34);
    Matrix matrix(20, 3);
    for (auto& v : matrix.data) v = std::exp(rng.next_normal());
    const auto transform = fit_transform(matrix, 1);
    const auto dir = testutil::fresh_temp_dir("transform");
    save_transform(transform, dir / "t.txt");
    const auto loaded = load_transform(dir / "t.txt");
    CHECK(loaded.lambda == transform.lambda);
    CHECK(loaded.mean == transform.mean);
    CHECK(loaded.stddev == transform.stddev);
    const auto a = apply_transform(transform, matrix);
    const auto b = apply_transform(loaded, matrix);
    CHECK(a.data == b.data);
    std::filesystem::remove_all(dir);
}
