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

#ifndef STYLO_RNG_HPP_
#define STYLO_RNG_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace stylo {

// Deterministic RNG wrapper. std::mt19937_64 has a fully specified output
// sequence; the standard distributions do not, so all mappings from raw
// 64-bit draws to values live here.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform real in [0, 1) with 53 bits of precision.
    double next_real() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [lo, hi], both endpoints included.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        // Rejection sampling keeps the draw exactly uniform.
        const std::uint64_t limit = std::uint64_t(-1) - (std::uint64_t(-1) % span + 1) % span;
        std::uint64_t r = engine_();
        while (r > limit) r = engine_();
        return lo + static_cast<std::int64_t>(r % span);
    }

    double next_uniform(double lo, double hi) {
        return lo + next_real() * (hi - lo);
    }

    double next_log_uniform(double lo, double hi) {
        return std::exp(next_uniform(std::log(lo), std::log(hi)));
    }

    // Standard normal via Box-Muller (deterministic, no cached spare).
    double next_normal() {
        double u1 = next_real();
        while (u1 <= 0.0) u1 = next_real();
        const double u2 = next_real();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
    }

    // Fisher-Yates with our own bounded draw; std::shuffle is
    // implementation-defined.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            const std::size_t j =
                static_cast<std::size_t>(next_int(0, static_cast<std::int64_t>(i) - 1));
            std::swap(values[i - 1], values[j]);
        }
    }

    // Derives an independent stream, e.g. one per tree or per trial.
    static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
        // splitmix64 finalizer over the combined state.
        std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace stylo

#endif  // STYLO_RNG_HPP_
