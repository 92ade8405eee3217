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

#ifndef STYLO_TUNING_HPP_
#define STYLO_TUNING_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stylo/matrix.hpp"
#include "stylo/models.hpp"
#include "stylo/rng.hpp"

namespace stylo {

struct IntUniform {
    std::int64_t lo;
    std::int64_t hi;  // inclusive
};

struct LogUniform {
    double lo;
    double hi;
};

struct Categorical {
    std::vector<std::string> choices;
};

using ParamSpec = std::variant<IntUniform, LogUniform, Categorical>;
using ParamValue = std::variant<std::int64_t, double, std::string>;

// Ordered: sampling consumes RNG draws parameter by parameter.
struct ParamSpace {
    std::vector<std::pair<std::string, ParamSpec>> params;

    void validate() const;
};

using ParamSet = std::vector<std::pair<std::string, ParamValue>>;

// The tuning grids for both model families: integers uniform over closed
// ranges, reals log-uniform, categories equally likely.
ParamSpace forest_param_space();
ParamSpace boost_param_space();

ParamSet sample_params(const ParamSpace& space, Rng& rng);

ForestParams forest_params_from(const ParamSet& params, std::uint64_t seed);
BoostParams boost_params_from(const ParamSet& params, std::uint64_t seed);

std::string format_param_set(const ParamSet& params);

struct TrialResult {
    std::size_t index = 0;
    ParamSet params;
    double macro_f1 = 0.0;  // 0 when the trial failed
    double train_seconds = 0.0;
    bool failed = false;
    std::string diagnostic;
};

struct SearchResult {
    std::size_t best_index = 0;
    ParamSet best_params;
    std::vector<TrialResult> trials;
};

// Random search selecting by validation macro-F1; ties go to the earlier
// trial. Parameter sets are pre-generated sequentially from the seed, so
// running trials concurrently cannot change which configurations are tried.
// A failing trial scores 0 and the search continues.
SearchResult random_search(const ParamSpace& space, ModelKind kind, std::size_t trials,
                           const Matrix& x_train, std::span<const int> y_train,
                           const Matrix& x_validation, std::span<const int> y_validation,
                           std::uint64_t seed, std::size_t threads = 1);

// One line per trial: index, params, macro-F1, duration.
std::string render_trial_log(std::span<const TrialResult> trials);

}  // namespace stylo

#endif  // STYLO_TUNING_HPP_
