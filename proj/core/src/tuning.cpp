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

#include "stylo/tuning.hpp"

#include <chrono>
#include <sstream>

#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/metrics.hpp"
#include "stylo/parallel.hpp"

namespace stylo {

void ParamSpace::validate() const {
    for (const auto& [name, spec] : params) {
        if (const auto* iu = std::get_if<IntUniform>(&spec)) {
            if (iu->lo > iu->hi) {
                throw Error(ErrorKind::kUsage, "parameter '" + name + "': lo > hi");
            }
        } else if (const auto* lu = std::get_if<LogUniform>(&spec)) {
            if (!(lu->lo > 0.0) || lu->lo > lu->hi) {
                throw Error(ErrorKind::kUsage,
                            "parameter '" + name + "': log-uniform bounds must be positive");
            }
        } else if (const auto* cat = std::get_if<Categorical>(&spec)) {
            if (cat->choices.empty()) {
                throw Error(ErrorKind::kUsage, "parameter '" + name + "': empty choice set");
            }
        }
    }
}

ParamSpace forest_param_space() {
    ParamSpace space;
    space.params = {
        {"estimators", IntUniform{20, 1000}},
        {"max_features", Categorical{{"log", "sqrt"}}},
        {"max_depth", IntUniform{10, 110}},
        {"min_sample_leaf", IntUniform{1, 5}},
        {"min_sample_split", IntUniform{2, 10}},
    };
    return space;
}

ParamSpace boost_param_space() {
    ParamSpace space;
    space.params = {
        {"estimators", IntUniform{20, 1000}},
        {"max_depth", IntUniform{1, 20}},
        {"learning_rate", LogUniform{1e-4, 1e-1}},
        {"gamma", LogUniform{1e-4, 1e0}},
    };
    return space;
}

ParamSet sample_params(const ParamSpace& space, Rng& rng) {
    ParamSet out;
    out.reserve(space.params.size());
    for (const auto& [name, spec] : space.params) {
        if (const auto* iu = std::get_if<IntUniform>(&spec)) {
            out.emplace_back(name, rng.next_int(iu->lo, iu->hi));
        } else if (const auto* lu = std::get_if<LogUniform>(&spec)) {
            out.emplace_back(name, rng.next_log_uniform(lu->lo, lu->hi));
        } else {
            const auto& choices = std::get<Categorical>(spec).choices;
            out.emplace_back(
                name,
                choices[static_cast<std::size_t>(
                    rng.next_int(0, static_cast<std::int64_t>(choices.size()) - 1))]);
        }
    }
    return out;
}

namespace {

const ParamValue& find_param(const ParamSet& params, std::string_view name) {
    for (const auto& [key, value] : params) {
        if (key == name) return value;
    }
    throw Error(ErrorKind::kUsage, "missing parameter '" + std::string(name) + "'");
}

std::size_t get_count(const ParamSet& params, std::string_view name) {
    return static_cast<std::size_t>(std::get<std::int64_t>(find_param(params, name)));
}

double get_real(const ParamSet& params, std::string_view name) {
    return std::get<double>(find_param(params, name));
}

}  // namespace

ForestParams forest_params_from(const ParamSet& params, std::uint64_t seed) {
    ForestParams p;
    p.estimators = get_count(params, "estimators");
    p.max_features = std::get<std::string>(find_param(params, "max_features")) == "log"
                         ? MaxFeatures::kLog
                         : MaxFeatures::kSqrt;
    p.max_depth = get_count(params, "max_depth");
    p.min_sample_leaf = get_count(params, "min_sample_leaf");
    p.min_sample_split = get_count(params, "min_sample_split");
    p.seed = seed;
    return p;
}

BoostParams boost_params_from(const ParamSet& params, std::uint64_t seed) {
    BoostParams p;
    p.estimators = get_count(params, "estimators");
    p.max_depth = get_count(params, "max_depth");
    p.learning_rate = get_real(params, "learning_rate");
    p.gamma = get_real(params, "gamma");
    p.seed = seed;
    return p;
}

std::string format_param_set(const ParamSet& params) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [name, value] : params) {
        if (!first) out << ',';
        first = false;
        out << name << '=';
        if (const auto* i = std::get_if<std::int64_t>(&value)) {
            out << *i;
        } else if (const auto* d = std::get_if<double>(&value)) {
            out << format_double(*d);
        } else {
            out << std::get<std::string>(value);
        }
    }
    return out.str();
}

SearchResult random_search(const ParamSpace& space, ModelKind kind, std::size_t trials,
                           const Matrix& x_train, std::span<const int> y_train,
                           const Matrix& x_validation, std::span<const int> y_validation,
                           std::uint64_t seed, std::size_t threads) {
    if (trials < 1) {
        throw Error(ErrorKind::kUsage, "random_search needs at least one trial");
    }
    space.validate();
    const ClassWeights weights = class_weights(y_train);

    SearchResult result;
    result.trials.resize(trials);
    Rng rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
        result.trials[t].index = t;
        result.trials[t].params = sample_params(space, rng);
    }

    parallel_for(trials, threads, [&](std::size_t t) {
        TrialResult& trial = result.trials[t];
        const auto start = std::chrono::steady_clock::now();
        try {
            TrainedModel model;
            const std::uint64_t model_seed = Rng::derive(seed, t);
            if (kind == ModelKind::kForest) {
                model = train_random_forest(x_train, y_train, weights,
                                            forest_params_from(trial.params, model_seed));
            } else {
                model = train_gbt(x_train, y_train, weights,
                                  boost_params_from(trial.params, model_seed));
            }
            const Matrix proba = predict_proba(model, x_validation);
            std::vector<int> predicted(proba.rows);
            for (std::size_t r = 0; r < proba.rows; ++r) {
                predicted[r] = proba.at(r, 1) >= proba.at(r, 0) ? 1 : 0;
            }
            trial.macro_f1 = macro_prf(confusion(y_validation, predicted)).macro_f1;
        } catch (const std::exception& e) {
            trial.failed = true;
            trial.macro_f1 = 0.0;
            trial.diagnostic = e.what();
        }
        trial.train_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    });

    result.best_index = 0;
    for (std::size_t t = 1; t < trials; ++t) {
        if (result.trials[t].macro_f1 > result.trials[result.best_index].macro_f1) {
            result.best_index = t;
        }
    }
    result.best_params = result.trials[result.best_index].params;
    return result;
}

std::string render_trial_log(std::span<const TrialResult> trials) {
    std::ostringstream out;
    out << "index\tparams\tmacro_f1\tseconds\tstatus\n";
    for (const auto& trial : trials) {
        out << trial.index << '\t' << format_param_set(trial.params) << '\t'
            << format_double(trial.macro_f1) << '\t' << format_fixed(trial.train_seconds, 3)
            << '\t' << (trial.failed ? "failed: " + trial.diagnostic : std::string("ok")) << '\n';
    }
    return out.str();
}

}  // namespace stylo
