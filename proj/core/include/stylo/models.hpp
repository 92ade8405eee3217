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

#ifndef STYLO_MODELS_HPP_
#define STYLO_MODELS_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/matrix.hpp"

namespace stylo {

enum class MaxFeatures { kLog, kSqrt };

// Defaults are the tuned values the search lands on for this model family.
struct ForestParams {
    std::size_t estimators = 346;
    MaxFeatures max_features = MaxFeatures::kSqrt;
    std::size_t max_depth = 10;
    std::size_t min_sample_leaf = 4;
    std::size_t min_sample_split = 4;
    std::uint64_t seed = 0;

    void validate() const;
};

struct BoostParams {
    std::size_t estimators = 705;
    std::size_t max_depth = 4;
    double learning_rate = 9.0e-2;
    double gamma = 3.4e-1;  // minimum split gain
    std::uint64_t seed = 0;

    void validate() const;
};

struct TreeNode {
    std::int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;     // x[feature] <= threshold goes left
    std::int32_t left = -1;
    std::int32_t right = -1;
    // Forest leaves: class distribution. Boost leaves: value[0] is the raw
    // score contribution, learning rate already applied.
    std::array<double, 2> value{};
};

struct Tree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root

    const TreeNode& find_leaf(std::span<const double> row) const;
    std::size_t depth() const;
};

enum class ModelKind { kForest, kBoost };

struct TrainedModel {
    ModelKind kind = ModelKind::kForest;
    std::variant<ForestParams, BoostParams> params;
    std::vector<Tree> trees;
    double base_score = 0.0;  // raw logit offset (boost only)
    std::uint64_t schema_fingerprint = 0;
    std::size_t schema_width = 0;
    // Boost: weighted training log-loss before any tree, then after each
    // round. Non-increasing by construction.
    std::vector<double> training_loss;
};

// Bootstrap-sampled CART trees on weighted Gini impurity. Deterministic for
// a fixed (data, params) pair regardless of thread count.
TrainedModel train_random_forest(const Matrix& X, std::span<const int> y, const ClassWeights& w,
                                 const ForestParams& params, std::uint64_t schema_fingerprint = 0,
                                 std::size_t threads = 1);

// Newton boosting on class-weighted logistic loss; exact greedy splits over
// presorted features, split gain 0.5*(GL^2/HL + GR^2/HR - G^2/H) - gamma.
TrainedModel train_gbt(const Matrix& X, std::span<const int> y, const ClassWeights& w,
                       const BoostParams& params, std::uint64_t schema_fingerprint = 0);

// Rows of (P(not_troll), P(troll)), each summing to 1.
Matrix predict_proba(const TrainedModel& model, const Matrix& X);

struct VotingEnsemble {
    std::vector<TrainedModel> members;
    std::vector<double> weights;  // non-negative, at least one positive
};

// Weighted average of member probability rows; all members must share one
// schema fingerprint.
Matrix soft_vote(const VotingEnsemble& ensemble, const Matrix& X);

void write_model(std::ostream& out, const TrainedModel& model);
TrainedModel read_model(std::istream& in);
void save_model(const TrainedModel& model, const std::filesystem::path& path);
TrainedModel load_model(const std::filesystem::path& path);

void save_ensemble(const VotingEnsemble& ensemble, const std::filesystem::path& path);
VotingEnsemble load_ensemble(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_MODELS_HPP_
