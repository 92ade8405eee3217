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

#ifndef STYLO_PIPELINE_HPP_
#define STYLO_PIPELINE_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/features.hpp"
#include "stylo/models.hpp"
#include "stylo/transform.hpp"

namespace stylo {

// Artifact names inside the output directory.
inline constexpr const char* kFeaturesFile = "features.tsv";
inline constexpr const char* kBurrowsFile = "burrows.model";
inline constexpr const char* kTransformFile = "transform.txt";
inline constexpr const char* kSplitsFile = "splits.tsv";
inline constexpr const char* kModelFile = "model.txt";
inline constexpr const char* kTrialsFile = "trials.tsv";
inline constexpr const char* kEvaluationFile = "evaluation.txt";
inline constexpr const char* kPredictionsFile = "predictions.tsv";
inline constexpr const char* kWordReportFile = "word_report.tsv";

struct PipelineConfig {
    std::filesystem::path input;
    std::filesystem::path assets_dir = "assets";
    std::filesystem::path out_dir = "artifacts";
    double train_fraction = 0.70;
    double validation_fraction = 0.15;
    double test_fraction = 0.15;
    std::size_t burrows_n = 1000;
    std::string model = "boost";  // forest | boost | vote
    std::size_t trials = 50;
    std::optional<std::uint64_t> seed;  // mandatory; never wall-clock seeded
    std::size_t threads = 0;            // 0 = hardware concurrency
    ForestParams forest;                // fixed-parameter training
    BoostParams boost;

    std::uint64_t require_seed() const;
    SplitSpec split_spec() const;
};

// Flat key=value file; '#' starts a comment line. Unknown keys are errors.
void apply_config_entry(PipelineConfig& config, const std::string& key,
                        const std::string& value);
void load_config_file(PipelineConfig& config, const std::filesystem::path& path);

// author_id -> split assignment, saved next to the feature matrix.
struct SplitManifest {
    std::vector<std::pair<std::string, std::string>> entries;  // (author_id, split)

    std::string split_of(const std::string& author_id) const;
};

void save_split_manifest(const SplitManifest& manifest, const std::filesystem::path& path);
SplitManifest load_split_manifest(const std::filesystem::path& path);

using AnyModel = std::variant<TrainedModel, VotingEnsemble>;

AnyModel load_any_model(const std::filesystem::path& path);
Matrix predict_any(const AnyModel& model, const FeatureMatrix& features);
std::uint64_t model_fingerprint(const AnyModel& model);

// Subcommand bodies. Each throws stylo::Error on failure; human-readable
// progress goes to `out`.
void cmd_ingest(const PipelineConfig& config, std::ostream& out);
void cmd_featurize(const PipelineConfig& config, std::ostream& out);
void cmd_train(const PipelineConfig& config, std::ostream& out);
void cmd_tune(const PipelineConfig& config, std::ostream& out);
void cmd_evaluate(const PipelineConfig& config, std::ostream& out);
void cmd_predict(const PipelineConfig& config, std::ostream& out);
void cmd_report_words(const PipelineConfig& config, std::ostream& out);

}  // namespace stylo

#endif  // STYLO_PIPELINE_HPP_
