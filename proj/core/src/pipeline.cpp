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

#include "stylo/pipeline.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "stylo/burrows.hpp"
#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/metrics.hpp"
#include "stylo/rng.hpp"
#include "stylo/tuning.hpp"
#include "stylo/unicode.hpp"

namespace stylo {

std::uint64_t PipelineConfig::require_seed() const {
    if (!seed) {
        throw Error(ErrorKind::kUsage, "a seed is required (--seed or seed= in the config)");
    }
    return *seed;
}

SplitSpec PipelineConfig::split_spec() const {
    SplitSpec spec;
    spec.train_fraction = train_fraction;
    spec.validation_fraction = validation_fraction;
    spec.test_fraction = test_fraction;
    spec.seed = require_seed();
    return spec;
}

void apply_config_entry(PipelineConfig& config, const std::string& key,
                        const std::string& value) {
    if (key == "input") {
        config.input = value;
    } else if (key == "assets") {
        config.assets_dir = value;
    } else if (key == "out") {
        config.out_dir = value;
    } else if (key == "seed") {
        config.seed = parse_uint(value);
    } else if (key == "threads") {
        config.threads = parse_uint(value);
    } else if (key == "train_fraction") {
        config.train_fraction = parse_double(value);
    } else if (key == "validation_fraction") {
        config.validation_fraction = parse_double(value);
    } else if (key == "test_fraction") {
        config.test_fraction = parse_double(value);
    } else if (key == "burrows_n") {
        config.burrows_n = parse_uint(value);
    } else if (key == "model") {
        if (value != "forest" && value != "boost" && value != "vote") {
            throw Error(ErrorKind::kUsage, "model must be forest, boost or vote");
        }
        config.model = value;
    } else if (key == "trials") {
        config.trials = parse_uint(value);
    } else if (key == "forest.estimators") {
        config.forest.estimators = parse_uint(value);
    } else if (key == "forest.max_features") {
        if (value != "sqrt" && value != "log") {
            throw Error(ErrorKind::kUsage, "forest.max_features must be sqrt or log");
        }
        config.forest.max_features = value == "log" ? MaxFeatures::kLog : MaxFeatures::kSqrt;
    } else if (key == "forest.max_depth") {
        config.forest.max_depth = parse_uint(value);
    } else if (key == "forest.min_sample_leaf") {
        config.forest.min_sample_leaf = parse_uint(value);
    } else if (key == "forest.min_sample_split") {
        config.forest.min_sample_split = parse_uint(value);
    } else if (key == "boost.estimators") {
        config.boost.estimators = parse_uint(value);
    } else if (key == "boost.max_depth") {
        config.boost.max_depth = parse_uint(value);
    } else if (key == "boost.learning_rate") {
        config.boost.learning_rate = parse_double(value);
    } else if (key == "boost.gamma") {
        config.boost.gamma = parse_double(value);
    } else {
        throw Error(ErrorKind::kUsage, "unknown config key: " + key);
    }
}

void load_config_file(PipelineConfig& config, const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::kMissingInput, "cannot open config: " + path.string());
    }
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto trimmed = unicode::trim(line);
        if (trimmed.empty() || trimmed[0] == '#') continue;
        const auto eq = trimmed.find('=');
        if (eq == std::string_view::npos) {
            throw Error(ErrorKind::kUsage, "config " + path.string() + ":" +
                                               std::to_string(line_no) + ": expected key=value");
        }
        apply_config_entry(config, std::string(unicode::trim(trimmed.substr(0, eq))),
                           std::string(unicode::trim(trimmed.substr(eq + 1))));
    }
}

std::string SplitManifest::split_of(const std::string& author_id) const {
    for (const auto& [id, split] : entries) {
        if (id == author_id) return split;
    }
    throw Error(ErrorKind::kInvalidData, "author not present in split manifest: " + author_id);
}

void save_split_manifest(const SplitManifest& manifest, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "split\tauthor_id\n";
    for (const auto& [id, split] : manifest.entries) {
        out << split << '\t' << nlohmann::json(id).dump() << '\n';
    }
    atomic_write_file(path, out.str());
}

SplitManifest load_split_manifest(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line) || line != "split\tauthor_id") {
        throw Error(ErrorKind::kInvalidData, "malformed split manifest: " + path.string());
    }
    SplitManifest manifest;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw Error(ErrorKind::kInvalidData, "malformed split manifest: " + path.string());
        }
        const std::string split = line.substr(0, tab);
        if (split != "train" && split != "validation" && split != "test") {
            throw Error(ErrorKind::kInvalidData, "unknown split name: " + split);
        }
        const auto id = nlohmann::json::parse(line.substr(tab + 1), nullptr, false);
        if (id.is_discarded() || !id.is_string()) {
            throw Error(ErrorKind::kInvalidData, "bad author_id in split manifest");
        }
        manifest.entries.emplace_back(id.get<std::string>(), split);
    }
    return manifest;
}

namespace {

struct LabeledRows {
    Matrix x;
    std::vector<int> y;
    std::vector<std::string> author_ids;
};

std::unordered_map<std::string, std::string> manifest_map(const SplitManifest& manifest) {
    std::unordered_map<std::string, std::string> map;
    for (const auto& [id, split] : manifest.entries) map.emplace(id, split);
    return map;
}

LabeledRows select_split(const FeatureMatrix& features, const SplitManifest& manifest,
                         const std::string& split, bool require_labels) {
    const auto map = manifest_map(manifest);
    LabeledRows rows;
    std::vector<std::size_t> indices;
    for (std::size_t r = 0; r < features.values.rows; ++r) {
        const auto it = map.find(features.author_ids[r]);
        if (it == map.end() || it->second != split) continue;
        if (!features.labels[r]) {
            if (require_labels) {
                throw Error(ErrorKind::kInvalidData,
                            "author '" + features.author_ids[r] + "' in split '" + split +
                                "' has no label");
            }
            continue;
        }
        indices.push_back(r);
    }
    rows.x = Matrix(indices.size(), features.values.cols);
    rows.y.reserve(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) {
        const auto r = indices[k];
        std::copy(features.values.row(r).begin(), features.values.row(r).end(),
                  rows.x.row(k).begin());
        rows.y.push_back(*features.labels[r]);
        rows.author_ids.push_back(features.author_ids[r]);
    }
    return rows;
}

FeatureMatrix load_features_checked(const PipelineConfig& config) {
    return load_feature_matrix(config.out_dir / kFeaturesFile);
}

void check_fingerprint(const AnyModel& model, const FeatureMatrix& features) {
    if (model_fingerprint(model) != features.fingerprint()) {
        throw Error(ErrorKind::kInvalidData,
                    "model was trained on a different feature schema than this matrix");
    }
}

std::vector<int> predicted_labels(const Matrix& proba) {
    std::vector<int> labels(proba.rows);
    for (std::size_t r = 0; r < proba.rows; ++r) {
        labels[r] = proba.at(r, 1) >= proba.at(r, 0) ? 1 : 0;
    }
    return labels;
}

double validation_macro_f1(const TrainedModel& model, const LabeledRows& validation) {
    const Matrix proba = predict_proba(model, validation.x);
    return macro_prf(confusion(validation.y, predicted_labels(proba))).macro_f1;
}

}  // namespace

AnyModel load_any_model(const std::filesystem::path& path) {
    const std::string content = read_file(path);
    if (content.rfind("stylo.ensemble v1", 0) == 0) return load_ensemble(path);
    return load_model(path);
}

Matrix predict_any(const AnyModel& model, const FeatureMatrix& features) {
    check_fingerprint(model, features);
    if (const auto* single = std::get_if<TrainedModel>(&model)) {
        return predict_proba(*single, features.values);
    }
    return soft_vote(std::get<VotingEnsemble>(model), features.values);
}

std::uint64_t model_fingerprint(const AnyModel& model) {
    if (const auto* single = std::get_if<TrainedModel>(&model)) {
        return single->schema_fingerprint;
    }
    const auto& ensemble = std::get<VotingEnsemble>(model);
    if (ensemble.members.empty()) {
        throw Error(ErrorKind::kInvalidData, "empty ensemble");
    }
    return ensemble.members[0].schema_fingerprint;
}

void cmd_ingest(const PipelineConfig& config, std::ostream& out) {
    const IngestResult result = ingest(config.input);
    const auto corpora = group_by_author(result.records);
    std::size_t trolls = 0;
    std::size_t not_trolls = 0;
    std::size_t unlabeled = 0;
    for (const auto& corpus : corpora) {
        if (!corpus.label) {
            ++unlabeled;
        } else if (*corpus.label == kTroll) {
            ++trolls;
        } else {
            ++not_trolls;
        }
    }
    out << "records: " << result.records.size() << "\n";
    out << "rejected lines: " << result.diagnostics.size() << "\n";
    for (const auto& diag : result.diagnostics) {
        out << "  line " << diag.line_number << ": " << diag.message << "\n";
    }
    out << "authors: " << corpora.size() << " (troll " << trolls << ", not_troll " << not_trolls
        << ", unlabeled " << unlabeled << ")\n";
}

void cmd_featurize(const PipelineConfig& config, std::ostream& out) {
    const auto resources = load_text_resources(config.assets_dir);
    const IngestResult result = ingest(config.input);
    for (const auto& diag : result.diagnostics) {
        out << "rejected line " << diag.line_number << ": " << diag.message << "\n";
    }
    const auto corpora = group_by_author(result.records);
    const SplitResult splits = split(corpora, config.split_spec());

    const BurrowsModel burrows = fit_burrows_model(splits.train, config.burrows_n);
    FeatureMatrix features =
        build_feature_matrix(corpora, burrows, resources, config.threads);

    SplitManifest manifest;
    for (const auto& corpus : splits.train) manifest.entries.emplace_back(corpus.author_id, "train");
    for (const auto& corpus : splits.validation)
        manifest.entries.emplace_back(corpus.author_id, "validation");
    for (const auto& corpus : splits.test) manifest.entries.emplace_back(corpus.author_id, "test");
    std::sort(manifest.entries.begin(), manifest.entries.end());

    // Fit the de-skewing transform on training rows only, then apply it to
    // every row.
    const auto map = manifest_map(manifest);
    std::vector<std::size_t> train_rows;
    for (std::size_t r = 0; r < features.values.rows; ++r) {
        if (map.at(features.author_ids[r]) == "train") train_rows.push_back(r);
    }
    Matrix train_matrix(train_rows.size(), features.values.cols);
    for (std::size_t k = 0; k < train_rows.size(); ++k) {
        std::copy(features.values.row(train_rows[k]).begin(),
                  features.values.row(train_rows[k]).end(), train_matrix.row(k).begin());
    }
    const FeatureTransform transform = fit_transform(train_matrix, config.threads);
    features.values = apply_transform(transform, features.values);

    save_feature_matrix(features, config.out_dir / kFeaturesFile);
    save_burrows_model(burrows, config.out_dir / kBurrowsFile);
    save_transform(transform, config.out_dir / kTransformFile);
    save_split_manifest(manifest, config.out_dir / kSplitsFile);

    out << "authors: " << features.values.rows << "\n";
    out << "features per author: " << features.values.cols << "\n";
    out << "split: train " << splits.train.size() << ", validation " << splits.validation.size()
        << ", test " << splits.test.size() << "\n";
    out << "wrote " << (config.out_dir / kFeaturesFile).string() << "\n";
}

void cmd_train(const PipelineConfig& config, std::ostream& out) {
    const FeatureMatrix features = load_features_checked(config);
    const SplitManifest manifest = load_split_manifest(config.out_dir / kSplitsFile);
    const LabeledRows train = select_split(features, manifest, "train", true);
    const ClassWeights weights = class_weights(train.y);
    const std::uint64_t fingerprint = features.fingerprint();
    const std::uint64_t seed = config.require_seed();

    if (config.model == "vote") {
        const LabeledRows validation = select_split(features, manifest, "validation", true);
        ForestParams fp = config.forest;
        fp.seed = Rng::derive(seed, 0);
        BoostParams bp = config.boost;
        bp.seed = Rng::derive(seed, 1);
        VotingEnsemble ensemble;
        ensemble.members.push_back(
            train_random_forest(train.x, train.y, weights, fp, fingerprint, config.threads));
        ensemble.members.push_back(train_gbt(train.x, train.y, weights, bp, fingerprint));
        for (const auto& member : ensemble.members) {
            ensemble.weights.push_back(validation_macro_f1(member, validation));
        }
        if (std::all_of(ensemble.weights.begin(), ensemble.weights.end(),
                        [](double w) { return w == 0.0; })) {
            // Degenerate members carry equal voice rather than none.
            std::fill(ensemble.weights.begin(), ensemble.weights.end(), 1.0);
        }
        save_ensemble(ensemble, config.out_dir / kModelFile);
        out << "trained voting ensemble (forest weight " << format_double(ensemble.weights[0])
            << ", boost weight " << format_double(ensemble.weights[1]) << ")\n";
    } else if (config.model == "forest") {
        ForestParams params = config.forest;
        params.seed = seed;
        const TrainedModel model =
            train_random_forest(train.x, train.y, weights, params, fingerprint, config.threads);
        save_model(model, config.out_dir / kModelFile);
        out << "trained random forest (" << params.estimators << " trees)\n";
    } else {
        BoostParams params = config.boost;
        params.seed = seed;
        const TrainedModel model = train_gbt(train.x, train.y, weights, params, fingerprint);
        save_model(model, config.out_dir / kModelFile);
        out << "trained boosting model (" << params.estimators << " rounds, final log-loss "
            << format_double(model.training_loss.back()) << ")\n";
    }
    out << "wrote " << (config.out_dir / kModelFile).string() << "\n";
}

void cmd_tune(const PipelineConfig& config, std::ostream& out) {
    if (config.model != "forest" && config.model != "boost") {
        throw Error(ErrorKind::kUsage, "tune expects model=forest or model=boost");
    }
    const FeatureMatrix features = load_features_checked(config);
    const SplitManifest manifest = load_split_manifest(config.out_dir / kSplitsFile);
    const LabeledRows train = select_split(features, manifest, "train", true);
    const LabeledRows validation = select_split(features, manifest, "validation", true);
    const std::uint64_t seed = config.require_seed();
    const ModelKind kind = config.model == "forest" ? ModelKind::kForest : ModelKind::kBoost;
    const ParamSpace space =
        kind == ModelKind::kForest ? forest_param_space() : boost_param_space();

    const SearchResult result =
        random_search(space, kind, config.trials, train.x, train.y, validation.x, validation.y,
                      seed, config.threads);
    atomic_write_file(config.out_dir / kTrialsFile, render_trial_log(result.trials));

    const ClassWeights weights = class_weights(train.y);
    const std::uint64_t fingerprint = features.fingerprint();
    const std::uint64_t best_seed = Rng::derive(seed, result.best_index);
    TrainedModel best;
    if (kind == ModelKind::kForest) {
        best = train_random_forest(train.x, train.y, weights,
                                   forest_params_from(result.best_params, best_seed), fingerprint,
                                   config.threads);
    } else {
        best = train_gbt(train.x, train.y, weights,
                         boost_params_from(result.best_params, best_seed), fingerprint);
    }
    save_model(best, config.out_dir / kModelFile);

    out << "trials: " << result.trials.size() << "\n";
    out << "best trial " << result.best_index << ": "
        << format_param_set(result.best_params) << "\n";
    out << "best validation macro-F1: "
        << format_fixed(result.trials[result.best_index].macro_f1, 4) << "\n";
    out << "wrote " << (config.out_dir / kTrialsFile).string() << " and "
        << (config.out_dir / kModelFile).string() << "\n";
}

void cmd_evaluate(const PipelineConfig& config, std::ostream& out) {
    const FeatureMatrix features = load_features_checked(config);
    const SplitManifest manifest = load_split_manifest(config.out_dir / kSplitsFile);
    const AnyModel model = load_any_model(config.out_dir / kModelFile);
    const LabeledRows test = select_split(features, manifest, "test", true);

    FeatureMatrix test_features;
    test_features.schema = features.schema;
    test_features.author_ids = test.author_ids;
    test_features.values = test.x;
    test_features.labels.assign(test.y.begin(), test.y.end());

    const Matrix proba = predict_any(model, test_features);
    const ConfusionMatrix cm = confusion(test.y, predicted_labels(proba));
    const MacroScores scores = macro_prf(cm);
    const std::string report = render_evaluation_report(cm, scores);
    atomic_write_file(config.out_dir / kEvaluationFile, report);
    out << report;
}

void cmd_predict(const PipelineConfig& config, std::ostream& out) {
    const FeatureMatrix features = load_features_checked(config);
    const AnyModel model = load_any_model(config.out_dir / kModelFile);
    const Matrix proba = predict_any(model, features);

    std::ostringstream table;
    table << "author_id\tp_troll\tpredicted_label\n";
    for (std::size_t r = 0; r < proba.rows; ++r) {
        table << nlohmann::json(features.author_ids[r]).dump() << '\t'
              << format_double(proba.at(r, 1)) << '\t'
              << (proba.at(r, 1) >= proba.at(r, 0) ? 1 : 0) << '\n';
    }
    atomic_write_file(config.out_dir / kPredictionsFile, table.str());
    out << table.str();
}

void cmd_report_words(const PipelineConfig& config, std::ostream& out) {
    const auto resources = load_text_resources(config.assets_dir);
    const IngestResult result = ingest(config.input);
    const auto corpora = group_by_author(result.records);
    const WordReport report = word_report(corpora, config.burrows_n);
    const std::string table = render_word_report(report, resources);
    atomic_write_file(config.out_dir / kWordReportFile, table);
    out << table;
}

}  // namespace stylo
