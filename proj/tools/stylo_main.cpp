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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "stylo/error.hpp"
#include "stylo/pipeline.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string input;
    std::string assets;
    std::string out;
    std::string model;
    std::uint64_t seed = 0;
    std::size_t threads = 0;
    std::size_t trials = 0;
    std::size_t burrows_n = 0;
    double train_fraction = 0.0;
    double validation_fraction = 0.0;
    double test_fraction = 0.0;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stylo: stylometric author profiling and troll classification"};
    app.require_subcommand(1);
    app.fallthrough();

    CliOptions opts;
    const auto config_opt = app.add_option("--config", opts.config_path, "key=value config file");
    const auto seed_opt = app.add_option("--seed", opts.seed, "deterministic RNG seed");
    const auto threads_opt =
        app.add_option("--threads", opts.threads, "worker threads (0 = all cores)");
    const auto assets_opt = app.add_option("--assets", opts.assets, "data assets directory");
    const auto out_opt = app.add_option("--out", opts.out, "artifacts directory");
    const auto input_opt = app.add_option("--input", opts.input, "line-delimited record file");
    const auto model_opt =
        app.add_option("--model", opts.model, "model kind: forest, boost or vote");
    const auto trials_opt = app.add_option("--trials", opts.trials, "random-search trial count");
    const auto burrows_opt =
        app.add_option("--burrows-n", opts.burrows_n, "Burrows vocabulary size");
    const auto train_frac_opt =
        app.add_option("--train-fraction", opts.train_fraction, "author share for training");
    const auto val_frac_opt = app.add_option("--validation-fraction", opts.validation_fraction,
                                             "author share for validation");
    const auto test_frac_opt =
        app.add_option("--test-fraction", opts.test_fraction, "author share for testing");

    auto* ingest = app.add_subcommand("ingest", "validate a record file and report counts");
    auto* featurize =
        app.add_subcommand("featurize", "build the per-author feature matrix and artifacts");
    auto* train = app.add_subcommand("train", "train a model with fixed parameters");
    auto* tune = app.add_subcommand("tune", "random-search hyper-parameters, keep the best model");
    auto* evaluate = app.add_subcommand("evaluate", "score the trained model on the test split");
    auto* predict = app.add_subcommand("predict", "emit per-author troll probabilities");
    auto* report_words =
        app.add_subcommand("report-words", "per-token usage and troll-share table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        stylo::PipelineConfig config;
        if (config_opt->count() > 0) stylo::load_config_file(config, opts.config_path);
        // Flags override config-file values.
        if (seed_opt->count() > 0) config.seed = opts.seed;
        if (threads_opt->count() > 0) config.threads = opts.threads;
        if (assets_opt->count() > 0) config.assets_dir = opts.assets;
        if (out_opt->count() > 0) config.out_dir = opts.out;
        if (input_opt->count() > 0) config.input = opts.input;
        if (model_opt->count() > 0) {
            stylo::apply_config_entry(config, "model", opts.model);
        }
        if (trials_opt->count() > 0) config.trials = opts.trials;
        if (burrows_opt->count() > 0) config.burrows_n = opts.burrows_n;
        if (train_frac_opt->count() > 0) config.train_fraction = opts.train_fraction;
        if (val_frac_opt->count() > 0) config.validation_fraction = opts.validation_fraction;
        if (test_frac_opt->count() > 0) config.test_fraction = opts.test_fraction;

        if (ingest->parsed()) {
            stylo::cmd_ingest(config, std::cout);
        } else if (featurize->parsed()) {
            stylo::cmd_featurize(config, std::cout);
        } else if (train->parsed()) {
            stylo::cmd_train(config, std::cout);
        } else if (tune->parsed()) {
            stylo::cmd_tune(config, std::cout);
        } else if (evaluate->parsed()) {
            stylo::cmd_evaluate(config, std::cout);
        } else if (predict->parsed()) {
            stylo::cmd_predict(config, std::cout);
        } else if (report_words->parsed()) {
            stylo::cmd_report_words(config, std::cout);
        }
        return 0;
    } catch (const stylo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.exit_code();
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
