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

#ifndef STYLO_BURROWS_HPP_
#define STYLO_BURROWS_HPP_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "stylo/corpus.hpp"
#include "stylo/tokenizer.hpp"

namespace stylo {

// Top-n vocabulary with the element-wise mean and population standard
// deviation of the author word-fraction profiles it was fitted on. Fit on
// the training split only; frozen afterwards.
struct BurrowsModel {
    std::vector<std::string> vocabulary;  // most frequent first
    std::vector<double> mu;
    std::vector<double> sigma;

    std::size_t size() const { return vocabulary.size(); }
    bool fitted() const { return !vocabulary.empty(); }
};

// The n most frequent word types over all posts; ties break lexicographically
// ascending. n is clamped to the number of distinct types.
std::vector<std::string> fit_vocabulary(std::span<const AuthorCorpus> corpora, std::size_t n);

// Entry i = author's occurrences of vocabulary[i] / author's word-token
// count. An author with no word tokens gets an all-zero profile.
std::vector<double> author_profile(const AuthorCorpus& corpus,
                                   std::span<const std::string> vocabulary);

// mu/sigma element-wise over author profiles; each author counts once.
BurrowsModel fit_z_model(std::vector<std::string> vocabulary,
                         std::span<const std::vector<double>> profiles);

// fit_vocabulary + author_profile + fit_z_model in one call.
BurrowsModel fit_burrows_model(std::span<const AuthorCorpus> corpora, std::size_t n);

// (x - mu) / sigma element-wise; entries with sigma == 0 map to 0.
std::vector<double> z_score(std::span<const double> profile, const BurrowsModel& model);

struct WordReportRow {
    std::string token;
    std::uint64_t uses = 0;           // occurrences over the whole corpus
    double troll_share = 0.0;         // percent of uses by label-1 authors
    double points_from_random = 0.0;  // troll_share - corpus baseline, unrounded
};

struct WordReport {
    double baseline_percent = 0.0;  // label-1 share of all word tokens
    std::vector<WordReportRow> rows;  // sorted by points_from_random descending
};

// Per-token usage report over the top-n vocabulary; all corpora must be
// labeled.
WordReport word_report(std::span<const AuthorCorpus> corpora, std::size_t n);

// Tab-separated table: token, uses, troll_percent (2 decimals), points
// (signed, 2 decimals), stopword flag.
std::string render_word_report(const WordReport& report, const TextResources& resources);

void save_burrows_model(const BurrowsModel& model, const std::filesystem::path& path);
BurrowsModel load_burrows_model(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_BURROWS_HPP_
