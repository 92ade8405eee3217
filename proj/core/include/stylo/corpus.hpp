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

#ifndef STYLO_CORPUS_HPP_
#define STYLO_CORPUS_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace stylo {

inline constexpr int kNotTroll = 0;
inline constexpr int kTroll = 1;

struct PostRecord {
    std::string author_id;
    std::string text;
    std::optional<int> label;
    std::optional<std::string> source_tag;
};

struct AuthorCorpus {
    std::string author_id;
    std::vector<std::string> posts;  // ingest order
    std::optional<int> label;
};

struct SplitSpec {
    double train_fraction = 0.70;
    double validation_fraction = 0.15;
    double test_fraction = 0.15;
    std::uint64_t seed = 0;

    void validate() const;  // fractions in (0,1) and summing to 1
};

struct IngestDiagnostic {
    std::size_t line_number;
    std::string message;
};

struct IngestResult {
    std::vector<PostRecord> records;
    std::vector<IngestDiagnostic> diagnostics;  // one per rejected line
};

// Reads one JSON object per line: required "author_id" and "text" strings,
// optional integer "label" (0/1) and string "source". Lines starting with
// '#' are comments. Rejected lines become diagnostics; conflicting labels
// for one author are fatal.
IngestResult ingest(const std::filesystem::path& path);

// One corpus per author, posts in ingest order, output sorted by author_id.
std::vector<AuthorCorpus> group_by_author(std::span<const PostRecord> records);

struct SplitResult {
    std::vector<AuthorCorpus> train;
    std::vector<AuthorCorpus> validation;
    std::vector<AuthorCorpus> test;
};

// Stratified by class at the author level; every corpus must be labeled and
// each class needs at least 3 authors. Deterministic for a fixed seed.
SplitResult split(std::span<const AuthorCorpus> corpora, const SplitSpec& spec);

struct ClassWeights {
    double not_troll = 1.0;
    double troll = 1.0;

    double of(int label) const { return label == kTroll ? troll : not_troll; }
};

// weight(c) = total / (2 * count(c)), so both classes carry equal total
// weight. Both classes must be present.
ClassWeights class_weights(std::span<const int> labels);

}  // namespace stylo

#endif  // STYLO_CORPUS_HPP_
