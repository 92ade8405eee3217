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

#ifndef STYLO_FEATURES_HPP_
#define STYLO_FEATURES_HPP_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stylo/burrows.hpp"
#include "stylo/corpus.hpp"
#include "stylo/matrix.hpp"
#include "stylo/readability.hpp"
#include "stylo/tokenizer.hpp"

namespace stylo {

inline constexpr std::array<std::string_view, 6> kDensityNames = {
    "punctuation", "word", "digit", "special", "stopword", "meaningful",
};

// Per-post densities. Token-class densities are over all tokens; stopword,
// meaningful and POS densities are over word tokens. Missing denominators
// give zeros.
struct SyntacticDensities {
    std::array<double, kDensityNames.size()> token{};
    std::array<double, kPosTagCount> pos{};
};

SyntacticDensities syntactic_post_features(std::span<const Token> tokens,
                                           const TextResources& resources);

struct LexicalPostFeatures {
    std::size_t char_count = 0;         // codepoints, whitespace included
    std::size_t unique_word_count = 0;  // distinct word surface forms
};

LexicalPostFeatures lexical_post_features(std::string_view post);

struct AggregationStats {
    double min = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double max = 0.0;
};

// Order statistics over the values; an empty list yields all zeros.
AggregationStats aggregate(std::span<const double> values);

// Ordered feature names: readability aggregates, post length aggregates,
// unique-word aggregates, author word-length min/mean/max, density
// aggregates, then the Burrows' Z block. 119 + burrows_n names.
std::vector<std::string> feature_schema(std::size_t burrows_n);

std::uint64_t schema_fingerprint(std::span<const std::string> schema);

// One fixed-width row per author. The Burrows model must be fitted.
std::vector<double> author_feature_vector(const AuthorCorpus& corpus, const BurrowsModel& burrows,
                                          const TextResources& resources);

struct FeatureMatrix {
    std::vector<std::string> schema;
    std::vector<std::string> author_ids;
    std::vector<std::optional<int>> labels;
    Matrix values;

    std::uint64_t fingerprint() const { return schema_fingerprint(schema); }
};

// Rows in corpus order; parallel across authors when threads > 1, with
// output independent of the thread count.
FeatureMatrix build_feature_matrix(std::span<const AuthorCorpus> corpora,
                                   const BurrowsModel& burrows, const TextResources& resources,
                                   std::size_t threads = 1);

// Tab-separated, header row first, author_id JSON-quoted, doubles at 17
// significant digits so a round trip is bit-exact.
void save_feature_matrix(const FeatureMatrix& matrix, const std::filesystem::path& path);
FeatureMatrix load_feature_matrix(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_FEATURES_HPP_
