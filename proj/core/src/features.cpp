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

#include "stylo/features.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#include "stylo/error.hpp"
#include "stylo/io.hpp"
#include "stylo/parallel.hpp"
#include "stylo/unicode.hpp"

namespace stylo {

SyntacticDensities syntactic_post_features(std::span<const Token> tokens,
                                           const TextResources& resources) {
    SyntacticDensities densities;
    if (tokens.empty()) return densities;

    std::array<std::size_t, 4> class_counts{};
    std::size_t stopwords = 0;
    std::array<std::size_t, kPosTagCount> pos_counts{};
    std::size_t words = 0;
    for (const auto& token : tokens) {
        ++class_counts[static_cast<std::size_t>(token.token_class)];
        if (token.token_class != TokenClass::kWord) continue;
        ++words;
        if (is_stopword(token.text, resources)) ++stopwords;
        ++pos_counts[static_cast<std::size_t>(pos_tag_word(token.text, resources))];
    }

    const double total = static_cast<double>(tokens.size());
    densities.token[0] = static_cast<double>(class_counts[static_cast<int>(TokenClass::kPunctuation)]) / total;
    densities.token[1] = static_cast<double>(class_counts[static_cast<int>(TokenClass::kWord)]) / total;
    densities.token[2] = static_cast<double>(class_counts[static_cast<int>(TokenClass::kDigit)]) / total;
    densities.token[3] = static_cast<double>(class_counts[static_cast<int>(TokenClass::kSpecial)]) / total;
    if (words > 0) {
        const double word_count = static_cast<double>(words);
        densities.token[4] = static_cast<double>(stopwords) / word_count;
        densities.token[5] = static_cast<double>(words - stopwords) / word_count;
        for (std::size_t t = 0; t < kPosTagCount; ++t) {
            densities.pos[t] = static_cast<double>(pos_counts[t]) / word_count;
        }
    }
    return densities;
}

LexicalPostFeatures lexical_post_features(std::string_view post) {
    LexicalPostFeatures features;
    features.char_count = unicode::length(post);
    std::unordered_set<std::string> seen;
    for (auto& token : tokenize(post)) {
        if (token.token_class != TokenClass::kWord) continue;
        seen.insert(std::move(token.text));
    }
    features.unique_word_count = seen.size();
    return features;
}

AggregationStats aggregate(std::span<const double> values) {
    AggregationStats stats;
    if (values.empty()) return stats;
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    stats.min = sorted.front();
    stats.max = sorted.back();
    double sum = 0.0;
    for (const double v : sorted) sum += v;
    stats.mean = sum / static_cast<double>(sorted.size());
    const std::size_t mid = sorted.size() / 2;
    stats.median = sorted.size() % 2 == 1 ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;
    return stats;
}

namespace {

constexpr std::array<std::string_view, 4> kAggNames = {"min", "mean", "median", "max"};

void append_aggregates(std::vector<double>& out, std::span<const double> values) {
    const AggregationStats stats = aggregate(values);
    out.push_back(stats.min);
    out.push_back(stats.mean);
    out.push_back(stats.median);
    out.push_back(stats.max);
}

}  // namespace

std::vector<std::string> feature_schema(std::size_t burrows_n) {
    std::vector<std::string> names;
    names.reserve(119 + burrows_n);
    for (const auto metric : kReadabilityMetricNames) {
        for (const auto agg : kAggNames) {
            names.push_back("readability_" + std::string(metric) + "_" + std::string(agg));
        }
    }
    for (const auto agg : kAggNames) names.push_back("post_chars_" + std::string(agg));
    for (const auto agg : kAggNames) names.push_back("post_unique_words_" + std::string(agg));
    names.push_back("word_length_min");
    names.push_back("word_length_mean");
    names.push_back("word_length_max");
    for (const auto density : kDensityNames) {
        for (const auto agg : kAggNames) {
            names.push_back("density_" + std::string(density) + "_" + std::string(agg));
        }
    }
    for (std::size_t t = 0; t < kPosTagCount; ++t) {
        std::string tag(pos_tag_name(static_cast<PosTag>(t)));
        std::transform(tag.begin(), tag.end(), tag.begin(),
                       [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
        for (const auto agg : kAggNames) {
            names.push_back("pos_" + tag + "_" + std::string(agg));
        }
    }
    for (std::size_t i = 0; i < burrows_n; ++i) {
        char suffix[24];
        std::snprintf(suffix, sizeof(suffix), "%04zu", i);
        names.push_back(std::string("burrows_z_") + suffix);
    }
    return names;
}

std::uint64_t schema_fingerprint(std::span<const std::string> schema) {
    std::string joined;
    for (const auto& name : schema) {
        joined += name;
        joined += '\n';
    }
    return fnv1a64(joined);
}

std::vector<double> author_feature_vector(const AuthorCorpus& corpus, const BurrowsModel& burrows,
                                          const TextResources& resources) {
    if (!burrows.fitted()) {
        throw Error(ErrorKind::kInvalidData, "author_feature_vector: unfitted Burrows model");
    }
    const std::size_t posts = corpus.posts.size();

    std::array<std::vector<double>, 8> readability_values;
    std::vector<double> char_counts, unique_counts;
    char_counts.reserve(posts);
    unique_counts.reserve(posts);
    std::array<std::vector<double>, kDensityNames.size()> density_values;
    std::array<std::vector<double>, kPosTagCount> pos_values;
    for (auto& v : density_values) v.reserve(posts);
    for (auto& v : pos_values) v.reserve(posts);

    double word_length_sum = 0.0;
    double word_length_min = 0.0;
    double word_length_max = 0.0;
    std::uint64_t word_total = 0;
    std::unordered_map<std::string, std::uint64_t> word_counts;

    for (const auto& post : corpus.posts) {
        const auto tokens = tokenize(post);

        // Readability.
        TextStats stats;
        for (const auto cp : unicode::decode_utf8(post)) {
            if (!unicode::is_whitespace(cp)) ++stats.characters;
            if (unicode::is_alphabetic(cp)) ++stats.letters;
        }
        stats.sentences = count_sentences(post);
        std::unordered_set<std::string_view> unique_words;
        for (const auto& token : tokens) {
            if (token.token_class != TokenClass::kWord) continue;
            ++stats.words;
            const std::size_t syllables = count_syllables(token.text);
            stats.syllables += syllables;
            const bool poly = syllables >= 3;
            if (poly) {
                ++stats.polysyllables;
            } else {
                ++stats.brachysyllables;
            }
            const bool difficult = resources.easy_words.count(token.text) == 0;
            if (difficult) ++stats.difficult_words;
            if (difficult && poly) ++stats.complex_words;

            unique_words.insert(token.text);
            const double length = static_cast<double>(unicode::length(token.text));
            if (word_total == 0) {
                word_length_min = word_length_max = length;
            } else {
                word_length_min = std::min(word_length_min, length);
                word_length_max = std::max(word_length_max, length);
            }
            word_length_sum += length;
            ++word_total;
            ++word_counts[token.text];
        }
        if (const auto scores = readability_scores(stats)) {
            const auto values = scores->as_array();
            for (std::size_t m = 0; m < values.size(); ++m) {
                readability_values[m].push_back(values[m]);
            }
        }

        char_counts.push_back(static_cast<double>(unicode::length(post)));
        unique_counts.push_back(static_cast<double>(unique_words.size()));

        const SyntacticDensities densities = syntactic_post_features(tokens, resources);
        for (std::size_t d = 0; d < densities.token.size(); ++d) {
            density_values[d].push_back(densities.token[d]);
        }
        for (std::size_t t = 0; t < kPosTagCount; ++t) {
            pos_values[t].push_back(densities.pos[t]);
        }
    }

    std::vector<double> vec;
    vec.reserve(119 + burrows.size());
    for (const auto& values : readability_values) append_aggregates(vec, values);
    append_aggregates(vec, char_counts);
    append_aggregates(vec, unique_counts);
    if (word_total > 0) {
        vec.push_back(word_length_min);
        vec.push_back(word_length_sum / static_cast<double>(word_total));
        vec.push_back(word_length_max);
    } else {
        vec.insert(vec.end(), {0.0, 0.0, 0.0});
    }
    for (const auto& values : density_values) append_aggregates(vec, values);
    for (const auto& values : pos_values) append_aggregates(vec, values);

    // Burrows' Z block from the author's word proportions.
    std::vector<double> profile(burrows.size(), 0.0);
    if (word_total > 0) {
        for (std::size_t i = 0; i < burrows.size(); ++i) {
            if (auto it = word_counts.find(burrows.vocabulary[i]); it != word_counts.end()) {
                profile[i] = static_cast<double>(it->second) / static_cast<double>(word_total);
            }
        }
    }
    const auto z = z_score(profile, burrows);
    vec.insert(vec.end(), z.begin(), z.end());
    return vec;
}

FeatureMatrix build_feature_matrix(std::span<const AuthorCorpus> corpora,
                                   const BurrowsModel& burrows, const TextResources& resources,
                                   std::size_t threads) {
    FeatureMatrix matrix;
    matrix.schema = feature_schema(burrows.size());
    matrix.author_ids.resize(corpora.size());
    matrix.labels.resize(corpora.size());
    matrix.values = Matrix(corpora.size(), matrix.schema.size());
    parallel_for(corpora.size(), threads, [&](std::size_t i) {
        matrix.author_ids[i] = corpora[i].author_id;
        matrix.labels[i] = corpora[i].label;
        const auto vec = author_feature_vector(corpora[i], burrows, resources);
        if (vec.size() != matrix.values.cols) {
            throw Error(ErrorKind::kInternal, "feature vector width mismatch");
        }
        std::copy(vec.begin(), vec.end(), matrix.values.row(i).begin());
    });
    return matrix;
}

void save_feature_matrix(const FeatureMatrix& matrix, const std::filesystem::path& path) {
    std::ostringstream out;
    out << "author_id\tlabel";
    for (const auto& name : matrix.schema) out << '\t' << name;
    out << '\n';
    for (std::size_t r = 0; r < matrix.values.rows; ++r) {
        out << nlohmann::json(matrix.author_ids[r]).dump() << '\t';
        if (matrix.labels[r]) out << *matrix.labels[r];
        for (const double v : matrix.values.row(r)) out << '\t' << format_double(v);
        out << '\n';
    }
    atomic_write_file(path, out.str());
}

FeatureMatrix load_feature_matrix(const std::filesystem::path& path) {
    std::istringstream in(read_file(path));
    std::string line;
    if (!std::getline(in, line)) {
        throw Error(ErrorKind::kInvalidData, "empty feature matrix: " + path.string());
    }
    std::vector<std::string> header;
    {
        std::istringstream fields(line);
        std::string field;
        while (std::getline(fields, field, '\t')) header.push_back(field);
    }
    if (header.size() < 2 || header[0] != "author_id" || header[1] != "label") {
        throw Error(ErrorKind::kInvalidData, "malformed feature matrix header: " + path.string());
    }
    FeatureMatrix matrix;
    matrix.schema.assign(header.begin() + 2, header.end());

    std::vector<std::vector<double>> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<std::string> cells;
        while (std::getline(fields, field, '\t')) cells.push_back(field);
        if (cells.size() != header.size()) {
            throw Error(ErrorKind::kInvalidData,
                        "feature matrix row has wrong column count: " + path.string());
        }
        const auto id = nlohmann::json::parse(cells[0], nullptr, false);
        if (id.is_discarded() || !id.is_string()) {
            throw Error(ErrorKind::kInvalidData, "bad author_id cell: " + cells[0]);
        }
        matrix.author_ids.push_back(id.get<std::string>());
        if (cells[1].empty()) {
            matrix.labels.emplace_back(std::nullopt);
        } else {
            matrix.labels.emplace_back(static_cast<int>(parse_int(cells[1])));
        }
        std::vector<double> row;
        row.reserve(matrix.schema.size());
        for (std::size_t c = 2; c < cells.size(); ++c) row.push_back(parse_double(cells[c]));
        rows.push_back(std::move(row));
    }
    matrix.values = Matrix(rows.size(), matrix.schema.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::copy(rows[r].begin(), rows[r].end(), matrix.values.row(r).begin());
    }
    return matrix;
}

}  // namespace stylo
