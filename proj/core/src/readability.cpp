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

#include "stylo/readability.hpp"

#include <cmath>
#include <limits>
#include <map>

#include "stylo/error.hpp"
#include "stylo/unicode.hpp"

namespace stylo {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double ratio(std::size_t num, std::size_t den) {
    return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

TextStats text_stats(std::string_view text, const TextResources& resources) {
    TextStats stats;
    for (const auto cp : unicode::decode_utf8(text)) {
        if (!unicode::is_whitespace(cp)) ++stats.characters;
        if (unicode::is_alphabetic(cp)) ++stats.letters;
    }
    stats.sentences = count_sentences(text);
    for (const auto& token : tokenize(text)) {
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
    }
    return stats;
}

double dale_chall(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    const double difficult_share = ratio(stats.difficult_words, stats.words);
    double score = 0.1579 * (difficult_share * 100.0) +
                   0.0497 * ratio(stats.words, stats.sentences);
    if (difficult_share > 0.05) score += 3.6365;
    return score;
}

double ari(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    return 4.71 * ratio(stats.characters, stats.words) +
           0.5 * ratio(stats.words, stats.sentences) - 21.43;
}

double smog(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    return 1.043 * std::sqrt(static_cast<double>(stats.polysyllables) * 30.0 /
                             static_cast<double>(stats.sentences)) +
           3.1291;
}

double gunning_fog(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    return 0.4 * (ratio(stats.words, stats.sentences) +
                  100.0 * ratio(stats.complex_words, stats.words));
}

double coleman_liau(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    // Per-word ratios, as printed; the classical per-100-word rates are not
    // used here.
    return 0.0588 * ratio(stats.letters, stats.words) -
           0.2996 * ratio(stats.sentences, stats.words) - 15.8;
}

double flesch_kincaid(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    return 0.39 * ratio(stats.words, stats.sentences) +
           11.8 * ratio(stats.syllables, stats.words) - 15.59;
}

double linsear_write(const TextStats& stats) {
    if (stats.words == 0) return kNaN;
    const double provisional = (2.0 * static_cast<double>(stats.brachysyllables) +
                                3.0 * static_cast<double>(stats.polysyllables)) /
                               static_cast<double>(stats.sentences);
    return provisional > 20.0 ? provisional / 2.0 - 1.0 : provisional / 2.0;
}

long long text_standard(const std::array<double, 7>& scores) {
    std::map<long long, int> counts;
    for (const double score : scores) {
        if (!std::isfinite(score)) {
            throw Error(ErrorKind::kInvalidData, "text_standard: non-finite score");
        }
        ++counts[std::llround(score)];
    }
    // std::map iterates in ascending key order, so the first maximal count is
    // the smallest tied value.
    long long best = 0;
    int best_count = 0;
    for (const auto& [value, count] : counts) {
        if (count > best_count) {
            best = value;
            best_count = count;
        }
    }
    return best;
}

std::optional<ReadabilityScores> readability_scores(const TextStats& stats) {
    if (stats.words == 0) return std::nullopt;
    ReadabilityScores scores{};
    scores.dcrf = dale_chall(stats);
    scores.ari = ari(stats);
    scores.smog = smog(stats);
    scores.gfi = gunning_fog(stats);
    scores.cli = coleman_liau(stats);
    scores.fkgl = flesch_kincaid(stats);
    scores.lw = linsear_write(stats);
    scores.text_standard = text_standard(
        {scores.dcrf, scores.ari, scores.smog, scores.gfi, scores.cli, scores.fkgl, scores.lw});
    return scores;
}

}  // namespace stylo
