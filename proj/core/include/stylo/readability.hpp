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

#ifndef STYLO_READABILITY_HPP_
#define STYLO_READABILITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "stylo/tokenizer.hpp"

namespace stylo {

// Per-post counts feeding the grade formulas.
//
// characters = non-whitespace codepoints, letters = alphabetic codepoints.
// A word is difficult when its surface form is absent from the easy-word
// list; complex when it is both difficult and polysyllabic (>= 3 syllables).
struct TextStats {
    std::size_t characters = 0;
    std::size_t letters = 0;
    std::size_t words = 0;
    std::size_t sentences = 1;
    std::size_t syllables = 0;
    std::size_t polysyllables = 0;
    std::size_t brachysyllables = 0;  // 1-2 syllables; poly + brachy == words
    std::size_t difficult_words = 0;
    std::size_t complex_words = 0;
};

TextStats text_stats(std::string_view text, const TextResources& resources);

// Each formula requires words >= 1 and returns quiet NaN otherwise; author
// aggregation later skips NaN scores.
double dale_chall(const TextStats& stats);
double ari(const TextStats& stats);
double smog(const TextStats& stats);
double gunning_fog(const TextStats& stats);
double coleman_liau(const TextStats& stats);
double flesch_kincaid(const TextStats& stats);
double linsear_write(const TextStats& stats);

// Mode of the seven scores after half-away-from-zero rounding; ties go to
// the smallest tied value. Throws on non-finite input.
long long text_standard(const std::array<double, 7>& scores);

struct ReadabilityScores {
    double dcrf;
    double ari;
    double smog;
    double gfi;
    double cli;
    double fkgl;
    double lw;
    long long text_standard;

    std::array<double, 8> as_array() const {
        return {dcrf, ari, smog, gfi, cli, fkgl, lw, static_cast<double>(text_standard)};
    }
};

inline constexpr std::array<std::string_view, 8> kReadabilityMetricNames = {
    "dcrf", "ari", "smog", "gfi", "cli", "fkgl", "lw", "text_standard",
};

// nullopt for zero-word posts (the undefined-score sentinel).
std::optional<ReadabilityScores> readability_scores(const TextStats& stats);

}  // namespace stylo

#endif  // STYLO_READABILITY_HPP_
