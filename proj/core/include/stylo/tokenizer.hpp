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

#ifndef STYLO_TOKENIZER_HPP_
#define STYLO_TOKENIZER_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace stylo {

// Token class is decided by the token's first character alone:
// ASCII punctuation beats ASCII letter beats ASCII digit; everything else
// (emoji, non-Latin scripts, stray bytes) is special.
enum class TokenClass { kPunctuation, kWord, kDigit, kSpecial };

struct Token {
    std::string text;  // always lowercase
    TokenClass token_class;
};

// Coarse 13-tag inventory. Fixed so downstream feature vectors have a fixed
// width regardless of which tags a post happens to contain.
enum class PosTag {
    kNoun,
    kPluralNoun,
    kVerb,
    kModal,
    kAdjective,
    kAdverb,
    kPronoun,
    kDeterminer,
    kPreposition,
    kConjunction,
    kCardinal,
    kInterjection,
    kOther,
};

inline constexpr std::size_t kPosTagCount = 13;

std::string_view pos_tag_name(PosTag tag);
std::optional<PosTag> pos_tag_from_name(std::string_view name);

// A segment of the lowercased input: either a whitespace run or a token.
// Concatenating all segment texts reproduces the lowercased input exactly.
struct Segment {
    std::string text;
    bool is_whitespace;
};

std::vector<Segment> segment(std::string_view text);

// Lowercases, splits on whitespace, then splits each chunk into maximal
// alphabetic runs and single non-alphabetic characters.
std::vector<Token> tokenize(std::string_view text);

TokenClass classify_token(std::string_view token_text);

// Occurrences of '.', '?' and '!', floored at one.
std::size_t count_sentences(std::string_view text);

// Maximal vowel-group count (a e i o u y) with the silent trailing 'e'
// adjustment; never less than one. The input must be a WORD-class token.
std::size_t count_syllables(std::string_view word);

// Bundled word lists, loaded once and shared. All lookups are lowercase.
struct TextResources {
    std::unordered_set<std::string> stopwords;
    std::unordered_set<std::string> easy_words;
    std::unordered_map<std::string, PosTag> pos_lexicon;
};

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path);
std::unordered_map<std::string, PosTag> load_pos_lexicon(const std::filesystem::path& path);

// Loads stopwords.txt, easy_words.txt and pos_lexicon.tsv from `assets_dir`.
TextResources load_text_resources(const std::filesystem::path& assets_dir);

bool is_stopword(std::string_view word, const TextResources& resources);

// Rule cascade: closed-class lexicon, then suffix rules, then NOUN.
PosTag pos_tag_word(std::string_view word, const TextResources& resources);
std::vector<PosTag> pos_tag(std::span<const Token> words, const TextResources& resources);

}  // namespace stylo

#endif  // STYLO_TOKENIZER_HPP_
