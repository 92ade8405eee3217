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

#include "stylo/tokenizer.hpp"

#include <array>
#include <fstream>

#include "stylo/error.hpp"
#include "stylo/unicode.hpp"

namespace stylo {

namespace {

constexpr std::array<std::string_view, kPosTagCount> kPosTagNames = {
    "NOUN",       "PLURAL_NOUN", "VERB",        "MODAL",       "ADJECTIVE",
    "ADVERB",     "PRONOUN",     "DETERMINER",  "PREPOSITION", "CONJUNCTION",
    "CARDINAL",   "INTERJECTION", "OTHER",
};

bool is_vowel(unicode::Codepoint cp) {
    return cp == 'a' || cp == 'e' || cp == 'i' || cp == 'o' || cp == 'u' || cp == 'y';
}

}  // namespace

std::string_view pos_tag_name(PosTag tag) {
    return kPosTagNames[static_cast<std::size_t>(tag)];
}

std::optional<PosTag> pos_tag_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kPosTagNames.size(); ++i) {
        if (kPosTagNames[i] == name) return static_cast<PosTag>(i);
    }
    return std::nullopt;
}

std::vector<Segment> segment(std::string_view text) {
    auto cps = unicode::decode_utf8(text);
    for (auto& cp : cps) cp = unicode::to_lower(cp);

    std::vector<Segment> out;
    std::size_t i = 0;
    const auto flush = [&](std::size_t begin, std::size_t end, bool ws) {
        std::string piece;
        for (std::size_t k = begin; k < end; ++k) unicode::append_utf8(piece, cps[k]);
        out.push_back({std::move(piece), ws});
    };
    while (i < cps.size()) {
        const std::size_t start = i;
        if (unicode::is_whitespace(cps[i])) {
            while (i < cps.size() && unicode::is_whitespace(cps[i])) ++i;
            flush(start, i, true);
        } else if (unicode::is_alphabetic(cps[i])) {
            while (i < cps.size() && unicode::is_alphabetic(cps[i])) ++i;
            flush(start, i, false);
        } else {
            ++i;
            flush(start, i, false);
        }
    }
    return out;
}

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> tokens;
    for (auto& seg : segment(text)) {
        if (seg.is_whitespace) continue;
        const TokenClass cls = classify_token(seg.text);
        tokens.push_back({std::move(seg.text), cls});
    }
    return tokens;
}

TokenClass classify_token(std::string_view token_text) {
    if (token_text.empty()) {
        throw Error(ErrorKind::kInternal, "classify_token: empty token");
    }
    const unicode::Codepoint first = unicode::decode_one(token_text, 0).cp;
    if (unicode::is_ascii_punctuation(first)) return TokenClass::kPunctuation;
    if (unicode::is_ascii_letter(first)) return TokenClass::kWord;
    if (unicode::is_ascii_digit(first)) return TokenClass::kDigit;
    return TokenClass::kSpecial;
}

std::size_t count_sentences(std::string_view text) {
    std::size_t n = 0;
    for (char c : text) {
        if (c == '.' || c == '?' || c == '!') ++n;
    }
    return n > 0 ? n : 1;
}

std::size_t count_syllables(std::string_view word) {
    if (word.empty() || classify_token(word) != TokenClass::kWord) {
        throw Error(ErrorKind::kInternal, "count_syllables: not a word token: '" +
                                              std::string(word) + "'");
    }
    const auto cps = unicode::decode_utf8(word);
    std::size_t groups = 0;
    bool in_group = false;
    for (const auto cp : cps) {
        if (is_vowel(cp)) {
            if (!in_group) ++groups;
            in_group = true;
        } else {
            in_group = false;
        }
    }
    // A final lone 'e' is treated as silent unless an 'l' precedes it.
    if (cps.size() >= 2 && cps.back() == 'e') {
        const auto prev = cps[cps.size() - 2];
        if (!is_vowel(prev) && prev != 'l' && groups > 1) --groups;
    }
    return groups > 0 ? groups : 1;
}

std::unordered_set<std::string> load_word_list(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::kMissingInput, "cannot open word list: " + path.string());
    }
    std::unordered_set<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto trimmed = unicode::trim(line);
        if (trimmed.empty()) continue;
        words.insert(unicode::to_lower(trimmed));
    }
    return words;
}

std::unordered_map<std::string, PosTag> load_pos_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::kMissingInput, "cannot open POS lexicon: " + path.string());
    }
    std::unordered_map<std::string, PosTag> lexicon;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos) {
            throw Error(ErrorKind::kInvalidData, "POS lexicon " + path.string() + ":" +
                                                     std::to_string(line_no) +
                                                     ": expected word<TAB>TAG");
        }
        std::string word = unicode::to_lower(std::string_view(line).substr(0, tab));
        const auto tag = pos_tag_from_name(std::string_view(line).substr(tab + 1));
        if (!tag) {
            throw Error(ErrorKind::kInvalidData, "POS lexicon " + path.string() + ":" +
                                                     std::to_string(line_no) +
                                                     ": unknown tag");
        }
        if (!lexicon.emplace(std::move(word), *tag).second) {
            throw Error(ErrorKind::kInvalidData, "POS lexicon " + path.string() + ":" +
                                                     std::to_string(line_no) +
                                                     ": duplicate entry");
        }
    }
    return lexicon;
}

TextResources load_text_resources(const std::filesystem::path& assets_dir) {
    TextResources resources;
    resources.stopwords = load_word_list(assets_dir / "stopwords.txt");
    resources.easy_words = load_word_list(assets_dir / "easy_words.txt");
    resources.pos_lexicon = load_pos_lexicon(assets_dir / "pos_lexicon.tsv");
    return resources;
}

bool is_stopword(std::string_view word, const TextResources& resources) {
    return resources.stopwords.count(unicode::to_lower(word)) > 0;
}

PosTag pos_tag_word(std::string_view word, const TextResources& resources) {
    const std::string lowered = unicode::to_lower(word);
    if (auto it = resources.pos_lexicon.find(lowered); it != resources.pos_lexicon.end()) {
        return it->second;
    }
    const auto ends_with = [&](std::string_view suffix) {
        return lowered.size() > suffix.size() &&
               std::string_view(lowered).substr(lowered.size() - suffix.size()) == suffix;
    };
    if (ends_with("ly")) return PosTag::kAdverb;
    if (ends_with("ing") || ends_with("ed")) return PosTag::kVerb;
    if (ends_with("ous") || ends_with("ful") || ends_with("able")) return PosTag::kAdjective;
    if (ends_with("s")) return PosTag::kPluralNoun;
    return PosTag::kNoun;
}

std::vector<PosTag> pos_tag(std::span<const Token> words, const TextResources& resources) {
    std::vector<PosTag> tags;
    tags.reserve(words.size());
    for (const auto& token : words) {
        if (token.token_class != TokenClass::kWord) {
            throw Error(ErrorKind::kInternal, "pos_tag: non-word token: '" + token.text + "'");
        }
        tags.push_back(pos_tag_word(token.text, resources));
    }
    return tags;
}

}  // namespace stylo
