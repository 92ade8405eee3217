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

#include "stylo/unicode.hpp"

#include <algorithm>

namespace stylo {
namespace unicode {

namespace {

struct CodepointRange {
    Codepoint lo;
    Codepoint hi;
};

struct LowerPair {
    Codepoint from;
    Codepoint to;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&ranges)[N], Codepoint cp) {
    auto it = std::upper_bound(
        std::begin(ranges), std::end(ranges), cp,
        [](Codepoint value, const CodepointRange& r) { return value < r.lo; });
    return it != std::begin(ranges) && cp <= (it - 1)->hi;
}

}  // namespace

bool is_alphabetic(Codepoint cp) { return in_ranges(kAlphaRanges, cp); }

bool is_whitespace(Codepoint cp) { return in_ranges(kSpaceRanges, cp); }

Codepoint to_lower(Codepoint cp) {
    auto it = std::lower_bound(
        std::begin(kLowerPairs), std::end(kLowerPairs), cp,
        [](const LowerPair& pair, Codepoint value) { return pair.from < value; });
    if (it != std::end(kLowerPairs) && it->from == cp) return it->to;
    return cp;
}

bool is_ascii_punctuation(Codepoint cp) {
    static constexpr std::string_view kPunct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
    return cp < 128 && kPunct.find(static_cast<char>(cp)) != std::string_view::npos;
}

DecodedChar decode_one(std::string_view text, std::size_t pos) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
    const unsigned char b0 = byte(pos);
    std::size_t len = 0;
    Codepoint cp = 0;
    if (b0 < 0x80) {
        len = 1;
        cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    }
    bool ok = len > 0 && pos + len <= text.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
        if ((byte(pos + k) & 0xC0) != 0x80) {
            ok = false;
        } else {
            cp = (cp << 6) | (byte(pos + k) & 0x3F);
        }
    }
    if (ok) {
        // Reject overlong encodings, surrogates, and out-of-range values.
        static constexpr Codepoint kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
        if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) ok = false;
    }
    if (!ok) return {b0, 1};  // lone byte, kept as its own codepoint
    return {cp, len};
}

std::vector<Codepoint> decode_utf8(std::string_view text) {
    std::vector<Codepoint> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const DecodedChar d = decode_one(text, i);
        out.push_back(d.cp);
        i += d.byte_len;
    }
    return out;
}

void append_utf8(std::string& out, Codepoint cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

std::string encode_utf8(const std::vector<Codepoint>& codepoints) {
    std::string out;
    out.reserve(codepoints.size());
    for (Codepoint cp : codepoints) append_utf8(out, cp);
    return out;
}

std::string to_lower(std::string_view text) {
    auto cps = decode_utf8(text);
    for (auto& cp : cps) cp = to_lower(cp);
    return encode_utf8(cps);
}

std::size_t length(std::string_view text) { return decode_utf8(text).size(); }

std::string_view trim(std::string_view text) {
    std::size_t begin = 0;
    while (begin < text.size()) {
        const DecodedChar d = decode_one(text, begin);
        if (!is_whitespace(d.cp)) break;
        begin += d.byte_len;
    }
    // Walk forward from `begin`, remembering the end of the last
    // non-whitespace character.
    std::size_t end = begin;
    std::size_t i = begin;
    while (i < text.size()) {
        const DecodedChar d = decode_one(text, i);
        i += d.byte_len;
        if (!is_whitespace(d.cp)) end = i;
    }
    return text.substr(begin, end - begin);
}

}  // namespace unicode
}  // namespace stylo
