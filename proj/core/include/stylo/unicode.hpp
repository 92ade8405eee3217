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

#ifndef STYLO_UNICODE_HPP_
#define STYLO_UNICODE_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace stylo {
namespace unicode {

using Codepoint = std::uint32_t;

// Lenient UTF-8 decode: an invalid byte is consumed alone and yielded as its
// byte value, so decoding never fails and every input has a stable spelling.
std::vector<Codepoint> decode_utf8(std::string_view text);

struct DecodedChar {
    Codepoint cp;
    std::size_t byte_len;  // bytes consumed from the original text
};

// Decodes the codepoint starting at byte offset `pos`; pos must be < size.
DecodedChar decode_one(std::string_view text, std::size_t pos);

void append_utf8(std::string& out, Codepoint cp);
std::string encode_utf8(const std::vector<Codepoint>& codepoints);

bool is_alphabetic(Codepoint cp);
bool is_whitespace(Codepoint cp);
Codepoint to_lower(Codepoint cp);

inline bool is_ascii_letter(Codepoint cp) {
    return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z');
}
inline bool is_ascii_digit(Codepoint cp) { return cp >= '0' && cp <= '9'; }

// The 32 characters of Python's string.punctuation.
bool is_ascii_punctuation(Codepoint cp);

// Codepoint-wise simple lowercasing of UTF-8 text.
std::string to_lower(std::string_view text);

// Number of codepoints, not bytes.
std::size_t length(std::string_view text);

// Strips leading and trailing whitespace codepoints.
std::string_view trim(std::string_view text);

}  // namespace unicode
}  // namespace stylo

#endif  // STYLO_UNICODE_HPP_
