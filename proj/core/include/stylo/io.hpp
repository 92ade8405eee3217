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

#ifndef STYLO_IO_HPP_
#define STYLO_IO_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace stylo {

// 17 significant digits: enough for a bit-exact double round trip.
std::string format_double(double value);

// Fixed decimals for display columns, e.g. format_fixed(27.991, 2) == "27.99".
std::string format_fixed(double value, int decimals, bool force_sign = false);

double parse_double(std::string_view text);
std::int64_t parse_int(std::string_view text);
std::uint64_t parse_uint(std::string_view text);

// FNV-1a over the bytes; used for feature-schema fingerprints.
std::uint64_t fnv1a64(std::string_view bytes);

// Writes via a temp file in the same directory plus an atomic rename, so
// partially written artifacts never appear under the final name.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

std::string read_file(const std::filesystem::path& path);

}  // namespace stylo

#endif  // STYLO_IO_HPP_
