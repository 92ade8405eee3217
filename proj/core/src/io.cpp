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

#include "stylo/io.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>

#include "stylo/error.hpp"

namespace stylo {

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

std::string format_fixed(double value, int decimals, bool force_sign) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), force_sign ? "%+.*f" : "%.*f", decimals, value);
    return buffer;
}

double parse_double(std::string_view text) {
    const std::string owned(text);
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(owned.c_str(), &end);
    if (end != owned.c_str() + owned.size() || owned.empty() || errno == ERANGE) {
        throw Error(ErrorKind::kInvalidData, "not a number: '" + owned + "'");
    }
    return value;
}

std::int64_t parse_int(std::string_view text) {
    const std::string owned(text);
    char* end = nullptr;
    errno = 0;
    const long long value = std::strtoll(owned.c_str(), &end, 10);
    if (end != owned.c_str() + owned.size() || owned.empty() || errno == ERANGE) {
        throw Error(ErrorKind::kInvalidData, "not an integer: '" + owned + "'");
    }
    return value;
}

std::uint64_t parse_uint(std::string_view text) {
    const std::string owned(text);
    char* end = nullptr;
    errno = 0;
    const unsigned long long value = std::strtoull(owned.c_str(), &end, 10);
    if (end != owned.c_str() + owned.size() || owned.empty() || errno == ERANGE ||
        owned[0] == '-') {
        throw Error(ErrorKind::kInvalidData, "not a non-negative integer: '" + owned + "'");
    }
    return value;
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xCBF29CE484222325ULL;
    for (const char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ULL;
    }
    return hash;
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    const auto parent = path.parent_path();
    if (!parent.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(parent, ec);
    }
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::kMissingInput, "cannot write: " + tmp);
        }
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out.flush()) {
            throw Error(ErrorKind::kInternal, "write failed: " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        throw Error(ErrorKind::kInternal,
                    "rename failed: " + tmp + " -> " + path.string() + ": " + ec.message());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::kMissingInput, "cannot open: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace stylo
