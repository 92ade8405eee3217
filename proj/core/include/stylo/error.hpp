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

#ifndef STYLO_ERROR_HPP_
#define STYLO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace stylo {

// Error categories map 1:1 onto CLI exit codes.
enum class ErrorKind {
    kUsage = 1,         // bad flags, bad config keys
    kMissingInput = 2,  // absent file or data asset
    kInvalidData = 3,   // records or matrices violating a documented invariant
    kInternal = 4,      // broken internal invariant
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    int exit_code() const { return static_cast<int>(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace stylo

#endif  // STYLO_ERROR_HPP_
