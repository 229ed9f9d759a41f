// Copyright 2026 The Lexkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lexkit {

/// Fatal document failure: the input cannot be turned into a model.
/// Recoverable problems are reported as findings instead.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string code, std::string path, const std::string& message)
        : std::runtime_error(code + " at " + (path.empty() ? "(document)" : path) + ": " +
                             message),
          code_(std::move(code)),
          path_(std::move(path)) {}

    const std::string& code() const noexcept { return code_; }
    const std::string& path() const noexcept { return path_; }

private:
    std::string code_;
    std::string path_;
};

/// A writer precondition failed: the model violates the required profile.
class InvalidModelError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

class SameLanguageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DuplicateObjectLanguageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace lexkit
