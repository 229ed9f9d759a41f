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

#include <cctype>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lexkit {

/// Case-normalized language tag. The primary subtag is lowercased; two-letter
/// subtags are uppercased (regions), four-letter ones titlecased (scripts),
/// anything else lowercased. Equality is equality of the normalized form.
class LangCode {
public:
    LangCode() : tag_("und") {}

    static std::optional<LangCode> parse(std::string_view raw) {
        std::vector<std::string> subtags;
        std::string current;
        for (const char c : raw) {
            if (c == '-') {
                subtags.push_back(std::move(current));
                current.clear();
            } else {
                current.push_back(c);
            }
        }
        subtags.push_back(std::move(current));

        auto alnum = [](std::string_view s) {
            for (const char c : s) {
                if (!std::isalnum(static_cast<unsigned char>(c))) return false;
            }
            return true;
        };
        const std::string_view primary = subtags.front();
        if (primary.size() < 2 || primary.size() > 3) return std::nullopt;
        for (const char c : primary) {
            if (!std::isalpha(static_cast<unsigned char>(c))) return std::nullopt;
        }

        std::string normalized;
        for (const char c : primary) {
            normalized.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        }
        for (std::size_t i = 1; i < subtags.size(); ++i) {
            const std::string& sub = subtags[i];
            if (sub.size() < 2 || sub.size() > 8 || !alnum(sub)) return std::nullopt;
            normalized.push_back('-');
            for (std::size_t j = 0; j < sub.size(); ++j) {
                const auto c = static_cast<unsigned char>(sub[j]);
                const bool upper = (sub.size() == 2) || (sub.size() == 4 && j == 0);
                normalized.push_back(static_cast<char>(upper ? std::toupper(c) : std::tolower(c)));
            }
        }
        return LangCode(std::move(normalized));
    }

    /// Throwing variant for literal tags.
    static LangCode from(std::string_view raw) {
        auto parsed = parse(raw);
        if (!parsed) throw std::invalid_argument("invalid language tag: " + std::string(raw));
        return *std::move(parsed);
    }

    const std::string& tag() const noexcept { return tag_; }

    auto operator<=>(const LangCode&) const = default;

private:
    explicit LangCode(std::string normalized) : tag_(std::move(normalized)) {}

    std::string tag_;
};

}  // namespace lexkit
