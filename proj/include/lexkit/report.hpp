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

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lexkit {

enum class Severity : std::uint8_t { Info = 0, Warning = 1, Error = 2 };

inline std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::Info: return "info";
        case Severity::Warning: return "warning";
        case Severity::Error: return "error";
    }
    return "error";
}

/// One diagnostic. `path` uses element-step notation with 1-based indices,
/// e.g. "termEntry[1]/langSet[2]/tig[1]".
struct Finding {
    Severity severity = Severity::Info;
    std::string code;
    std::string path;
    std::string message;

    bool operator==(const Finding&) const = default;
};

namespace detail {

struct PathStep {
    std::uint32_t index = 1;
    std::string_view name;
};

inline std::vector<PathStep> path_steps(std::string_view path) {
    std::vector<PathStep> steps;
    std::size_t begin = 0;
    while (begin <= path.size()) {
        const std::size_t end = std::min(path.find('/', begin), path.size());
        std::string_view step = path.substr(begin, end - begin);
        PathStep parsed;
        const std::size_t bracket = step.find('[');
        if (bracket != std::string_view::npos && step.back() == ']') {
            parsed.name = step.substr(0, bracket);
            const std::string_view digits = step.substr(bracket + 1, step.size() - bracket - 2);
            std::uint32_t value = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
            if (ec == std::errc() && ptr == digits.data() + digits.size()) parsed.index = value;
        } else {
            parsed.name = step;
        }
        steps.push_back(parsed);
        if (end == path.size()) break;
        begin = end + 1;
    }
    return steps;
}

// Document order approximated from the step indices; name breaks ties between
// unrelated siblings so the order stays total.
inline bool before_in_document(const Finding& a, const Finding& b) {
    const auto sa = path_steps(a.path);
    const auto sb = path_steps(b.path);
    const std::size_t n = std::min(sa.size(), sb.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (sa[i].index != sb[i].index) return sa[i].index < sb[i].index;
        if (sa[i].name != sb[i].name) return sa[i].name < sb[i].name;
    }
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    return a.code < b.code;
}

}  // namespace detail

/// Ordered findings; order is document order of the flagged locations with
/// ties broken by code.
struct ValidationReport {
    std::vector<Finding> findings;

    bool empty() const noexcept { return findings.empty(); }
    std::size_t size() const noexcept { return findings.size(); }

    void add(Severity severity, std::string code, std::string path, std::string message) {
        findings.push_back(
            {severity, std::move(code), std::move(path), std::move(message)});
    }

    void sort() {
        std::stable_sort(findings.begin(), findings.end(), detail::before_in_document);
    }

    bool operator==(const ValidationReport&) const = default;
};

inline std::optional<Severity> worst_severity(const ValidationReport& report) {
    std::optional<Severity> worst;
    for (const Finding& f : report.findings) {
        if (!worst || f.severity > *worst) worst = f.severity;
    }
    return worst;
}

inline ValidationReport merge(std::span<const ValidationReport> reports) {
    ValidationReport merged;
    for (const ValidationReport& r : reports) {
        merged.findings.insert(merged.findings.end(), r.findings.begin(), r.findings.end());
    }
    merged.sort();
    return merged;
}

inline ValidationReport merge(std::initializer_list<ValidationReport> reports) {
    return merge(std::span<const ValidationReport>(reports.begin(), reports.size()));
}

/// Line form: severity, code, path, message, tab separated.
inline std::string to_text(const Finding& f) {
    std::string line;
    line += to_string(f.severity);
    line += '\t';
    line += f.code;
    line += '\t';
    line += f.path;
    line += '\t';
    line += f.message;
    return line;
}

inline std::string to_text(const ValidationReport& report) {
    std::string out;
    for (const Finding& f : report.findings) {
        out += to_text(f);
        out += '\n';
    }
    return out;
}

}  // namespace lexkit
