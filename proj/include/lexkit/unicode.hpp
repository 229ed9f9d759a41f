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
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "lexkit/unicode_data.hpp"

namespace lexkit::unicode {

inline constexpr char32_t kMaxCodePoint = 0x10FFFF;

/// Decodes one UTF-8 sequence starting at `pos`. Rejects overlong forms,
/// surrogates and truncated sequences. Returns the code point and advances
/// `pos`, or nullopt leaving `pos` unspecified.
inline std::optional<char32_t> decode_one(std::string_view s, std::size_t& pos) {
    if (pos >= s.size()) return std::nullopt;
    const auto b0 = static_cast<unsigned char>(s[pos]);
    auto cont = [&](std::size_t i) {
        return pos + i < s.size() &&
               (static_cast<unsigned char>(s[pos + i]) & 0xC0) == 0x80;
    };
    auto bits = [&](std::size_t i) {
        return static_cast<char32_t>(static_cast<unsigned char>(s[pos + i]) & 0x3F);
    };
    if (b0 < 0x80) {
        pos += 1;
        return b0;
    }
    if ((b0 & 0xE0) == 0xC0) {
        if (!cont(1)) return std::nullopt;
        char32_t cp = (static_cast<char32_t>(b0 & 0x1F) << 6) | bits(1);
        pos += 2;
        if (cp < 0x80) return std::nullopt;
        return cp;
    }
    if ((b0 & 0xF0) == 0xE0) {
        if (!cont(1) || !cont(2)) return std::nullopt;
        char32_t cp = (static_cast<char32_t>(b0 & 0x0F) << 12) | (bits(1) << 6) | bits(2);
        pos += 3;
        if (cp < 0x800 || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
        return cp;
    }
    if ((b0 & 0xF8) == 0xF0) {
        if (!cont(1) || !cont(2) || !cont(3)) return std::nullopt;
        char32_t cp = (static_cast<char32_t>(b0 & 0x07) << 18) | (bits(1) << 12) |
                      (bits(2) << 6) | bits(3);
        pos += 4;
        if (cp < 0x10000 || cp > kMaxCodePoint) return std::nullopt;
        return cp;
    }
    return std::nullopt;
}

inline void encode_utf8(char32_t cp, std::string& out) {
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

inline std::optional<std::u32string> decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t pos = 0;
    while (pos < s.size()) {
        auto cp = decode_one(s, pos);
        if (!cp) return std::nullopt;
        out.push_back(*cp);
    }
    return out;
}

inline bool is_valid_utf8(std::string_view s) {
    std::size_t pos = 0;
    while (pos < s.size()) {
        if (!decode_one(s, pos)) return false;
    }
    return true;
}

namespace detail {

inline std::uint8_t combining_class(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCombiningClass), std::end(kCombiningClass), cp,
                               [](const CccRow& row, char32_t c) { return row.cp < c; });
    return (it != std::end(kCombiningClass) && it->cp == cp) ? it->ccc : 0;
}

// Hangul syllable constants (UAX #15, section 3.12 of the core spec).
inline constexpr char32_t kSBase = 0xAC00;
inline constexpr char32_t kLBase = 0x1100;
inline constexpr char32_t kVBase = 0x1161;
inline constexpr char32_t kTBase = 0x11A7;
inline constexpr char32_t kLCount = 19;
inline constexpr char32_t kVCount = 21;
inline constexpr char32_t kTCount = 28;
inline constexpr char32_t kNCount = kVCount * kTCount;
inline constexpr char32_t kSCount = kLCount * kNCount;

inline void decompose_canonical(char32_t cp, std::u32string& out) {
    if (cp >= kSBase && cp < kSBase + kSCount) {
        const char32_t index = cp - kSBase;
        out.push_back(kLBase + index / kNCount);
        out.push_back(kVBase + (index % kNCount) / kTCount);
        if (index % kTCount != 0) out.push_back(kTBase + index % kTCount);
        return;
    }
    auto it = std::lower_bound(std::begin(kCanonicalDecomp), std::end(kCanonicalDecomp), cp,
                               [](const DecompRow& row, char32_t c) { return row.cp < c; });
    if (it == std::end(kCanonicalDecomp) || it->cp != cp) {
        out.push_back(cp);
        return;
    }
    decompose_canonical(it->first, out);
    if (it->second != 0) decompose_canonical(it->second, out);
}

inline std::optional<char32_t> compose_pair(char32_t a, char32_t b) {
    if (a >= kLBase && a < kLBase + kLCount && b >= kVBase && b < kVBase + kVCount) {
        return kSBase + ((a - kLBase) * kVCount + (b - kVBase)) * kTCount;
    }
    if (a >= kSBase && a < kSBase + kSCount && (a - kSBase) % kTCount == 0 &&
        b > kTBase && b < kTBase + kTCount) {
        return a + (b - kTBase);
    }
    auto it = std::lower_bound(
        std::begin(kCanonicalComp), std::end(kCanonicalComp), std::pair{a, b},
        [](const CompRow& row, const std::pair<char32_t, char32_t>& key) {
            return row.first != key.first ? row.first < key.first : row.second < key.second;
        });
    if (it != std::end(kCanonicalComp) && it->first == a && it->second == b) {
        return it->composed;
    }
    return std::nullopt;
}

inline void order_canonically(std::u32string& s) {
    // Bubble adjacent combining marks; sequences are short in practice.
    for (std::size_t i = 1; i < s.size(); ++i) {
        const auto ccc = combining_class(s[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            const auto prev = combining_class(s[j - 1]);
            if (prev == 0 || prev <= ccc) break;
            std::swap(s[j - 1], s[j]);
            --j;
        }
    }
}

inline std::u32string compose_canonically(const std::u32string& in) {
    std::u32string out;
    out.reserve(in.size());
    std::ptrdiff_t starter = -1;
    int last_ccc = -1;
    for (const char32_t cp : in) {
        const int ccc = combining_class(cp);
        if (starter >= 0 && (last_ccc < ccc || last_ccc == -1)) {
            if (auto composed = compose_pair(out[static_cast<std::size_t>(starter)], cp)) {
                out[static_cast<std::size_t>(starter)] = *composed;
                continue;
            }
        }
        if (ccc == 0) {
            starter = static_cast<std::ptrdiff_t>(out.size());
            last_ccc = -1;
        } else {
            last_ccc = ccc;
        }
        out.push_back(cp);
    }
    return out;
}

}  // namespace detail

/// Canonical composition (NFC). Input that is not valid UTF-8 is returned
/// unchanged so callers can apply it to untrusted bytes.
inline std::string nfc(std::string_view s) {
    // Fast path: ASCII never changes under NFC.
    if (std::all_of(s.begin(), s.end(),
                    [](char c) { return static_cast<unsigned char>(c) < 0x80; })) {
        return std::string(s);
    }
    auto decoded = decode_utf8(s);
    if (!decoded) return std::string(s);
    std::u32string decomposed;
    decomposed.reserve(decoded->size() * 2);
    for (const char32_t cp : *decoded) detail::decompose_canonical(cp, decomposed);
    detail::order_canonically(decomposed);
    const std::u32string composed = detail::compose_canonically(decomposed);
    std::string out;
    out.reserve(s.size());
    for (const char32_t cp : composed) encode_utf8(cp, out);
    return out;
}

/// Per-code-point lowercase (1:1 mappings only). Not locale aware.
inline std::string fold_case_simple(std::string_view s) {
    auto decoded = decode_utf8(s);
    if (!decoded) return std::string(s);
    std::string out;
    out.reserve(s.size());
    for (const char32_t cp : *decoded) {
        auto it = std::lower_bound(
            std::begin(detail::kSimpleLower), std::end(detail::kSimpleLower), cp,
            [](const detail::LowerRow& row, char32_t c) { return row.cp < c; });
        encode_utf8((it != std::end(detail::kSimpleLower) && it->cp == cp) ? it->lower : cp,
                    out);
    }
    return out;
}

}  // namespace lexkit::unicode
