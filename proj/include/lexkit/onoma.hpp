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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexkit/errors.hpp"
#include "lexkit/lang.hpp"
#include "lexkit/report.hpp"
#include "lexkit/unicode.hpp"

namespace lexkit::onoma {

/// Open key/value descriptor. Keys outside the default registry are retained
/// verbatim.
struct DataCategory {
    std::string key;
    std::string value;
    std::optional<LangCode> lang;

    bool operator==(const DataCategory&) const = default;
};

inline constexpr std::array<std::string_view, 17> kDefaultRegistry = {
    "term",           "language",       "subjectField",
    "definition",     "partOfSpeech",   "gender",
    "administrativeStatus", "register", "source",
    "responsibility", "creationDate",   "modificationDate",
    "termIdentifier", "conceptIdentifier", "conceptOrigin",
    "originatingDatabaseName", "example",
};

inline constexpr std::array<std::string_view, 3> kAdministrativeStatusValues = {
    "preferredTerm", "deprecatedTerm", "admittedTerm"};

/// One term plus its own descriptions (term autonomy: a self-contained unit).
struct TermSection {
    std::string term;
    std::vector<DataCategory> categories;

    bool operator==(const TermSection&) const = default;
};

struct LanguageSection {
    LangCode lang;
    std::vector<TermSection> terms;
    std::vector<DataCategory> categories;

    bool operator==(const LanguageSection&) const = default;
};

/// One concept (concept orientation: everything about it lives here).
struct TerminologicalEntry {
    std::optional<std::string> id;
    std::vector<DataCategory> categories;
    std::vector<LanguageSection> languages;

    bool operator==(const TerminologicalEntry&) const = default;
};

struct TermBase {
    std::vector<TerminologicalEntry> entries;
    std::vector<DataCategory> metadata;

    bool operator==(const TermBase&) const = default;
};

enum class OnomaProfile { Minimal, Recommended };

inline const DataCategory* find_category(const std::vector<DataCategory>& categories,
                                         std::string_view key) {
    for (const DataCategory& c : categories) {
        if (c.key == key) return &c;
    }
    return nullptr;
}

/// Entry id for base-level operations: explicit id, else the concept
/// identifier category, else positional ("entry-N", 1-based).
inline std::string effective_entry_id(const TerminologicalEntry& entry, std::size_t position) {
    if (entry.id) return *entry.id;
    if (const DataCategory* c = find_category(entry.categories, "conceptIdentifier")) {
        return c->value;
    }
    return "entry-" + std::to_string(position + 1);
}

namespace detail {

inline bool valid_admin_status(std::string_view value) {
    for (const std::string_view v : kAdministrativeStatusValues) {
        if (v == value) return true;
    }
    return false;
}

inline void check_categories(const std::vector<DataCategory>& categories,
                             const std::string& ownerPath, bool termLevel,
                             OnomaProfile profile, ValidationReport& report) {
    for (std::size_t i = 0; i < categories.size(); ++i) {
        const DataCategory& c = categories[i];
        const std::string path = ownerPath + "/category[" + std::to_string(i + 1) + "]";
        if (c.key == "term" || c.key == "language") {
            report.add(Severity::Error, "STRUCTURAL_CATEGORY", path,
                       "structural key '" + c.key + "' may not appear as a data category");
        }
        if (profile == OnomaProfile::Recommended) {
            if (c.value.empty()) {
                report.add(Severity::Warning, "EMPTY_VALUE", path,
                           "data category '" + c.key + "' has an empty value");
            }
            if (c.key == "administrativeStatus" && !valid_admin_status(c.value)) {
                report.add(Severity::Warning, "INVALID_ADMIN_STATUS", path,
                           "unknown administrativeStatus value '" + c.value + "'");
            }
        }
        (void)termLevel;
    }
}

}  // namespace detail

/// Profile validation. Minimal checks the structural invariants (the
/// mandatory "term" and "language" categories); recommended adds warnings
/// for the absent recommended categories.
inline ValidationReport validate_onoma(const TerminologicalEntry& entry, OnomaProfile profile,
                                       const std::string& entryPath = "termEntry[1]") {
    ValidationReport report;
    if (entry.languages.empty()) {
        report.add(Severity::Error, "MISSING_LANG_SECTION", entryPath,
                   "terminological entry has no language section");
    }
    detail::check_categories(entry.categories, entryPath, false, profile, report);

    std::vector<const LangCode*> seen;
    for (std::size_t i = 0; i < entry.languages.size(); ++i) {
        const LanguageSection& ls = entry.languages[i];
        const std::string lsPath = entryPath + "/langSet[" + std::to_string(i + 1) + "]";
        for (const LangCode* prior : seen) {
            if (*prior == ls.lang) {
                report.add(Severity::Error, "DUPLICATE_LANG", lsPath,
                           "duplicate language section for '" + ls.lang.tag() + "'");
                break;
            }
        }
        seen.push_back(&ls.lang);
        if (ls.terms.empty()) {
            report.add(Severity::Error, "MISSING_TERM_SECTION", lsPath,
                       "language section has no term section");
        }
        detail::check_categories(ls.categories, lsPath, false, profile, report);
        for (std::size_t j = 0; j < ls.terms.size(); ++j) {
            const TermSection& ts = ls.terms[j];
            const std::string tsPath = lsPath + "/tig[" + std::to_string(j + 1) + "]";
            if (ts.term.empty()) {
                report.add(Severity::Error, "EMPTY_TERM", tsPath, "term is empty");
            }
            detail::check_categories(ts.categories, tsPath, true, profile, report);
        }
    }

    if (profile == OnomaProfile::Recommended) {
        if (!find_category(entry.categories, "subjectField")) {
            report.add(Severity::Warning, "NO_SUBJECT_FIELD", entryPath,
                       "no subjectField on the terminological entry");
        }
        bool hasDefinition = find_category(entry.categories, "definition") != nullptr;
        for (const LanguageSection& ls : entry.languages) {
            hasDefinition = hasDefinition || find_category(ls.categories, "definition");
        }
        if (!hasDefinition) {
            report.add(Severity::Warning, "NO_DEFINITION", entryPath,
                       "no definition at entry or language level");
        }
        // One warning per entry, anchored at the first term lacking it.
        for (std::size_t i = 0; i < entry.languages.size(); ++i) {
            const LanguageSection& ls = entry.languages[i];
            bool flagged = false;
            for (std::size_t j = 0; j < ls.terms.size(); ++j) {
                if (!find_category(ls.terms[j].categories, "partOfSpeech")) {
                    report.add(Severity::Warning, "NO_PART_OF_SPEECH",
                               entryPath + "/langSet[" + std::to_string(i + 1) + "]/tig[" +
                                   std::to_string(j + 1) + "]",
                               "term has no partOfSpeech");
                    flagged = true;
                    break;
                }
            }
            if (flagged) break;
        }
    }
    report.sort();
    return report;
}

inline ValidationReport validate_onoma(const TermBase& base, OnomaProfile profile) {
    ValidationReport report;
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        const std::string path = "termEntry[" + std::to_string(i + 1) + "]";
        ValidationReport entryReport = validate_onoma(base.entries[i], profile, path);
        report.findings.insert(report.findings.end(), entryReport.findings.begin(),
                               entryReport.findings.end());
        if (base.entries[i].id) {
            auto [it, inserted] = ids.emplace(*base.entries[i].id, i);
            if (!inserted) {
                report.add(Severity::Error, "DUPLICATE_ID", path,
                           "entry id '" + *base.entries[i].id + "' already used by termEntry[" +
                               std::to_string(it->second + 1) + "]");
            }
        }
    }
    report.sort();
    return report;
}

/// All terms of the entry's section for `lang`, in document order.
inline std::vector<std::string> synonyms(const TerminologicalEntry& entry, const LangCode& lang) {
    std::vector<std::string> result;
    for (const LanguageSection& ls : entry.languages) {
        if (ls.lang != lang) continue;
        for (const TermSection& ts : ls.terms) result.push_back(ts.term);
    }
    return result;
}

/// Cartesian product of the two language sections' terms, in document order.
inline std::vector<std::pair<std::string, std::string>> equivalents(
    const TerminologicalEntry& entry, const LangCode& langA, const LangCode& langB) {
    if (langA == langB) {
        throw SameLanguageError("equivalents requires two distinct languages, got '" +
                                langA.tag() + "'");
    }
    std::vector<std::pair<std::string, std::string>> result;
    const std::vector<std::string> a = synonyms(entry, langA);
    const std::vector<std::string> b = synonyms(entry, langB);
    for (const std::string& ta : a) {
        for (const std::string& tb : b) result.emplace_back(ta, tb);
    }
    return result;
}

/// Surface comparison used by polysemy detection and term indexing: exact
/// equality after NFC, with case folding opt-in (terminology is usually
/// case-significant, "pH").
struct MatchOptions {
    bool caseInsensitive = false;

    std::string normalize(std::string_view term) const {
        std::string n = unicode::nfc(term);
        if (caseInsensitive) n = unicode::fold_case_simple(n);
        return n;
    }
};

/// Every surface form of `lang` mapped to the ids of the entries carrying it
/// (each entry listed once, in base order). Keys are normalized forms.
inline std::map<std::string, std::vector<std::string>> index_by_term(
    const TermBase& base, const LangCode& lang, const MatchOptions& opts = {}) {
    std::map<std::string, std::vector<std::string>> index;
    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        const TerminologicalEntry& entry = base.entries[i];
        const std::string id = effective_entry_id(entry, i);
        for (const LanguageSection& ls : entry.languages) {
            if (ls.lang != lang) continue;
            for (const TermSection& ts : ls.terms) {
                std::vector<std::string>& ids = index[opts.normalize(ts.term)];
                if (ids.empty() || ids.back() != id) ids.push_back(id);
            }
        }
    }
    return index;
}

/// The (language, surface form) pairs attached to two or more distinct
/// entries of a multi-domain base.
inline std::map<std::pair<LangCode, std::string>, std::vector<std::string>> accidental_polysemy(
    const TermBase& base, const MatchOptions& opts = {}) {
    std::vector<LangCode> langs;
    for (const TerminologicalEntry& entry : base.entries) {
        for (const LanguageSection& ls : entry.languages) {
            bool known = false;
            for (const LangCode& l : langs) known = known || l == ls.lang;
            if (!known) langs.push_back(ls.lang);
        }
    }
    std::map<std::pair<LangCode, std::string>, std::vector<std::string>> result;
    for (const LangCode& lang : langs) {
        for (auto& [term, ids] : index_by_term(base, lang, opts)) {
            if (ids.size() >= 2) result.emplace(std::pair{lang, term}, std::move(ids));
        }
    }
    return result;
}

}  // namespace lexkit::onoma
