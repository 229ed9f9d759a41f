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

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexkit/lang.hpp"
#include "lexkit/report.hpp"
#include "lexkit/unicode.hpp"

namespace lexkit::sema {

enum class RepresentationKind {
    Orthography,
    Pronunciation,
    Hyphenation,
    Stress,
    Syllabification,
    Transliteration,
};

/// Values are preserved byte for byte; degraded source data is kept as-is.
struct FormRepresentation {
    RepresentationKind kind = RepresentationKind::Orthography;
    std::string value;

    bool operator==(const FormRepresentation&) const = default;
};

struct GrammaticalInfo {
    std::optional<std::string> pos;
    std::optional<std::string> gender;
    std::vector<std::pair<std::string, std::string>> other;

    bool empty() const { return !pos && !gender && other.empty(); }
    bool operator==(const GrammaticalInfo&) const = default;
};

enum class FormType { Lemma, Inflected, Variant, Unspecified };

/// Recursive: subforms carry the parts of complex lexical expressions.
struct Form {
    FormType formType = FormType::Unspecified;
    std::vector<FormRepresentation> representations;
    std::optional<GrammaticalInfo> gram;
    std::vector<Form> subforms;

    bool operator==(const Form&) const = default;
};

enum class UsageType { Dom, Time, Geo, Register, Style, Other };

inline std::string_view to_string(UsageType t) {
    switch (t) {
        case UsageType::Dom: return "dom";
        case UsageType::Time: return "time";
        case UsageType::Geo: return "geo";
        case UsageType::Register: return "register";
        case UsageType::Style: return "style";
        case UsageType::Other: return "other";
    }
    return "other";
}

inline std::optional<UsageType> usage_type_from(std::string_view s) {
    if (s == "dom") return UsageType::Dom;
    if (s == "time") return UsageType::Time;
    if (s == "geo") return UsageType::Geo;
    if (s == "register") return UsageType::Register;
    if (s == "style") return UsageType::Style;
    return std::nullopt;
}

struct UsageMarker {
    UsageType type = UsageType::Other;
    std::string rawType;  // original axis name when type == Other
    std::string value;

    bool operator==(const UsageMarker&) const = default;
};

enum class ContextType { Example, Translation, Other };

struct Context {
    ContextType type = ContextType::Other;
    std::string rawType;  // original type when type == Other
    std::string quote;
    std::optional<LangCode> lang;
    std::optional<std::string> source;

    bool operator==(const Context&) const = default;
};

/// Definition text plus uninterpreted source attributes (e.g. a stray @n).
struct Definition {
    std::string text;
    std::vector<std::pair<std::string, std::string>> attrs;
    bool inlineMarkupFlattened = false;

    bool operator==(const Definition&) const = default;
};

struct Equivalent {
    LangCode lang;
    std::string text;

    bool operator==(const Equivalent&) const = default;
};

struct Sense {
    std::optional<std::string> label;  // printed sense number, verbatim
    std::vector<std::pair<std::string, std::string>> attrs;
    std::vector<Definition> definitions;
    std::vector<UsageMarker> usages;
    std::vector<Context> contexts;
    std::vector<Equivalent> equivalents;
    std::vector<Sense> subsenses;

    bool operator==(const Sense&) const = default;
};

struct LexicalEntry {
    std::optional<std::string> id;
    std::vector<Form> forms;
    std::optional<GrammaticalInfo> gram;  // entry level, as printed dictionaries do
    std::vector<Sense> senses;

    bool operator==(const LexicalEntry&) const = default;
};

struct Lexicon {
    LangCode lang;
    std::vector<LexicalEntry> entries;
    std::vector<std::pair<std::string, std::string>> metadata;

    bool operator==(const Lexicon&) const = default;
};

inline std::string effective_entry_id(const LexicalEntry& entry, std::size_t position) {
    return entry.id ? *entry.id : "entry-" + std::to_string(position + 1);
}

enum class SemaProfile { Lenient, LmfCore, LmfMrd };

inline constexpr std::size_t kDefaultMaxDepth = 8;

namespace detail {

inline void validate_form(const Form& form, const std::string& path, std::size_t depth,
                          std::size_t maxDepth, ValidationReport& report) {
    if (depth > maxDepth) {
        report.add(Severity::Error, "EXCESSIVE_DEPTH", path,
                   "form nesting exceeds depth " + std::to_string(maxDepth));
        return;
    }
    if (form.representations.empty()) {
        report.add(Severity::Error, "MISSING_REPRESENTATION", path,
                   "form has no representation");
    }
    for (std::size_t i = 0; i < form.representations.size(); ++i) {
        if (form.representations[i].value.empty()) {
            report.add(Severity::Error, "EMPTY_REPRESENTATION",
                       path + "/rep[" + std::to_string(i + 1) + "]",
                       "form representation is empty");
        }
    }
    if (form.gram && form.gram->empty()) {
        report.add(Severity::Error, "EMPTY_GRAM", path, "grammatical block has no content");
    }
    for (std::size_t i = 0; i < form.subforms.size(); ++i) {
        validate_form(form.subforms[i], path + "/form[" + std::to_string(i + 1) + "]",
                      depth + 1, maxDepth, report);
    }
}

inline void validate_sense(const Sense& sense, const std::string& path, std::size_t depth,
                           std::size_t maxDepth, SemaProfile profile,
                           ValidationReport& report) {
    if (depth > maxDepth) {
        report.add(Severity::Error, "EXCESSIVE_DEPTH", path,
                   "sense nesting exceeds depth " + std::to_string(maxDepth));
        return;
    }
    if (sense.definitions.empty() && sense.subsenses.empty() && sense.usages.empty() &&
        sense.contexts.empty() && sense.equivalents.empty()) {
        report.add(Severity::Error, "EMPTY_SENSE", path, "sense carries no content");
    }
    for (std::size_t i = 0; i < sense.usages.size(); ++i) {
        const UsageMarker& u = sense.usages[i];
        const std::string usgPath = path + "/usg[" + std::to_string(i + 1) + "]";
        if (u.value.empty()) {
            report.add(Severity::Error, "EMPTY_USAGE", usgPath, "usage marker has no value");
        }
        if (profile >= SemaProfile::LmfMrd && u.type == UsageType::Other) {
            report.add(Severity::Warning, "LOSSY_USAGE", usgPath,
                       "usage axis '" + u.rawType + "' has no MRD component");
        }
    }
    for (std::size_t i = 0; i < sense.contexts.size(); ++i) {
        const Context& c = sense.contexts[i];
        const std::string citPath = path + "/cit[" + std::to_string(i + 1) + "]";
        if (c.quote.empty()) {
            report.add(Severity::Error, "EMPTY_CONTEXT", citPath, "context has no quote");
        }
        if (profile >= SemaProfile::LmfMrd && c.type == ContextType::Other) {
            report.add(Severity::Error, "INVALID_CONTEXT_TYPE", citPath,
                       "context type '" + c.rawType + "' is not example or translation");
        }
    }
    for (std::size_t i = 0; i < sense.subsenses.size(); ++i) {
        validate_sense(sense.subsenses[i], path + "/sense[" + std::to_string(i + 1) + "]",
                       depth + 1, maxDepth, profile, report);
    }
}

inline std::size_t count_lemma_forms(const LexicalEntry& entry) {
    std::size_t n = 0;
    for (const Form& f : entry.forms) n += f.formType == FormType::Lemma ? 1 : 0;
    return n;
}

}  // namespace detail

/// Profiles are cumulative: lenient checks structure, lmf-core adds the
/// single-lemma rule, lmf-mrd adds the MRD component constraints.
inline ValidationReport validate_sema(const LexicalEntry& entry, SemaProfile profile,
                                      const std::string& entryPath = "entry[1]",
                                      std::size_t maxDepth = kDefaultMaxDepth) {
    ValidationReport report;
    if (entry.forms.empty()) {
        report.add(Severity::Error, "MISSING_FORM", entryPath, "lexical entry has no form");
    }
    for (std::size_t i = 0; i < entry.forms.size(); ++i) {
        detail::validate_form(entry.forms[i], entryPath + "/form[" + std::to_string(i + 1) + "]",
                              1, maxDepth, report);
    }
    if (entry.gram && entry.gram->empty()) {
        report.add(Severity::Error, "EMPTY_GRAM", entryPath,
                   "grammatical block has no content");
    }
    for (std::size_t i = 0; i < entry.senses.size(); ++i) {
        detail::validate_sense(entry.senses[i],
                               entryPath + "/sense[" + std::to_string(i + 1) + "]", 1, maxDepth,
                               profile, report);
    }
    if (profile >= SemaProfile::LmfCore) {
        const std::size_t lemmas = detail::count_lemma_forms(entry);
        if (lemmas == 0 && !entry.forms.empty()) {
            report.add(Severity::Warning, "NO_EXPLICIT_LEMMA", entryPath,
                       "no form is typed as the lemma");
        } else if (lemmas > 1) {
            report.add(Severity::Error, "MULTIPLE_LEMMAS", entryPath,
                       std::to_string(lemmas) + " forms are typed as the lemma");
        }
    }
    report.sort();
    return report;
}

inline ValidationReport validate_sema(const Lexicon& lexicon, SemaProfile profile,
                                      std::size_t maxDepth = kDefaultMaxDepth) {
    ValidationReport report;
    std::map<std::string, std::size_t> ids;
    for (std::size_t i = 0; i < lexicon.entries.size(); ++i) {
        const std::string path = "entry[" + std::to_string(i + 1) + "]";
        ValidationReport one = validate_sema(lexicon.entries[i], profile, path, maxDepth);
        report.findings.insert(report.findings.end(), one.findings.begin(), one.findings.end());
        if (lexicon.entries[i].id) {
            auto [it, inserted] = ids.emplace(*lexicon.entries[i].id, i);
            if (!inserted) {
                report.add(Severity::Error, "DUPLICATE_ID", path,
                           "entry id '" + *lexicon.entries[i].id + "' already used by entry[" +
                               std::to_string(it->second + 1) + "]");
            }
        }
    }
    report.sort();
    return report;
}

namespace detail {

inline const std::string* first_orthography(const Form& form) {
    for (const FormRepresentation& rep : form.representations) {
        if (rep.kind == RepresentationKind::Orthography) return &rep.value;
    }
    for (const Form& sub : form.subforms) {
        if (const std::string* orth = first_orthography(sub)) return orth;
    }
    return nullptr;
}

}  // namespace detail

/// The orthography of the form typed lemma; falls back to the first
/// orthography in document order when nothing is typed.
inline std::optional<std::string> lemma_of(const LexicalEntry& entry) {
    for (const Form& form : entry.forms) {
        if (form.formType != FormType::Lemma) continue;
        if (const std::string* orth = detail::first_orthography(form)) return *orth;
    }
    for (const Form& form : entry.forms) {
        if (const std::string* orth = detail::first_orthography(form)) return *orth;
    }
    return std::nullopt;
}

struct SenseStats {
    std::size_t total = 0;
    std::size_t maxDepth = 0;
    std::size_t topLevel = 0;

    bool operator==(const SenseStats&) const = default;
};

namespace detail {

inline void walk_senses(const Sense& sense, std::size_t depth, SenseStats& stats) {
    ++stats.total;
    if (depth > stats.maxDepth) stats.maxDepth = depth;
    for (const Sense& sub : sense.subsenses) walk_senses(sub, depth + 1, stats);
}

}  // namespace detail

inline SenseStats sense_stats(const LexicalEntry& entry) {
    SenseStats stats;
    stats.topLevel = entry.senses.size();
    for (const Sense& sense : entry.senses) detail::walk_senses(sense, 1, stats);
    return stats;
}

namespace detail {

inline void collect_usage_values(const Sense& sense, UsageType type,
                                 std::vector<std::string>& values) {
    for (const UsageMarker& u : sense.usages) {
        if (u.type == type) values.push_back(u.value);
    }
    for (const Sense& sub : sense.subsenses) collect_usage_values(sub, type, values);
}

inline void collect_orthographies(const Form& form, std::vector<const std::string*>& out) {
    for (const FormRepresentation& rep : form.representations) {
        if (rep.kind == RepresentationKind::Orthography) out.push_back(&rep.value);
    }
    for (const Form& sub : form.subforms) collect_orthographies(sub, out);
}

}  // namespace detail

/// Distinct usage values of the requested axis, each mapped to the entries
/// carrying it somewhere in their sense tree.
inline std::map<std::string, std::vector<std::string>> usage_index(const Lexicon& lexicon,
                                                                   UsageType type) {
    std::map<std::string, std::vector<std::string>> index;
    for (std::size_t i = 0; i < lexicon.entries.size(); ++i) {
        const std::string id = effective_entry_id(lexicon.entries[i], i);
        std::vector<std::string> values;
        for (const Sense& sense : lexicon.entries[i].senses) {
            detail::collect_usage_values(sense, type, values);
        }
        for (const std::string& value : values) {
            std::vector<std::string>& ids = index[value];
            if (ids.empty() || ids.back() != id) ids.push_back(id);
        }
    }
    return index;
}

/// Entries whose any orthography (in any form or subform) equals `surface`
/// after NFC.
inline std::vector<std::string> lookup(const Lexicon& lexicon, std::string_view surface) {
    const std::string needle = unicode::nfc(surface);
    std::vector<std::string> result;
    for (std::size_t i = 0; i < lexicon.entries.size(); ++i) {
        std::vector<const std::string*> orths;
        for (const Form& form : lexicon.entries[i].forms) {
            detail::collect_orthographies(form, orths);
        }
        for (const std::string* orth : orths) {
            if (unicode::nfc(*orth) == needle) {
                result.push_back(effective_entry_id(lexicon.entries[i], i));
                break;
            }
        }
    }
    return result;
}

}  // namespace lexkit::sema
