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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexkit/errors.hpp"
#include "lexkit/onoma.hpp"
#include "lexkit/parse_options.hpp"
#include "lexkit/report.hpp"
#include "lexkit/xml.hpp"

// TBX-style serialization of the terminological model: termEntry / langSet /
// tig with descrip, admin and termNote descriptors. descripGrp is
// transparent; <langSec> is accepted as an alias for <langSet>.
namespace lexkit::tbx {

struct ParseOutcome {
    onoma::TermBase base;
    ValidationReport report;
};

namespace detail {

using onoma::DataCategory;

class Reader {
public:
    Reader(const ParseOptions& opts, ValidationReport& report)
        : opts_(opts), report_(report) {}

    onoma::TermBase read(const xml::Element& root) {
        onoma::TermBase base;
        check_namespace(root);
        if (root.local_name() == "termEntry") {
            base.entries.push_back(read_entry(root, "termEntry[1]"));
            return base;
        }
        std::size_t entryIndex = 0;
        for (const xml::Node& node : root.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), root.local_name());
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "termEntry") {
                ++entryIndex;
                base.entries.push_back(
                    read_entry(child, "termEntry[" + std::to_string(entryIndex) + "]"));
            } else if (local == "descrip" || local == "admin" || local == "descripGrp") {
                read_category_like(child, std::string(root.local_name()) + "[1]", false,
                                   base.metadata);
            } else {
                unknown_element(child, std::string(root.local_name()) + "[1]", base.metadata);
            }
        }
        return base;
    }

private:
    bool strict() const { return opts_.mode == ParseMode::Strict; }

    [[noreturn]] void fatal(const std::string& code, const std::string& path,
                            const std::string& message) const {
        throw ParseError(code, path, message);
    }

    void recover_or_fatal(const std::string& code, const std::string& path,
                          const std::string& message, Severity lenientSeverity) {
        if (strict()) fatal(code, path, message);
        report_.add(lenientSeverity, code, path, message);
    }

    void check_namespace(const xml::Element& root) {
        if (!opts_.requiredNamespace) return;
        const std::string* ns = root.attribute("xmlns");
        if (!ns || *ns != *opts_.requiredNamespace) {
            recover_or_fatal("NAMESPACE_MISMATCH", std::string(root.local_name()) + "[1]",
                             "expected default namespace '" + *opts_.requiredNamespace + "'",
                             Severity::Error);
        }
    }

    void flag_stray_text(std::string_view text, std::string_view where) {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return;
        recover_or_fatal("STRAY_TEXT", std::string(where),
                         "unexpected character data", Severity::Warning);
    }

    std::optional<LangCode> read_lang_attribute(const xml::Element& e, const std::string& path) {
        const std::string* raw = e.attribute("xml:lang");
        if (!raw) return std::nullopt;
        auto lang = LangCode::parse(*raw);
        if (!lang) {
            recover_or_fatal("INVALID_LANG", path, "unparseable language tag '" + *raw + "'",
                             Severity::Warning);
            return std::nullopt;
        }
        return lang;
    }

    /// descrip / admin / termNote / descripGrp → categories of the enclosing
    /// level, in document order.
    void read_category_like(const xml::Element& e, const std::string& parentPath, bool termLevel,
                            std::vector<DataCategory>& out) {
        const std::string_view local = e.local_name();
        const std::string path =
            parentPath + "/" + std::string(local) + "[" + std::to_string(out.size() + 1) + "]";
        if (local == "descripGrp") {
            for (const xml::Node& node : e.children) {
                if (!node.is_element()) {
                    flag_stray_text(node.text(), path);
                    continue;
                }
                const std::string_view inner = node.element().local_name();
                if (inner == "descrip" || inner == "admin" || inner == "termNote" ||
                    inner == "descripGrp") {
                    read_category_like(node.element(), parentPath, termLevel, out);
                } else {
                    unknown_element(node.element(), path, out);
                }
            }
            return;
        }
        if (local == "termNote" && !termLevel) {
            unknown_element(e, parentPath, out);
            return;
        }
        DataCategory category;
        if (const std::string* type = e.attribute("type")) {
            category.key = *type;
        } else {
            recover_or_fatal("MISSING_TYPE", path,
                             "'" + std::string(local) + "' has no type attribute",
                             Severity::Warning);
            category.key = std::string(local);
        }
        if (category.key == "term" || category.key == "language") {
            recover_or_fatal("STRUCTURAL_CATEGORY", path,
                             "category key '" + category.key + "' is structural; dropped",
                             Severity::Warning);
            return;
        }
        if (xml::has_child_elements(e)) {
            recover_or_fatal("LOSSY_INLINE", path, "inner markup flattened to text",
                             Severity::Warning);
        }
        category.value = xml::collect_text(e);
        category.lang = read_lang_attribute(e, path);
        out.push_back(std::move(category));
    }

    void unknown_element(const xml::Element& e, const std::string& parentPath,
                         std::vector<DataCategory>& out) {
        const std::string path = parentPath + "/" + std::string(e.local_name()) + "[1]";
        if (strict()) {
            fatal("UNKNOWN_ELEMENT", path, "unknown element '" + e.name + "'");
        }
        report_.add(Severity::Warning, "UNKNOWN_ELEMENT", path,
                    "unknown element '" + e.name + "' kept as opaque category");
        out.push_back(DataCategory{e.name, xml::collect_text(e), std::nullopt});
    }

    onoma::TerminologicalEntry read_entry(const xml::Element& e, const std::string& path) {
        onoma::TerminologicalEntry entry;
        if (const std::string* id = e.attribute("xml:id")) entry.id = *id;
        std::size_t langIndex = 0;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "langSet" || local == "langSec") {
                ++langIndex;
                const std::string lsPath = path + "/langSet[" + std::to_string(langIndex) + "]";
                if (local == "langSec" && !strict()) {
                    // The prose name; both printed examples use langSet.
                    report_.add(Severity::Info, "LEGACY_LANG_SEC", lsPath,
                                "element 'langSec' read as 'langSet'");
                }
                read_language_section(child, lsPath, entry);
            } else if (local == "descrip" || local == "admin" || local == "termNote" ||
                       local == "descripGrp") {
                read_category_like(child, path, false, entry.categories);
            } else {
                unknown_element(child, path, entry.categories);
            }
        }
        return entry;
    }

    void read_language_section(const xml::Element& e, const std::string& path,
                               onoma::TerminologicalEntry& entry) {
        const std::string* raw = e.attribute("xml:lang");
        if (!raw) {
            recover_or_fatal("MISSING_LANG", path, "langSet has no xml:lang; section skipped",
                             Severity::Error);
            return;
        }
        auto lang = LangCode::parse(*raw);
        if (!lang) {
            recover_or_fatal("INVALID_LANG", path,
                             "unparseable language tag '" + *raw + "'; section skipped",
                             Severity::Error);
            return;
        }

        onoma::LanguageSection* section = nullptr;
        for (onoma::LanguageSection& existing : entry.languages) {
            if (existing.lang == *lang) {
                section = &existing;
                break;
            }
        }
        if (section != nullptr) {
            // Merging is a lenient-only repair.
            recover_or_fatal("DUPLICATE_LANG", path,
                             "second section for '" + lang->tag() + "' merged into the first",
                             Severity::Warning);
        } else {
            entry.languages.push_back(onoma::LanguageSection{*lang, {}, {}});
            section = &entry.languages.back();
        }

        std::size_t tigIndex = 0;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "tig") {
                ++tigIndex;
                read_term_section(child, path + "/tig[" + std::to_string(tigIndex) + "]",
                                  *section);
            } else if (local == "descrip" || local == "admin" || local == "termNote" ||
                       local == "descripGrp") {
                read_category_like(child, path, false, section->categories);
            } else {
                unknown_element(child, path, section->categories);
            }
        }
    }

    void read_term_section(const xml::Element& e, const std::string& path,
                           onoma::LanguageSection& section) {
        onoma::TermSection term;
        bool haveTerm = false;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "term") {
                if (haveTerm) {
                    recover_or_fatal("DUPLICATE_TERM", path,
                                     "more than one term in a tig; first kept",
                                     Severity::Warning);
                    continue;
                }
                haveTerm = true;
                if (xml::has_child_elements(child)) {
                    recover_or_fatal("LOSSY_INLINE", path + "/term[1]",
                                     "inner markup flattened to text", Severity::Warning);
                }
                term.term = xml::collect_text(child);
            } else if (local == "descrip" || local == "admin" || local == "termNote" ||
                       local == "descripGrp") {
                read_category_like(child, path, true, term.categories);
            } else {
                unknown_element(child, path, term.categories);
            }
        }
        if (term.term.empty()) {
            recover_or_fatal("EMPTY_TERM", path,
                             haveTerm ? "term is empty; tig skipped"
                                      : "tig has no term; skipped",
                             Severity::Error);
            return;
        }
        section.terms.push_back(std::move(term));
    }

    const ParseOptions& opts_;
    ValidationReport& report_;
};

inline const char* category_element(std::string_view key, bool termLevel) {
    for (const std::string_view adminKey :
         {"conceptIdentifier", "conceptOrigin", "termIdentifier", "source", "responsibility",
          "creationDate", "modificationDate"}) {
        if (key == adminKey) return "admin";
    }
    if (termLevel) {
        for (const std::string_view descripKey :
             {"subjectField", "definition", "example", "originatingDatabaseName"}) {
            if (key == descripKey) return "descrip";
        }
        return "termNote";
    }
    for (const std::string_view noteKey :
         {"administrativeStatus", "partOfSpeech", "gender", "register", "termType"}) {
        if (key == noteKey) return "admin";
    }
    return "descrip";
}

inline void write_categories(xml::Writer& w, const std::vector<DataCategory>& categories,
                             bool termLevel) {
    for (const DataCategory& c : categories) {
        xml::AttributeList attrs;
        if (c.lang) attrs.emplace_back("xml:lang", c.lang->tag());
        attrs.emplace_back("type", c.key);
        w.leaf(category_element(c.key, termLevel), attrs, c.value);
    }
}

}  // namespace detail

/// Reads a document into a TermBase. The root may itself be a termEntry or
/// contain termEntry children. Fatal conditions throw ParseError; in lenient
/// mode recoverable ones become findings instead.
inline ParseOutcome parse_tbx(std::string_view document, const ParseOptions& opts = {}) {
    ParseOutcome outcome;
    const xml::Element root = xml::parse(document);
    detail::Reader reader(opts, outcome.report);
    outcome.base = reader.read(root);
    outcome.report.sort();
    return outcome;
}

/// Canonical form: UTF-8, two-space indent, attribute order xml:id,
/// xml:lang, type; term first inside tig. Requires every entry to pass the
/// minimal profile.
inline std::string write_tbx(const onoma::TermBase& base) {
    const ValidationReport report = onoma::validate_onoma(base, onoma::OnomaProfile::Minimal);
    if (auto worst = worst_severity(report); worst && *worst >= Severity::Error) {
        throw InvalidModelError("term base fails minimal validation: " +
                                to_text(report.findings.front()));
    }
    xml::Writer w;
    w.open("tbx");
    detail::write_categories(w, base.metadata, false);
    for (const onoma::TerminologicalEntry& entry : base.entries) {
        xml::AttributeList entryAttrs;
        if (entry.id) entryAttrs.emplace_back("xml:id", *entry.id);
        w.open("termEntry", entryAttrs);
        detail::write_categories(w, entry.categories, false);
        for (const onoma::LanguageSection& section : entry.languages) {
            w.open("langSet", {{"xml:lang", section.lang.tag()}});
            detail::write_categories(w, section.categories, false);
            for (const onoma::TermSection& term : section.terms) {
                w.open("tig");
                w.leaf("term", {}, term.term);
                detail::write_categories(w, term.categories, true);
                w.close();
            }
            w.close();
        }
        w.close();
    }
    w.close();
    return std::move(w).take();
}

}  // namespace lexkit::tbx
