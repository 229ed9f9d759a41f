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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexkit/errors.hpp"
#include "lexkit/parse_options.hpp"
#include "lexkit/report.hpp"
#include "lexkit/sema.hpp"
#include "lexkit/xml.hpp"

// TEI dictionary entries: entry / form / sense with the orth, pron, hyph,
// stress, syll, gramGrp, def, cit and usg inventory. Typed <entry> elements
// are parsed into the lexical model; <entryFree> blocks are carried through
// verbatim.
namespace lexkit::tei {

struct OpaqueEntry {
    std::size_t position = 0;  // index in the document's entry sequence
    std::string xml;           // exact source bytes of the entryFree element

    bool operator==(const OpaqueEntry&) const = default;
};

struct TeiDocument {
    sema::Lexicon lexicon;
    std::vector<OpaqueEntry> opaqueEntries;

    bool operator==(const TeiDocument&) const = default;
};

struct TeiParseResult {
    TeiDocument document;
    ValidationReport report;
};

namespace detail {

inline std::optional<sema::RepresentationKind> representation_kind(std::string_view element) {
    using sema::RepresentationKind;
    if (element == "orth") return RepresentationKind::Orthography;
    if (element == "pron") return RepresentationKind::Pronunciation;
    if (element == "hyph") return RepresentationKind::Hyphenation;
    if (element == "stress") return RepresentationKind::Stress;
    if (element == "syll") return RepresentationKind::Syllabification;
    return std::nullopt;
}

inline std::string_view representation_element(sema::RepresentationKind kind) {
    using sema::RepresentationKind;
    switch (kind) {
        case RepresentationKind::Orthography: return "orth";
        case RepresentationKind::Pronunciation: return "pron";
        case RepresentationKind::Hyphenation: return "hyph";
        case RepresentationKind::Stress: return "stress";
        case RepresentationKind::Syllabification: return "syll";
        case RepresentationKind::Transliteration: return "orth";  // orth type="translit"
    }
    return "orth";
}

class Reader {
public:
    Reader(const ParseOptions& opts, ValidationReport& report) : opts_(opts), report_(report) {}

    TeiDocument read(const xml::Element& root, std::string_view source,
                     const std::optional<LangCode>& objectLang) {
        TeiDocument doc;
        check_namespace(root);
        if (const std::string* raw = root.attribute("xml:lang")) scopeLang_ = LangCode::parse(*raw);
        const std::optional<LangCode> rootLang = scopeLang_;
        scan(root, source, doc);
        if (objectLang) {
            doc.lexicon.lang = *objectLang;
        } else if (firstEntryLang_) {
            doc.lexicon.lang = *firstEntryLang_;
        } else if (rootLang) {
            doc.lexicon.lang = *rootLang;
        } else {
            doc.lexicon.lang = LangCode();  // "und"
            report_.add(Severity::Info, "DEFAULT_LANG", std::string(root.local_name()) + "[1]",
                        "no object language given or found; defaulting to 'und'");
        }
        return doc;
    }

private:
    bool strict() const { return opts_.mode == ParseMode::Strict; }

    void recover_or_fatal(const std::string& code, const std::string& path,
                          const std::string& message, Severity lenientSeverity) {
        if (strict()) throw ParseError(code, path, message);
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

    // Walks the surrounding skeleton; anything that is not an entry,
    // an entryFree or a teiHeader is traversed transparently.
    void scan(const xml::Element& e, std::string_view source, TeiDocument& doc) {
        const std::string_view local = e.local_name();
        if (local == "teiHeader") {
            report_.add(Severity::Info, "TEI_HEADER_SKIPPED", "teiHeader[1]",
                        "header metadata is not modeled");
            return;
        }
        if (local == "entry") {
            const std::size_t position = position_++;
            const std::string path = "entry[" + std::to_string(++entryIndex_) + "]";
            if (!firstEntryLang_) {
                if (const std::string* raw = e.attribute("xml:lang")) {
                    firstEntryLang_ = LangCode::parse(*raw);
                } else {
                    firstEntryLang_ = scopeLang_;
                }
            }
            (void)position;
            doc.lexicon.entries.push_back(read_entry(e, path));
            return;
        }
        if (local == "entryFree") {
            doc.opaqueEntries.push_back(OpaqueEntry{
                position_++, std::string(source.substr(e.sourceBegin,
                                                       e.sourceEnd - e.sourceBegin))});
            return;
        }
        const std::optional<LangCode> saved = scopeLang_;
        if (const std::string* raw = e.attribute("xml:lang")) {
            if (auto lang = LangCode::parse(*raw)) scopeLang_ = lang;
        }
        for (const xml::Node& node : e.children) {
            if (node.is_element()) scan(node.element(), source, doc);
        }
        scopeLang_ = saved;
    }

    void unknown_element(const xml::Element& e, const std::string& parentPath) {
        const std::string path = parentPath + "/" + std::string(e.local_name()) + "[1]";
        recover_or_fatal("UNKNOWN_ELEMENT", path, "unknown element '" + e.name + "' skipped",
                         Severity::Warning);
    }

    void flag_stray_text(std::string_view text, const std::string& where) {
        if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) return;
        recover_or_fatal("STRAY_TEXT", where, "unexpected character data", Severity::Warning);
    }

    /// Flattening rule for leaf-like elements: strict rejects inner markup,
    /// lenient keeps every character and reports once.
    std::string leaf_text(const xml::Element& e, const std::string& path, bool* flattened) {
        if (xml::has_child_elements(e)) {
            recover_or_fatal("LOSSY_INLINE", path, "inner markup flattened to text",
                             Severity::Warning);
            if (flattened != nullptr) *flattened = true;
        }
        return xml::collect_text(e);
    }

    std::optional<LangCode> lang_attribute(const xml::Element& e, const std::string& path) {
        const std::string* raw = e.attribute("xml:lang");
        if (!raw) return std::nullopt;
        auto lang = LangCode::parse(*raw);
        if (!lang) {
            recover_or_fatal("INVALID_LANG", path, "unparseable language tag '" + *raw + "'",
                             Severity::Warning);
        }
        return lang;
    }

    sema::LexicalEntry read_entry(const xml::Element& e, const std::string& path) {
        sema::LexicalEntry entry;
        if (const std::string* id = e.attribute("xml:id")) entry.id = *id;
        std::size_t formIndex = 0;
        std::size_t senseIndex = 0;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "form") {
                entry.forms.push_back(
                    read_form(child, path + "/form[" + std::to_string(++formIndex) + "]"));
            } else if (local == "gramGrp") {
                read_gram(child, path + "/gramGrp[1]", entry.gram);
            } else if (local == "sense") {
                entry.senses.push_back(
                    read_sense(child, path + "/sense[" + std::to_string(++senseIndex) + "]"));
            } else {
                unknown_element(child, path);
            }
        }
        return entry;
    }

    sema::Form read_form(const xml::Element& e, const std::string& path) {
        sema::Form form;
        if (const std::string* type = e.attribute("type")) {
            if (*type == "lemma") {
                form.formType = sema::FormType::Lemma;
            } else if (*type == "inflected") {
                form.formType = sema::FormType::Inflected;
            } else if (*type == "variant") {
                form.formType = sema::FormType::Variant;
            } else {
                report_.add(Severity::Warning, "UNKNOWN_FORM_TYPE", path,
                            "form type '" + *type + "' read as unspecified");
            }
        }
        std::size_t subformIndex = 0;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (auto kind = representation_kind(local)) {
                const std::string repPath =
                    path + "/" + std::string(local) + "[" +
                    std::to_string(form.representations.size() + 1) + "]";
                sema::FormRepresentation rep;
                rep.kind = *kind;
                if (*kind == sema::RepresentationKind::Orthography) {
                    if (const std::string* t = child.attribute("type"); t && *t == "translit") {
                        rep.kind = sema::RepresentationKind::Transliteration;
                    }
                }
                rep.value = leaf_text(child, repPath, nullptr);
                form.representations.push_back(std::move(rep));
            } else if (local == "form") {
                form.subforms.push_back(read_form(
                    child, path + "/form[" + std::to_string(++subformIndex) + "]"));
            } else if (local == "gramGrp") {
                read_gram(child, path + "/gramGrp[1]", form.gram);
            } else {
                unknown_element(child, path);
            }
        }
        return form;
    }

    void read_gram(const xml::Element& e, const std::string& path,
                   std::optional<sema::GrammaticalInfo>& slot) {
        if (!slot) slot = sema::GrammaticalInfo{};
        sema::GrammaticalInfo& gram = *slot;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            const std::string childPath = path + "/" + std::string(local) + "[1]";
            const std::string value = leaf_text(child, childPath, nullptr);
            if (local == "pos") {
                if (gram.pos) {
                    recover_or_fatal("DUPLICATE_GRAM", childPath, "second pos ignored",
                                     Severity::Warning);
                } else {
                    gram.pos = value;
                }
            } else if (local == "gen") {
                if (gram.gender) {
                    recover_or_fatal("DUPLICATE_GRAM", childPath, "second gen ignored",
                                     Severity::Warning);
                } else {
                    gram.gender = value;
                }
            } else {
                gram.other.emplace_back(std::string(local), value);
            }
        }
    }

    sema::Sense read_sense(const xml::Element& e, const std::string& path) {
        sema::Sense sense;
        for (const auto& [name, value] : e.attributes) {
            if (xml::is_namespace_decl(name)) continue;
            if (name == "n") {
                sense.label = value;
            } else {
                sense.attrs.emplace_back(name, value);
            }
        }
        std::size_t subsenseIndex = 0;
        std::size_t citIndex = 0;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "def") {
                const std::string defPath =
                    path + "/def[" + std::to_string(sense.definitions.size() + 1) + "]";
                sema::Definition def;
                def.text = leaf_text(child, defPath, &def.inlineMarkupFlattened);
                for (const auto& [name, value] : child.attributes) {
                    if (!xml::is_namespace_decl(name)) def.attrs.emplace_back(name, value);
                }
                sense.definitions.push_back(std::move(def));
            } else if (local == "usg") {
                const std::string usgPath =
                    path + "/usg[" + std::to_string(sense.usages.size() + 1) + "]";
                sema::UsageMarker marker;
                if (const std::string* type = child.attribute("type")) {
                    if (auto mapped = sema::usage_type_from(*type)) {
                        marker.type = *mapped;
                    } else {
                        marker.type = sema::UsageType::Other;
                        marker.rawType = *type;
                    }
                }
                marker.value = leaf_text(child, usgPath, nullptr);
                sense.usages.push_back(std::move(marker));
            } else if (local == "cit") {
                read_cit(child, path + "/cit[" + std::to_string(++citIndex) + "]", sense);
            } else if (local == "sense") {
                sense.subsenses.push_back(read_sense(
                    child, path + "/sense[" + std::to_string(++subsenseIndex) + "]"));
            } else {
                unknown_element(child, path);
            }
        }
        return sense;
    }

    void read_cit(const xml::Element& e, const std::string& path, sema::Sense& sense) {
        const xml::Element* quote = nullptr;
        std::optional<std::string> source;
        for (const xml::Node& node : e.children) {
            if (!node.is_element()) {
                flag_stray_text(node.text(), path);
                continue;
            }
            const xml::Element& child = node.element();
            const std::string_view local = child.local_name();
            if (local == "quote" && quote == nullptr) {
                quote = &child;
            } else if (local == "bibl") {
                source = leaf_text(child, path + "/bibl[1]", nullptr);
            } else {
                unknown_element(child, path);
            }
        }
        if (quote == nullptr) {
            recover_or_fatal("CIT_WITHOUT_QUOTE", path, "cit has no quote; dropped",
                             Severity::Warning);
            return;
        }
        const std::string quoteText = leaf_text(*quote, path + "/quote[1]", nullptr);
        std::optional<LangCode> lang = lang_attribute(e, path);
        if (!lang) lang = lang_attribute(*quote, path + "/quote[1]");

        const std::string* type = e.attribute("type");
        if (type != nullptr && *type == "translation") {
            if (!lang) {
                recover_or_fatal("MISSING_LANG", path,
                                 "translation cit without xml:lang read as 'und'",
                                 Severity::Warning);
                lang = LangCode();
            }
            sense.equivalents.push_back(sema::Equivalent{*lang, quoteText});
            return;
        }
        sema::Context context;
        context.quote = quoteText;
        context.lang = lang;
        context.source = source;
        if (type == nullptr) {
            context.type = sema::ContextType::Other;
        } else if (*type == "example") {
            context.type = sema::ContextType::Example;
        } else {
            context.type = sema::ContextType::Other;
            context.rawType = *type;
        }
        sense.contexts.push_back(std::move(context));
    }

    const ParseOptions& opts_;
    ValidationReport& report_;
    std::optional<LangCode> scopeLang_;
    std::optional<LangCode> firstEntryLang_;
    std::size_t position_ = 0;
    std::size_t entryIndex_ = 0;
};

}  // namespace detail

/// Parses every entry / entryFree in the document; a surrounding TEI
/// skeleton is traversed and ignored (teiHeader reported as skipped). The
/// object language comes from `objectLang`, else from xml:lang in scope at
/// the first entry, else the root, else "und" with a finding.
inline TeiParseResult parse_tei(std::string_view document, const ParseOptions& opts = {},
                                const std::optional<LangCode>& objectLang = std::nullopt) {
    TeiParseResult result;
    const xml::Element root = xml::parse(document);
    detail::Reader reader(opts, result.report);
    result.document = reader.read(root, document, objectLang);
    result.report.sort();
    return result;
}

enum class TeiWrap {
    Bare,      // entries only; a div wrapper is added when needed
    Skeleton,  // minimal TEI/text/body document
};

namespace detail {

inline void write_gram(xml::Writer& w, const sema::GrammaticalInfo& gram) {
    w.open("gramGrp");
    if (gram.pos) w.leaf("pos", {}, *gram.pos);
    if (gram.gender) w.leaf("gen", {}, *gram.gender);
    for (const auto& [key, value] : gram.other) w.leaf(key, {}, value);
    w.close();
}

inline void write_form(xml::Writer& w, const sema::Form& form) {
    xml::AttributeList attrs;
    switch (form.formType) {
        case sema::FormType::Lemma: attrs.emplace_back("type", "lemma"); break;
        case sema::FormType::Inflected: attrs.emplace_back("type", "inflected"); break;
        case sema::FormType::Variant: attrs.emplace_back("type", "variant"); break;
        case sema::FormType::Unspecified: break;
    }
    w.open("form", attrs);
    for (const sema::FormRepresentation& rep : form.representations) {
        xml::AttributeList repAttrs;
        if (rep.kind == sema::RepresentationKind::Transliteration) {
            repAttrs.emplace_back("type", "translit");
        }
        w.leaf(representation_element(rep.kind), repAttrs, rep.value);
    }
    if (form.gram) write_gram(w, *form.gram);
    for (const sema::Form& sub : form.subforms) write_form(w, sub);
    w.close();
}

inline void write_sense(xml::Writer& w, const sema::Sense& sense) {
    xml::AttributeList attrs;
    if (sense.label) attrs.emplace_back("n", *sense.label);
    for (const auto& [name, value] : sense.attrs) attrs.emplace_back(name, value);
    w.open("sense", attrs);
    for (const sema::UsageMarker& u : sense.usages) {
        xml::AttributeList usgAttrs;
        if (u.type != sema::UsageType::Other) {
            usgAttrs.emplace_back("type", std::string(sema::to_string(u.type)));
        } else if (!u.rawType.empty()) {
            usgAttrs.emplace_back("type", u.rawType);
        }
        w.leaf("usg", usgAttrs, u.value);
    }
    for (const sema::Definition& def : sense.definitions) {
        w.leaf("def", def.attrs, def.text);
    }
    for (const sema::Context& c : sense.contexts) {
        xml::AttributeList citAttrs;
        if (c.type == sema::ContextType::Example) {
            citAttrs.emplace_back("type", "example");
        } else if (!c.rawType.empty()) {
            citAttrs.emplace_back("type", c.rawType);
        }
        if (c.lang) citAttrs.emplace_back("xml:lang", c.lang->tag());
        w.open("cit", citAttrs);
        w.leaf("quote", {}, c.quote);
        if (c.source) w.leaf("bibl", {}, *c.source);
        w.close();
    }
    for (const sema::Equivalent& eq : sense.equivalents) {
        w.open("cit", {{"type", "translation"}, {"xml:lang", eq.lang.tag()}});
        w.leaf("quote", {}, eq.text);
        w.close();
    }
    for (const sema::Sense& sub : sense.subsenses) write_sense(w, sub);
    w.close();
}

inline void write_entry(xml::Writer& w, const sema::LexicalEntry& entry,
                        const xml::AttributeList& extraAttrs) {
    xml::AttributeList attrs;
    if (entry.id) attrs.emplace_back("xml:id", *entry.id);
    for (const auto& a : extraAttrs) attrs.push_back(a);
    w.open("entry", attrs);
    for (const sema::Form& form : entry.forms) write_form(w, form);
    if (entry.gram) write_gram(w, *entry.gram);
    for (const sema::Sense& sense : entry.senses) write_sense(w, sense);
    w.close();
}

}  // namespace detail

/// Canonical form; opaque entryFree blocks are re-emitted verbatim at their
/// recorded positions. Every entry must pass the lenient profile.
inline std::string write_tei(const TeiDocument& doc, TeiWrap wrap = TeiWrap::Bare) {
    const ValidationReport report =
        sema::validate_sema(doc.lexicon, sema::SemaProfile::Lenient);
    if (auto worst = worst_severity(report); worst && *worst >= Severity::Error) {
        throw InvalidModelError("lexicon fails lenient validation: " +
                                to_text(report.findings.front()));
    }

    // Interleave typed entries and opaque blocks by recorded position.
    struct Block {
        const sema::LexicalEntry* entry = nullptr;
        const OpaqueEntry* opaque = nullptr;
    };
    const std::size_t total = doc.lexicon.entries.size() + doc.opaqueEntries.size();
    std::map<std::size_t, const OpaqueEntry*> byPosition;
    std::vector<const OpaqueEntry*> overflow;
    for (const OpaqueEntry& o : doc.opaqueEntries) {
        if (o.position < total && !byPosition.contains(o.position)) {
            byPosition.emplace(o.position, &o);
        } else {
            overflow.push_back(&o);
        }
    }
    std::vector<Block> blocks;
    std::size_t nextEntry = 0;
    for (std::size_t i = 0; i < total; ++i) {
        if (auto it = byPosition.find(i); it != byPosition.end()) {
            blocks.push_back(Block{nullptr, it->second});
        } else if (nextEntry < doc.lexicon.entries.size()) {
            blocks.push_back(Block{&doc.lexicon.entries[nextEntry++], nullptr});
        }
    }
    for (const OpaqueEntry* o : overflow) blocks.push_back(Block{nullptr, o});

    xml::Writer w;
    const std::string& lang = doc.lexicon.lang.tag();
    if (wrap == TeiWrap::Skeleton) {
        w.open("TEI", {{"xmlns", "http://www.tei-c.org/ns/1.0"}});
        w.open("text");
        w.open("body", {{"xml:lang", lang}});
        for (const Block& b : blocks) {
            if (b.entry != nullptr) {
                detail::write_entry(w, *b.entry, {});
            } else {
                w.raw_block(b.opaque->xml);
            }
        }
        w.close();
        w.close();
        w.close();
    } else if (blocks.size() == 1 && blocks.front().entry != nullptr) {
        detail::write_entry(w, *blocks.front().entry, {{"xml:lang", lang}});
    } else if (blocks.size() == 1) {
        w.raw_block(blocks.front().opaque->xml);
    } else {
        w.open("div", {{"xml:lang", lang}});
        for (const Block& b : blocks) {
            if (b.entry != nullptr) {
                detail::write_entry(w, *b.entry, {});
            } else {
                w.raw_block(b.opaque->xml);
            }
        }
        w.close();
    }
    return std::move(w).take();
}

}  // namespace lexkit::tei
