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

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "lexkit/errors.hpp"
#include "lexkit/onoma.hpp"
#include "lexkit/sema.hpp"
#include "lexkit/tei.hpp"

// Structural JSON dump of both model kinds, discriminated by "kind"
// ("termbase" / "tei"). Key order is fixed so output is byte-stable; the
// dump and the loader are exact inverses.
namespace lexkit::jsonio {

using Json = nlohmann::ordered_json;

namespace detail {

[[noreturn]] inline void bad(const std::string& message) {
    throw ParseError("INVALID_JSON_MODEL", "", message);
}

inline const Json& field(const Json& j, std::string_view key) {
    auto it = j.find(key);
    if (it == j.end()) bad("missing field '" + std::string(key) + "'");
    return *it;
}

inline std::string str(const Json& j, std::string_view key) {
    const Json& v = field(j, key);
    if (!v.is_string()) bad("field '" + std::string(key) + "' must be a string");
    return v.get<std::string>();
}

inline std::optional<std::string> opt_str(const Json& j, std::string_view key) {
    const Json& v = field(j, key);
    if (v.is_null()) return std::nullopt;
    if (!v.is_string()) bad("field '" + std::string(key) + "' must be a string or null");
    return v.get<std::string>();
}

inline const Json& array(const Json& j, std::string_view key) {
    const Json& v = field(j, key);
    if (!v.is_array()) bad("field '" + std::string(key) + "' must be an array");
    return v;
}

inline LangCode lang(const Json& j, std::string_view key) {
    auto parsed = LangCode::parse(str(j, key));
    if (!parsed) bad("field '" + std::string(key) + "' is not a language tag");
    return *parsed;
}

inline std::optional<LangCode> opt_lang(const Json& j, std::string_view key) {
    auto raw = opt_str(j, key);
    if (!raw) return std::nullopt;
    auto parsed = LangCode::parse(*raw);
    if (!parsed) bad("field '" + std::string(key) + "' is not a language tag");
    return parsed;
}

inline Json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
    Json out = Json::array();
    for (const auto& [key, value] : pairs) out.push_back({{"key", key}, {"value", value}});
    return out;
}

inline std::vector<std::pair<std::string, std::string>> pairs_from_json(const Json& j) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const Json& p : j) out.emplace_back(str(p, "key"), str(p, "value"));
    return out;
}

}  // namespace detail

// --- onomasiological ------------------------------------------------------

inline Json to_json(const onoma::DataCategory& c) {
    return {{"key", c.key},
            {"value", c.value},
            {"lang", c.lang ? Json(c.lang->tag()) : Json(nullptr)}};
}

inline Json categories_to_json(const std::vector<onoma::DataCategory>& categories) {
    Json out = Json::array();
    for (const onoma::DataCategory& c : categories) out.push_back(to_json(c));
    return out;
}

inline onoma::DataCategory category_from_json(const Json& j) {
    return onoma::DataCategory{detail::str(j, "key"), detail::str(j, "value"),
                               detail::opt_lang(j, "lang")};
}

inline std::vector<onoma::DataCategory> categories_from_json(const Json& j) {
    std::vector<onoma::DataCategory> out;
    for (const Json& c : j) out.push_back(category_from_json(c));
    return out;
}

inline Json to_json(const onoma::TermBase& base) {
    Json entries = Json::array();
    for (const onoma::TerminologicalEntry& entry : base.entries) {
        Json languages = Json::array();
        for (const onoma::LanguageSection& section : entry.languages) {
            Json terms = Json::array();
            for (const onoma::TermSection& term : section.terms) {
                terms.push_back({{"term", term.term},
                                 {"categories", categories_to_json(term.categories)}});
            }
            languages.push_back({{"lang", section.lang.tag()},
                                 {"categories", categories_to_json(section.categories)},
                                 {"terms", terms}});
        }
        entries.push_back({{"id", entry.id ? Json(*entry.id) : Json(nullptr)},
                           {"categories", categories_to_json(entry.categories)},
                           {"languages", languages}});
    }
    return {{"kind", "termbase"},
            {"metadata", categories_to_json(base.metadata)},
            {"entries", entries}};
}

inline onoma::TermBase termbase_from_json(const Json& j) {
    if (detail::str(j, "kind") != "termbase") detail::bad("kind is not 'termbase'");
    onoma::TermBase base;
    base.metadata = categories_from_json(detail::array(j, "metadata"));
    for (const Json& je : detail::array(j, "entries")) {
        onoma::TerminologicalEntry entry;
        entry.id = detail::opt_str(je, "id");
        entry.categories = categories_from_json(detail::array(je, "categories"));
        for (const Json& jl : detail::array(je, "languages")) {
            onoma::LanguageSection section;
            section.lang = detail::lang(jl, "lang");
            section.categories = categories_from_json(detail::array(jl, "categories"));
            for (const Json& jt : detail::array(jl, "terms")) {
                section.terms.push_back(onoma::TermSection{
                    detail::str(jt, "term"),
                    categories_from_json(detail::array(jt, "categories"))});
            }
            entry.languages.push_back(std::move(section));
        }
        base.entries.push_back(std::move(entry));
    }
    return base;
}

// --- semasiological -------------------------------------------------------

inline std::string_view to_string(sema::FormType t) {
    switch (t) {
        case sema::FormType::Lemma: return "lemma";
        case sema::FormType::Inflected: return "inflected";
        case sema::FormType::Variant: return "variant";
        case sema::FormType::Unspecified: return "unspecified";
    }
    return "unspecified";
}

inline std::string_view to_string(sema::RepresentationKind k) {
    switch (k) {
        case sema::RepresentationKind::Orthography: return "orthography";
        case sema::RepresentationKind::Pronunciation: return "pronunciation";
        case sema::RepresentationKind::Hyphenation: return "hyphenation";
        case sema::RepresentationKind::Stress: return "stress";
        case sema::RepresentationKind::Syllabification: return "syllabification";
        case sema::RepresentationKind::Transliteration: return "transliteration";
    }
    return "orthography";
}

inline std::string_view to_string(sema::ContextType t) {
    switch (t) {
        case sema::ContextType::Example: return "example";
        case sema::ContextType::Translation: return "translation";
        case sema::ContextType::Other: return "other";
    }
    return "other";
}

namespace detail {

inline sema::FormType form_type_from(const std::string& s) {
    if (s == "lemma") return sema::FormType::Lemma;
    if (s == "inflected") return sema::FormType::Inflected;
    if (s == "variant") return sema::FormType::Variant;
    if (s == "unspecified") return sema::FormType::Unspecified;
    bad("unknown form type '" + s + "'");
}

inline sema::RepresentationKind representation_kind_from(const std::string& s) {
    if (s == "orthography") return sema::RepresentationKind::Orthography;
    if (s == "pronunciation") return sema::RepresentationKind::Pronunciation;
    if (s == "hyphenation") return sema::RepresentationKind::Hyphenation;
    if (s == "stress") return sema::RepresentationKind::Stress;
    if (s == "syllabification") return sema::RepresentationKind::Syllabification;
    if (s == "transliteration") return sema::RepresentationKind::Transliteration;
    bad("unknown representation kind '" + s + "'");
}

inline sema::UsageType usage_type_from_json(const std::string& s) {
    if (auto mapped = sema::usage_type_from(s)) return *mapped;
    if (s == "other") return sema::UsageType::Other;
    bad("unknown usage type '" + s + "'");
}

inline sema::ContextType context_type_from(const std::string& s) {
    if (s == "example") return sema::ContextType::Example;
    if (s == "translation") return sema::ContextType::Translation;
    if (s == "other") return sema::ContextType::Other;
    bad("unknown context type '" + s + "'");
}

}  // namespace detail

inline Json to_json(const sema::GrammaticalInfo& g) {
    return {{"pos", g.pos ? Json(*g.pos) : Json(nullptr)},
            {"gender", g.gender ? Json(*g.gender) : Json(nullptr)},
            {"other", detail::pairs_to_json(g.other)}};
}

inline sema::GrammaticalInfo gram_from_json(const Json& j) {
    sema::GrammaticalInfo g;
    g.pos = detail::opt_str(j, "pos");
    g.gender = detail::opt_str(j, "gender");
    g.other = detail::pairs_from_json(detail::array(j, "other"));
    return g;
}

inline Json to_json(const sema::Form& form) {
    Json representations = Json::array();
    for (const sema::FormRepresentation& rep : form.representations) {
        representations.push_back(
            {{"kind", std::string(to_string(rep.kind))}, {"value", rep.value}});
    }
    Json subforms = Json::array();
    for (const sema::Form& sub : form.subforms) subforms.push_back(to_json(sub));
    return {{"type", std::string(to_string(form.formType))},
            {"representations", representations},
            {"gram", form.gram ? to_json(*form.gram) : Json(nullptr)},
            {"subforms", subforms}};
}

inline sema::Form form_from_json(const Json& j) {
    sema::Form form;
    form.formType = detail::form_type_from(detail::str(j, "type"));
    for (const Json& jr : detail::array(j, "representations")) {
        form.representations.push_back(sema::FormRepresentation{
            detail::representation_kind_from(detail::str(jr, "kind")),
            detail::str(jr, "value")});
    }
    const Json& gram = detail::field(j, "gram");
    if (!gram.is_null()) form.gram = gram_from_json(gram);
    for (const Json& js : detail::array(j, "subforms")) {
        form.subforms.push_back(form_from_json(js));
    }
    return form;
}

inline Json to_json(const sema::Sense& sense) {
    Json definitions = Json::array();
    for (const sema::Definition& def : sense.definitions) {
        definitions.push_back({{"text", def.text},
                               {"attrs", detail::pairs_to_json(def.attrs)},
                               {"inlineMarkupFlattened", def.inlineMarkupFlattened}});
    }
    Json usages = Json::array();
    for (const sema::UsageMarker& u : sense.usages) {
        usages.push_back({{"type", std::string(sema::to_string(u.type))},
                          {"rawType", u.rawType},
                          {"value", u.value}});
    }
    Json contexts = Json::array();
    for (const sema::Context& c : sense.contexts) {
        contexts.push_back({{"type", std::string(to_string(c.type))},
                            {"rawType", c.rawType},
                            {"quote", c.quote},
                            {"lang", c.lang ? Json(c.lang->tag()) : Json(nullptr)},
                            {"source", c.source ? Json(*c.source) : Json(nullptr)}});
    }
    Json equivalents = Json::array();
    for (const sema::Equivalent& eq : sense.equivalents) {
        equivalents.push_back({{"lang", eq.lang.tag()}, {"text", eq.text}});
    }
    Json subsenses = Json::array();
    for (const sema::Sense& sub : sense.subsenses) subsenses.push_back(to_json(sub));
    return {{"label", sense.label ? Json(*sense.label) : Json(nullptr)},
            {"attrs", detail::pairs_to_json(sense.attrs)},
            {"definitions", definitions},
            {"usages", usages},
            {"contexts", contexts},
            {"equivalents", equivalents},
            {"subsenses", subsenses}};
}

inline sema::Sense sense_from_json(const Json& j) {
    sema::Sense sense;
    sense.label = detail::opt_str(j, "label");
    sense.attrs = detail::pairs_from_json(detail::array(j, "attrs"));
    for (const Json& jd : detail::array(j, "definitions")) {
        sema::Definition def;
        def.text = detail::str(jd, "text");
        def.attrs = detail::pairs_from_json(detail::array(jd, "attrs"));
        const Json& flattened = detail::field(jd, "inlineMarkupFlattened");
        if (!flattened.is_boolean()) detail::bad("inlineMarkupFlattened must be a boolean");
        def.inlineMarkupFlattened = flattened.get<bool>();
        sense.definitions.push_back(std::move(def));
    }
    for (const Json& ju : detail::array(j, "usages")) {
        sense.usages.push_back(sema::UsageMarker{
            detail::usage_type_from_json(detail::str(ju, "type")),
            detail::str(ju, "rawType"), detail::str(ju, "value")});
    }
    for (const Json& jc : detail::array(j, "contexts")) {
        sema::Context c;
        c.type = detail::context_type_from(detail::str(jc, "type"));
        c.rawType = detail::str(jc, "rawType");
        c.quote = detail::str(jc, "quote");
        c.lang = detail::opt_lang(jc, "lang");
        c.source = detail::opt_str(jc, "source");
        sense.contexts.push_back(std::move(c));
    }
    for (const Json& je : detail::array(j, "equivalents")) {
        sense.equivalents.push_back(
            sema::Equivalent{detail::lang(je, "lang"), detail::str(je, "text")});
    }
    for (const Json& js : detail::array(j, "subsenses")) {
        sense.subsenses.push_back(sense_from_json(js));
    }
    return sense;
}

inline Json to_json(const sema::LexicalEntry& entry) {
    Json forms = Json::array();
    for (const sema::Form& form : entry.forms) forms.push_back(to_json(form));
    Json senses = Json::array();
    for (const sema::Sense& sense : entry.senses) senses.push_back(to_json(sense));
    return {{"id", entry.id ? Json(*entry.id) : Json(nullptr)},
            {"forms", forms},
            {"gram", entry.gram ? to_json(*entry.gram) : Json(nullptr)},
            {"senses", senses}};
}

inline sema::LexicalEntry entry_from_json(const Json& j) {
    sema::LexicalEntry entry;
    entry.id = detail::opt_str(j, "id");
    for (const Json& jf : detail::array(j, "forms")) {
        entry.forms.push_back(form_from_json(jf));
    }
    const Json& gram = detail::field(j, "gram");
    if (!gram.is_null()) entry.gram = gram_from_json(gram);
    for (const Json& js : detail::array(j, "senses")) {
        entry.senses.push_back(sense_from_json(js));
    }
    return entry;
}

inline Json to_json(const tei::TeiDocument& doc) {
    Json entries = Json::array();
    for (const sema::LexicalEntry& entry : doc.lexicon.entries) {
        entries.push_back(to_json(entry));
    }
    Json opaque = Json::array();
    for (const tei::OpaqueEntry& o : doc.opaqueEntries) {
        opaque.push_back({{"position", o.position}, {"xml", o.xml}});
    }
    return {{"kind", "tei"},
            {"lang", doc.lexicon.lang.tag()},
            {"metadata", detail::pairs_to_json(doc.lexicon.metadata)},
            {"entries", entries},
            {"opaque", opaque}};
}

inline tei::TeiDocument tei_from_json(const Json& j) {
    if (detail::str(j, "kind") != "tei") detail::bad("kind is not 'tei'");
    tei::TeiDocument doc;
    doc.lexicon.lang = detail::lang(j, "lang");
    doc.lexicon.metadata = detail::pairs_from_json(detail::array(j, "metadata"));
    for (const Json& je : detail::array(j, "entries")) {
        doc.lexicon.entries.push_back(entry_from_json(je));
    }
    for (const Json& jo : detail::array(j, "opaque")) {
        const Json& position = detail::field(jo, "position");
        if (!position.is_number_unsigned()) detail::bad("opaque position must be unsigned");
        doc.opaqueEntries.push_back(
            tei::OpaqueEntry{position.get<std::size_t>(), detail::str(jo, "xml")});
    }
    return doc;
}

/// Stable serialization: two-space indent plus trailing newline.
inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("MALFORMED_JSON", "", e.what());
    }
}

inline std::string kind_of(const Json& j) {
    return j.is_object() && j.contains("kind") && j["kind"].is_string()
               ? j["kind"].get<std::string>()
               : "";
}

}  // namespace lexkit::jsonio
