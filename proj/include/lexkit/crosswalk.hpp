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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexkit/errors.hpp"
#include "lexkit/onoma.hpp"
#include "lexkit/report.hpp"
#include "lexkit/sema.hpp"
#include "lexkit/unicode.hpp"

// Bridges between the two model classes. Term/concept incidences on the
// onomasiological side and form/sense pairs on the semasiological side are
// two views of the same relation; the projections here convert one into the
// other with explicit loss reporting.
namespace lexkit::crosswalk {

struct ProjectionOptions {
    enum class DefinitionPlacement { ConceptLevel, LanguageLevel };

    bool concatSynonymsAsVariants = false;
    DefinitionPlacement definitionPlacement = DefinitionPlacement::ConceptLevel;
    std::string conceptIdScheme = "C%d";  // exactly one %d
    std::string entryIdScheme = "E%d";    // exactly one %d
};

/// Information that cannot survive a projection, in deterministic order.
struct LossEntry {
    std::string code;
    std::string path;
    std::string message;

    bool operator==(const LossEntry&) const = default;
};

struct LossReport {
    std::vector<LossEntry> findings;

    bool empty() const { return findings.empty(); }
    void add(std::string code, std::string path, std::string message) {
        findings.push_back({std::move(code), std::move(path), std::move(message)});
    }
};

inline std::string to_text(const LossReport& loss) {
    std::string out;
    for (const LossEntry& e : loss.findings) {
        out += e.code;
        out += '\t';
        out += e.path;
        out += '\t';
        out += e.message;
        out += '\n';
    }
    return out;
}

namespace detail {

inline std::string instantiate_id(const std::string& scheme, std::size_t counter) {
    const std::size_t pos = scheme.find("%d");
    if (pos == std::string::npos || scheme.find("%d", pos + 1) != std::string::npos) {
        throw std::invalid_argument("id scheme must contain exactly one %d: " + scheme);
    }
    return scheme.substr(0, pos) + std::to_string(counter) + scheme.substr(pos + 2);
}

inline std::optional<LangCode> definition_lang(const sema::Definition& def) {
    for (const auto& [name, value] : def.attrs) {
        if (name == "xml:lang") return LangCode::parse(value);
    }
    return std::nullopt;
}

inline bool contains_nfc(const std::vector<std::string>& haystack, const std::string& needle) {
    const std::string n = unicode::nfc(needle);
    for (const std::string& h : haystack) {
        if (unicode::nfc(h) == n) return true;
    }
    return false;
}

}  // namespace detail

struct SemaProjection {
    sema::Lexicon lexicon;
    LossReport loss;
};

/// One lexical entry per distinct surface form (NFC-exact) of `lang`; each
/// concept the form takes part in becomes one sense, in base order, with a
/// "provenance" attribute naming the source concept.
inline SemaProjection sema_projection(const onoma::TermBase& base, const LangCode& lang,
                                      const ProjectionOptions& opts = {}) {
    const ValidationReport precheck = onoma::validate_onoma(base, onoma::OnomaProfile::Minimal);
    if (auto worst = worst_severity(precheck); worst && *worst >= Severity::Error) {
        throw InvalidModelError("term base fails minimal validation: " +
                                to_text(precheck.findings.front()));
    }

    SemaProjection out;
    out.lexicon.lang = lang;
    std::map<std::string, std::size_t> entryByForm;  // NFC form -> lexicon index
    std::size_t idCounter = 0;

    for (std::size_t i = 0; i < base.entries.size(); ++i) {
        const onoma::TerminologicalEntry& entry = base.entries[i];
        const std::string entryPath = "termEntry[" + std::to_string(i + 1) + "]";
        const onoma::LanguageSection* section = nullptr;
        std::size_t sectionIndex = 0;
        for (std::size_t k = 0; k < entry.languages.size(); ++k) {
            if (entry.languages[k].lang == lang) {
                section = &entry.languages[k];
                sectionIndex = k;
                break;
            }
        }
        if (section == nullptr) continue;
        const std::string sectionPath =
            entryPath + "/langSet[" + std::to_string(sectionIndex + 1) + "]";

        std::string provenance;
        if (const onoma::DataCategory* c =
                onoma::find_category(entry.categories, "conceptIdentifier")) {
            provenance = c->value;
        } else {
            provenance = onoma::effective_entry_id(entry, i);
        }

        // Concept-wide payload shared by every sense this entry produces.
        std::vector<sema::Definition> definitions;
        std::vector<sema::UsageMarker> domMarkers;
        auto takeConceptCategory = [&](const onoma::DataCategory& c, const std::string& path) {
            if (c.key == "definition") {
                sema::Definition def;
                def.text = c.value;
                if (c.lang) def.attrs.emplace_back("xml:lang", c.lang->tag());
                definitions.push_back(std::move(def));
                return;
            }
            if (c.key == "subjectField") {
                domMarkers.push_back(sema::UsageMarker{sema::UsageType::Dom, "", c.value});
                if (c.lang) {
                    out.loss.add("LOSSY_LANG", path,
                                 "language tag on subjectField is not representable");
                }
                return;
            }
            if (c.key == "conceptIdentifier") return;  // becomes provenance
            out.loss.add("LOSSY_CATEGORY", path,
                         "category '" + c.key + "' has no semasiological home");
        };
        for (std::size_t k = 0; k < entry.categories.size(); ++k) {
            takeConceptCategory(entry.categories[k],
                                entryPath + "/category[" + std::to_string(k + 1) + "]");
        }
        for (std::size_t k = 0; k < section->categories.size(); ++k) {
            takeConceptCategory(section->categories[k],
                                sectionPath + "/category[" + std::to_string(k + 1) + "]");
        }

        std::vector<sema::Equivalent> equivalents;
        for (const onoma::LanguageSection& other : entry.languages) {
            if (other.lang == lang) continue;
            for (const onoma::TermSection& ts : other.terms) {
                equivalents.push_back(sema::Equivalent{other.lang, ts.term});
            }
        }

        std::vector<std::string> formsSeenHere;  // one sense per concept per form
        for (std::size_t t = 0; t < section->terms.size(); ++t) {
            const onoma::TermSection& term = section->terms[t];
            const std::string termPath = sectionPath + "/tig[" + std::to_string(t + 1) + "]";
            const std::string formKey = unicode::nfc(term.term);
            if (detail::contains_nfc(formsSeenHere, term.term)) continue;
            formsSeenHere.push_back(formKey);

            sema::LexicalEntry* lexEntry = nullptr;
            if (auto it = entryByForm.find(formKey); it != entryByForm.end()) {
                lexEntry = &out.lexicon.entries[it->second];
            } else {
                entryByForm.emplace(formKey, out.lexicon.entries.size());
                sema::LexicalEntry fresh;
                fresh.id = detail::instantiate_id(opts.entryIdScheme, ++idCounter);
                sema::Form lemma;
                lemma.formType = sema::FormType::Lemma;
                lemma.representations.push_back(
                    sema::FormRepresentation{sema::RepresentationKind::Orthography, term.term});
                fresh.forms.push_back(std::move(lemma));
                out.lexicon.entries.push_back(std::move(fresh));
                lexEntry = &out.lexicon.entries.back();
            }

            if (opts.concatSynonymsAsVariants) {
                for (const onoma::TermSection& sibling : section->terms) {
                    if (unicode::nfc(sibling.term) == formKey) continue;
                    bool present = false;
                    for (const sema::Form& f : lexEntry->forms) {
                        for (const sema::FormRepresentation& rep : f.representations) {
                            present = present || unicode::nfc(rep.value) ==
                                                     unicode::nfc(sibling.term);
                        }
                    }
                    if (present) continue;
                    sema::Form variant;
                    variant.formType = sema::FormType::Variant;
                    variant.representations.push_back(sema::FormRepresentation{
                        sema::RepresentationKind::Orthography, sibling.term});
                    lexEntry->forms.push_back(std::move(variant));
                }
            }

            sema::Sense sense;
            sense.attrs.emplace_back("provenance", provenance);
            sense.definitions = definitions;
            sense.usages = domMarkers;
            sense.equivalents = equivalents;

            for (std::size_t k = 0; k < term.categories.size(); ++k) {
                const onoma::DataCategory& c = term.categories[k];
                const std::string catPath =
                    termPath + "/category[" + std::to_string(k + 1) + "]";
                if (c.key == "administrativeStatus" && c.value == "deprecatedTerm") {
                    sense.usages.push_back(
                        sema::UsageMarker{sema::UsageType::Register, "", "deprecated"});
                } else if (c.key == "partOfSpeech") {
                    if (!lexEntry->gram) lexEntry->gram = sema::GrammaticalInfo{};
                    if (!lexEntry->gram->pos) {
                        lexEntry->gram->pos = c.value;
                    } else if (*lexEntry->gram->pos != c.value) {
                        out.loss.add("LOSSY_CATEGORY", catPath,
                                     "conflicting partOfSpeech '" + c.value + "' dropped");
                    }
                } else if (c.key == "gender") {
                    if (!lexEntry->gram) lexEntry->gram = sema::GrammaticalInfo{};
                    if (!lexEntry->gram->gender) {
                        lexEntry->gram->gender = c.value;
                    } else if (*lexEntry->gram->gender != c.value) {
                        out.loss.add("LOSSY_CATEGORY", catPath,
                                     "conflicting gender '" + c.value + "' dropped");
                    }
                } else if (c.key == "example") {
                    sema::Context context;
                    context.type = sema::ContextType::Example;
                    context.quote = c.value;
                    context.lang = c.lang;
                    sense.contexts.push_back(std::move(context));
                } else {
                    out.loss.add("LOSSY_CATEGORY", catPath,
                                 "category '" + c.key + "' has no semasiological home");
                }
            }
            lexEntry->senses.push_back(std::move(sense));
        }
    }
    return out;
}

struct OnomaProjection {
    onoma::TermBase base;
    LossReport loss;
};

namespace detail {

// Orthographies that become terms: the lemma plus every variant reading.
// Inflected forms stay out; they are word forms, not terms.
inline void collect_term_orths(const sema::Form& form, std::vector<std::string>& out) {
    if (form.formType == sema::FormType::Inflected) return;
    for (const sema::FormRepresentation& rep : form.representations) {
        if (rep.kind == sema::RepresentationKind::Orthography) out.push_back(rep.value);
    }
    for (const sema::Form& sub : form.subforms) collect_term_orths(sub, out);
}

inline const sema::GrammaticalInfo* preferred_gram(const sema::LexicalEntry& entry) {
    for (const sema::Form& form : entry.forms) {
        if (form.gram) return &*form.gram;
    }
    return entry.gram ? &*entry.gram : nullptr;
}

struct ConceptBuilder {
    onoma::TerminologicalEntry entry;

    onoma::LanguageSection& section(const LangCode& lang) {
        for (onoma::LanguageSection& ls : entry.languages) {
            if (ls.lang == lang) return ls;
        }
        entry.languages.push_back(onoma::LanguageSection{lang, {}, {}});
        return entry.languages.back();
    }

    void add_term(const LangCode& lang, const std::string& term) {
        onoma::LanguageSection& ls = section(lang);
        for (const onoma::TermSection& ts : ls.terms) {
            if (unicode::nfc(ts.term) == unicode::nfc(term)) return;
        }
        ls.terms.push_back(onoma::TermSection{term, {}});
    }

    void add_category(std::vector<onoma::DataCategory>& slot, onoma::DataCategory category) {
        for (const onoma::DataCategory& c : slot) {
            if (c == category) return;
        }
        slot.push_back(std::move(category));
    }
};

}  // namespace detail

/// One terminological entry per definition- or equivalent-bearing sense
/// node. Senses that share a provenance attribute (as produced by
/// sema_projection) coalesce into one concept, which is what makes the
/// projection pair invert on restricted bases.
inline OnomaProjection onoma_projection(std::span<const sema::Lexicon> lexica,
                                        const ProjectionOptions& opts = {}) {
    for (std::size_t i = 0; i < lexica.size(); ++i) {
        for (std::size_t j = i + 1; j < lexica.size(); ++j) {
            if (lexica[i].lang == lexica[j].lang) {
                throw DuplicateObjectLanguageError("two lexica share object language '" +
                                                   lexica[i].lang.tag() + "'");
            }
        }
    }

    OnomaProjection out;
    std::vector<detail::ConceptBuilder> concepts;
    std::map<std::string, std::size_t> conceptByProvenance;
    std::size_t idCounter = 0;

    auto conceptFor = [&](const std::string& provenance) -> detail::ConceptBuilder& {
        if (!provenance.empty()) {
            if (auto it = conceptByProvenance.find(provenance);
                it != conceptByProvenance.end()) {
                return concepts[it->second];
            }
        }
        detail::ConceptBuilder builder;
        builder.entry.id = detail::instantiate_id(opts.conceptIdScheme, ++idCounter);
        if (!provenance.empty()) conceptByProvenance.emplace(provenance, concepts.size());
        concepts.push_back(std::move(builder));
        return concepts.back();
    };

    for (std::size_t li = 0; li < lexica.size(); ++li) {
        const sema::Lexicon& lexicon = lexica[li];
        const std::string lexPath = "lexicon[" + std::to_string(li + 1) + "]";
        for (std::size_t ei = 0; ei < lexicon.entries.size(); ++ei) {
            const sema::LexicalEntry& entry = lexicon.entries[ei];
            const std::string entryPath = lexPath + "/entry[" + std::to_string(ei + 1) + "]";

            const std::optional<std::string> lemma = sema::lemma_of(entry);
            if (!lemma) {
                out.loss.add("NO_LEMMA", entryPath,
                             "entry has no orthography to use as a term; skipped");
                continue;
            }
            std::vector<std::string> termOrths;
            for (const sema::Form& form : entry.forms) {
                detail::collect_term_orths(form, termOrths);
            }
            const sema::GrammaticalInfo* gram = detail::preferred_gram(entry);

            struct Frame {
                const sema::Sense* sense;
                std::string path;
            };
            std::vector<Frame> stack;
            for (std::size_t si = entry.senses.size(); si > 0; --si) {
                stack.push_back({&entry.senses[si - 1],
                                 entryPath + "/sense[" + std::to_string(si) + "]"});
            }
            while (!stack.empty()) {
                const Frame frame = stack.back();
                stack.pop_back();
                const sema::Sense& sense = *frame.sense;
                for (std::size_t si = sense.subsenses.size(); si > 0; --si) {
                    stack.push_back({&sense.subsenses[si - 1],
                                     frame.path + "/sense[" + std::to_string(si) + "]"});
                }

                std::vector<sema::Equivalent> equivalents = sense.equivalents;
                for (const sema::Context& c : sense.contexts) {
                    if (c.type == sema::ContextType::Translation) {
                        equivalents.push_back(
                            sema::Equivalent{c.lang ? *c.lang : LangCode(), c.quote});
                    }
                }
                if (sense.definitions.empty() && equivalents.empty()) {
                    out.loss.add("NO_DEFINITION", frame.path,
                                 "sense carries neither definition nor equivalent; skipped");
                    continue;
                }

                std::string provenance;
                for (const auto& [name, value] : sense.attrs) {
                    if (name == "provenance") {
                        provenance = value;
                    } else {
                        out.loss.add("LOSSY_ATTR", frame.path,
                                     "sense attribute '" + name + "' dropped");
                    }
                }
                if (sense.label) {
                    out.loss.add("LOSSY_LABEL", frame.path,
                                 "sense label '" + *sense.label + "' dropped");
                }

                detail::ConceptBuilder& target = conceptFor(provenance);
                target.add_term(lexicon.lang, *lemma);
                for (const std::string& orth : termOrths) {
                    target.add_term(lexicon.lang, orth);
                }
                onoma::LanguageSection& sourceSection = target.section(lexicon.lang);
                onoma::TermSection& lemmaTerm = sourceSection.terms.front();

                if (gram != nullptr) {
                    if (gram->pos) {
                        target.add_category(
                            lemmaTerm.categories,
                            onoma::DataCategory{"partOfSpeech", *gram->pos, std::nullopt});
                    }
                    if (gram->gender) {
                        target.add_category(
                            lemmaTerm.categories,
                            onoma::DataCategory{"gender", *gram->gender, std::nullopt});
                    }
                    for (const auto& [key, value] : gram->other) {
                        out.loss.add("LOSSY_CATEGORY", frame.path,
                                     "grammatical detail '" + key + "' dropped");
                    }
                }

                for (const sema::Definition& def : sense.definitions) {
                    onoma::DataCategory category{"definition", def.text,
                                                 detail::definition_lang(def)};
                    for (const auto& [name, value] : def.attrs) {
                        if (name != "xml:lang") {
                            out.loss.add("LOSSY_ATTR", frame.path,
                                         "definition attribute '" + name + "' dropped");
                        }
                    }
                    if (opts.definitionPlacement ==
                        ProjectionOptions::DefinitionPlacement::ConceptLevel) {
                        target.add_category(target.entry.categories, std::move(category));
                    } else {
                        target.add_category(sourceSection.categories, std::move(category));
                    }
                }

                for (const sema::UsageMarker& u : sense.usages) {
                    switch (u.type) {
                        case sema::UsageType::Dom:
                            target.add_category(
                                target.entry.categories,
                                onoma::DataCategory{"subjectField", u.value, std::nullopt});
                            break;
                        case sema::UsageType::Register:
                            target.add_category(
                                lemmaTerm.categories,
                                onoma::DataCategory{"register", u.value, std::nullopt});
                            out.loss.add("LOSSY_USAGE", frame.path,
                                         "register marker kept only as a term category");
                            break;
                        default:
                            out.loss.add("LOSSY_USAGE", frame.path,
                                         "usage marker '" +
                                             std::string(sema::to_string(u.type)) +
                                             ":" + u.value + "' has no terminological home");
                            break;
                    }
                }

                for (const sema::Context& c : sense.contexts) {
                    if (c.type == sema::ContextType::Translation) continue;
                    if (c.type == sema::ContextType::Example) {
                        target.add_category(lemmaTerm.categories,
                                             onoma::DataCategory{"example", c.quote, c.lang});
                    } else {
                        out.loss.add("LOSSY_CONTEXT", frame.path,
                                     "context of type '" + c.rawType + "' dropped");
                    }
                }

                for (const sema::Equivalent& eq : equivalents) {
                    target.add_term(eq.lang, eq.text);
                }
            }
        }
    }

    out.base.entries.reserve(concepts.size());
    for (detail::ConceptBuilder& builder : concepts) {
        out.base.entries.push_back(std::move(builder.entry));
    }
    return out;
}

/// LMF-MRD conformance view of a TEI-shaped entry: the MRD profile plus the
/// four TEI-only features (nested forms, entry-level gramGrp, non-domain
/// usage axes, flattened inline markup).
inline ValidationReport lmf_conformance(const sema::LexicalEntry& entry,
                                        const std::string& entryPath = "entry[1]") {
    ValidationReport report = sema::validate_sema(entry, sema::SemaProfile::LmfMrd, entryPath);

    struct Walker {
        ValidationReport& report;

        void forms(const std::vector<sema::Form>& list, const std::string& path) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string formPath = path + "/form[" + std::to_string(i + 1) + "]";
                if (!list[i].subforms.empty()) {
                    report.add(Severity::Warning, "LOSSY_FLATTEN", formPath,
                               "nested forms flatten to sibling variants in LMF");
                }
                forms(list[i].subforms, formPath);
            }
        }

        void senses(const std::vector<sema::Sense>& list, const std::string& path) {
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string sensePath = path + "/sense[" + std::to_string(i + 1) + "]";
                const sema::Sense& sense = list[i];
                for (std::size_t u = 0; u < sense.usages.size(); ++u) {
                    const sema::UsageType t = sense.usages[u].type;
                    if (t == sema::UsageType::Dom || t == sema::UsageType::Other) continue;
                    report.add(Severity::Warning, "LOSSY_USAGE",
                               sensePath + "/usg[" + std::to_string(u + 1) + "]",
                               "usage axis '" + std::string(sema::to_string(t)) +
                                   "' maps to no MRD component (value '" +
                                   sense.usages[u].value + "')");
                }
                for (std::size_t d = 0; d < sense.definitions.size(); ++d) {
                    if (sense.definitions[d].inlineMarkupFlattened) {
                        report.add(Severity::Warning, "LOSSY_INLINE",
                                   sensePath + "/def[" + std::to_string(d + 1) + "]",
                                   "definition carried inline markup");
                    }
                }
                senses(sense.subsenses, sensePath);
            }
        }
    };

    Walker walker{report};
    walker.forms(entry.forms, entryPath);
    walker.senses(entry.senses, entryPath);
    if (entry.gram) {
        report.add(Severity::Info, "INFO_GRAM_PLACEMENT", entryPath,
                   "grammatical block sits at entry level; LMF attaches it to forms");
    }
    report.sort();
    return report;
}

}  // namespace lexkit::crosswalk
