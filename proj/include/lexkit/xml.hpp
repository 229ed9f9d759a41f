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
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "lexkit/errors.hpp"
#include "lexkit/unicode.hpp"

// Small non-validating XML reader/writer, enough for the TBX and TEI
// dialects handled here: the five predefined entities, character
// references, CDATA, comments, PIs and a skipped DOCTYPE. No DTD
// processing and no schema validation.
namespace lexkit::xml {

struct Node;

struct Element {
    std::string name;  // qualified name as written
    std::vector<std::pair<std::string, std::string>> attributes;
    std::vector<Node> children;
    std::size_t sourceBegin = 0;  // byte range of the whole element
    std::size_t sourceEnd = 0;

    std::string_view local_name() const {
        const std::string_view n = name;
        const std::size_t colon = n.find(':');
        return colon == std::string_view::npos ? n : n.substr(colon + 1);
    }

    const std::string* attribute(std::string_view qname) const {
        for (const auto& [name_, value] : attributes) {
            if (name_ == qname) return &value;
        }
        return nullptr;
    }
};

struct Node {
    std::variant<Element, std::string> value;  // element or text run

    bool is_element() const { return std::holds_alternative<Element>(value); }
    const Element& element() const { return std::get<Element>(value); }
    Element& element() { return std::get<Element>(value); }
    const std::string& text() const { return std::get<std::string>(value); }
};

inline bool is_namespace_decl(std::string_view attrName) {
    return attrName == "xmlns" || attrName.starts_with("xmlns:");
}

inline bool has_child_elements(const Element& e) {
    for (const Node& n : e.children) {
        if (n.is_element()) return true;
    }
    return false;
}

/// Text of the direct text-run children only.
inline std::string direct_text(const Element& e) {
    std::string out;
    for (const Node& n : e.children) {
        if (!n.is_element()) out += n.text();
    }
    return out;
}

/// All character data in the subtree, in document order (markup flattened).
inline std::string collect_text(const Element& e) {
    std::string out;
    for (const Node& n : e.children) {
        if (n.is_element()) {
            out += collect_text(n.element());
        } else {
            out += n.text();
        }
    }
    return out;
}

namespace detail {

inline constexpr std::size_t kMaxDepth = 512;

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline bool is_name_start(unsigned char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_' || c == ':' || c >= 0x80;
}

inline bool is_name_char(unsigned char c) {
    return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.';
}

inline bool is_xml_char(char32_t c) {
    return c == 0x9 || c == 0xA || c == 0xD || (c >= 0x20 && c <= 0xD7FF) ||
           (c >= 0xE000 && c <= 0xFFFD) || (c >= 0x10000 && c <= 0x10FFFF);
}

class Parser {
public:
    explicit Parser(std::string_view src) : src_(src) {}

    Element parse_document() {
        if (!unicode::is_valid_utf8(src_)) fail("input is not valid UTF-8");
        if (src_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
        skip_misc(true);
        if (pos_ >= src_.size() || src_[pos_] != '<') fail("expected root element");
        Element root = parse_element(0);
        skip_misc(false);
        if (pos_ != src_.size()) fail("content after root element");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError("MALFORMED_XML", "",
                         message + " (byte " + std::to_string(pos_) + ")");
    }

    bool starts_with(std::string_view s) const { return src_.substr(pos_).starts_with(s); }

    void expect(std::string_view s) {
        if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
        pos_ += s.size();
    }

    void skip_space() {
        while (pos_ < src_.size() && is_space(src_[pos_])) ++pos_;
    }

    void skip_until(std::string_view terminator, const char* what) {
        const std::size_t found = src_.find(terminator, pos_);
        if (found == std::string_view::npos) fail(std::string("unterminated ") + what);
        pos_ = found + terminator.size();
    }

    // Prolog and epilog: whitespace, comments, PIs, and (before the root
    // only) an XML declaration and a DOCTYPE that is skipped unparsed.
    void skip_misc(bool prolog) {
        while (pos_ < src_.size()) {
            if (is_space(src_[pos_])) {
                ++pos_;
            } else if (starts_with("<?")) {
                pos_ += 2;
                skip_until("?>", "processing instruction");
            } else if (starts_with("<!--")) {
                pos_ += 4;
                skip_until("-->", "comment");
            } else if (prolog && starts_with("<!DOCTYPE")) {
                skip_doctype();
            } else {
                return;
            }
        }
    }

    void skip_doctype() {
        pos_ += 9;
        int brackets = 0;
        char quote = 0;
        while (pos_ < src_.size()) {
            const char c = src_[pos_++];
            if (quote != 0) {
                if (c == quote) quote = 0;
            } else if (c == '"' || c == '\'') {
                quote = c;
            } else if (c == '[') {
                ++brackets;
            } else if (c == ']') {
                --brackets;
            } else if (c == '>' && brackets == 0) {
                return;
            }
        }
        fail("unterminated DOCTYPE");
    }

    std::string parse_name() {
        const std::size_t begin = pos_;
        if (pos_ >= src_.size() || !is_name_start(static_cast<unsigned char>(src_[pos_]))) {
            fail("expected a name");
        }
        while (pos_ < src_.size() && is_name_char(static_cast<unsigned char>(src_[pos_]))) {
            ++pos_;
        }
        return std::string(src_.substr(begin, pos_ - begin));
    }

    char32_t parse_char_reference() {
        // pos_ is just past "&#".
        const bool hex = pos_ < src_.size() && (src_[pos_] == 'x' || src_[pos_] == 'X');
        if (hex) ++pos_;
        char32_t value = 0;
        std::size_t digits = 0;
        while (pos_ < src_.size() && src_[pos_] != ';') {
            const char c = src_[pos_];
            int digit;
            if (c >= '0' && c <= '9') {
                digit = c - '0';
            } else if (hex && c >= 'a' && c <= 'f') {
                digit = c - 'a' + 10;
            } else if (hex && c >= 'A' && c <= 'F') {
                digit = c - 'A' + 10;
            } else {
                fail("bad character reference");
            }
            value = value * (hex ? 16 : 10) + static_cast<char32_t>(digit);
            if (value > unicode::kMaxCodePoint) fail("character reference out of range");
            ++pos_;
            ++digits;
        }
        if (digits == 0 || pos_ >= src_.size()) fail("bad character reference");
        ++pos_;  // ';'
        if (!is_xml_char(value) || (value >= 0xD800 && value <= 0xDFFF)) {
            fail("character reference to an invalid XML character");
        }
        return value;
    }

    void parse_reference(std::string& out) {
        expect("&");
        if (starts_with("#")) {
            ++pos_;
            unicode::encode_utf8(parse_char_reference(), out);
            return;
        }
        const std::string name = parse_name();
        if (pos_ >= src_.size() || src_[pos_] != ';') fail("unterminated entity reference");
        ++pos_;
        if (name == "lt") {
            out += '<';
        } else if (name == "gt") {
            out += '>';
        } else if (name == "amp") {
            out += '&';
        } else if (name == "apos") {
            out += '\'';
        } else if (name == "quot") {
            out += '"';
        } else {
            fail("undefined entity '&" + name + ";'");
        }
    }

    std::string parse_attribute_value() {
        if (pos_ >= src_.size() || (src_[pos_] != '"' && src_[pos_] != '\'')) {
            fail("expected quoted attribute value");
        }
        const char quote = src_[pos_++];
        std::string value;
        while (pos_ < src_.size() && src_[pos_] != quote) {
            const char c = src_[pos_];
            if (c == '<') fail("'<' in attribute value");
            if (c == '&') {
                parse_reference(value);
            } else if (c == '\t' || c == '\n' || c == '\r') {
                value += ' ';  // attribute-value normalization
                ++pos_;
                if (c == '\r' && pos_ < src_.size() && src_[pos_] == '\n') ++pos_;
            } else {
                value += c;
                ++pos_;
            }
        }
        if (pos_ >= src_.size()) fail("unterminated attribute value");
        ++pos_;
        return value;
    }

    void parse_text_run(std::string& out) {
        while (pos_ < src_.size()) {
            const char c = src_[pos_];
            if (c == '<') return;
            if (c == '&') {
                parse_reference(out);
            } else if (c == '\r') {
                out += '\n';  // line-end normalization
                ++pos_;
                if (pos_ < src_.size() && src_[pos_] == '\n') ++pos_;
            } else {
                out += c;
                ++pos_;
            }
        }
    }

    void parse_cdata(std::string& out) {
        expect("<![CDATA[");
        const std::size_t end = src_.find("]]>", pos_);
        if (end == std::string_view::npos) fail("unterminated CDATA section");
        for (std::size_t i = pos_; i < end; ++i) {
            const char c = src_[i];
            if (c == '\r') {
                out += '\n';
                if (i + 1 < end && src_[i + 1] == '\n') ++i;
            } else {
                out += c;
            }
        }
        pos_ = end + 3;
    }

    Element parse_element(std::size_t depth) {
        if (depth > kMaxDepth) fail("element nesting too deep");
        Element element;
        element.sourceBegin = pos_;
        expect("<");
        element.name = parse_name();
        while (true) {
            const std::size_t before = pos_;
            skip_space();
            if (pos_ >= src_.size()) fail("unterminated start tag");
            if (src_[pos_] == '>' || starts_with("/>")) break;
            if (before == pos_) fail("expected whitespace before attribute");
            const std::string attrName = parse_name();
            skip_space();
            expect("=");
            skip_space();
            std::string attrValue = parse_attribute_value();
            for (const auto& [existing, unused] : element.attributes) {
                if (existing == attrName) fail("duplicate attribute '" + attrName + "'");
            }
            element.attributes.emplace_back(attrName, std::move(attrValue));
        }
        if (starts_with("/>")) {
            pos_ += 2;
            element.sourceEnd = pos_;
            return element;
        }
        expect(">");
        while (true) {
            if (pos_ >= src_.size()) fail("unterminated element '" + element.name + "'");
            if (starts_with("</")) {
                pos_ += 2;
                const std::string closeName = parse_name();
                if (closeName != element.name) {
                    fail("mismatched end tag '" + closeName + "' for '" + element.name + "'");
                }
                skip_space();
                expect(">");
                element.sourceEnd = pos_;
                return element;
            }
            if (starts_with("<!--")) {
                pos_ += 4;
                skip_until("-->", "comment");
            } else if (starts_with("<![CDATA[")) {
                std::string text;
                parse_cdata(text);
                append_text(element, std::move(text));
            } else if (starts_with("<?")) {
                pos_ += 2;
                skip_until("?>", "processing instruction");
            } else if (src_[pos_] == '<') {
                element.children.push_back(Node{parse_element(depth + 1)});
            } else {
                std::string text;
                parse_text_run(text);
                append_text(element, std::move(text));
            }
        }
    }

    static void append_text(Element& element, std::string text) {
        if (text.empty()) return;
        if (!element.children.empty() && !element.children.back().is_element()) {
            std::get<std::string>(element.children.back().value) += text;
        } else {
            element.children.push_back(Node{std::move(text)});
        }
    }

    std::string_view src_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses one well-formed document and returns its root element.
/// Throws ParseError (code MALFORMED_XML) otherwise; never crashes on
/// arbitrary bytes.
inline Element parse(std::string_view bytes) { return detail::Parser(bytes).parse_document(); }

namespace detail {

inline void check_writable(std::string_view value) {
    std::size_t pos = 0;
    while (pos < value.size()) {
        auto cp = unicode::decode_one(value, pos);
        if (!cp || !is_xml_char(*cp)) {
            throw InvalidModelError("string is not serializable as XML text: \"" +
                                    std::string(value.substr(0, 40)) + "\"");
        }
    }
}

}  // namespace detail

inline std::string escape_text(std::string_view value) {
    detail::check_writable(value);
    std::string out;
    out.reserve(value.size());
    for (const char c : value) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '\r': out += "&#13;"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string escape_attribute(std::string_view value) {
    detail::check_writable(value);
    std::string out;
    out.reserve(value.size());
    for (const char c : value) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\t': out += "&#9;"; break;
            case '\n': out += "&#10;"; break;
            case '\r': out += "&#13;"; break;
            default: out += c;
        }
    }
    return out;
}

using AttributeList = std::vector<std::pair<std::string, std::string>>;

/// Canonical-form writer: UTF-8 declaration, two-space indentation, one
/// element per line, leaf text inline.
class Writer {
public:
    Writer() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

    void open(std::string_view name, const AttributeList& attrs = {}) {
        indent();
        out_ += '<';
        out_ += name;
        write_attrs(attrs);
        out_ += ">\n";
        stack_.emplace_back(name);
    }

    void close() {
        const std::string name = stack_.back();
        stack_.pop_back();
        indent();
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    void leaf(std::string_view name, const AttributeList& attrs, std::string_view text) {
        indent();
        out_ += '<';
        out_ += name;
        write_attrs(attrs);
        if (text.empty()) {
            out_ += "/>\n";
            return;
        }
        out_ += '>';
        out_ += escape_text(text);
        out_ += "</";
        out_ += name;
        out_ += ">\n";
    }

    /// Re-emits an already-serialized block untouched on its own line.
    void raw_block(std::string_view raw) {
        indent();
        out_ += raw;
        out_ += '\n';
    }

    std::string take() && { return std::move(out_); }

private:
    void indent() { out_.append(stack_.size() * 2, ' '); }

    void write_attrs(const AttributeList& attrs) {
        for (const auto& [name, value] : attrs) {
            out_ += ' ';
            out_ += name;
            out_ += "=\"";
            out_ += escape_attribute(value);
            out_ += '"';
        }
    }

    std::string out_;
    std::vector<std::string> stack_;
};

}  // namespace lexkit::xml
