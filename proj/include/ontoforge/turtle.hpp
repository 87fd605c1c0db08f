/**
 * @file turtle.hpp
 * @brief Turtle and N-Triples reading plus deterministic Turtle writing.
 *
 * The Turtle reader covers the subset ontology editors emit: @prefix/PREFIX,
 * the `a` keyword, predicate-object lists, object lists, collections,
 * blank-node property lists, typed/lang literals, long strings and the bare
 * numeric/boolean abbreviations. Anything else is a syntax error.
 */
#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "ontoforge/rdf.hpp"

namespace ontoforge::rdf {

namespace detail {

inline void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

/// Character cursor with 1-based line/column tracking.
class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    bool eof() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char get() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    int line() const { return line_; }
    int col() const { return col_; }

    [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, col_, message); }

    void skip_ws_and_comments() {
        while (!eof()) {
            const char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') get();
            } else {
                break;
            }
        }
    }

    bool try_consume(char c) {
        if (!eof() && peek() == c) {
            get();
            return true;
        }
        return false;
    }

    void expect(char c, const std::string& what) {
        if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
        get();
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline bool is_local_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.' ||
           c == '%' || static_cast<unsigned char>(c) >= 0x80;
}

inline std::uint32_t parse_hex(Cursor& cur, int digits) {
    std::uint32_t cp = 0;
    for (int i = 0; i < digits; ++i) {
        if (cur.eof()) cur.fail("truncated \\u escape");
        const char c = cur.get();
        cp <<= 4;
        if (c >= '0' && c <= '9')
            cp |= static_cast<std::uint32_t>(c - '0');
        else if (c >= 'a' && c <= 'f')
            cp |= static_cast<std::uint32_t>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            cp |= static_cast<std::uint32_t>(c - 'A' + 10);
        else
            cur.fail("bad hex digit in escape");
    }
    return cp;
}

/// Shared state for one parse: blank labels are renamed to a fresh
/// sequential namespace so labels are unique within the graph scope.
class BlankScope {
public:
    BlankNode named(const std::string& source_label) {
        auto it = renamed_.find(source_label);
        if (it != renamed_.end()) return BlankNode{it->second};
        std::string fresh = next();
        renamed_.emplace(source_label, fresh);
        return BlankNode{std::move(fresh)};
    }
    BlankNode fresh() { return BlankNode{next()}; }

private:
    std::string next() { return "b" + std::to_string(counter_++); }
    std::map<std::string, std::string> renamed_;
    unsigned counter_ = 0;
};

class TurtleParser {
public:
    TurtleParser(std::string_view text, const PrefixMap* seed) : cur_(text) {
        if (seed)
            for (const auto& [label, ns] : seed->entries()) seed_[label] = ns;
    }

    Graph parse() {
        while (true) {
            cur_.skip_ws_and_comments();
            if (cur_.eof()) break;
            if (cur_.peek() == '@' || cur_.peek() == 'P' || cur_.peek() == 'p') {
                if (try_prefix_directive()) continue;
            }
            parse_triples_block();
        }
        for (const auto& [label, ns] : declared_) graph_.prefixes().bind_if_free(label, ns);
        for (const auto& [label, ns] : seed_) graph_.prefixes().bind_if_free(label, ns);
        return std::move(graph_);
    }

private:
    bool try_prefix_directive() {
        if (cur_.peek() == '@') {
            const int line = cur_.line(), col = cur_.col();
            std::string keyword = read_keyword_after_at();
            if (keyword != "prefix")
                throw ParseError(line, col, "unsupported directive '@" + keyword + "'");
            read_prefix_binding(true);
            return true;
        }
        // SPARQL-style PREFIX (no trailing dot).
        if ((cur_.peek() == 'P' || cur_.peek() == 'p') && matches_keyword("PREFIX")) {
            for (int i = 0; i < 6; ++i) cur_.get();
            read_prefix_binding(false);
            return true;
        }
        return false;
    }

    std::string read_keyword_after_at() {
        cur_.get();  // '@'
        std::string word;
        while (!cur_.eof() && std::isalpha(static_cast<unsigned char>(cur_.peek())))
            word += cur_.get();
        return word;
    }

    bool matches_keyword(std::string_view kw) const {
        for (std::size_t i = 0; i < kw.size(); ++i) {
            const char c = cur_.peek(i);
            if (std::toupper(static_cast<unsigned char>(c)) != kw[i]) return false;
        }
        const char after = cur_.peek(kw.size());
        return is_ws(after) || after == '\0' || after == ';' || after == ',' || after == '.' ||
               after == ')' || after == ']' || after == '#';
    }

    void read_prefix_binding(bool needs_dot) {
        cur_.skip_ws_and_comments();
        std::string label;
        while (!cur_.eof() && cur_.peek() != ':' && !is_ws(cur_.peek())) label += cur_.get();
        cur_.expect(':', "after prefix label");
        cur_.skip_ws_and_comments();
        if (cur_.peek() != '<') cur_.fail("expected IRI in prefix declaration");
        const std::string ns = read_iri_ref();
        declared_[label] = ns;
        if (needs_dot) {
            cur_.skip_ws_and_comments();
            cur_.expect('.', "after @prefix declaration");
        }
    }

    void parse_triples_block() {
        const Term subject = parse_subject();
        // A lone blank-node property list as a statement needs no
        // predicate-object list of its own, but our subset requires one.
        parse_predicate_object_list(subject);
        cur_.skip_ws_and_comments();
        cur_.expect('.', "at end of statement");
    }

    Term parse_subject() {
        cur_.skip_ws_and_comments();
        const char c = cur_.peek();
        if (c == '<') return Term{parse_iri()};
        if (c == '_') return Term{parse_blank_label()};
        if (c == '[') return parse_bnode_property_list();
        if (c == '(') return parse_collection();
        return Term{parse_curie()};
    }

    void parse_predicate_object_list(const Term& subject) {
        while (true) {
            cur_.skip_ws_and_comments();
            const Iri predicate = parse_verb();
            parse_object_list(subject, predicate);
            cur_.skip_ws_and_comments();
            if (cur_.try_consume(';')) {
                cur_.skip_ws_and_comments();
                // Trailing ';' before '.' or ']' is permitted.
                if (cur_.peek() == '.' || cur_.peek() == ']') return;
                continue;
            }
            return;
        }
    }

    Iri parse_verb() {
        if (cur_.peek() == 'a') {
            const char after = cur_.peek(1);
            if (is_ws(after)) {
                cur_.get();
                return vocab::rdf_type();
            }
        }
        if (cur_.peek() == '<') return parse_iri();
        return parse_curie();
    }

    void parse_object_list(const Term& subject, const Iri& predicate) {
        while (true) {
            cur_.skip_ws_and_comments();
            Term object = parse_object();
            graph_.insert(subject, predicate, std::move(object));
            cur_.skip_ws_and_comments();
            if (!cur_.try_consume(',')) return;
        }
    }

    Term parse_object() {
        const char c = cur_.peek();
        if (c == '<') return Term{parse_iri()};
        if (c == '_') return Term{parse_blank_label()};
        if (c == '[') return parse_bnode_property_list();
        if (c == '(') return parse_collection();
        if (c == '"' || c == '\'') return Term{parse_string_literal()};
        if (c == '+' || c == '-' || std::isdigit(static_cast<unsigned char>(c)))
            return Term{parse_numeric_literal()};
        if (matches_keyword("TRUE") || matches_keyword("FALSE")) return Term{parse_boolean_literal()};
        return Term{parse_curie()};
    }

    Term parse_bnode_property_list() {
        cur_.expect('[', "");
        const Term node{blanks_.fresh()};
        cur_.skip_ws_and_comments();
        if (!cur_.try_consume(']')) {
            parse_predicate_object_list(node);
            cur_.skip_ws_and_comments();
            cur_.expect(']', "to close blank node property list");
        }
        return node;
    }

    Term parse_collection() {
        cur_.expect('(', "");
        std::vector<Term> members;
        while (true) {
            cur_.skip_ws_and_comments();
            if (cur_.eof()) cur_.fail("unterminated collection");
            if (cur_.try_consume(')')) break;
            members.push_back(parse_object());
        }
        Term tail{vocab::rdf_nil()};
        for (auto it = members.rbegin(); it != members.rend(); ++it) {
            Term cell{blanks_.fresh()};
            graph_.insert(cell, vocab::rdf_first(), *it);
            graph_.insert(cell, vocab::rdf_rest(), tail);
            tail = cell;
        }
        return tail;
    }

    Iri parse_iri() {
        const int line = cur_.line(), col = cur_.col();
        const std::string raw = read_iri_ref();
        if (!is_absolute_iri(raw)) throw ParseError(line, col, "relative IRI <" + raw + ">");
        return Iri{raw};
    }

    std::string read_iri_ref() {
        cur_.expect('<', "to open IRI");
        std::string out;
        while (true) {
            if (cur_.eof()) cur_.fail("unterminated IRI");
            char c = cur_.get();
            if (c == '>') break;
            if (c == '\\') {
                if (cur_.eof()) cur_.fail("truncated escape in IRI");
                const char e = cur_.get();
                if (e == 'u')
                    append_utf8(out, parse_hex(cur_, 4));
                else if (e == 'U')
                    append_utf8(out, parse_hex(cur_, 8));
                else
                    cur_.fail("unsupported escape in IRI");
                continue;
            }
            if (c == ' ' || c == '\n' || c == '\t' || c == '\r')
                cur_.fail("whitespace inside IRI");
            out += c;
        }
        return out;
    }

    BlankNode parse_blank_label() {
        cur_.expect('_', "");
        cur_.expect(':', "in blank node label");
        std::string label;
        while (!cur_.eof() && (std::isalnum(static_cast<unsigned char>(cur_.peek())) ||
                               cur_.peek() == '_' || cur_.peek() == '-'))
            label += cur_.get();
        if (label.empty()) cur_.fail("empty blank node label");
        return blanks_.named(label);
    }

    Iri parse_curie() {
        const int line = cur_.line(), col = cur_.col();
        std::string label;
        while (!cur_.eof() && cur_.peek() != ':' && !is_ws(cur_.peek()) && cur_.peek() != ';' &&
               cur_.peek() != ',' && cur_.peek() != '.' && cur_.peek() != ')' && cur_.peek() != ']')
            label += cur_.get();
        if (cur_.eof() || cur_.peek() != ':')
            throw ParseError(line, col, "expected IRI, CURIE or literal");
        cur_.get();
        std::string local;
        while (!cur_.eof() && is_local_char(cur_.peek())) {
            // A trailing '.' ends the statement rather than the local name.
            if (cur_.peek() == '.' && !is_local_char(cur_.peek(1))) break;
            local += cur_.get();
        }
        const std::string* ns = lookup_prefix(label);
        if (!ns) throw UnknownPrefixError(line, col, label);
        const std::string full = *ns + local;
        if (!is_absolute_iri(full))
            throw ParseError(line, col, "CURIE expands to an invalid IRI: " + full);
        return Iri{full};
    }

    const std::string* lookup_prefix(const std::string& label) const {
        if (auto it = declared_.find(label); it != declared_.end()) return &it->second;
        if (auto it = seed_.find(label); it != seed_.end()) return &it->second;
        return nullptr;
    }

    Literal parse_string_literal() {
        const char quote = cur_.peek();
        std::string lexical;
        if (cur_.peek(1) == quote && cur_.peek(2) == quote) {
            cur_.get();
            cur_.get();
            cur_.get();
            lexical = read_long_string(quote);
        } else {
            cur_.get();
            lexical = read_short_string(quote);
        }
        // Optional language tag or datatype.
        if (cur_.peek() == '@') {
            cur_.get();
            std::string tag;
            while (!cur_.eof() && (std::isalnum(static_cast<unsigned char>(cur_.peek())) ||
                                   cur_.peek() == '-'))
                tag += cur_.get();
            if (tag.empty()) cur_.fail("empty language tag");
            return Literal::lang(std::move(lexical), std::move(tag));
        }
        if (cur_.peek() == '^' && cur_.peek(1) == '^') {
            cur_.get();
            cur_.get();
            Iri datatype = cur_.peek() == '<' ? parse_iri() : parse_curie();
            return Literal{std::move(lexical), std::move(datatype)};
        }
        return Literal::plain(std::move(lexical));
    }

    std::string read_short_string(char quote) {
        std::string out;
        while (true) {
            if (cur_.eof()) cur_.fail("unterminated string");
            char c = cur_.get();
            if (c == quote) break;
            if (c == '\n') cur_.fail("newline in single-line string");
            if (c == '\\') {
                out += read_escape();
                continue;
            }
            out += c;
        }
        return out;
    }

    std::string read_long_string(char quote) {
        std::string out;
        while (true) {
            if (cur_.eof()) cur_.fail("unterminated long string");
            if (cur_.peek() == quote && cur_.peek(1) == quote && cur_.peek(2) == quote) {
                cur_.get();
                cur_.get();
                cur_.get();
                break;
            }
            char c = cur_.get();
            if (c == '\\') {
                out += read_escape();
                continue;
            }
            out += c;
        }
        return out;
    }

    std::string read_escape() {
        if (cur_.eof()) cur_.fail("truncated escape");
        const char e = cur_.get();
        switch (e) {
            case 't': return "\t";
            case 'b': return "\b";
            case 'n': return "\n";
            case 'r': return "\r";
            case 'f': return "\f";
            case '"': return "\"";
            case '\'': return "'";
            case '\\': return "\\";
            case 'u': {
                std::string out;
                append_utf8(out, parse_hex(cur_, 4));
                return out;
            }
            case 'U': {
                std::string out;
                append_utf8(out, parse_hex(cur_, 8));
                return out;
            }
            default: cur_.fail("unsupported string escape");
        }
        return {};
    }

    Literal parse_numeric_literal() {
        std::string lex;
        bool saw_dot = false, saw_exp = false;
        if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
        while (!cur_.eof()) {
            const char c = cur_.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                lex += cur_.get();
            } else if (c == '.' && !saw_dot && !saw_exp &&
                       std::isdigit(static_cast<unsigned char>(cur_.peek(1)))) {
                saw_dot = true;
                lex += cur_.get();
            } else if ((c == 'e' || c == 'E') && !saw_exp) {
                saw_exp = true;
                lex += cur_.get();
                if (cur_.peek() == '+' || cur_.peek() == '-') lex += cur_.get();
            } else {
                break;
            }
        }
        if (lex.empty() || !std::isdigit(static_cast<unsigned char>(lex.back())))
            cur_.fail("malformed numeric literal");
        if (saw_exp) return Literal{lex, xsd::double_type()};
        if (saw_dot) return Literal{lex, xsd::decimal()};
        return Literal{lex, xsd::integer()};
    }

    Literal parse_boolean_literal() {
        std::string word;
        while (!cur_.eof() && std::isalpha(static_cast<unsigned char>(cur_.peek())))
            word += cur_.get();
        if (word == "true" || word == "false") return Literal{word, xsd::boolean()};
        cur_.fail("expected boolean literal");
        return Literal::plain("");
    }

    Cursor cur_;
    Graph graph_;
    BlankScope blanks_;
    std::map<std::string, std::string> declared_;
    std::map<std::string, std::string> seed_;
};

inline std::string read_ntriples_iri(Cursor& cur);
inline BlankNode read_ntriples_blank(Cursor& cur, BlankScope& blanks);
inline Literal read_ntriples_literal(Cursor& cur);

}  // namespace detail

/// Parses the supported Turtle subset. Optional seed prefixes act as
/// fallback bindings; declarations inside the document take precedence.
inline Graph parse_turtle(std::string_view text, const PrefixMap* seed_prefixes = nullptr) {
    detail::TurtleParser parser(text, seed_prefixes);
    return parser.parse();
}

/// Parses N-Triples. One statement per line; comments and blank lines are
/// skipped; the prefix map of the result is empty.
inline Graph parse_ntriples(std::string_view text) {
    Graph graph;
    detail::BlankScope blanks;
    std::size_t pos = 0;
    int line_no = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        // Strip trailing carriage return.
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        std::size_t i = 0;
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size() || line[i] == '#') continue;

        detail::Cursor cur(line);
        // Cursor reports column alone; wrap errors with the physical line.
        try {
            cur.skip_ws_and_comments();
            Term subject = [&]() -> Term {
                if (cur.peek() == '<') {
                    const int col = cur.col();
                    std::string raw = detail::read_ntriples_iri(cur);
                    if (!is_absolute_iri(raw)) throw ParseError(1, col, "relative IRI <" + raw + ">");
                    return Term{Iri{raw}};
                }
                if (cur.peek() == '_') return Term{detail::read_ntriples_blank(cur, blanks)};
                cur.fail("expected IRI or blank node subject");
            }();
            cur.skip_ws_and_comments();
            const int pcol = cur.col();
            if (cur.peek() != '<') cur.fail("expected predicate IRI");
            std::string praw = detail::read_ntriples_iri(cur);
            if (!is_absolute_iri(praw)) throw ParseError(1, pcol, "relative IRI <" + praw + ">");
            Iri predicate{praw};
            cur.skip_ws_and_comments();
            Term object = [&]() -> Term {
                if (cur.peek() == '<') {
                    const int col = cur.col();
                    std::string raw = detail::read_ntriples_iri(cur);
                    if (!is_absolute_iri(raw)) throw ParseError(1, col, "relative IRI <" + raw + ">");
                    return Term{Iri{raw}};
                }
                if (cur.peek() == '_') return Term{detail::read_ntriples_blank(cur, blanks)};
                if (cur.peek() == '"') return Term{detail::read_ntriples_literal(cur)};
                cur.fail("expected IRI, blank node or literal object");
            }();
            cur.skip_ws_and_comments();
            cur.expect('.', "at end of statement");
            cur.skip_ws_and_comments();
            if (!cur.eof() && cur.peek() != '#') cur.fail("trailing content after '.'");
            graph.insert(std::move(subject), std::move(predicate), std::move(object));
        } catch (const ParseError& e) {
            throw ParseError(line_no, e.column(), e.message());
        }
    }
    return graph;
}

namespace detail {

inline std::string read_ntriples_iri(Cursor& cur) {
    cur.expect('<', "to open IRI");
    std::string out;
    while (true) {
        if (cur.eof()) cur.fail("unterminated IRI");
        char c = cur.get();
        if (c == '>') break;
        if (c == '\\') {
            const char e = cur.get();
            if (e == 'u')
                append_utf8(out, parse_hex(cur, 4));
            else if (e == 'U')
                append_utf8(out, parse_hex(cur, 8));
            else
                cur.fail("unsupported escape in IRI");
            continue;
        }
        if (c == ' ' || c == '\t') cur.fail("whitespace inside IRI");
        out += c;
    }
    return out;
}

inline BlankNode read_ntriples_blank(Cursor& cur, BlankScope& blanks) {
    cur.expect('_', "");
    cur.expect(':', "in blank node label");
    std::string label;
    while (!cur.eof() && (std::isalnum(static_cast<unsigned char>(cur.peek())) ||
                          cur.peek() == '_' || cur.peek() == '-'))
        label += cur.get();
    if (label.empty()) cur.fail("empty blank node label");
    return blanks.named(label);
}

inline Literal read_ntriples_literal(Cursor& cur) {
    cur.expect('"', "to open literal");
    std::string lexical;
    while (true) {
        if (cur.eof()) cur.fail("unterminated literal");
        char c = cur.get();
        if (c == '"') break;
        if (c == '\\') {
            const char e = cur.get();
            switch (e) {
                case 't': lexical += '\t'; break;
                case 'b': lexical += '\b'; break;
                case 'n': lexical += '\n'; break;
                case 'r': lexical += '\r'; break;
                case 'f': lexical += '\f'; break;
                case '"': lexical += '"'; break;
                case '\'': lexical += '\''; break;
                case '\\': lexical += '\\'; break;
                case 'u': append_utf8(lexical, parse_hex(cur, 4)); break;
                case 'U': append_utf8(lexical, parse_hex(cur, 8)); break;
                default: cur.fail("unsupported string escape");
            }
            continue;
        }
        lexical += c;
    }
    if (cur.peek() == '@') {
        cur.get();
        std::string tag;
        while (!cur.eof() &&
               (std::isalnum(static_cast<unsigned char>(cur.peek())) || cur.peek() == '-'))
            tag += cur.get();
        if (tag.empty()) cur.fail("empty language tag");
        return Literal::lang(std::move(lexical), std::move(tag));
    }
    if (cur.peek() == '^' && cur.peek(1) == '^') {
        cur.get();
        cur.get();
        const int col = cur.col();
        std::string raw = detail::read_ntriples_iri(cur);
        if (!is_absolute_iri(raw)) throw ParseError(1, col, "relative IRI <" + raw + ">");
        return Literal{std::move(lexical), Iri{raw}};
    }
    return Literal::plain(std::move(lexical));
}

inline std::string escape_short_string(const std::string& lexical) {
    std::string out;
    out.reserve(lexical.size() + 2);
    for (char c : lexical) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    static const char* hex = "0123456789ABCDEF";
                    out += "\\u00";
                    out += hex[(c >> 4) & 0xF];
                    out += hex[c & 0xF];
                } else {
                    out += c;
                }
        }
    }
    return out;
}

inline std::string turtle_iri(const Iri& iri, const PrefixMap& prefixes) {
    if (auto curie = prefixes.compact(iri.str())) return *curie;
    return "<" + iri.str() + ">";
}

inline std::string turtle_term(const Term& term, const PrefixMap& prefixes) {
    switch (term.kind()) {
        case TermKind::Iri: return turtle_iri(term.iri(), prefixes);
        case TermKind::Blank: return "_:" + term.blank().label;
        case TermKind::Literal: {
            const Literal& l = term.literal();
            std::string out = "\"" + escape_short_string(l.lexical) + "\"";
            if (!l.language.empty())
                out += "@" + l.language;
            else if (!(l.datatype == xsd::string_type()))
                out += "^^" + turtle_iri(l.datatype, prefixes);
            return out;
        }
    }
    return {};
}

}  // namespace detail

/// Deterministic Turtle: sorted @prefix block, blank line, subject groups in
/// canonical order with ';'-separated predicates and ','-separated objects.
/// Equal graphs serialize to byte-identical strings.
inline std::string serialize_turtle(const Graph& graph) {
    std::ostringstream out;
    const PrefixMap& prefixes = graph.prefixes();
    for (const auto& [label, ns] : prefixes.entries())
        out << "@prefix " << label << ": <" << ns << "> .\n";
    if (!prefixes.empty() && !graph.empty()) out << "\n";

    auto it = graph.begin();
    while (it != graph.end()) {
        const Term subject = it->subject;
        out << detail::turtle_term(subject, prefixes);
        bool first_predicate = true;
        while (it != graph.end() && it->subject == subject) {
            const Iri predicate = it->predicate;
            if (!first_predicate) out << " ;\n  ";
            else out << " ";
            first_predicate = false;
            if (predicate == vocab::rdf_type())
                out << "a";
            else
                out << detail::turtle_iri(predicate, prefixes);
            bool first_object = true;
            while (it != graph.end() && it->subject == subject && it->predicate == predicate) {
                out << (first_object ? " " : ", ") << detail::turtle_term(it->object, prefixes);
                first_object = false;
                ++it;
            }
        }
        out << " .\n";
        if (it != graph.end()) out << "\n";
    }
    return out.str();
}

}  // namespace ontoforge::rdf
