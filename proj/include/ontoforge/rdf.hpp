/**
 * @file rdf.hpp
 * @brief Minimal RDF data model: IRIs, terms, triples, prefix maps and an
 *        immutable-after-load triple set with canonical ordering.
 */
#pragma once

#include <cctype>
#include <compare>
#include <cstdint>
#include <iterator>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ontoforge::rdf {

// ---------------------------------------------------------------------------
// Errors

class ParseError : public std::runtime_error {
public:
    ParseError(int line, int column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) +
                             ": " + message),
          line_(line),
          column_(column),
          message_(message) {}

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int column_;
    std::string message_;
};

class UnknownPrefixError : public ParseError {
public:
    UnknownPrefixError(int line, int column, const std::string& prefix)
        : ParseError(line, column, "unknown prefix '" + prefix + "'"), prefix_(prefix) {}

    const std::string& prefix() const { return prefix_; }

private:
    std::string prefix_;
};

class MalformedListError : public std::runtime_error {
public:
    explicit MalformedListError(const std::string& message)
        : std::runtime_error("malformed list: " + message) {}
};

// ---------------------------------------------------------------------------
// Terms

[[nodiscard]] inline bool is_absolute_iri(std::string_view s) {
    if (s.empty()) return false;
    std::size_t colon = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' || c == '>' ||
            c == '"' || c == '{' || c == '}' || c == '|' || c == '^' || c == '`')
            return false;
        if (c == ':' && colon == std::string_view::npos) colon = i;
    }
    if (colon == std::string_view::npos || colon == 0) return false;
    // scheme = ALPHA *( ALPHA / DIGIT / "+" / "-" / "." )
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        const char c = s[i];
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            return false;
    }
    return true;
}

class Iri {
public:
    explicit Iri(std::string value) : value_(std::move(value)) {
        if (!is_absolute_iri(value_))
            throw std::invalid_argument("not an absolute IRI: '" + value_ + "'");
    }

    const std::string& str() const { return value_; }

    friend std::strong_ordering operator<=>(const Iri& a, const Iri& b) {
        return a.value_.compare(b.value_) <=> 0;
    }
    friend bool operator==(const Iri& a, const Iri& b) { return a.value_ == b.value_; }

    /// Local name: the part after the last '#' or '/'.
    std::string local_name() const {
        const auto pos = value_.find_last_of("#/");
        return pos == std::string::npos ? value_ : value_.substr(pos + 1);
    }

private:
    std::string value_;
};

struct BlankNode {
    std::string label;

    friend std::strong_ordering operator<=>(const BlankNode& a, const BlankNode& b) {
        return a.label.compare(b.label) <=> 0;
    }
    friend bool operator==(const BlankNode&, const BlankNode&) = default;
};

namespace xsd {
inline constexpr std::string_view ns = "http://www.w3.org/2001/XMLSchema#";
inline const Iri& string_type() { static const Iri v{"http://www.w3.org/2001/XMLSchema#string"}; return v; }
inline const Iri& boolean() { static const Iri v{"http://www.w3.org/2001/XMLSchema#boolean"}; return v; }
inline const Iri& integer() { static const Iri v{"http://www.w3.org/2001/XMLSchema#integer"}; return v; }
inline const Iri& decimal() { static const Iri v{"http://www.w3.org/2001/XMLSchema#decimal"}; return v; }
inline const Iri& double_type() { static const Iri v{"http://www.w3.org/2001/XMLSchema#double"}; return v; }
inline const Iri& long_type() { static const Iri v{"http://www.w3.org/2001/XMLSchema#long"}; return v; }
inline const Iri& date() { static const Iri v{"http://www.w3.org/2001/XMLSchema#date"}; return v; }
inline const Iri& date_time() { static const Iri v{"http://www.w3.org/2001/XMLSchema#dateTime"}; return v; }
inline const Iri& any_uri() { static const Iri v{"http://www.w3.org/2001/XMLSchema#anyURI"}; return v; }
inline const Iri& non_negative_integer() { static const Iri v{"http://www.w3.org/2001/XMLSchema#nonNegativeInteger"}; return v; }
}  // namespace xsd

namespace vocab {
inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl_ns = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view skos_ns = "http://www.w3.org/2004/02/skos/core#";

inline const Iri& rdf_type() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#type"}; return v; }
inline const Iri& rdf_first() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#first"}; return v; }
inline const Iri& rdf_rest() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#rest"}; return v; }
inline const Iri& rdf_nil() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#nil"}; return v; }
inline const Iri& rdf_value() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#value"}; return v; }
inline const Iri& rdf_lang_string() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#langString"}; return v; }
inline const Iri& rdf_list() { static const Iri v{"http://www.w3.org/1999/02/22-rdf-syntax-ns#List"}; return v; }
inline const Iri& rdfs_label() { static const Iri v{"http://www.w3.org/2000/01/rdf-schema#label"}; return v; }
inline const Iri& rdfs_comment() { static const Iri v{"http://www.w3.org/2000/01/rdf-schema#comment"}; return v; }
inline const Iri& rdfs_sub_class_of() { static const Iri v{"http://www.w3.org/2000/01/rdf-schema#subClassOf"}; return v; }
inline const Iri& rdfs_class() { static const Iri v{"http://www.w3.org/2000/01/rdf-schema#Class"}; return v; }
inline const Iri& owl_class() { static const Iri v{"http://www.w3.org/2002/07/owl#Class"}; return v; }
inline const Iri& owl_ontology() { static const Iri v{"http://www.w3.org/2002/07/owl#Ontology"}; return v; }
inline const Iri& owl_object_property() { static const Iri v{"http://www.w3.org/2002/07/owl#ObjectProperty"}; return v; }
inline const Iri& owl_datatype_property() { static const Iri v{"http://www.w3.org/2002/07/owl#DatatypeProperty"}; return v; }
inline const Iri& owl_restriction() { static const Iri v{"http://www.w3.org/2002/07/owl#Restriction"}; return v; }
inline const Iri& owl_on_property() { static const Iri v{"http://www.w3.org/2002/07/owl#onProperty"}; return v; }
inline const Iri& owl_min_cardinality() { static const Iri v{"http://www.w3.org/2002/07/owl#minCardinality"}; return v; }
inline const Iri& owl_max_cardinality() { static const Iri v{"http://www.w3.org/2002/07/owl#maxCardinality"}; return v; }
inline const Iri& owl_all_values_from() { static const Iri v{"http://www.w3.org/2002/07/owl#allValuesFrom"}; return v; }
inline const Iri& owl_one_of() { static const Iri v{"http://www.w3.org/2002/07/owl#oneOf"}; return v; }
inline const Iri& skos_description() { static const Iri v{"http://www.w3.org/2004/02/skos/core#description"}; return v; }
}  // namespace vocab

struct Literal {
    std::string lexical;
    Iri datatype;
    std::string language;  // non-empty only for rdf:langString

    Literal(std::string lex, Iri dt, std::string lang = "")
        : lexical(std::move(lex)), datatype(std::move(dt)), language(std::move(lang)) {
        if (!language.empty() && datatype != vocab::rdf_lang_string())
            throw std::invalid_argument("language tag requires rdf:langString datatype");
        if (language.empty() && datatype == vocab::rdf_lang_string())
            throw std::invalid_argument("rdf:langString literal requires a language tag");
    }

    static Literal plain(std::string lex) { return Literal(std::move(lex), xsd::string_type()); }
    static Literal lang(std::string lex, std::string tag) {
        return Literal(std::move(lex), vocab::rdf_lang_string(), std::move(tag));
    }

    // Canonical literal order: (datatype IRI, lexical form, language tag).
    friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
        if (auto c = a.datatype <=> b.datatype; c != 0) return c;
        if (auto c = a.lexical.compare(b.lexical) <=> 0; c != 0) return c;
        return a.language.compare(b.language) <=> 0;
    }
    friend bool operator==(const Literal& a, const Literal& b) {
        return a.datatype == b.datatype && a.lexical == b.lexical && a.language == b.language;
    }
};

enum class TermKind { Iri = 0, Blank = 1, Literal = 2 };

/// One RDF term. Canonical term order: IRIs, then blank nodes, then literals.
class Term {
public:
    Term(Iri iri) : kind_(TermKind::Iri), iri_(std::move(iri)) {}
    Term(BlankNode blank) : kind_(TermKind::Blank), blank_(std::move(blank)) {}
    Term(Literal literal) : kind_(TermKind::Literal), literal_(std::move(literal)) {}

    TermKind kind() const { return kind_; }
    bool is_iri() const { return kind_ == TermKind::Iri; }
    bool is_blank() const { return kind_ == TermKind::Blank; }
    bool is_literal() const { return kind_ == TermKind::Literal; }

    const Iri& iri() const { return iri_.value(); }
    const BlankNode& blank() const { return blank_.value(); }
    const Literal& literal() const { return literal_.value(); }

    friend std::strong_ordering operator<=>(const Term& a, const Term& b) {
        if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
        switch (a.kind_) {
            case TermKind::Iri: return *a.iri_ <=> *b.iri_;
            case TermKind::Blank: return *a.blank_ <=> *b.blank_;
            case TermKind::Literal: return *a.literal_ <=> *b.literal_;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const Term& a, const Term& b) { return (a <=> b) == 0; }

private:
    TermKind kind_;
    std::optional<Iri> iri_;
    std::optional<BlankNode> blank_;
    std::optional<Literal> literal_;
};

/// Renders a term the way reports and error messages show it.
inline std::string term_to_string(const Term& t) {
    switch (t.kind()) {
        case TermKind::Iri: return "<" + t.iri().str() + ">";
        case TermKind::Blank: return "_:" + t.blank().label;
        case TermKind::Literal: {
            const Literal& l = t.literal();
            std::string out = "\"";
            for (char c : l.lexical) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\r': out += "\\r"; break;
                    case '\t': out += "\\t"; break;
                    default: out += c;
                }
            }
            out += '"';
            if (!l.language.empty())
                out += "@" + l.language;
            else if (l.datatype != xsd::string_type())
                out += "^^<" + l.datatype.str() + ">";
            return out;
        }
    }
    return {};
}

struct Triple {
    Term subject;
    Iri predicate;
    Term object;

    Triple(Term s, Iri p, Term o)
        : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
        if (subject.is_literal()) throw std::invalid_argument("triple subject cannot be a literal");
    }

    friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
        if (auto c = a.subject <=> b.subject; c != 0) return c;
        if (auto c = a.predicate <=> b.predicate; c != 0) return c;
        return a.object <=> b.object;
    }
    friend bool operator==(const Triple& a, const Triple& b) { return (a <=> b) == 0; }
};

// ---------------------------------------------------------------------------
// Prefix map

/// Maps prefix labels (possibly the empty label) to namespace IRIs.
/// Namespaces are unique across labels so compaction is unambiguous.
class PrefixMap {
public:
    void bind(const std::string& label, const std::string& ns) {
        if (!is_absolute_iri(ns))
            throw std::invalid_argument("prefix namespace is not an absolute IRI: " + ns);
        auto it = entries_.find(label);
        if (it != entries_.end()) {
            if (it->second != ns)
                throw std::invalid_argument("prefix '" + label + "' rebound to a different namespace");
            return;
        }
        for (const auto& [l, n] : entries_)
            if (n == ns)
                throw std::invalid_argument("namespace <" + ns + "> already bound to prefix '" + l + "'");
        entries_.emplace(label, ns);
    }

    /// Binds label->ns unless the label or the namespace is already taken.
    void bind_if_free(const std::string& label, const std::string& ns) {
        if (entries_.contains(label)) return;
        for (const auto& [l, n] : entries_)
            if (n == ns) return;
        entries_.emplace(label, ns);
    }

    bool has(const std::string& label) const { return entries_.contains(label); }

    std::optional<std::string> expand(const std::string& label, const std::string& local) const {
        auto it = entries_.find(label);
        if (it == entries_.end()) return std::nullopt;
        return it->second + local;
    }

    /// Compacts an IRI to "prefix:local" when a namespace matches and the
    /// local part is a safe PN_LOCAL subset; returns nullopt otherwise.
    std::optional<std::string> compact(const std::string& iri) const {
        const std::string* best_label = nullptr;
        const std::string* best_ns = nullptr;
        for (const auto& [label, ns] : entries_) {
            if (iri.size() > ns.size() && iri.compare(0, ns.size(), ns) == 0) {
                if (!best_ns || ns.size() > best_ns->size()) {
                    best_label = &label;
                    best_ns = &ns;
                }
            }
        }
        if (!best_ns) return std::nullopt;
        const std::string local = iri.substr(best_ns->size());
        if (!safe_local(local)) return std::nullopt;
        return *best_label + ":" + local;
    }

    const std::map<std::string, std::string>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    friend bool operator==(const PrefixMap&, const PrefixMap&) = default;

private:
    static bool safe_local(const std::string& local) {
        if (local.empty()) return false;
        auto word = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
        };
        if (!word(local.front())) return false;
        if (local.back() == '.' || local.back() == '-') return false;
        for (char c : local)
            if (!word(c) && c != '-' && c != '.') return false;
        return true;
    }

    std::map<std::string, std::string> entries_;
};

// ---------------------------------------------------------------------------
// Graph

/// A set of triples (duplicates collapse on insert) with a prefix table.
/// Iteration follows the canonical (subject, predicate, object) term order,
/// so serialization and query results are deterministic. Immutable once
/// loaded; concurrent reads are safe.
class Graph {
public:
    using TripleSet = std::set<Triple>;
    using const_iterator = TripleSet::const_iterator;

    void insert(Triple t) { triples_.insert(std::move(t)); }
    void insert(Term s, Iri p, Term o) {
        triples_.insert(Triple(std::move(s), std::move(p), std::move(o)));
    }

    bool contains(const Triple& t) const { return triples_.contains(t); }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    const_iterator begin() const { return triples_.begin(); }
    const_iterator end() const { return triples_.end(); }

    PrefixMap& prefixes() { return prefixes_; }
    const PrefixMap& prefixes() const { return prefixes_; }

    /// All objects of (subject, predicate, ?) in canonical term order.
    std::vector<Term> objects_of(const Term& subject, const Iri& predicate) const {
        std::vector<Term> out;
        for (auto it = lower_bound(subject, predicate); it != triples_.end(); ++it) {
            if (!(it->subject == subject) || !(it->predicate == predicate)) break;
            out.push_back(it->object);
        }
        return out;
    }

    std::size_t count(const Term& subject, const Iri& predicate) const {
        std::size_t n = 0;
        for (auto it = lower_bound(subject, predicate); it != triples_.end(); ++it) {
            if (!(it->subject == subject) || !(it->predicate == predicate)) break;
            ++n;
        }
        return n;
    }

    /// Subjects with (s, rdf:type, classIri); direct types only, no subclass
    /// closure. Result is in canonical term order.
    std::vector<Term> instances_of(const Iri& class_iri) const {
        std::vector<Term> out;
        const Term cls{class_iri};
        for (const Triple& t : triples_)
            if (t.predicate == vocab::rdf_type() && t.object == cls) out.push_back(t.subject);
        return out;
    }

    /// Distinct predicates of a subject, canonical order.
    std::vector<Iri> predicates_of(const Term& subject) const {
        std::vector<Iri> out;
        for (const Triple& t : triples_) {
            if (t.subject == subject && (out.empty() || !(out.back() == t.predicate)))
                out.push_back(t.predicate);
        }
        return out;
    }

    /// Distinct subjects, canonical order.
    std::vector<Term> subjects() const {
        std::vector<Term> out;
        for (const Triple& t : triples_)
            if (out.empty() || !(out.back() == t.subject)) out.push_back(t.subject);
        return out;
    }

    /// Members of the RDF collection rooted at head; rdf:nil yields [].
    /// Throws MalformedListError on missing rdf:first/rdf:rest, branching,
    /// or a cycle in the rdf:rest chain.
    std::vector<Term> list_members(const Term& head) const {
        std::vector<Term> members;
        std::set<Term> seen;
        Term cursor = head;
        const Term nil{vocab::rdf_nil()};
        while (!(cursor == nil)) {
            if (cursor.is_literal())
                throw MalformedListError("list node is a literal: " + term_to_string(cursor));
            if (!seen.insert(cursor).second)
                throw MalformedListError("cycle through " + term_to_string(cursor));
            const auto firsts = objects_of(cursor, vocab::rdf_first());
            if (firsts.empty())
                throw MalformedListError("missing rdf:first on " + term_to_string(cursor));
            if (firsts.size() > 1)
                throw MalformedListError("multiple rdf:first on " + term_to_string(cursor));
            const auto rests = objects_of(cursor, vocab::rdf_rest());
            if (rests.empty())
                throw MalformedListError("missing rdf:rest on " + term_to_string(cursor));
            if (rests.size() > 1)
                throw MalformedListError("multiple rdf:rest on " + term_to_string(cursor));
            members.push_back(firsts.front());
            cursor = rests.front();
        }
        return members;
    }

    /// Union of this graph and other. Blank labels from other are renamed
    /// with a fresh suffix so the two blank scopes stay disjoint.
    void merge(const Graph& other) {
        const std::string suffix = "m" + std::to_string(merge_counter_++);
        auto rename = [&suffix](const Term& t) -> Term {
            if (t.is_blank()) return Term{BlankNode{t.blank().label + "_" + suffix}};
            return t;
        };
        for (const Triple& t : other)
            insert(rename(t.subject), t.predicate, rename(t.object));
        for (const auto& [label, ns] : other.prefixes().entries())
            prefixes_.bind_if_free(label, ns);
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.triples_ == b.triples_ && a.prefixes_ == b.prefixes_;
    }

private:
    TripleSet::const_iterator lower_bound(const Term& subject, const Iri& predicate) const {
        // std::set has no heterogeneous lookup without a transparent
        // comparator; binary-search the sorted set manually.
        auto it = triples_.begin();
        auto count = triples_.size();
        while (count > 0) {
            auto step = count / 2;
            auto mid = std::next(it, static_cast<std::ptrdiff_t>(step));
            bool below;
            if (auto c = mid->subject <=> subject; c != 0)
                below = c < 0;
            else
                below = (mid->predicate <=> predicate) < 0;
            if (below) {
                it = std::next(mid);
                count -= step + 1;
            } else {
                count = step;
            }
        }
        return it;
    }

    TripleSet triples_;
    PrefixMap prefixes_;
    unsigned merge_counter_ = 0;
};

}  // namespace ontoforge::rdf
