#ifndef ONTOFORGE_SERIALIZE_HPP
#define ONTOFORGE_SERIALIZE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "ontoforge/owl.hpp"

namespace ontoforge::serialize {

struct SerializeError : Error {
    using Error::Error;
};

/// Raised by read_functional_subset; line is 1-based.
struct ReadError : Error {
    ReadError(const std::string& message, std::size_t line)
        : Error(message + " (line " + std::to_string(line) + ")"), line(line) {}

    std::size_t line;
};

enum class Format { Functional, Manchester };
enum class Sort { InsertionOrder, Canonical };

struct SerializationConfig {
    Format format = Format::Functional;
    Sort sort = Sort::InsertionOrder;
};

/// Shortens IRIs against an ontology's default namespace and prefix
/// map. Fragments that cannot form a prefixed name fall back to the
/// full <...> form.
class NameContext {
public:
    NameContext() = default;
    explicit NameContext(const owl::Ontology& ont);

    /// Functional-syntax form: ":frag", "pfx:frag" or "<full>".
    std::string shorten(const owl::Iri& iri) const;

    /// Manchester form: bare fragment in the default namespace,
    /// otherwise "pfx:frag" or "<full>".
    std::string display(const owl::Iri& iri) const;

private:
    std::string default_ns_;
    std::map<std::string, std::string, std::less<>> prefix_of_ns_;
};

/// Manchester-syntax rendering of one expression (some/only/and/or/
/// exactly keywords, minimal parentheses).
std::string manchester(const owl::ClassExpression& expr, const NameContext& names);

/// Line-oriented OWL Functional Syntax. Prefix block first (default
/// namespace, then named prefixes sorted), then one axiom per line
/// inside Ontology(...). Canonical sort orders axioms by kind rank
/// (Declaration, FunctionalObjectProperty, SubClassOf,
/// EquivalentClasses, DisjointClasses, AnnotationAssertion) and then
/// by rendered line. Requires a clean finalize_check.
std::string to_functional(const owl::Ontology& ont, SerializationConfig cfg = {});

/// Manchester Syntax frames: prefix header, then AnnotationProperty,
/// ObjectProperty and Class frames, then standalone DisjointClasses
/// lines. Requires a clean finalize_check.
std::string to_manchester(const owl::Ontology& ont, SerializationConfig cfg = {});

/// Class frames for the given subjects only, in the given order; no
/// header. Used for fragment output.
std::string manchester_frames(const owl::Ontology& ont, const std::vector<owl::Iri>& subjects);

/// Reads text produced by to_functional back into an Ontology. Only
/// the constructs the emitter produces are understood; anything else
/// raises ReadError naming the construct and its line.
owl::Ontology read_functional_subset(const std::string& text);

/// Splits an absolute IRI after its last '#', '/' or ':' (the split is
/// cosmetic; equality is on the full text).
owl::Iri parse_absolute_iri(const std::string& text);

/// A user-supplied name: an absolute IRI (optionally <...>-wrapped), a
/// prefixed name resolved against the ontology's prefixes, or a bare
/// fragment under its default namespace.
owl::Iri resolve_name(const owl::Ontology& ont, const std::string& text);

}  // namespace ontoforge::serialize

#endif
