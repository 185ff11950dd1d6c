#ifndef ONTOFORGE_OWL_HPP
#define ONTOFORGE_OWL_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace ontoforge {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace owl {

struct OntologyError : Error {
    using Error::Error;
};

/// An IRI split into a namespace part and a local fragment.
/// Equality and ordering are on the rendered form; the split is kept
/// only so emitters can shorten names.
class Iri {
public:
    Iri(std::string_view base, std::string_view fragment);

    std::string_view base() const { return std::string_view(text_).substr(0, split_); }
    std::string_view fragment() const { return std::string_view(text_).substr(split_); }
    const std::string& str() const { return text_; }

    friend bool operator==(const Iri& a, const Iri& b) { return a.text_ == b.text_; }
    friend auto operator<=>(const Iri& a, const Iri& b) { return a.text_ <=> b.text_; }

private:
    std::string text_;
    std::size_t split_;
};

enum class EntityKind { Class, ObjectProperty, AnnotationProperty };

std::string_view kind_name(EntityKind kind);

struct Entity {
    EntityKind kind;
    Iri iri;

    bool operator==(const Entity&) const = default;
};

/// Typed or language-tagged string value. lang and datatype are mutually
/// exclusive; a literal with neither is a plain literal.
class Literal {
public:
    explicit Literal(std::string lexical);
    Literal(std::string lexical, std::string lang);
    Literal(std::string lexical, Iri datatype);

    const std::string& lexical() const { return lexical_; }
    const std::optional<std::string>& lang() const { return lang_; }
    const std::optional<Iri>& datatype() const { return datatype_; }

    bool operator==(const Literal&) const = default;

private:
    std::string lexical_;
    std::optional<std::string> lang_;
    std::optional<Iri> datatype_;
};

struct Annotation {
    Iri property;
    std::variant<Literal, Iri> value;

    bool operator==(const Annotation&) const = default;
};

// Expression trees are immutable; Box shares subtrees on copy and
// compares them structurally.
template <typename T>
class Box {
public:
    Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}

    const T& operator*() const { return *ptr_; }
    const T* operator->() const { return ptr_.get(); }

    friend bool operator==(const Box& a, const Box& b) { return *a.ptr_ == *b.ptr_; }

private:
    std::shared_ptr<const T> ptr_;
};

struct ClassExpression;

struct Named {
    Iri iri;
    bool operator==(const Named&) const = default;
};

struct SomeValuesFrom {
    Iri property;
    Box<ClassExpression> filler;
    bool operator==(const SomeValuesFrom&) const = default;
};

struct AllValuesFrom {
    Iri property;
    Box<ClassExpression> filler;
    bool operator==(const AllValuesFrom&) const = default;
};

struct IntersectionOf {
    std::vector<ClassExpression> operands;  // >= 2
    bool operator==(const IntersectionOf&) const = default;
};

struct UnionOf {
    std::vector<ClassExpression> operands;  // >= 2
    bool operator==(const UnionOf&) const = default;
};

struct ExactCardinality {
    std::uint32_t n;
    Iri property;
    Box<ClassExpression> filler;
    bool operator==(const ExactCardinality&) const = default;
};

struct ClassExpression {
    using Node = std::variant<Named, SomeValuesFrom, AllValuesFrom,
                              IntersectionOf, UnionOf, ExactCardinality>;
    Node node;

    ClassExpression(Named e) : node(std::move(e)) {}
    ClassExpression(SomeValuesFrom e) : node(std::move(e)) {}
    ClassExpression(AllValuesFrom e) : node(std::move(e)) {}
    ClassExpression(IntersectionOf e) : node(std::move(e)) {}
    ClassExpression(UnionOf e) : node(std::move(e)) {}
    ClassExpression(ExactCardinality e) : node(std::move(e)) {}

    bool operator==(const ClassExpression&) const = default;
};

inline ClassExpression named(Iri iri) { return ClassExpression(Named{std::move(iri)}); }

struct Declaration {
    Entity entity;
    bool operator==(const Declaration&) const = default;
};

struct SubClassOf {
    ClassExpression sub;
    ClassExpression super;
    bool operator==(const SubClassOf&) const = default;
};

/// Membership is a set: two axioms with the same expressions in a
/// different order are equal. Serialization keeps insertion order.
struct EquivalentClasses {
    std::vector<ClassExpression> expressions;  // >= 2
};

struct DisjointClasses {
    std::vector<ClassExpression> expressions;  // >= 2, pairwise distinct
};

struct AnnotationAssertion {
    Iri subject;
    Annotation annotation;
    bool operator==(const AnnotationAssertion&) const = default;
};

struct FunctionalObjectProperty {
    Iri property;
    bool operator==(const FunctionalObjectProperty&) const = default;
};

struct Axiom {
    using Node = std::variant<Declaration, SubClassOf, EquivalentClasses, DisjointClasses,
                              AnnotationAssertion, FunctionalObjectProperty>;
    Node node;

    Axiom(Declaration a) : node(std::move(a)) {}
    Axiom(SubClassOf a) : node(std::move(a)) {}
    Axiom(EquivalentClasses a) : node(std::move(a)) {}
    Axiom(DisjointClasses a) : node(std::move(a)) {}
    Axiom(AnnotationAssertion a) : node(std::move(a)) {}
    Axiom(FunctionalObjectProperty a) : node(std::move(a)) {}

    friend bool operator==(const Axiom& a, const Axiom& b);
};

/// Canonical key for expression identity; total order, injective on
/// structure. Intersection/union operand order is significant here.
std::string structural_key(const ClassExpression& expr);

/// Canonical key for axiom identity. EquivalentClasses/DisjointClasses
/// members are sorted before keying, so member order does not matter.
std::string axiom_key(const Axiom& axiom);

namespace vocab {
inline constexpr std::string_view rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view owl_ns = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view dc_terms_ns = "http://purl.org/dc/terms/";

Iri rdfs_label();
Iri rdfs_see_also();
Iri dc_description();
}  // namespace vocab

/// Mutable build target: an axiom set with stable insertion order.
/// Single-writer while under construction; const access afterwards is
/// safe to share across threads.
class Ontology {
public:
    /// default_namespace empty means iri + "#". The prefixes rdf, rdfs,
    /// xsd and owl are always present; a caller-supplied expansion that
    /// conflicts with one of them is an error.
    explicit Ontology(Iri iri, std::map<std::string, std::string> prefixes = {},
                      std::string default_namespace = "");

    const Iri& iri() const { return iri_; }
    const std::map<std::string, std::string>& prefixes() const { return prefixes_; }
    const std::string& default_namespace() const { return default_namespace_; }

    /// Iri under the default namespace. Throws on an invalid fragment.
    Iri name(std::string_view fragment) const;

    /// Set semantics: re-adding an axiom already present is a no-op and
    /// returns false. Declaration kind conflicts and annotation
    /// assertions through a non-annotation property are errors.
    bool add(Axiom axiom);

    const std::vector<Axiom>& axioms() const { return axioms_; }
    std::size_t size() const { return axioms_.size(); }

    std::optional<EntityKind> declared_kind(const Iri& iri) const;
    bool is_declared(const Iri& iri, EntityKind kind) const;

    bool operator==(const Ontology& other) const;

private:
    Iri iri_;
    std::map<std::string, std::string> prefixes_;
    std::string default_namespace_;
    std::vector<Axiom> axioms_;
    std::set<std::string> keys_;
    std::map<Iri, EntityKind> declarations_;
};

struct ClassFrames {
    std::optional<std::string> label;
    std::vector<ClassExpression> subclass;
    std::vector<ClassExpression> equivalent;
    std::vector<Annotation> annotations;
};

/// Frame-style class builder: declaration, one SubClassOf per subclass
/// frame, one EquivalentClasses per equivalent frame, rdfs:label when
/// given. Returns the named expression for reuse.
ClassExpression owl_class(Ontology& ont, std::string_view name, ClassFrames frames = {});

struct PropertyTraits {
    bool functional = false;
};

Iri declare_property(Ontology& ont, std::string_view name, EntityKind kind,
                     PropertyTraits traits = {});

/// One existential restriction per filler, in input order.
std::vector<ClassExpression> owl_some(const Iri& property, std::vector<ClassExpression> fillers);

/// Universal restriction. Multiple fillers close over their union; the
/// union operands are deduplicated and sorted canonically, a single
/// filler is used unwrapped.
ClassExpression owl_only(const Iri& property, std::vector<ClassExpression> fillers);

/// A single operand collapses to itself.
ClassExpression owl_and(std::vector<ClassExpression> operands);
ClassExpression owl_or(std::vector<ClassExpression> operands);

ClassExpression exactly(std::uint32_t n, const Iri& property, ClassExpression filler);

std::map<EntityKind, std::size_t> count_by_kind(const Ontology& ont);

/// Asserted named-class subclasses. Throws when the root class is not
/// declared.
std::set<Iri> subclasses_of(const Ontology& ont, const Iri& cls, bool transitive);

/// Undeclared entity references in subclass/equivalent/disjoint axioms,
/// deduplicated and sorted. Empty on a well-formed ontology.
std::vector<Iri> finalize_check(const Ontology& ont);

}  // namespace owl
}  // namespace ontoforge

#endif
