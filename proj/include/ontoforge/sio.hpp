#ifndef ONTOFORGE_SIO_HPP
#define ONTOFORGE_SIO_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontoforge/owl.hpp"

namespace ontoforge::sio {

struct SioError : Error {
    using Error::Error;
};

/// Identifier-safe form of a label: characters outside [A-Za-z0-9_]
/// become "_", runs of "_" collapse, a leading digit gets an "n"
/// prefix, and results colliding with {"true", "false", "nil"} get an
/// "_entity" suffix. Idempotent; output matches [A-Za-z_][A-Za-z0-9_]*.
std::string make_safe(const std::string& label);

/// Dublin Core description annotation, language-tagged "en".
owl::Annotation desc(const std::string& description);

/// rdfs:seeAlso annotation with a plain literal (no language tag, no
/// datatype).
owl::Annotation see_also(const std::string& value);

/// Minimal vocabulary the SIO patterns build on: classes process,
/// pathway (under process), atom, role and reactant_role (under role);
/// object properties has_proper_part and precedes; and the Dublin Core
/// description annotation property.
void sio_scaffold(owl::Ontology& ont);

struct SioClassSpec {
    std::string name;         // human-readable label
    owl::ClassExpression parent;
    std::string description;  // non-empty
    std::vector<owl::ClassExpression> extra_frames;  // additional subclass frames
};

/// Standard class shape: fragment make_safe(name), SubClassOf parent,
/// rdfs:label carrying the original name, one description annotation,
/// extra frames verbatim.
owl::ClassExpression sio_class(owl::Ontology& ont, const SioClassSpec& spec);

struct AtomSpec {
    std::string name;
    std::optional<std::string> chebi;  // "CHEBI:" digits when present
};

/// Chemical-element shape: fragment make_safe(name) under the atom
/// class, labelled with the original name; a seeAlso onto the ChEBI id
/// exactly when one is given.
owl::ClassExpression owl_atom(owl::Ontology& ont, const AtomSpec& spec);

/// JSON array of {"name": "...", "chebi": "CHEBI:NNNNN" | null}.
std::vector<AtomSpec> load_atom_specs(std::istream& in);

/// Pathway shape: the class is equivalent to pathway constrained by a
/// has_proper_part existential onto the nested precedes chain
/// r1 and (precedes some (r2 and ...)) plus one has_proper_part
/// existential per reaction (duplicates collapse).
owl::ClassExpression biochemical_pathway(owl::Ontology& ont, std::string_view name,
                                         const std::vector<owl::Iri>& reactions);

struct AuditFinding {
    owl::Iri subject;
    owl::Iri missing;  // required annotation property absent on subject

    bool operator==(const AuditFinding&) const = default;
};

/// Classes strictly under scope lacking one of the required annotation
/// properties, ordered by class fragment then property fragment.
std::vector<AuditFinding> audit_annotations(const owl::Ontology& ont,
                                            const std::vector<owl::Iri>& required,
                                            const owl::Iri& scope);

/// Same audit over every declared class.
std::vector<AuditFinding> audit_annotations(const owl::Ontology& ont,
                                            const std::vector<owl::Iri>& required);

}  // namespace ontoforge::sio

#endif
