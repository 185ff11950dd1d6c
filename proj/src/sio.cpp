#include "ontoforge/sio.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <map>
#include <set>

#include <json.hpp>

namespace ontoforge::sio {

using owl::Annotation;
using owl::ClassExpression;
using owl::EntityKind;
using owl::Iri;
using owl::Literal;
using owl::Ontology;

std::string make_safe(const std::string& label) {
    if (label.empty()) throw SioError("cannot make an identifier from an empty label");

    std::string out;
    out.reserve(label.size() + 1);
    for (unsigned char c : label) {
        if (std::isalnum(c) != 0) {
            out += static_cast<char>(c);
        } else if (out.empty() || out.back() != '_') {
            out += '_';
        }
    }
    if (std::isdigit(static_cast<unsigned char>(out[0])) != 0) out.insert(out.begin(), 'n');
    if (out == "true" || out == "false" || out == "nil") out += "_entity";
    return out;
}

Annotation desc(const std::string& description) {
    if (description.empty()) throw SioError("description must not be empty");
    return Annotation{owl::vocab::dc_description(), Literal(description, std::string("en"))};
}

Annotation see_also(const std::string& value) {
    if (value.empty()) throw SioError("seeAlso value must not be empty");
    return Annotation{owl::vocab::rdfs_see_also(), Literal(value)};
}

void sio_scaffold(Ontology& ont) {
    owl::declare_property(ont, "has_proper_part", EntityKind::ObjectProperty);
    owl::declare_property(ont, "precedes", EntityKind::ObjectProperty);
    ont.add(owl::Declaration{
        owl::Entity{EntityKind::AnnotationProperty, owl::vocab::dc_description()}});

    ClassExpression process = owl::owl_class(ont, "process");
    owl::owl_class(ont, "pathway", {.subclass = {process}});
    owl::owl_class(ont, "atom");
    ClassExpression role = owl::owl_class(ont, "role");
    owl::owl_class(ont, "reactant_role", {.subclass = {role}});
}

ClassExpression sio_class(Ontology& ont, const SioClassSpec& spec) {
    if (spec.name.empty()) throw SioError("sio_class needs a name");
    std::vector<ClassExpression> subclass{spec.parent};
    for (const ClassExpression& frame : spec.extra_frames) subclass.push_back(frame);
    return owl::owl_class(ont, make_safe(spec.name),
                          {.label = spec.name,
                           .subclass = std::move(subclass),
                           .annotations = {desc(spec.description)}});
}

namespace {

bool valid_chebi(const std::string& id) {
    constexpr std::string_view prefix = "CHEBI:";
    if (id.size() <= prefix.size() || id.compare(0, prefix.size(), prefix) != 0) return false;
    return std::all_of(id.begin() + prefix.size(), id.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

void require_class(const Ontology& ont, const Iri& iri, const char* role) {
    if (!ont.is_declared(iri, EntityKind::Class))
        throw SioError(std::string(role) + " is not a declared class: " + iri.str());
}

}  // namespace

ClassExpression owl_atom(Ontology& ont, const AtomSpec& spec) {
    Iri atom = ont.name("atom");
    require_class(ont, atom, "scaffold class");
    if (spec.chebi && !valid_chebi(*spec.chebi))
        throw SioError("malformed ChEBI id: '" + *spec.chebi + "'");

    owl::ClassFrames frames{.label = spec.name, .subclass = {owl::named(atom)}};
    if (spec.chebi) frames.annotations.push_back(see_also(*spec.chebi));
    return owl::owl_class(ont, make_safe(spec.name), std::move(frames));
}

std::vector<AtomSpec> load_atom_specs(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& err) {
        throw SioError(std::string("atom specs are not valid JSON: ") + err.what());
    }
    if (!doc.is_array()) throw SioError("atom specs must be a JSON array");

    std::vector<AtomSpec> specs;
    for (const auto& entry : doc) {
        if (!entry.is_object()) throw SioError("atom spec entries must be objects");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "name" && key != "chebi")
                throw SioError("unknown key in atom spec: '" + key + "'");
        }
        if (!entry.contains("name") || !entry["name"].is_string())
            throw SioError("atom spec needs a \"name\" string");
        AtomSpec spec{entry["name"].get<std::string>(), std::nullopt};
        if (entry.contains("chebi") && !entry["chebi"].is_null()) {
            if (!entry["chebi"].is_string())
                throw SioError("atom spec \"chebi\" must be a string or null");
            spec.chebi = entry["chebi"].get<std::string>();
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

ClassExpression biochemical_pathway(Ontology& ont, std::string_view name,
                                    const std::vector<Iri>& reactions) {
    if (reactions.empty()) throw SioError("a pathway needs at least one reaction");
    Iri pathway = ont.name("pathway");
    require_class(ont, pathway, "scaffold class");
    Iri has_proper_part = ont.name("has_proper_part");
    Iri precedes = ont.name("precedes");
    for (const Iri& property : {has_proper_part, precedes})
        if (!ont.is_declared(property, EntityKind::ObjectProperty))
            throw SioError("scaffold property is not declared: " + property.str());
    for (const Iri& reaction : reactions) require_class(ont, reaction, "reaction");

    ClassExpression chain = owl::named(reactions.back());
    for (auto it = reactions.rbegin() + 1; it != reactions.rend(); ++it)
        chain = owl::owl_and(
            {owl::named(*it), owl::SomeValuesFrom{precedes, std::move(chain)}});

    std::vector<ClassExpression> operands{owl::named(pathway),
                                          owl::SomeValuesFrom{has_proper_part, chain}};
    for (const Iri& reaction : reactions)
        operands.push_back(owl::SomeValuesFrom{has_proper_part, owl::named(reaction)});

    std::vector<ClassExpression> distinct;
    std::set<std::string> seen;
    for (ClassExpression& operand : operands)
        if (seen.insert(owl::structural_key(operand)).second)
            distinct.push_back(std::move(operand));

    return owl::owl_class(ont, name, {.equivalent = {owl::owl_and(std::move(distinct))}});
}

namespace {

std::vector<AuditFinding> audit(const Ontology& ont, const std::vector<Iri>& required,
                                const std::set<Iri>& classes) {
    std::set<std::pair<Iri, Iri>> present;
    for (const auto& axiom : ont.axioms())
        if (const auto* ann = std::get_if<owl::AnnotationAssertion>(&axiom.node))
            present.emplace(ann->subject, ann->annotation.property);

    std::vector<AuditFinding> findings;
    for (const Iri& cls : classes)
        for (const Iri& property : required)
            if (present.count({cls, property}) == 0) findings.push_back({cls, property});

    std::sort(findings.begin(), findings.end(),
              [](const AuditFinding& a, const AuditFinding& b) {
                  if (a.subject.fragment() != b.subject.fragment())
                      return a.subject.fragment() < b.subject.fragment();
                  return a.missing.fragment() < b.missing.fragment();
              });
    return findings;
}

}  // namespace

std::vector<AuditFinding> audit_annotations(const Ontology& ont,
                                            const std::vector<Iri>& required,
                                            const Iri& scope) {
    require_class(ont, scope, "audit scope");
    return audit(ont, required, owl::subclasses_of(ont, scope, true));
}

std::vector<AuditFinding> audit_annotations(const Ontology& ont,
                                            const std::vector<Iri>& required) {
    std::set<Iri> classes;
    for (const auto& axiom : ont.axioms())
        if (const auto* decl = std::get_if<owl::Declaration>(&axiom.node))
            if (decl->entity.kind == EntityKind::Class) classes.insert(decl->entity.iri);
    return audit(ont, required, classes);
}

}  // namespace ontoforge::sio
