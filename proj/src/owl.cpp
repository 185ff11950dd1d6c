#include "ontoforge/owl.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace ontoforge::owl {

namespace {

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c) != 0; });
}

bool valid_scheme(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos || colon == 0) return false;
    if (std::isalpha(static_cast<unsigned char>(s[0])) == 0) return false;
    for (std::size_t i = 1; i < colon; ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isalnum(c) == 0 && c != '+' && c != '-' && c != '.') return false;
    }
    return true;
}

}  // namespace

Iri::Iri(std::string_view base, std::string_view fragment) {
    if (base.empty() || !valid_scheme(base) || has_whitespace(base))
        throw OntologyError("invalid IRI base: '" + std::string(base) + "'");
    if (fragment.empty() || has_whitespace(fragment))
        throw OntologyError("invalid IRI fragment: '" + std::string(fragment) + "'");
    text_.reserve(base.size() + fragment.size());
    text_.append(base).append(fragment);
    split_ = base.size();
}

std::string_view kind_name(EntityKind kind) {
    switch (kind) {
        case EntityKind::Class: return "Class";
        case EntityKind::ObjectProperty: return "ObjectProperty";
        case EntityKind::AnnotationProperty: return "AnnotationProperty";
    }
    return "";
}

Literal::Literal(std::string lexical) : lexical_(std::move(lexical)) {}

Literal::Literal(std::string lexical, std::string lang)
    : lexical_(std::move(lexical)), lang_(std::move(lang)) {
    if (lang_->empty()) throw OntologyError("empty language tag");
}

Literal::Literal(std::string lexical, Iri datatype)
    : lexical_(std::move(lexical)), datatype_(std::move(datatype)) {}

namespace vocab {
Iri rdfs_label() { return Iri(rdfs_ns, "label"); }
Iri rdfs_see_also() { return Iri(rdfs_ns, "seeAlso"); }
Iri dc_description() { return Iri(dc_terms_ns, "description"); }
}  // namespace vocab

namespace {

void key_expr(std::string& out, const ClassExpression& expr) {
    std::visit(
        [&out](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Named>) {
                out += '<';
                out += node.iri.str();
                out += '>';
            } else if constexpr (std::is_same_v<T, SomeValuesFrom>) {
                out += "some(";
                out += node.property.str();
                out += ',';
                key_expr(out, *node.filler);
                out += ')';
            } else if constexpr (std::is_same_v<T, AllValuesFrom>) {
                out += "only(";
                out += node.property.str();
                out += ',';
                key_expr(out, *node.filler);
                out += ')';
            } else if constexpr (std::is_same_v<T, IntersectionOf>) {
                out += "and(";
                for (const auto& op : node.operands) {
                    key_expr(out, op);
                    out += ',';
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, UnionOf>) {
                out += "or(";
                for (const auto& op : node.operands) {
                    key_expr(out, op);
                    out += ',';
                }
                out += ')';
            } else if constexpr (std::is_same_v<T, ExactCardinality>) {
                out += "exactly(";
                out += std::to_string(node.n);
                out += ',';
                out += node.property.str();
                out += ',';
                key_expr(out, *node.filler);
                out += ')';
            }
        },
        expr.node);
}

std::string key_literal(const Literal& lit) {
    std::string out = "\"" + lit.lexical() + "\"";
    if (lit.lang()) out += "@" + *lit.lang();
    if (lit.datatype()) out += "^^" + lit.datatype()->str();
    return out;
}

std::vector<std::string> sorted_keys(const std::vector<ClassExpression>& exprs) {
    std::vector<std::string> keys;
    keys.reserve(exprs.size());
    for (const auto& e : exprs) keys.push_back(structural_key(e));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

std::string structural_key(const ClassExpression& expr) {
    std::string out;
    key_expr(out, expr);
    return out;
}

std::string axiom_key(const Axiom& axiom) {
    return std::visit(
        [](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Declaration>) {
                return "decl(" + std::string(kind_name(node.entity.kind)) + "," +
                       node.entity.iri.str() + ")";
            } else if constexpr (std::is_same_v<T, SubClassOf>) {
                return "sub(" + structural_key(node.sub) + "," + structural_key(node.super) + ")";
            } else if constexpr (std::is_same_v<T, EquivalentClasses>) {
                std::string out = "equiv(";
                for (const auto& k : sorted_keys(node.expressions)) out += k + ",";
                return out + ")";
            } else if constexpr (std::is_same_v<T, DisjointClasses>) {
                std::string out = "disjoint(";
                for (const auto& k : sorted_keys(node.expressions)) out += k + ",";
                return out + ")";
            } else if constexpr (std::is_same_v<T, AnnotationAssertion>) {
                std::string value =
                    std::holds_alternative<Literal>(node.annotation.value)
                        ? key_literal(std::get<Literal>(node.annotation.value))
                        : "<" + std::get<Iri>(node.annotation.value).str() + ">";
                return "ann(" + node.annotation.property.str() + "," + node.subject.str() + "," +
                       value + ")";
            } else {
                static_assert(std::is_same_v<T, FunctionalObjectProperty>);
                return "functional(" + node.property.str() + ")";
            }
        },
        axiom.node);
}

bool operator==(const Axiom& a, const Axiom& b) { return axiom_key(a) == axiom_key(b); }

Ontology::Ontology(Iri iri, std::map<std::string, std::string> prefixes,
                   std::string default_namespace)
    : iri_(std::move(iri)),
      prefixes_(std::move(prefixes)),
      default_namespace_(std::move(default_namespace)) {
    if (default_namespace_.empty()) default_namespace_ = iri_.str() + "#";
    const std::pair<std::string, std::string_view> defaults[] = {
        {"rdf", vocab::rdf_ns},
        {"rdfs", vocab::rdfs_ns},
        {"xsd", vocab::xsd_ns},
        {"owl", vocab::owl_ns},
    };
    for (const auto& [name, ns] : defaults) {
        auto [it, inserted] = prefixes_.emplace(name, ns);
        if (!inserted && it->second != ns)
            throw OntologyError("prefix '" + name + "' conflicts with its default expansion");
    }
}

Iri Ontology::name(std::string_view fragment) const {
    return Iri(default_namespace_, fragment);
}

bool Ontology::add(Axiom axiom) {
    if (const auto* decl = std::get_if<Declaration>(&axiom.node)) {
        auto it = declarations_.find(decl->entity.iri);
        if (it != declarations_.end() && it->second != decl->entity.kind)
            throw OntologyError("'" + decl->entity.iri.str() + "' already declared as " +
                                std::string(kind_name(it->second)));
    } else if (const auto* disjoint = std::get_if<DisjointClasses>(&axiom.node)) {
        if (disjoint->expressions.size() < 2)
            throw OntologyError("DisjointClasses needs at least two expressions");
        auto keys = sorted_keys(disjoint->expressions);
        if (std::adjacent_find(keys.begin(), keys.end()) != keys.end())
            throw OntologyError("DisjointClasses members must be distinct");
    } else if (const auto* equiv = std::get_if<EquivalentClasses>(&axiom.node)) {
        if (equiv->expressions.size() < 2)
            throw OntologyError("EquivalentClasses needs at least two expressions");
    } else if (const auto* ann = std::get_if<AnnotationAssertion>(&axiom.node)) {
        auto declared = declared_kind(ann->annotation.property);
        if (declared && *declared != EntityKind::AnnotationProperty)
            throw OntologyError("'" + ann->annotation.property.str() +
                                "' is not an annotation property");
    }

    auto [it, inserted] = keys_.insert(axiom_key(axiom));
    if (!inserted) return false;
    if (const auto* decl = std::get_if<Declaration>(&axiom.node))
        declarations_.emplace(decl->entity.iri, decl->entity.kind);
    axioms_.push_back(std::move(axiom));
    return true;
}

std::optional<EntityKind> Ontology::declared_kind(const Iri& iri) const {
    auto it = declarations_.find(iri);
    if (it == declarations_.end()) return std::nullopt;
    return it->second;
}

bool Ontology::is_declared(const Iri& iri, EntityKind kind) const {
    return declared_kind(iri) == kind;
}

bool Ontology::operator==(const Ontology& other) const {
    if (iri_ != other.iri_ || prefixes_ != other.prefixes_ ||
        default_namespace_ != other.default_namespace_ ||
        axioms_.size() != other.axioms_.size())
        return false;
    for (std::size_t i = 0; i < axioms_.size(); ++i)
        if (!(axioms_[i] == other.axioms_[i])) return false;
    return true;
}

ClassExpression owl_class(Ontology& ont, std::string_view name, ClassFrames frames) {
    Iri iri = ont.name(name);
    ont.add(Declaration{Entity{EntityKind::Class, iri}});
    for (auto& super : frames.subclass)
        ont.add(SubClassOf{named(iri), std::move(super)});
    for (auto& eq : frames.equivalent)
        ont.add(EquivalentClasses{{named(iri), std::move(eq)}});
    if (frames.label)
        ont.add(AnnotationAssertion{iri, Annotation{vocab::rdfs_label(), Literal(*frames.label)}});
    for (auto& ann : frames.annotations)
        ont.add(AnnotationAssertion{iri, std::move(ann)});
    return named(iri);
}

Iri declare_property(Ontology& ont, std::string_view name, EntityKind kind,
                     PropertyTraits traits) {
    if (kind == EntityKind::Class)
        throw OntologyError("declare_property cannot declare a class");
    if (traits.functional && kind != EntityKind::ObjectProperty)
        throw OntologyError("only object properties can be functional");
    Iri iri = ont.name(name);
    ont.add(Declaration{Entity{kind, iri}});
    if (traits.functional) ont.add(FunctionalObjectProperty{iri});
    return iri;
}

std::vector<ClassExpression> owl_some(const Iri& property,
                                      std::vector<ClassExpression> fillers) {
    if (fillers.empty()) throw OntologyError("owl_some needs at least one filler");
    std::vector<ClassExpression> out;
    out.reserve(fillers.size());
    for (auto& f : fillers)
        out.push_back(SomeValuesFrom{property, Box<ClassExpression>(std::move(f))});
    return out;
}

ClassExpression owl_only(const Iri& property, std::vector<ClassExpression> fillers) {
    if (fillers.empty()) throw OntologyError("owl_only needs at least one filler");
    std::sort(fillers.begin(), fillers.end(),
              [](const ClassExpression& a, const ClassExpression& b) {
                  return structural_key(a) < structural_key(b);
              });
    fillers.erase(std::unique(fillers.begin(), fillers.end()), fillers.end());
    ClassExpression filler = fillers.size() == 1 ? std::move(fillers.front())
                                                 : ClassExpression(UnionOf{std::move(fillers)});
    return AllValuesFrom{property, Box<ClassExpression>(std::move(filler))};
}

ClassExpression owl_and(std::vector<ClassExpression> operands) {
    if (operands.empty()) throw OntologyError("owl_and needs at least one operand");
    if (operands.size() == 1) return std::move(operands.front());
    return IntersectionOf{std::move(operands)};
}

ClassExpression owl_or(std::vector<ClassExpression> operands) {
    if (operands.empty()) throw OntologyError("owl_or needs at least one operand");
    if (operands.size() == 1) return std::move(operands.front());
    return UnionOf{std::move(operands)};
}

ClassExpression exactly(std::uint32_t n, const Iri& property, ClassExpression filler) {
    return ExactCardinality{n, property, Box<ClassExpression>(std::move(filler))};
}

std::map<EntityKind, std::size_t> count_by_kind(const Ontology& ont) {
    std::map<EntityKind, std::size_t> counts;
    for (const auto& axiom : ont.axioms())
        if (const auto* decl = std::get_if<Declaration>(&axiom.node))
            ++counts[decl->entity.kind];
    return counts;
}

std::set<Iri> subclasses_of(const Ontology& ont, const Iri& cls, bool transitive) {
    if (!ont.is_declared(cls, EntityKind::Class))
        throw OntologyError("unknown class: " + cls.str());
    std::map<Iri, std::vector<Iri>> subs_of;
    for (const auto& axiom : ont.axioms()) {
        const auto* sco = std::get_if<SubClassOf>(&axiom.node);
        if (!sco) continue;
        const auto* sub = std::get_if<Named>(&sco->sub.node);
        const auto* super = std::get_if<Named>(&sco->super.node);
        if (sub && super) subs_of[super->iri].push_back(sub->iri);
    }
    std::set<Iri> result;
    std::deque<Iri> queue{cls};
    while (!queue.empty()) {
        Iri current = queue.front();
        queue.pop_front();
        auto it = subs_of.find(current);
        if (it == subs_of.end()) continue;
        for (const auto& sub : it->second) {
            if (result.insert(sub).second && transitive) queue.push_back(sub);
        }
        if (!transitive) break;
    }
    return result;
}

namespace {

void collect_refs(const ClassExpression& expr,
                  std::vector<std::pair<Iri, EntityKind>>& refs) {
    std::visit(
        [&refs](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Named>) {
                refs.emplace_back(node.iri, EntityKind::Class);
            } else if constexpr (std::is_same_v<T, SomeValuesFrom> ||
                                 std::is_same_v<T, AllValuesFrom>) {
                refs.emplace_back(node.property, EntityKind::ObjectProperty);
                collect_refs(*node.filler, refs);
            } else if constexpr (std::is_same_v<T, IntersectionOf> ||
                                 std::is_same_v<T, UnionOf>) {
                for (const auto& op : node.operands) collect_refs(op, refs);
            } else if constexpr (std::is_same_v<T, ExactCardinality>) {
                refs.emplace_back(node.property, EntityKind::ObjectProperty);
                collect_refs(*node.filler, refs);
            }
        },
        expr.node);
}

}  // namespace

std::vector<Iri> finalize_check(const Ontology& ont) {
    std::vector<std::pair<Iri, EntityKind>> refs;
    for (const auto& axiom : ont.axioms()) {
        if (const auto* sco = std::get_if<SubClassOf>(&axiom.node)) {
            collect_refs(sco->sub, refs);
            collect_refs(sco->super, refs);
        } else if (const auto* eq = std::get_if<EquivalentClasses>(&axiom.node)) {
            for (const auto& e : eq->expressions) collect_refs(e, refs);
        } else if (const auto* dj = std::get_if<DisjointClasses>(&axiom.node)) {
            for (const auto& e : dj->expressions) collect_refs(e, refs);
        }
    }
    std::set<Iri> undeclared;
    for (const auto& [iri, kind] : refs)
        if (!ont.is_declared(iri, kind)) undeclared.insert(iri);
    return {undeclared.begin(), undeclared.end()};
}

}  // namespace ontoforge::owl
