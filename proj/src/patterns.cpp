#include "ontoforge/patterns.hpp"

#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <utility>

namespace ontoforge::patterns {

using owl::ClassExpression;
using owl::EntityKind;
using owl::Iri;
using owl::Ontology;

namespace {

void require_class(const Ontology& ont, const Iri& iri, const char* role) {
    if (!ont.is_declared(iri, EntityKind::Class))
        throw PatternError(std::string(role) + " is not a declared class: " + iri.str());
}

}  // namespace

std::vector<ClassExpression> some_only(const Iri& property,
                                       std::vector<ClassExpression> fillers) {
    if (fillers.empty()) throw PatternError("some_only needs at least one filler");
    std::set<std::string> seen;
    for (const auto& filler : fillers)
        if (!seen.insert(owl::structural_key(filler)).second)
            throw PatternError("some_only fillers must be distinct");

    std::vector<ClassExpression> out = owl::owl_some(property, fillers);
    out.push_back(owl::owl_only(property, std::move(fillers)));
    return out;
}

void covering_axiom(Ontology& ont, const Iri& parent, const std::vector<Iri>& children,
                    bool disjoint) {
    if (children.empty()) throw PatternError("covering_axiom needs at least one child");
    require_class(ont, parent, "covering parent");
    std::vector<ClassExpression> operands;
    operands.reserve(children.size());
    for (const auto& child : children) {
        require_class(ont, child, "covering child");
        operands.push_back(owl::named(child));
    }
    ont.add(owl::SubClassOf{owl::named(parent), owl::owl_or(operands)});
    if (disjoint && children.size() >= 2)
        ont.add(owl::DisjointClasses{std::move(operands)});
}

ValuePartition value_partition(Ontology& ont, const ValuePartitionSpec& spec) {
    if (spec.values.empty()) throw PatternError("value partition needs at least one value");
    std::set<std::string> seen{spec.partition_name};
    for (const auto& value : spec.values)
        if (!seen.insert(value).second)
            throw PatternError("value partition names must be distinct: '" + value + "'");

    ClassExpression partition = owl::owl_class(ont, spec.partition_name);
    const Iri& partition_iri = std::get<owl::Named>(partition.node).iri;

    std::vector<Iri> values;
    std::vector<ClassExpression> value_exprs;
    for (const auto& value : spec.values) {
        ClassExpression cls = owl::owl_class(ont, value, {.subclass = {partition}});
        values.push_back(std::get<owl::Named>(cls.node).iri);
        value_exprs.push_back(std::move(cls));
    }
    if (values.size() >= 2) ont.add(owl::DisjointClasses{value_exprs});
    if (spec.include_covering)
        ont.add(owl::SubClassOf{partition, owl::owl_or(std::move(value_exprs))});

    Iri property = owl::declare_property(ont, "has" + spec.partition_name,
                                         EntityKind::ObjectProperty, {.functional = true});
    return ValuePartition{partition_iri, property, std::move(values)};
}

void pizza_scaffold(Ontology& ont) {
    Iri has_topping = owl::declare_property(ont, "hasTopping", EntityKind::ObjectProperty);
    Iri has_base = owl::declare_property(ont, "hasBase", EntityKind::ObjectProperty);
    ClassExpression topping = owl::owl_class(ont, "PizzaTopping");
    ClassExpression base = owl::owl_class(ont, "PizzaBase");
    ClassExpression pizza = owl::owl_class(
        ont, "Pizza",
        {.label = "Pizza",
         .subclass = {owl::SomeValuesFrom{has_topping, topping},
                      owl::SomeValuesFrom{has_base, base}}});
    owl::owl_class(ont, "NamedPizza", {.subclass = {pizza}});
}

void pizza_topping_extension(Ontology& ont) {
    require_class(ont, ont.name("PizzaTopping"), "scaffold class");
    ClassExpression topping = owl::named(ont.name("PizzaTopping"));
    for (const char* name :
         {"AnchoviesTopping", "CaperTopping", "HamTopping", "MozzarellaTopping", "OliveTopping",
          "OnionTopping", "PeperonataTopping", "PrawnsTopping", "TobascoPepperSauce",
          "TomatoTopping"})
        owl::owl_class(ont, name, {.subclass = {topping}});
}

void generate_named_pizza(Ontology& ont, const std::vector<NamedPizzaSpec>& specs) {
    Iri named_pizza = ont.name("NamedPizza");
    require_class(ont, named_pizza, "scaffold class");
    Iri has_topping = ont.name("hasTopping");
    if (!ont.is_declared(has_topping, EntityKind::ObjectProperty))
        throw PatternError("scaffold property is not declared: " + has_topping.str());

    for (const auto& spec : specs) {
        if (spec.toppings.empty())
            throw PatternError("pizza '" + spec.name + "' has no toppings");
        std::vector<ClassExpression> fillers;
        fillers.reserve(spec.toppings.size());
        for (const auto& topping : spec.toppings) {
            require_class(ont, topping, "topping");
            fillers.push_back(owl::named(topping));
        }
        std::vector<ClassExpression> frames{owl::named(named_pizza)};
        for (auto& expr : some_only(has_topping, std::move(fillers)))
            frames.push_back(std::move(expr));
        owl::owl_class(ont, spec.name, {.subclass = std::move(frames)});
    }
}

std::vector<NamedPizzaSpec> load_pizza_specs(std::istream& in, const Ontology& ont) {
    std::vector<NamedPizzaSpec> specs;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::istringstream fields(line);
        NamedPizzaSpec spec;
        fields >> spec.name;
        std::set<std::string> seen;
        std::string token;
        while (fields >> token) {
            if (!seen.insert(token).second)
                throw PatternError("duplicate topping '" + token + "' on line " +
                                   std::to_string(lineno));
            spec.toppings.push_back(ont.name(token));
        }
        if (spec.toppings.empty())
            throw PatternError("pizza '" + spec.name + "' on line " + std::to_string(lineno) +
                               " has no toppings");
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<ClosureFinding> check_closures(const Ontology& ont) {
    struct Restrictions {
        std::set<std::string> some_fillers;
        std::vector<const owl::ClassExpression*> only_fillers;
    };
    // Keyed by (subject, property) string form; std::map keeps the
    // findings sorted as promised.
    std::map<std::pair<std::string, std::string>, Restrictions> by_site;
    std::map<std::pair<std::string, std::string>, ClosureFinding> sites;

    for (const auto& axiom : ont.axioms()) {
        const auto* sub = std::get_if<owl::SubClassOf>(&axiom.node);
        if (!sub) continue;
        const auto* named = std::get_if<owl::Named>(&sub->sub.node);
        if (!named) continue;
        auto note = [&](const Iri& property) {
            auto key = std::make_pair(named->iri.str(), property.str());
            sites.emplace(key, ClosureFinding{named->iri, property});
            return key;
        };
        if (const auto* some = std::get_if<owl::SomeValuesFrom>(&sub->super.node)) {
            by_site[note(some->property)].some_fillers.insert(owl::structural_key(*some->filler));
        } else if (const auto* only = std::get_if<owl::AllValuesFrom>(&sub->super.node)) {
            by_site[note(only->property)].only_fillers.push_back(&*only->filler);
        }
    }

    std::vector<ClosureFinding> findings;
    for (const auto& [key, site] : by_site) {
        if (site.some_fillers.empty() || site.only_fillers.empty()) continue;
        bool mismatch = false;
        for (const auto* filler : site.only_fillers) {
            std::set<std::string> operands;
            if (const auto* u = std::get_if<owl::UnionOf>(&filler->node)) {
                for (const auto& operand : u->operands)
                    operands.insert(owl::structural_key(operand));
            } else {
                operands.insert(owl::structural_key(*filler));
            }
            if (operands != site.some_fillers) mismatch = true;
        }
        if (mismatch) findings.push_back(sites.at(key));
    }
    return findings;
}

}  // namespace ontoforge::patterns
