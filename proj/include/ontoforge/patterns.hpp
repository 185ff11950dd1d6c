#ifndef ONTOFORGE_PATTERNS_HPP
#define ONTOFORGE_PATTERNS_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "ontoforge/owl.hpp"

namespace ontoforge::patterns {

struct PatternError : Error {
    using Error::Error;
};

/// Closure pattern: one existential restriction per filler plus one
/// universal restriction closing the property over their union (a
/// single filler is used unwrapped). Fillers must be distinct; the
/// result always has |fillers| + 1 expressions.
std::vector<owl::ClassExpression> some_only(const owl::Iri& property,
                                            std::vector<owl::ClassExpression> fillers);

/// Covering pattern: parent SubClassOf the union of its children (a
/// single child is used directly). When disjoint is set and there are
/// at least two children, also asserts their pairwise disjointness.
/// Parent and children must be declared classes.
void covering_axiom(owl::Ontology& ont, const owl::Iri& parent,
                    const std::vector<owl::Iri>& children, bool disjoint);

struct ValuePartitionSpec {
    std::string partition_name;
    std::vector<std::string> values;  // >= 1, distinct, != partition_name
    bool include_covering = false;
};

struct ValuePartition {
    owl::Iri partition_class;
    owl::Iri property;
    std::vector<owl::Iri> value_classes;
};

/// Value-partition pattern: the partition class, one class per value
/// (SubClassOf the partition), their disjointness (with >= 2 values),
/// and a functional object property "has" + partition name. The
/// covering axiom over the values is optional and off by default.
ValuePartition value_partition(owl::Ontology& ont, const ValuePartitionSpec& spec);

/// Core pizza vocabulary: Pizza (with its two existential topping and
/// base axioms), PizzaTopping, PizzaBase, NamedPizza SubClassOf Pizza,
/// and the hasTopping/hasBase properties.
void pizza_scaffold(owl::Ontology& ont);

/// The topping classes the named-pizza examples use, each SubClassOf
/// PizzaTopping. Requires the scaffold.
void pizza_topping_extension(owl::Ontology& ont);

struct NamedPizzaSpec {
    std::string name;
    std::vector<owl::Iri> toppings;  // non-empty, distinct
};

/// Named-pizza pattern: each spec becomes a class SubClassOf NamedPizza
/// carrying the full topping closure as subclass frames. All toppings
/// must be declared classes.
void generate_named_pizza(owl::Ontology& ont, const std::vector<NamedPizzaSpec>& specs);

/// Flat-file form of the named-pizza specs: one pizza per line, the
/// name first and toppings after, whitespace-separated; '#' begins a
/// comment line. Topping names resolve under the ontology's default
/// namespace.
std::vector<NamedPizzaSpec> load_pizza_specs(std::istream& in, const owl::Ontology& ont);

struct ClosureFinding {
    owl::Iri subject;
    owl::Iri property;

    friend bool operator==(const ClosureFinding&, const ClosureFinding&) = default;
};

/// Audits the closure discipline: wherever a class carries both an
/// existential and a universal subclass restriction on one property,
/// the universal's union operands must equal the set of existential
/// fillers. Classes with only one kind of restriction are not checked.
/// Findings come back sorted by subject, then property.
std::vector<ClosureFinding> check_closures(const owl::Ontology& ont);

}  // namespace ontoforge::patterns

#endif
