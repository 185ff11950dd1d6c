#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "ontoforge/owl.hpp"
#include "ontoforge/serialize.hpp"

namespace owl = ontoforge::owl;
namespace ser = ontoforge::serialize;

using owl::EntityKind;
using owl::Iri;
using owl::Ontology;

namespace {

// Exercises every axiom type, literal form and naming fallback.
Ontology zoo() {
    Ontology ont(Iri("http://example.com/", "zoo"), {{"ex", "http://other.example/ns#"}});
    auto animal = owl::owl_class(ont, "Animal");
    owl::ClassFrames dog_frames;
    dog_frames.label = "Dog";
    dog_frames.subclass = {animal};
    auto dog = owl::owl_class(ont, "Dog", dog_frames);
    owl::ClassFrames cat_frames;
    cat_frames.subclass = {animal};
    auto cat = owl::owl_class(ont, "Cat", cat_frames);
    ont.add(owl::DisjointClasses{{dog, cat}});

    owl::PropertyTraits functional;
    functional.functional = true;
    Iri has_part = owl::declare_property(ont, "hasPart", EntityKind::ObjectProperty, functional);
    auto leg = owl::owl_class(ont, "Leg");
    ont.add(owl::SubClassOf{dog, owl::exactly(4, has_part, leg)});
    ont.add(owl::SubClassOf{cat, owl::owl_only(has_part, {leg, animal})});
    ont.add(owl::SubClassOf{cat, owl::owl_some(has_part, {owl::owl_and({leg, animal})}).front()});
    ont.add(owl::EquivalentClasses{{cat, owl::owl_and({animal, leg})}});

    Iri foreign("http://other.example/ns#", "Alien");
    ont.add(owl::Declaration{{EntityKind::Class, foreign}});
    ont.add(owl::SubClassOf{owl::named(foreign), animal});
    Iri weird("http://example.com/zoo#", "weird,name");
    ont.add(owl::Declaration{{EntityKind::Class, weird}});

    ont.add(owl::AnnotationAssertion{ont.name("Dog"), {owl::vocab::rdfs_see_also(), foreign}});
    ont.add(owl::AnnotationAssertion{
        ont.name("Cat"),
        {owl::vocab::rdfs_label(), owl::Literal("say \"miaow\" \\ twice", "en")}});
    ont.add(owl::AnnotationAssertion{
        ont.name("Leg"),
        {owl::vocab::rdfs_label(),
         owl::Literal("4", Iri(std::string(owl::vocab::xsd_ns), "integer"))}});
    return ont;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(line);
            line.clear();
        } else {
            line += c;
        }
    }
    if (!line.empty()) lines.push_back(line);
    return lines;
}

}  // namespace

TEST_CASE("name context shortens against prefixes and falls back") {
    Ontology ont = zoo();
    ser::NameContext names(ont);
    CHECK(names.shorten(ont.name("Dog")) == ":Dog");
    CHECK(names.display(ont.name("Dog")) == "Dog");
    CHECK(names.shorten(Iri("http://other.example/ns#", "Alien")) == "ex:Alien");
    CHECK(names.display(Iri("http://other.example/ns#", "Alien")) == "ex:Alien");
    CHECK(names.shorten(Iri("http://nowhere.example/", "X")) == "<http://nowhere.example/X>");
    // Fragments outside the prefixed-name charset use the full form.
    CHECK(names.shorten(ont.name("weird,name")) == "<http://example.com/zoo#weird,name>");
}

TEST_CASE("functional output: header shape and axiom forms") {
    auto lines = lines_of(ser::to_functional(zoo()));
    REQUIRE(lines.size() > 8);
    CHECK(lines[0] == "Prefix(:=<http://example.com/zoo#>)");
    CHECK(lines[1] == "Prefix(ex:=<http://other.example/ns#>)");
    CHECK(lines[2] == "Prefix(owl:=<http://www.w3.org/2002/07/owl#>)");
    CHECK(lines[5] == "Prefix(xsd:=<http://www.w3.org/2001/XMLSchema#>)");
    CHECK(lines[6] == "Ontology(<http://example.com/zoo>");
    CHECK(lines.back() == ")");

    auto has = [&](const std::string& want) {
        return std::find(lines.begin(), lines.end(), want) != lines.end();
    };
    CHECK(has("Declaration(Class(:Animal))"));
    CHECK(has("SubClassOf(:Dog ObjectExactCardinality(4 :hasPart :Leg))"));
    CHECK(has("SubClassOf(:Cat ObjectAllValuesFrom(:hasPart ObjectUnionOf(:Animal :Leg)))"));
    CHECK(has("SubClassOf(:Cat ObjectSomeValuesFrom(:hasPart ObjectIntersectionOf(:Leg :Animal)))"));
    CHECK(has("EquivalentClasses(:Cat ObjectIntersectionOf(:Animal :Leg))"));
    CHECK(has("DisjointClasses(:Dog :Cat)"));
    CHECK(has("FunctionalObjectProperty(:hasPart)"));
    CHECK(has("SubClassOf(ex:Alien :Animal)"));
    CHECK(has("Declaration(Class(<http://example.com/zoo#weird,name>))"));
    CHECK(has("AnnotationAssertion(rdfs:seeAlso :Dog ex:Alien)"));
    CHECK(has("AnnotationAssertion(rdfs:label :Cat \"say \\\"miaow\\\" \\\\ twice\"@en)"));
    CHECK(has("AnnotationAssertion(rdfs:label :Leg \"4\"^^xsd:integer)"));
}

TEST_CASE("serialization is deterministic") {
    Ontology ont = zoo();
    CHECK(ser::to_functional(ont) == ser::to_functional(ont));
    CHECK(ser::to_manchester(ont) == ser::to_manchester(ont));
}

TEST_CASE("canonical sort is insertion-order independent") {
    Ontology a = zoo();
    Ontology b(a.iri(), {{"ex", "http://other.example/ns#"}});
    auto axioms = a.axioms();
    std::reverse(axioms.begin(), axioms.end());
    for (const auto& axiom : axioms) b.add(axiom);
    REQUIRE(a.size() == b.size());
    CHECK_FALSE(a == b);

    ser::SerializationConfig canonical;
    canonical.sort = ser::Sort::Canonical;
    CHECK(ser::to_functional(a, canonical) == ser::to_functional(b, canonical));
    canonical.format = ser::Format::Manchester;
    CHECK(ser::to_manchester(a, canonical) == ser::to_manchester(b, canonical));

    // Canonical rank puts declarations first and annotations last.
    auto lines = lines_of(ser::to_functional(b, canonical));
    std::size_t first_sub = 0;
    std::size_t last_decl = 0;
    std::size_t first_ann = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (lines[i].rfind("Declaration(", 0) == 0) last_decl = i;
        if (!first_sub && lines[i].rfind("SubClassOf(", 0) == 0) first_sub = i;
        if (!first_ann && lines[i].rfind("AnnotationAssertion(", 0) == 0) first_ann = i;
    }
    CHECK(last_decl < first_sub);
    CHECK(first_sub < first_ann);
}

TEST_CASE("functional round-trips preserve the ontology exactly") {
    Ontology ont = zoo();
    std::string text = ser::to_functional(ont);
    Ontology back = ser::read_functional_subset(text);
    CHECK(back == ont);
    // Fixpoint: a second write is byte-identical.
    CHECK(ser::to_functional(back) == text);

    ser::SerializationConfig canonical;
    canonical.sort = ser::Sort::Canonical;
    std::string sorted = ser::to_functional(ont, canonical);
    CHECK(ser::to_functional(ser::read_functional_subset(sorted), canonical) == sorted);
}

TEST_CASE("round-trip keeps a custom default namespace") {
    Ontology ont(Iri("http://example.com/", "o"), {}, "http://example.com/other#");
    owl::owl_class(ont, "A");
    Ontology back = ser::read_functional_subset(ser::to_functional(ont));
    CHECK(back.default_namespace() == "http://example.com/other#");
    CHECK(back == ont);
}

TEST_CASE("serializers refuse ontologies with undeclared references") {
    Ontology ont(Iri("http://example.com/", "o"));
    auto a = owl::owl_class(ont, "A");
    ont.add(owl::SubClassOf{a, owl::named(ont.name("Ghost"))});
    CHECK_THROWS_AS((void)ser::to_functional(ont), ser::SerializeError);
    CHECK_THROWS_AS((void)ser::to_manchester(ont), ser::SerializeError);
}

TEST_CASE("reader reports unsupported constructs with line numbers") {
    auto read_lines = [](const std::vector<std::string>& lines) {
        std::string text;
        for (const auto& line : lines) text += line + "\n";
        return ser::read_functional_subset(text);
    };

    try {
        read_lines({"Ontology(<http://example.com/o>",
                    "SubClassOf(:A ObjectComplementOf(:B))", ")"});
        FAIL("expected ReadError");
    } catch (const ser::ReadError& e) {
        CHECK(std::string(e.what()).find("unsupported construct 'ObjectComplementOf'") !=
              std::string::npos);
        CHECK(e.line == 2);
    }

    try {
        read_lines({"Ontology(<http://example.com/o>", "Declaration(Class(pfx:A))", ")"});
        FAIL("expected ReadError");
    } catch (const ser::ReadError& e) {
        CHECK(std::string(e.what()).find("unknown prefix 'pfx'") != std::string::npos);
        CHECK(e.line == 2);
    }

    CHECK_THROWS_AS(read_lines({"Declaration(Class(:A))", ")"}), ser::ReadError);
    CHECK_THROWS_AS(read_lines({"Ontology(<http://example.com/o>"}), ser::ReadError);
    CHECK_THROWS_AS(read_lines({"Ontology(<http://example.com/o>", "Nonsense(:A)", ")"}),
                    ser::ReadError);
    CHECK_THROWS_AS(read_lines({"Ontology(<http://example.com/o>",
                                "Declaration(Class(:A)) trailing", ")"}),
                    ser::ReadError);
    // Ontology-level violations surface as read errors with a line.
    try {
        read_lines({"Ontology(<http://example.com/o>", "Declaration(Class(:A))",
                    "Declaration(ObjectProperty(:A))", ")"});
        FAIL("expected ReadError");
    } catch (const ser::ReadError& e) {
        CHECK(e.line == 3);
    }
}

TEST_CASE("reader accepts blank lines and the empty ontology") {
    Ontology back = ser::read_functional_subset(
        "Prefix(:=<http://example.com/o#>)\n\nOntology(<http://example.com/o>\n\n)\n");
    CHECK(back.size() == 0);
    CHECK(back.iri().str() == "http://example.com/o");
}

TEST_CASE("manchester expressions use minimal parentheses") {
    Ontology ont(Iri("http://example.com/", "o"));
    auto a = owl::named(ont.name("A"));
    auto b = owl::named(ont.name("B"));
    auto c = owl::named(ont.name("C"));
    Iri p = ont.name("p");
    ser::NameContext names(ont);

    CHECK(ser::manchester(owl::owl_some(p, {a}).front(), names) == "p some A");
    CHECK(ser::manchester(owl::owl_only(p, {a, b}), names) == "p only (A or B)");
    CHECK(ser::manchester(owl::exactly(1, p, a), names) == "p exactly 1 A");
    CHECK(ser::manchester(owl::exactly(1, p, owl::owl_and({a, b})), names) ==
          "p exactly 1 (A and B)");
    CHECK(ser::manchester(owl::owl_and({a, owl::owl_or({b, c})}), names) == "A and (B or C)");
    CHECK(ser::manchester(owl::owl_and({a, owl::owl_some(p, {b}).front()}), names) ==
          "A and p some B");
    CHECK(ser::manchester(owl::owl_some(p, {owl::owl_some(p, {a}).front()}).front(), names) ==
          "p some (p some A)");
}

TEST_CASE("manchester frames: order, sections and disjointness") {
    Ontology ont(Iri("http://example.com/", "mini"));
    auto pizza = owl::owl_class(ont, "Pizza");
    owl::PropertyTraits functional;
    functional.functional = true;
    Iri has_base = owl::declare_property(ont, "hasBase", EntityKind::ObjectProperty, functional);
    auto base = owl::owl_class(ont, "Base");
    owl::ClassFrames deep_frames;
    deep_frames.label = "deep pan";
    deep_frames.subclass = {pizza, owl::owl_some(has_base, {base}).front()};
    deep_frames.equivalent = {owl::owl_and({pizza, base})};
    owl::owl_class(ont, "DeepPan", deep_frames);
    auto thin = owl::owl_class(ont, "Thin");
    ont.add(owl::DisjointClasses{{owl::named(ont.name("DeepPan")), thin}});

    CHECK(ser::to_manchester(ont) ==
          "Prefix: : <http://example.com/mini#>\n"
          "Prefix: owl: <http://www.w3.org/2002/07/owl#>\n"
          "Prefix: rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#>\n"
          "Prefix: rdfs: <http://www.w3.org/2000/01/rdf-schema#>\n"
          "Prefix: xsd: <http://www.w3.org/2001/XMLSchema#>\n"
          "Ontology: <http://example.com/mini>\n"
          "\n"
          "ObjectProperty: hasBase\n"
          "  Characteristics:\n"
          "    Functional\n"
          "\n"
          "Class: Pizza\n"
          "\n"
          "Class: Base\n"
          "\n"
          "Class: DeepPan\n"
          "  Annotations:\n"
          "    rdfs:label \"deep pan\"\n"
          "  EquivalentTo:\n"
          "    Pizza and Base\n"
          "  SubClassOf:\n"
          "    Pizza\n"
          "    hasBase some Base\n"
          "\n"
          "Class: Thin\n"
          "\n"
          "DisjointClasses: DeepPan, Thin\n");
}

TEST_CASE("manchester_frames picks just the asked-for subjects") {
    Ontology ont(Iri("http://example.com/", "mini"));
    auto a = owl::owl_class(ont, "A");
    owl::ClassFrames b_frames;
    b_frames.subclass = {a};
    owl::owl_class(ont, "B", b_frames);
    std::string text = ser::manchester_frames(ont, {ont.name("B")});
    CHECK(text ==
          "Class: B\n"
          "  SubClassOf:\n"
          "    A\n");
    CHECK(ser::manchester_frames(ont, {ont.name("B"), ont.name("A")}) ==
          "Class: B\n"
          "  SubClassOf:\n"
          "    A\n"
          "\n"
          "Class: A\n");
}

TEST_CASE("iri helpers parse and resolve names") {
    Iri iri = ser::parse_absolute_iri("http://example.com/ns#Pizza");
    CHECK(iri.base() == "http://example.com/ns#");
    CHECK(iri.fragment() == "Pizza");
    CHECK_THROWS_AS(ser::parse_absolute_iri("garbage"), ser::SerializeError);

    Ontology ont = zoo();
    CHECK(ser::resolve_name(ont, "Dog") == ont.name("Dog"));
    CHECK(ser::resolve_name(ont, "ex:Alien") == Iri("http://other.example/ns#", "Alien"));
    CHECK(ser::resolve_name(ont, "rdfs:label") == owl::vocab::rdfs_label());
    CHECK(ser::resolve_name(ont, "<http://example.com/zoo#Dog>") == ont.name("Dog"));
    CHECK(ser::resolve_name(ont, "http://example.com/zoo#Dog") == ont.name("Dog"));
    CHECK_THROWS_AS(ser::resolve_name(ont, "nope:X"), ser::SerializeError);
}
