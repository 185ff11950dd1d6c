// Acceptance gate: one test case per published claim, REQUIRE-gated so
// each prints a single PASS or FAIL line.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ontoforge/iscn.hpp"
#include "ontoforge/karyotype.hpp"
#include "ontoforge/owl.hpp"
#include "ontoforge/patterns.hpp"
#include "ontoforge/serialize.hpp"
#include "ontoforge/sio.hpp"
#include "tokens.hpp"

namespace owl = ontoforge::owl;
namespace ser = ontoforge::serialize;
namespace patterns = ontoforge::patterns;
namespace kt = ontoforge::karyotype;
namespace iscn = ontoforge::iscn;
namespace sio = ontoforge::sio;

using owl::EntityKind;
using owl::Iri;
using owl::Ontology;

namespace {

struct Criterion {
    int number;
    const char* label;
    bool passed = false;

    ~Criterion() {
        std::printf("%s: criterion %d - %s\n", passed ? "PASS" : "FAIL", number, label);
        std::fflush(stdout);
    }
};

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("ONTOFORGE_DATA");
    REQUIRE(dir != nullptr);
    return std::string(dir) + "/" + name;
}

std::string run_cli(const std::string& args) {
    const char* bin = std::getenv("ONTOFORGE_BIN");
    REQUIRE(bin != nullptr);
    std::string command = "\"" + std::string(bin) + "\" " + args;
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    REQUIRE(pclose(pipe) == 0);
    return output;
}

Ontology pizza_ontology() {
    Ontology ont(Iri("http://example.com/", "pizza"));
    patterns::pizza_scaffold(ont);
    patterns::pizza_topping_extension(ont);
    std::ifstream in(data_file("pizzas.txt"));
    REQUIRE(in.good());
    patterns::generate_named_pizza(ont, patterns::load_pizza_specs(in, ont));
    return ont;
}

Ontology karyotype_ontology() {
    Ontology ont(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(ont);
    std::ifstream in(data_file("bands.json"));
    REQUIRE(in.good());
    kt::apply_band_dataset(ont, kt::load_band_dataset(in));
    kt::centromere_telomere(ont, kt::ChromosomeId::all());
    return ont;
}

Ontology sio_ontology() {
    Ontology ont(Iri("http://example.com/", "sio"),
                 {{"dc", std::string(owl::vocab::dc_terms_ns)}});
    sio::sio_scaffold(ont);
    sio::sio_class(ont, {.name = "to regulate",
                         .parent = owl::named(ont.name("process")),
                         .description = "to change the rate of a process"});
    std::vector<Iri> reactions;
    for (const char* name : {"hexokinase reaction", "phosphoglucose isomerase reaction",
                             "phosphofructokinase reaction"}) {
        sio::sio_class(ont, {.name = name,
                             .parent = owl::named(ont.name("process")),
                             .description = "a glycolytic step"});
        reactions.push_back(ont.name(sio::make_safe(name)));
    }
    sio::biochemical_pathway(ont, "glycolysis", reactions);
    std::ifstream in(data_file("atoms.json"));
    REQUIRE(in.good());
    for (const sio::AtomSpec& spec : sio::load_atom_specs(in)) sio::owl_atom(ont, spec);
    return ont;
}

struct FrameShape {
    std::size_t existential = 0;
    std::size_t universal = 0;
    std::size_t named = 0;
    std::size_t other = 0;
};

FrameShape subclass_shape(const Ontology& ont, const Iri& subject) {
    FrameShape shape;
    for (const auto& axiom : ont.axioms()) {
        const auto* sco = std::get_if<owl::SubClassOf>(&axiom.node);
        if (!sco) continue;
        const auto* sub = std::get_if<owl::Named>(&sco->sub.node);
        if (!sub || sub->iri != subject) continue;
        if (std::holds_alternative<owl::SomeValuesFrom>(sco->super.node))
            ++shape.existential;
        else if (std::holds_alternative<owl::AllValuesFrom>(sco->super.node))
            ++shape.universal;
        else if (std::holds_alternative<owl::Named>(sco->super.node))
            ++shape.named;
        else
            ++shape.other;
    }
    return shape;
}

kt::StatsRow row_of(const std::vector<kt::StatsRow>& rows, const std::string& category) {
    for (const kt::StatsRow& row : rows)
        if (row.category == category) return row;
    REQUIRE_MESSAGE(false, "no stats row named " << category);
    return {};
}

std::size_t count_subseq(const std::vector<std::string>& haystack, const std::string& needle) {
    auto want = tokens(needle);
    std::size_t count = 0;
    auto it = haystack.begin();
    while (true) {
        it = std::search(it, haystack.end(), want.begin(), want.end());
        if (it == haystack.end()) return count;
        ++count;
        ++it;
    }
}

}  // namespace

TEST_CASE("criterion 1: closure expansion") {
    Criterion c{1, "some_only expands to the published three restrictions"};

    Ontology ont(Iri("http://example.com/", "pizza"));
    owl::declare_property(ont, "hasTopping", EntityKind::ObjectProperty);
    owl::owl_class(ont, "TomatoTopping");
    owl::owl_class(ont, "MozzarellaTopping");

    auto exprs = patterns::some_only(
        ont.name("hasTopping"),
        {owl::named(ont.name("TomatoTopping")), owl::named(ont.name("MozzarellaTopping"))});
    REQUIRE(exprs.size() == 3);

    ser::NameContext names(ont);
    std::string rendered;
    for (const auto& expr : exprs) rendered += ser::manchester(expr, names) + "\n";
    REQUIRE(tokens(rendered) ==
            tokens("hasTopping some TomatoTopping "
                   "hasTopping some MozzarellaTopping "
                   "hasTopping only (MozzarellaTopping or TomatoTopping)"));
    c.passed = true;
}

TEST_CASE("criterion 2: value partition inventory") {
    Criterion c{2, "the Spiciness partition yields 4 classes, 1 disjointness, 1 property"};

    Ontology ont(Iri("http://example.com/", "pizza"));
    patterns::value_partition(
        ont, {.partition_name = "Spiciness", .values = {"Mild", "Medium", "Hot"}});

    std::size_t class_decls = 0;
    std::size_t property_decls = 0;
    std::size_t disjoints = 0;
    for (const auto& axiom : ont.axioms()) {
        if (const auto* decl = std::get_if<owl::Declaration>(&axiom.node)) {
            if (decl->entity.kind == EntityKind::Class) ++class_decls;
            if (decl->entity.kind == EntityKind::ObjectProperty) ++property_decls;
        }
        if (std::holds_alternative<owl::DisjointClasses>(axiom.node)) ++disjoints;
    }
    REQUIRE(class_decls == 4);
    REQUIRE(disjoints == 1);
    REQUIRE(property_decls == 1);
    c.passed = true;
}

TEST_CASE("criterion 3: named pizza frame counts") {
    Criterion c{3, "CajunPizza carries 6+1+1 frames and CapricciosaPizza 7+1+1"};

    Ontology ont = pizza_ontology();

    FrameShape cajun = subclass_shape(ont, ont.name("CajunPizza"));
    REQUIRE(cajun.existential == 6);
    REQUIRE(cajun.universal == 1);
    REQUIRE(cajun.named == 1);
    REQUIRE(cajun.other == 0);

    FrameShape capricciosa = subclass_shape(ont, ont.name("CapricciosaPizza"));
    REQUIRE(capricciosa.existential == 7);
    REQUIRE(capricciosa.universal == 1);
    REQUIRE(capricciosa.named == 1);
    REQUIRE(capricciosa.other == 0);
    c.passed = true;
}

TEST_CASE("criterion 4: band partonomy frames") {
    Criterion c{4, "humanbands reproduces the published chromosome 1 frames"};

    Ontology ont(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(ont);
    kt::humanbands(ont, kt::ChromosomeId::parse("1"),
                   {kt::BandName::parse("p36.3"), kt::BandName::parse("p36.33"),
                    kt::BandName::parse("p36.32"), kt::BandName::parse("p36.31")});

    auto frame = [&](const std::string& name) {
        return tokens(ser::manchester_frames(ont, {ont.name(name)}));
    };
    REQUIRE(frame("HumanChromosome1Band") ==
            tokens("Class: HumanChromosome1Band "
                   "SubClassOf: HumanChromosomeBand, isBandOf some HumanChromosome1"));
    REQUIRE(frame("HumanChromosome1Bandp") ==
            tokens("Class: HumanChromosome1Bandp SubClassOf: HumanChromosome1Band"));
    REQUIRE(frame("HumanChromosomeBand1p36.3") ==
            tokens("Class: HumanChromosomeBand1p36.3 SubClassOf: HumanChromosome1Bandp"));
    REQUIRE(frame("HumanChromosomeBand1p36.31") ==
            tokens("Class: HumanChromosomeBand1p36.31 "
                   "SubClassOf: HumanChromosome1Bandp, "
                   "isSubBandOf some HumanChromosomeBand1p36.3"));
    c.passed = true;
}

TEST_CASE("criterion 5: statistics rows") {
    Criterion c{5, "stats reproduce the published rows and the band formula"};

    Ontology ont(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(ont);
    kt::centromere_telomere(ont, kt::ChromosomeId::all());

    auto rows = kt::karyotype_stats(ont);
    REQUIRE(row_of(rows, "Chromosome") == kt::StatsRow{"Chromosome", 24, 27});
    REQUIRE(row_of(rows, "Centromere") == kt::StatsRow{"Centromere", 24, 25});
    REQUIRE(row_of(rows, "Telomere") == kt::StatsRow{"Telomere", 48, 25});

    // The published full band table needs the full dataset; the shipped
    // sample must still agree with the counting rules applied to it:
    // every band is a biological leaf, arm classes and the chromosome
    // band root are structural.
    std::ifstream in(data_file("bands.json"));
    REQUIRE(in.good());
    kt::BandDataset dataset = kt::load_band_dataset(in);
    kt::apply_band_dataset(ont, dataset);

    std::size_t expected_bio = 0;
    std::size_t expected_classes = 0;
    for (const auto& [chromosome, bands] : dataset.entries) {
        std::set<kt::Arm> arms;
        for (const kt::BandName& band : bands) arms.insert(band.arm());
        expected_bio += bands.size();
        expected_classes += 1 + arms.size() + bands.size();
    }
    REQUIRE(expected_bio > 0);

    auto banded = kt::karyotype_stats(ont);
    REQUIRE(row_of(banded, "Bands and Sub-bands") ==
            kt::StatsRow{"Bands and Sub-bands", expected_bio, expected_classes});
    c.passed = true;
}

TEST_CASE("criterion 6: karyotype compilation") {
    Criterion c{6, "iscn compile 45,X equals the hand-built karyotype class"};

    std::string output = run_cli("iscn compile 45,X");
    REQUIRE(tokens(output) ==
            tokens("Class: k45_X "
                   "SubClassOf: ISCNExampleKaryotype, "
                   "derivedFrom some k46_XN, "
                   "hasEvent exactly 1 (Deletion and hasBreakPoint some HumanSexChromosome)"));

    Ontology compiled(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(compiled);
    iscn::iscn_to_ontology(compiled, iscn::parse_iscn("45,X"), "k45_X");

    Ontology manual(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(manual);
    manual.add(owl::Declaration{owl::Entity{EntityKind::Class, manual.name("k46_XN")}});
    kt::karyotype_class(manual, "k45_X", manual.name("k46_XN"),
                        {kt::Deletion{1, manual.name("HumanSexChromosome")}});

    REQUIRE(compiled == manual);
    REQUIRE(ser::to_functional(compiled) == ser::to_functional(manual));
    c.passed = true;
}

TEST_CASE("criterion 7: inversion event shape") {
    Criterion c{7, "event_restriction serializes the published inversion"};

    Ontology ont(Iri("http://example.com/", "karyotype"));
    kt::human_scaffold(ont);
    owl::owl_class(ont, "2p21");
    owl::owl_class(ont, "2q31");

    auto expr = kt::event_restriction(
        ont, kt::Inversion{1, ont.name("2p21"), ont.name("2q31")});
    REQUIRE(tokens(ser::manchester(expr, ser::NameContext(ont))) ==
            tokens("hasEvent exactly 1 "
                   "(Inversion and hasBreakPoint some 2p21 and hasBreakPoint some 2q31)"));
    c.passed = true;
}

TEST_CASE("criterion 8: SIO naming, ChEBI links and audit") {
    Criterion c{8, "make_safe, owl_atom annotations and the 118-element audit"};

    REQUIRE(sio::make_safe("to regulate") == "to_regulate");

    Ontology ont(Iri("http://example.com/", "sio"));
    sio::sio_scaffold(ont);
    sio::owl_atom(ont, {.name = "copernicium", .chebi = "CHEBI:33517"});
    sio::owl_atom(ont, {.name = "ununtrium"});

    auto see_also_count = [&](const char* name) {
        std::size_t count = 0;
        for (const auto& axiom : ont.axioms())
            if (const auto* ann = std::get_if<owl::AnnotationAssertion>(&axiom.node))
                if (ann->subject == ont.name(name) &&
                    ann->annotation.property == owl::vocab::rdfs_see_also())
                    ++count;
        return count;
    };
    REQUIRE(see_also_count("copernicium") == 1);
    REQUIRE(see_also_count("ununtrium") == 0);

    Ontology table(Iri("http://example.com/", "elements"));
    sio::sio_scaffold(table);
    for (int i = 1; i <= 118; ++i) {
        sio::AtomSpec spec{"element " + std::to_string(i), std::nullopt};
        if (i <= 111) spec.chebi = "CHEBI:" + std::to_string(1000 + i);
        sio::owl_atom(table, spec);
    }
    auto findings =
        sio::audit_annotations(table, {owl::vocab::rdfs_see_also()}, table.name("atom"));
    REQUIRE(findings.size() == 7);
    for (int i = 0; i < 7; ++i)
        REQUIRE(findings[static_cast<std::size_t>(i)].subject ==
                table.name("element_" + std::to_string(112 + i)));
    c.passed = true;
}

TEST_CASE("criterion 9: pathway shape") {
    Criterion c{9, "biochemical_pathway nesting depth and per-reaction fan-out"};

    for (std::size_t n : {std::size_t{1}, std::size_t{2}, std::size_t{3}, std::size_t{5}}) {
        Ontology ont(Iri("http://example.com/", "sio"));
        sio::sio_scaffold(ont);
        std::vector<Iri> reactions;
        for (std::size_t i = 1; i <= n; ++i) {
            std::string name = "r" + std::to_string(i);
            owl::owl_class(ont, name);
            reactions.push_back(ont.name(name));
        }
        sio::biochemical_pathway(ont, "chain", reactions);

        auto toks = tokens(ser::manchester_frames(ont, {ont.name("chain")}));
        REQUIRE(count_subseq(toks, "precedes some") == n - 1);
        std::size_t onto_chain = count_subseq(toks, "has_proper_part some (");
        std::size_t per_reaction =
            count_subseq(toks, "has_proper_part some") - onto_chain;
        REQUIRE(per_reaction == n);
        REQUIRE(onto_chain == (n == 1 ? 0 : 1));
    }

    Ontology ont = sio_ontology();
    auto toks = tokens(ser::manchester_frames(ont, {ont.name("glycolysis")}));
    REQUIRE(starts_with_tokens(
        toks,
        "Class: 'glycolysis' "
        "EquivalentTo: 'pathway' "
        "and 'has proper part' some "
        "('hexokinase reaction' and 'precedes' some "
        "('phosphoglucose isomerase reaction' and 'precedes'"));
    c.passed = true;
}

TEST_CASE("criterion 10: round-trip properties") {
    Criterion c{10, "parser/serializer identities and determinism"};

    // ISCN: parse after render is the identity on a generated corpus.
    std::mt19937 rng(987654321);
    auto pick = [&](int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    };
    for (int trial = 0; trial < 1000; ++trial) {
        iscn::IscnKaryotype k;
        int sex_count = pick(1, 4);
        for (int i = 0; i < sex_count; ++i)
            k.sex.push_back(static_cast<iscn::SexSymbol>(pick(0, 2)));
        int delta = 0;
        int events = pick(0, 4);
        for (int i = 0; i < events; ++i) {
            auto chromosome = kt::ChromosomeId::all()[static_cast<std::size_t>(pick(0, 23))];
            if (pick(0, 2) == 0) {
                std::string digits = std::to_string(pick(1, 39));
                if (pick(0, 1) == 1) digits += "." + std::to_string(pick(1, 99));
                std::string digits2 = std::to_string(pick(1, 39));
                k.abnormalities.push_back(
                    iscn::Inv{chromosome, kt::BandName(kt::Arm::p, digits),
                              kt::BandName(kt::Arm::q, digits2)});
            } else if (pick(0, 1) == 0) {
                if (chromosome.is_autosome()) ++delta;
                k.abnormalities.push_back(iscn::Gain{chromosome});
            } else {
                if (chromosome.is_autosome()) --delta;
                k.abnormalities.push_back(iscn::Loss{chromosome});
            }
        }
        k.declared_total = static_cast<unsigned>(44 + sex_count + delta);
        REQUIRE(iscn::parse_iscn(iscn::render_iscn(k)) == k);
    }

    // Functional syntax: reading a dump back reproduces the ontology,
    // and canonical dumps are a serializer fixpoint.
    std::vector<Ontology> examples;
    examples.push_back(pizza_ontology());
    examples.push_back(karyotype_ontology());
    examples.push_back(sio_ontology());
    {
        Ontology compiled(Iri("http://example.com/", "karyotype"));
        kt::human_scaffold(compiled);
        std::ifstream in(data_file("bands.json"));
        kt::apply_band_dataset(compiled, kt::load_band_dataset(in));
        iscn::iscn_to_ontology(compiled, iscn::parse_iscn("45,X"), "k45_X");
        iscn::iscn_to_ontology(compiled, iscn::parse_iscn("46,XY,inv(2)(p21q31)"),
                               "k46_XY_inv");
        examples.push_back(std::move(compiled));
    }
    for (const Ontology& ont : examples) {
        std::string text = ser::to_functional(ont);
        REQUIRE(ser::read_functional_subset(text) == ont);
        REQUIRE(ser::to_functional(ont) == text);

        ser::SerializationConfig canonical{ser::Format::Functional, ser::Sort::Canonical};
        std::string sorted = ser::to_functional(ont, canonical);
        REQUIRE(ser::to_functional(ser::read_functional_subset(sorted), canonical) == sorted);
    }

    // Two separate CLI runs emit identical bytes.
    std::string args = "pizza build --pizzas \"" + data_file("pizzas.txt") + "\"";
    REQUIRE(run_cli(args) == run_cli(args));
    std::string canonical_args = args + " --sort canonical --format functional";
    REQUIRE(run_cli(canonical_args) == run_cli(canonical_args));
    c.passed = true;
}
