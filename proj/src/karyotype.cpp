#include "ontoforge/karyotype.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>

#include <json.hpp>

namespace ontoforge::karyotype {

using owl::ClassExpression;
using owl::EntityKind;
using owl::Iri;
using owl::Ontology;

ChromosomeId ChromosomeId::parse(std::string_view text) {
    if (text == "X") return ChromosomeId(23);
    if (text == "Y") return ChromosomeId(24);
    if (!text.empty() && text.size() <= 2 && text[0] != '0' &&
        std::all_of(text.begin(), text.end(),
                    [](unsigned char c) { return std::isdigit(c) != 0; })) {
        int value = std::stoi(std::string(text));
        if (value >= 1 && value <= 22) return ChromosomeId(value);
    }
    throw KaryotypeError("unknown chromosome: '" + std::string(text) + "'");
}

const std::vector<ChromosomeId>& ChromosomeId::all() {
    static const std::vector<ChromosomeId> ids = [] {
        std::vector<ChromosomeId> out;
        for (int code = 1; code <= 24; ++code) out.push_back(ChromosomeId(code));
        return out;
    }();
    return ids;
}

std::string ChromosomeId::str() const {
    if (code_ == 23) return "X";
    if (code_ == 24) return "Y";
    return std::to_string(code_);
}

BandName::BandName(Arm arm, std::string digits) : arm_(arm), digits_(std::move(digits)) {
    auto dot = digits_.find('.');
    std::string_view integer(digits_);
    std::string_view decimals;
    if (dot != std::string::npos) {
        integer = std::string_view(digits_).substr(0, dot);
        decimals = std::string_view(digits_).substr(dot + 1);
        if (decimals.empty() || decimals.size() > 2)
            throw KaryotypeError("band needs one or two digits after '.': '" + digits_ + "'");
    }
    auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    if (!all_digits(integer) || (!decimals.empty() && !all_digits(decimals)) ||
        (dot != std::string::npos && decimals.empty()))
        throw KaryotypeError("malformed band digits: '" + digits_ + "'");
}

BandName BandName::parse(std::string_view text) {
    if (text.empty() || (text[0] != 'p' && text[0] != 'q'))
        throw KaryotypeError("band must start with 'p' or 'q': '" + std::string(text) + "'");
    return BandName(text[0] == 'p' ? Arm::p : Arm::q, std::string(text.substr(1)));
}

std::string BandName::str() const {
    return (arm_ == Arm::p ? "p" : "q") + digits_;
}

bool BandName::is_sub_band() const {
    auto dot = digits_.find('.');
    return dot != std::string::npos && digits_.size() - dot - 1 == 2;
}

BandName BandName::parent() const {
    if (!is_sub_band()) throw KaryotypeError("band '" + str() + "' has no parent band");
    return BandName(arm_, digits_.substr(0, digits_.size() - 1));
}

namespace {

void require_class(const Ontology& ont, const Iri& iri, const char* role) {
    if (!ont.is_declared(iri, EntityKind::Class))
        throw KaryotypeError(std::string(role) + " is not a declared class: " + iri.str());
}

Iri scaffold_property(const Ontology& ont, const char* name) {
    Iri iri = ont.name(name);
    if (!ont.is_declared(iri, EntityKind::ObjectProperty))
        throw KaryotypeError("scaffold property is not declared: " + iri.str());
    return iri;
}

Iri chromosome_class(const Ontology& ont, ChromosomeId id) {
    Iri iri = ont.name("HumanChromosome" + id.str());
    require_class(ont, iri, "chromosome");
    return iri;
}

}  // namespace

void human_scaffold(Ontology& ont) {
    owl::declare_property(ont, "isBandOf", EntityKind::ObjectProperty);
    owl::declare_property(ont, "isSubBandOf", EntityKind::ObjectProperty);
    owl::declare_property(ont, "hasEvent", EntityKind::ObjectProperty);
    owl::declare_property(ont, "hasBreakPoint", EntityKind::ObjectProperty);
    owl::declare_property(ont, "derivedFrom", EntityKind::ObjectProperty);

    ClassExpression chromosome = owl::owl_class(ont, "HumanChromosome");
    ClassExpression autosome = owl::owl_class(ont, "HumanAutosome", {.subclass = {chromosome}});
    ClassExpression sex = owl::owl_class(ont, "HumanSexChromosome", {.subclass = {chromosome}});
    for (ChromosomeId id : ChromosomeId::all())
        owl::owl_class(ont, "HumanChromosome" + id.str(),
                       {.subclass = {id.is_autosome() ? autosome : sex}});

    owl::owl_class(ont, "HumanChromosomeBand");
    owl::owl_class(ont, "HumanCentromere");
    owl::owl_class(ont, "HumanTelomere");
}

void humanbands(Ontology& ont, ChromosomeId chromosome, const std::vector<BandName>& bands) {
    Iri chromosome_iri = chromosome_class(ont, chromosome);
    require_class(ont, ont.name("HumanChromosomeBand"), "scaffold class");
    Iri is_band_of = scaffold_property(ont, "isBandOf");
    Iri is_sub_band_of = scaffold_property(ont, "isSubBandOf");

    std::set<BandName> listed(bands.begin(), bands.end());
    if (listed.size() != bands.size())
        throw KaryotypeError("band list for chromosome " + chromosome.str() +
                             " contains duplicates");

    const std::string id = chromosome.str();
    ClassExpression band_root = owl::owl_class(
        ont, "HumanChromosome" + id + "Band",
        {.subclass = {owl::named(ont.name("HumanChromosomeBand")),
                      owl::SomeValuesFrom{is_band_of, owl::named(chromosome_iri)}}});

    std::map<Arm, ClassExpression> arm_classes;
    for (const BandName& band : bands) {
        auto arm = arm_classes.find(band.arm());
        if (arm == arm_classes.end()) {
            std::string arm_name =
                "HumanChromosome" + id + "Band" + (band.arm() == Arm::p ? "p" : "q");
            arm = arm_classes
                      .emplace(band.arm(), owl::owl_class(ont, arm_name, {.subclass = {band_root}}))
                      .first;
        }

        std::vector<ClassExpression> frames{arm->second};
        if (band.is_sub_band()) {
            BandName parent = band.parent();
            if (listed.count(parent) == 0)
                throw KaryotypeError("sub-band " + band.str() + " has no parent " +
                                     parent.str() + " in the band list");
            frames.push_back(owl::SomeValuesFrom{
                is_sub_band_of,
                owl::named(ont.name("HumanChromosomeBand" + id + parent.str()))});
        }
        owl::owl_class(ont, "HumanChromosomeBand" + id + band.str(),
                       {.subclass = std::move(frames)});
    }
}

void apply_band_dataset(Ontology& ont, const BandDataset& dataset) {
    for (const auto& [chromosome, bands] : dataset.entries) humanbands(ont, chromosome, bands);
}

void centromere_telomere(Ontology& ont, const std::vector<ChromosomeId>& chromosomes) {
    require_class(ont, ont.name("HumanCentromere"), "scaffold class");
    require_class(ont, ont.name("HumanTelomere"), "scaffold class");
    Iri is_band_of = scaffold_property(ont, "isBandOf");
    for (ChromosomeId id : chromosomes) {
        Iri chromosome_iri = chromosome_class(ont, id);
        ClassExpression of_chromosome =
            owl::SomeValuesFrom{is_band_of, owl::named(chromosome_iri)};
        owl::owl_class(ont, "HumanChromosome" + id.str() + "Centromere",
                       {.subclass = {owl::named(ont.name("HumanCentromere")), of_chromosome}});
        owl::owl_class(ont, "HumanChromosome" + id.str() + "Telomere",
                       {.subclass = {owl::named(ont.name("HumanTelomere")), of_chromosome}});
    }
}

namespace {

ClassExpression breakpoint_restriction(Ontology& ont, const char* event_name, std::uint32_t n,
                                       const std::vector<Iri>& targets) {
    if (n == 0) throw KaryotypeError("event multiplicity must be positive");
    Iri has_event = scaffold_property(ont, "hasEvent");
    Iri has_break_point = scaffold_property(ont, "hasBreakPoint");
    ClassExpression event_class = owl::owl_class(ont, event_name);

    std::vector<ClassExpression> operands{event_class};
    for (const Iri& target : targets) {
        require_class(ont, target, "breakpoint target");
        operands.push_back(owl::SomeValuesFrom{has_break_point, owl::named(target)});
    }
    return owl::exactly(n, has_event, owl::owl_and(std::move(operands)));
}

}  // namespace

ClassExpression event_restriction(Ontology& ont, const KaryotypeEvent& event) {
    return std::visit(
        [&ont](const auto& node) {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, Deletion>) {
                return breakpoint_restriction(ont, "Deletion", node.n, {node.target});
            } else if constexpr (std::is_same_v<T, Inversion>) {
                return breakpoint_restriction(ont, "Inversion", node.n,
                                              {node.band1, node.band2});
            } else {
                static_assert(std::is_same_v<T, Addition>);
                return breakpoint_restriction(ont, "Addition", node.n, {node.target});
            }
        },
        event);
}

ClassExpression karyotype_class(Ontology& ont, std::string_view name, const Iri& derived_from,
                                const std::vector<KaryotypeEvent>& events) {
    require_class(ont, derived_from, "base karyotype");
    Iri derived_from_prop = scaffold_property(ont, "derivedFrom");
    ClassExpression example_karyotype = owl::owl_class(ont, "ISCNExampleKaryotype");

    std::vector<ClassExpression> frames{
        example_karyotype,
        owl::SomeValuesFrom{derived_from_prop, owl::named(derived_from)}};
    for (const KaryotypeEvent& event : events) frames.push_back(event_restriction(ont, event));
    return owl::owl_class(ont, name, {.subclass = std::move(frames)});
}

namespace {

struct Hierarchy {
    std::set<Iri> members;  // strict subclasses of the root
    std::size_t leaves = 0;
    bool present = false;
};

Hierarchy hierarchy_under(const Ontology& ont, const Iri& root,
                          const std::set<Iri>& named_supers) {
    Hierarchy h;
    if (!ont.is_declared(root, EntityKind::Class)) return h;
    h.present = true;
    h.members = owl::subclasses_of(ont, root, true);
    for (const Iri& member : h.members)
        if (named_supers.count(member) == 0) ++h.leaves;
    return h;
}

}  // namespace

std::vector<StatsRow> karyotype_stats(const Ontology& ont) {
    // Classes that appear as the superclass of some named class; the
    // complement within a hierarchy is its leaves.
    std::set<Iri> named_supers;
    for (const auto& axiom : ont.axioms()) {
        const auto* sco = std::get_if<owl::SubClassOf>(&axiom.node);
        if (!sco) continue;
        const auto* sub = std::get_if<owl::Named>(&sco->sub.node);
        const auto* super = std::get_if<owl::Named>(&sco->super.node);
        if (sub && super) named_supers.insert(super->iri);
    }

    Hierarchy chromosomes = hierarchy_under(ont, ont.name("HumanChromosome"), named_supers);
    Hierarchy centromeres = hierarchy_under(ont, ont.name("HumanCentromere"), named_supers);
    Hierarchy telomeres = hierarchy_under(ont, ont.name("HumanTelomere"), named_supers);
    Hierarchy bands = hierarchy_under(ont, ont.name("HumanChromosomeBand"), named_supers);

    auto inclusive = [](const Hierarchy& h) { return h.present ? h.members.size() + 1 : 0; };

    std::vector<StatsRow> rows;
    rows.push_back({"Chromosome", chromosomes.leaves, inclusive(chromosomes)});
    rows.push_back({"Centromere", centromeres.members.size(), inclusive(centromeres)});
    rows.push_back({"Telomere", 2 * telomeres.members.size(), inclusive(telomeres)});
    rows.push_back({"Bands and Sub-bands", bands.leaves, bands.members.size()});

    StatsRow total{"Total", 0, 0};
    for (const auto& row : rows) {
        total.biological += row.biological;
        total.classes += row.classes;
    }
    rows.push_back(std::move(total));
    return rows;
}

BandDataset load_band_dataset(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& err) {
        throw KaryotypeError(std::string("band dataset is not valid JSON: ") + err.what());
    }
    if (!doc.is_array()) throw KaryotypeError("band dataset must be a JSON array");

    BandDataset dataset;
    std::set<std::string> seen_chromosomes;
    for (const auto& entry : doc) {
        if (!entry.is_object()) throw KaryotypeError("band dataset entries must be objects");
        for (const auto& [key, value] : entry.items()) {
            (void)value;
            if (key != "chromosome" && key != "bands")
                throw KaryotypeError("unknown key in band dataset entry: '" + key + "'");
        }
        if (!entry.contains("chromosome") || !entry["chromosome"].is_string())
            throw KaryotypeError("band dataset entry needs a \"chromosome\" string");
        if (!entry.contains("bands") || !entry["bands"].is_array())
            throw KaryotypeError("band dataset entry needs a \"bands\" array");

        std::string chromosome_text = entry["chromosome"].get<std::string>();
        if (!seen_chromosomes.insert(chromosome_text).second)
            throw KaryotypeError("duplicate chromosome in band dataset: '" + chromosome_text +
                                 "'");
        ChromosomeId chromosome = ChromosomeId::parse(chromosome_text);

        std::vector<BandName> bands;
        std::set<std::string> seen_bands;
        for (const auto& band : entry["bands"]) {
            if (!band.is_string())
                throw KaryotypeError("band names must be strings (chromosome " +
                                     chromosome_text + ")");
            std::string band_text = band.get<std::string>();
            if (!seen_bands.insert(band_text).second)
                throw KaryotypeError("duplicate band '" + band_text + "' on chromosome " +
                                     chromosome_text);
            bands.push_back(BandName::parse(band_text));
        }
        dataset.entries.emplace_back(chromosome, std::move(bands));
    }
    return dataset;
}

}  // namespace ontoforge::karyotype
