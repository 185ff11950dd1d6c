#ifndef ONTOFORGE_KARYOTYPE_HPP
#define ONTOFORGE_KARYOTYPE_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "ontoforge/owl.hpp"

namespace ontoforge::karyotype {

struct KaryotypeError : Error {
    using Error::Error;
};

/// One of the 24 human chromosomes: "1".."22", "X", "Y".
class ChromosomeId {
public:
    static ChromosomeId parse(std::string_view text);
    static const std::vector<ChromosomeId>& all();

    std::string str() const;
    bool is_sex() const { return code_ > 22; }
    bool is_autosome() const { return !is_sex(); }

    bool operator==(const ChromosomeId&) const = default;
    auto operator<=>(const ChromosomeId&) const = default;

private:
    explicit ChromosomeId(int code) : code_(code) {}

    int code_;  // 1..22, 23 = X, 24 = Y
};

enum class Arm { p, q };

/// A cytogenetic band name: arm plus dot-separated digits ("p36.31").
/// A band whose digits carry two places after the dot is a sub-band;
/// its parent drops the final digit ("p36.31" -> "p36.3").
class BandName {
public:
    BandName(Arm arm, std::string digits);
    static BandName parse(std::string_view text);

    Arm arm() const { return arm_; }
    const std::string& digits() const { return digits_; }
    std::string str() const;

    bool is_sub_band() const;
    BandName parent() const;

    bool operator==(const BandName&) const = default;
    auto operator<=>(const BandName&) const = default;

private:
    Arm arm_;
    std::string digits_;
};

struct Deletion {
    std::uint32_t n = 1;
    owl::Iri target;
};

struct Inversion {
    std::uint32_t n = 1;
    owl::Iri band1;
    owl::Iri band2;
};

struct Addition {
    std::uint32_t n = 1;
    owl::Iri target;
};

using KaryotypeEvent = std::variant<Deletion, Inversion, Addition>;

/// Band lists per chromosome, as loaded from a dataset file. At most
/// one entry per chromosome; band names distinct within an entry.
struct BandDataset {
    std::vector<std::pair<ChromosomeId, std::vector<BandName>>> entries;
};

/// JSON array of {"chromosome": "<1..22|X|Y>", "bands": ["p36.3", ...]}.
/// Unknown keys are rejected.
BandDataset load_band_dataset(std::istream& in);

/// Base vocabulary: HumanChromosome with HumanAutosome and
/// HumanSexChromosome beneath it, the 24 concrete chromosome classes,
/// HumanChromosomeBand, HumanCentromere, HumanTelomere, and the
/// isBandOf/isSubBandOf/hasEvent/hasBreakPoint/derivedFrom properties.
void human_scaffold(owl::Ontology& ont);

/// Band partonomy for one chromosome: the chromosome's band root
/// (isBandOf the chromosome), one arm class per arm in use, and one
/// class per band under its arm class. Sub-bands additionally carry an
/// isSubBandOf restriction onto their parent band, which must appear
/// in the same band list.
void humanbands(owl::Ontology& ont, ChromosomeId chromosome, const std::vector<BandName>& bands);

void apply_band_dataset(owl::Ontology& ont, const BandDataset& dataset);

/// Per chromosome, one centromere class under HumanCentromere and one
/// telomere class under HumanTelomere (covering both chromosome ends),
/// each isBandOf its chromosome.
void centromere_telomere(owl::Ontology& ont, const std::vector<ChromosomeId>& chromosomes);

/// Event restriction: ExactCardinality(n, hasEvent, event class and
/// one hasBreakPoint existential per referenced class). The event
/// classes Deletion/Inversion/Addition are declared on first use.
owl::ClassExpression event_restriction(owl::Ontology& ont, const KaryotypeEvent& event);

/// Karyotype class: SubClassOf ISCNExampleKaryotype (declared on first
/// use), a derivedFrom existential onto the base karyotype, and one
/// event restriction frame per event.
owl::ClassExpression karyotype_class(owl::Ontology& ont, std::string_view name,
                                     const owl::Iri& derived_from,
                                     const std::vector<KaryotypeEvent>& events);

struct StatsRow {
    std::string category;
    std::size_t biological = 0;
    std::size_t classes = 0;

    bool operator==(const StatsRow&) const = default;
};

/// Model statistics: Chromosome, Centromere, Telomere, Bands and
/// Sub-bands, Total. Class counts are the declared classes under each
/// category root (band row excludes its root; the generic band class
/// is shared structure, not part of the per-chromosome pattern);
/// biological counts follow the category's object semantics (leaf
/// chromosomes, one centromere and two telomeres per chromosome, leaf
/// band classes).
std::vector<StatsRow> karyotype_stats(const owl::Ontology& ont);

}  // namespace ontoforge::karyotype

#endif
