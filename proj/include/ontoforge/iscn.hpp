#ifndef ONTOFORGE_ISCN_HPP
#define ONTOFORGE_ISCN_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontoforge/karyotype.hpp"
#include "ontoforge/owl.hpp"

namespace ontoforge::iscn {

/// Parse failure with the byte offset of the offending input. The
/// arithmetic kind flags a chromosome count that disagrees with the
/// sex designation and abnormality list; unknown-chromosome flags a
/// symbol outside 1..22/X/Y.
struct IscnError : Error {
    enum class Kind { Syntax, Arithmetic, UnknownChromosome };

    IscnError(Kind kind, const std::string& message, std::size_t offset)
        : Error(message + " (offset " + std::to_string(offset) + ")"),
          kind(kind),
          offset(offset) {}

    Kind kind;
    std::size_t offset;
};

enum class SexSymbol { X, Y, N };

struct Loss {
    karyotype::ChromosomeId chromosome;
    bool operator==(const Loss&) const = default;
};

struct Gain {
    karyotype::ChromosomeId chromosome;
    bool operator==(const Gain&) const = default;
};

struct Inv {
    karyotype::ChromosomeId chromosome;
    karyotype::BandName band1;
    karyotype::BandName band2;
    bool operator==(const Inv&) const = default;
};

using Abnormality = std::variant<Loss, Gain, Inv>;

/// A parsed karyotype string: declared chromosome total, sex
/// designation (1-4 symbols; the designation reflects the state after
/// any sex-chromosome events), and abnormalities in written order.
struct IscnKaryotype {
    unsigned declared_total = 46;
    std::vector<SexSymbol> sex;
    std::vector<Abnormality> abnormalities;

    bool operator==(const IscnKaryotype&) const = default;
};

/// Grammar: KARYO = 1*2DIGIT "," 1*4SEX *("," ABN);
/// SEX = "X"/"Y"/"N"; ABN = ("+"/"-") CHROM / "inv(" CHROM ")(" BAND BAND ")";
/// CHROM = "1".."22"/"X"/"Y"; BAND = ("p"/"q") 1*DIGIT ["." 1*2DIGIT].
/// The declared total must equal 44 + |sex| + autosomal gains -
/// autosomal losses (sex-chromosome gains and losses are already
/// reflected in the designation).
IscnKaryotype parse_iscn(std::string_view text);

/// Canonical string form; parse_iscn(render_iscn(k)) == k.
std::string render_iscn(const IscnKaryotype& k);

/// Compiles to a karyotype class derived from the constitutional base
/// (k46_XY, k46_XX or k46_XN; declared on first use). Sex-chromosome
/// count differences against the base become HumanSexChromosome
/// deletion/addition events; explicit abnormalities follow in written
/// order (losses and gains against the chromosome class, inversions
/// against band classes that must already be declared).
owl::ClassExpression iscn_to_ontology(owl::Ontology& ont, const IscnKaryotype& k,
                                      std::string_view name);

}  // namespace ontoforge::iscn

#endif
