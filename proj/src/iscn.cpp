#include "ontoforge/iscn.hpp"

#include <algorithm>
#include <cctype>

namespace ontoforge::iscn {

using karyotype::BandName;
using karyotype::ChromosomeId;
using karyotype::KaryotypeEvent;
using owl::ClassExpression;
using owl::Iri;
using owl::Ontology;

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    IscnKaryotype run() {
        IscnKaryotype k;
        k.declared_total = total();
        expect(',');
        k.sex = sex_designation();
        while (!at_end()) {
            expect(',');
            k.abnormalities.push_back(abnormality());
        }
        check_arithmetic(k);
        return k;
    }

private:
    [[noreturn]] void fail(IscnError::Kind kind, const std::string& message,
                           std::size_t offset) const {
        throw IscnError(kind, message, offset);
    }

    [[noreturn]] void syntax(const std::string& message) const {
        fail(IscnError::Kind::Syntax, message, pos_);
    }

    bool at_end() const { return pos_ >= text_.size(); }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (peek() != c) syntax(std::string("expected '") + c + "'");
        ++pos_;
    }

    unsigned total() {
        if (std::isdigit(static_cast<unsigned char>(peek())) == 0)
            syntax("expected the chromosome total");
        unsigned value = 0;
        std::size_t digits = 0;
        while (digits < 2 && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            value = value * 10 + static_cast<unsigned>(peek() - '0');
            ++pos_;
            ++digits;
        }
        return value;
    }

    std::vector<SexSymbol> sex_designation() {
        std::vector<SexSymbol> sex;
        while (sex.size() < 4) {
            char c = peek();
            if (c == 'X') sex.push_back(SexSymbol::X);
            else if (c == 'Y') sex.push_back(SexSymbol::Y);
            else if (c == 'N') sex.push_back(SexSymbol::N);
            else break;
            ++pos_;
        }
        if (sex.empty()) syntax("expected a sex designation (X, Y or N)");
        return sex;
    }

    ChromosomeId chromosome() {
        std::size_t start = pos_;
        char c = peek();
        std::string token;
        if (c == 'X' || c == 'Y') {
            token = c;
            ++pos_;
        } else if (c == 'N') {
            // A sex symbol in the designation, but not a concrete
            // chromosome that events can reference.
            fail(IscnError::Kind::UnknownChromosome, "'N' is not a concrete chromosome", pos_);
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            token += c;
            ++pos_;
            if (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                token += peek();
                ++pos_;
            }
        } else {
            syntax("expected a chromosome");
        }
        try {
            return ChromosomeId::parse(token);
        } catch (const karyotype::KaryotypeError&) {
            fail(IscnError::Kind::UnknownChromosome, "unknown chromosome '" + token + "'",
                 start);
        }
    }

    BandName band() {
        std::size_t start = pos_;
        char arm = peek();
        if (arm != 'p' && arm != 'q') syntax("expected a band arm ('p' or 'q')");
        ++pos_;
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek())) != 0) {
            digits += peek();
            ++pos_;
        }
        if (digits.empty()) syntax("expected band digits");
        if (peek() == '.') {
            digits += '.';
            ++pos_;
            std::size_t places = 0;
            while (places < 2 && std::isdigit(static_cast<unsigned char>(peek())) != 0) {
                digits += peek();
                ++pos_;
                ++places;
            }
            if (places == 0) syntax("expected digits after '.'");
        }
        try {
            return BandName(arm == 'p' ? karyotype::Arm::p : karyotype::Arm::q, digits);
        } catch (const karyotype::KaryotypeError& err) {
            fail(IscnError::Kind::Syntax, err.what(), start);
        }
    }

    Abnormality abnormality() {
        char c = peek();
        if (c == '+') {
            ++pos_;
            return Gain{chromosome()};
        }
        if (c == '-') {
            ++pos_;
            return Loss{chromosome()};
        }
        if (text_.substr(pos_).rfind("inv(", 0) == 0) {
            pos_ += 4;
            ChromosomeId chrom = chromosome();
            expect(')');
            expect('(');
            BandName band1 = band();
            BandName band2 = band();
            expect(')');
            return Inv{chrom, band1, band2};
        }
        syntax("expected an abnormality ('+', '-' or 'inv(')");
    }

    void check_arithmetic(const IscnKaryotype& k) const {
        long expected = 44 + static_cast<long>(k.sex.size());
        for (const Abnormality& abn : k.abnormalities) {
            if (const auto* gain = std::get_if<Gain>(&abn)) {
                if (gain->chromosome.is_autosome()) ++expected;
            } else if (const auto* loss = std::get_if<Loss>(&abn)) {
                if (loss->chromosome.is_autosome()) --expected;
            }
        }
        if (expected != static_cast<long>(k.declared_total))
            fail(IscnError::Kind::Arithmetic,
                 "arithmetic mismatch: declared total " + std::to_string(k.declared_total) +
                     " does not match the described karyotype (expected " +
                     std::to_string(expected) + ")",
                 0);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

IscnKaryotype parse_iscn(std::string_view text) { return Parser(text).run(); }

std::string render_iscn(const IscnKaryotype& k) {
    std::string out = std::to_string(k.declared_total) + ",";
    for (SexSymbol s : k.sex)
        out += s == SexSymbol::X ? 'X' : s == SexSymbol::Y ? 'Y' : 'N';
    for (const Abnormality& abn : k.abnormalities) {
        out += ',';
        if (const auto* loss = std::get_if<Loss>(&abn)) {
            out += '-' + loss->chromosome.str();
        } else if (const auto* gain = std::get_if<Gain>(&abn)) {
            out += '+' + gain->chromosome.str();
        } else {
            const auto& inv = std::get<Inv>(abn);
            out += "inv(" + inv.chromosome.str() + ")(" + inv.band1.str() + inv.band2.str() +
                   ")";
        }
    }
    return out;
}

namespace {

struct SexCounts {
    int x = 0;
    int y = 0;
    int n = 0;

    int size() const { return x + y + n; }
};

// The constitutional (pre-event) sex complement: the designation with
// sex-chromosome gains removed and losses restored.
SexCounts constitutional_sex(const IscnKaryotype& k) {
    SexCounts counts;
    for (SexSymbol s : k.sex) {
        if (s == SexSymbol::X) ++counts.x;
        else if (s == SexSymbol::Y) ++counts.y;
        else ++counts.n;
    }
    for (const Abnormality& abn : k.abnormalities) {
        if (const auto* gain = std::get_if<Gain>(&abn)) {
            if (gain->chromosome.str() == "X" && counts.x > 0) --counts.x;
            if (gain->chromosome.str() == "Y" && counts.y > 0) --counts.y;
        } else if (const auto* loss = std::get_if<Loss>(&abn)) {
            if (loss->chromosome.str() == "X") ++counts.x;
            if (loss->chromosome.str() == "Y") ++counts.y;
        }
    }
    return counts;
}

}  // namespace

ClassExpression iscn_to_ontology(Ontology& ont, const IscnKaryotype& k, std::string_view name) {
    SexCounts sex = constitutional_sex(k);
    const char* base_name = "k46_XN";
    if (sex.n == 0 && sex.x == 1 && sex.y == 1) base_name = "k46_XY";
    else if (sex.n == 0 && sex.x == 2 && sex.y == 0) base_name = "k46_XX";
    Iri base = ont.name(base_name);
    ont.add(owl::Declaration{owl::Entity{owl::EntityKind::Class, base}});

    std::vector<KaryotypeEvent> events;
    int implied = sex.size() - 2;
    if (implied < 0)
        events.push_back(karyotype::Deletion{static_cast<std::uint32_t>(-implied),
                                             ont.name("HumanSexChromosome")});
    else if (implied > 0)
        events.push_back(karyotype::Addition{static_cast<std::uint32_t>(implied),
                                             ont.name("HumanSexChromosome")});

    for (const Abnormality& abn : k.abnormalities) {
        if (const auto* loss = std::get_if<Loss>(&abn)) {
            events.push_back(
                karyotype::Deletion{1, ont.name("HumanChromosome" + loss->chromosome.str())});
        } else if (const auto* gain = std::get_if<Gain>(&abn)) {
            events.push_back(
                karyotype::Addition{1, ont.name("HumanChromosome" + gain->chromosome.str())});
        } else {
            const auto& inv = std::get<Inv>(abn);
            const std::string prefix = "HumanChromosomeBand" + inv.chromosome.str();
            events.push_back(karyotype::Inversion{1, ont.name(prefix + inv.band1.str()),
                                                  ont.name(prefix + inv.band2.str())});
        }
    }
    return karyotype::karyotype_class(ont, name, base, events);
}

}  // namespace ontoforge::iscn
