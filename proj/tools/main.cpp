// Command-line front end. Every subcommand builds or inspects one
// ontology with the pattern library; the artifact goes to stdout (or
// -o FILE), diagnostics go to stderr. Exit codes: 0 success, 1 usage,
// 2 parse or build error, 3 validation findings.

#include <CLI11.hpp>

#include <cstddef>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "ontoforge/iscn.hpp"
#include "ontoforge/karyotype.hpp"
#include "ontoforge/owl.hpp"
#include "ontoforge/patterns.hpp"
#include "ontoforge/serialize.hpp"
#include "ontoforge/sio.hpp"

namespace {

namespace owl = ontoforge::owl;
namespace serialize = ontoforge::serialize;
namespace patterns = ontoforge::patterns;
namespace karyotype = ontoforge::karyotype;
namespace iscn = ontoforge::iscn;
namespace sio = ontoforge::sio;

struct EmitOptions {
    std::string format;
    std::string sort = "insertion";
    std::string output;
    std::string iri;
    std::string ns;
};

void add_emit_options(CLI::App& cmd, EmitOptions& opts, const char* default_format) {
    opts.format = default_format;
    cmd.add_option("--format", opts.format, "Output syntax: functional or manchester")
        ->check(CLI::IsMember({"functional", "manchester"}))
        ->capture_default_str();
    cmd.add_option("--sort", opts.sort, "Axiom order: insertion or canonical")
        ->check(CLI::IsMember({"insertion", "canonical"}))
        ->capture_default_str();
    cmd.add_option("-o,--output", opts.output, "Write the artifact to FILE instead of stdout");
    cmd.add_option("--iri", opts.iri, "Ontology IRI");
    cmd.add_option("--ns", opts.ns, "Default namespace (defaults to the ontology IRI + '#')")
        ->envname("ONTOFORGE_NS");
}

owl::Ontology make_ontology(const EmitOptions& opts, const char* stem,
                            std::map<std::string, std::string> prefixes = {}) {
    owl::Iri iri = opts.iri.empty() ? owl::Iri("http://ontoforge.example/", stem)
                                    : serialize::parse_absolute_iri(opts.iri);
    return owl::Ontology(std::move(iri), std::move(prefixes), opts.ns);
}

serialize::SerializationConfig config_of(const EmitOptions& opts) {
    serialize::SerializationConfig cfg;
    cfg.format = opts.format == "manchester" ? serialize::Format::Manchester
                                             : serialize::Format::Functional;
    cfg.sort = opts.sort == "canonical" ? serialize::Sort::Canonical
                                        : serialize::Sort::InsertionOrder;
    return cfg;
}

std::string render(const owl::Ontology& ont, const EmitOptions& opts) {
    auto cfg = config_of(opts);
    return cfg.format == serialize::Format::Manchester ? serialize::to_manchester(ont, cfg)
                                                       : serialize::to_functional(ont, cfg);
}

void emit(const std::string& text, const EmitOptions& opts) {
    if (opts.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opts.output, std::ios::binary);
    if (!out) throw ontoforge::Error("cannot open '" + opts.output + "' for writing");
    out << text;
    out.flush();
    if (!out) throw ontoforge::Error("failed writing '" + opts.output + "'");
}

std::ifstream open_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ontoforge::Error("cannot open '" + path + "'");
    return in;
}

std::string slurp(const std::string& path) {
    auto in = open_file(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

int run_pizza_build(const std::string& pizzas_path, const EmitOptions& opts) {
    owl::Ontology ont = make_ontology(opts, "pizza");
    patterns::pizza_scaffold(ont);
    patterns::pizza_topping_extension(ont);
    auto in = open_file(pizzas_path);
    patterns::generate_named_pizza(ont, patterns::load_pizza_specs(in, ont));
    emit(render(ont, opts), opts);
    return 0;
}

int run_karyotype_build(const std::string& bands_path, const EmitOptions& opts) {
    owl::Ontology ont = make_ontology(opts, "karyotype");
    karyotype::human_scaffold(ont);
    if (!bands_path.empty()) {
        auto in = open_file(bands_path);
        karyotype::apply_band_dataset(ont, karyotype::load_band_dataset(in));
    }
    karyotype::centromere_telomere(ont, karyotype::ChromosomeId::all());
    emit(render(ont, opts), opts);
    return 0;
}

int run_iscn_compile(const std::string& text, const std::string& name_opt,
                     const std::string& bands_path, const EmitOptions& opts) {
    owl::Ontology ont = make_ontology(opts, "karyotype");
    karyotype::human_scaffold(ont);
    if (!bands_path.empty()) {
        auto in = open_file(bands_path);
        karyotype::apply_band_dataset(ont, karyotype::load_band_dataset(in));
    }
    iscn::IscnKaryotype k = iscn::parse_iscn(text);
    std::string name = name_opt.empty() ? sio::make_safe("k" + iscn::render_iscn(k)) : name_opt;
    iscn::iscn_to_ontology(ont, k, name);
    if (opts.format == "manchester")
        emit(serialize::manchester_frames(ont, {ont.name(name)}), opts);
    else
        emit(serialize::to_functional(ont, config_of(opts)), opts);
    return 0;
}

int run_iscn_check(const std::string& text) {
    std::cout << iscn::render_iscn(iscn::parse_iscn(text)) << "\n";
    return 0;
}

int run_sio_demo(const std::string& atoms_path, const EmitOptions& opts) {
    std::map<std::string, std::string> prefixes{
        {"dc", std::string(owl::vocab::dc_terms_ns)}};
    owl::Ontology ont = make_ontology(opts, "sio", std::move(prefixes));
    sio::sio_scaffold(ont);

    auto process = owl::named(ont.name("process"));
    sio::sio_class(ont, {"to regulate", process,
                         "to regulate is to direct the course or activity of a process.",
                         {}});
    auto reaction = sio::sio_class(
        ont, {"biochemical reaction", process,
              "a biochemical reaction is a process in which one set of molecular "
              "entities is transformed into another.",
              {}});
    sio::sio_class(ont, {"hexokinase reaction", reaction,
                         "the hexokinase reaction phosphorylates glucose to "
                         "glucose-6-phosphate.",
                         {}});
    sio::sio_class(ont, {"phosphoglucose isomerase reaction", reaction,
                         "the phosphoglucose isomerase reaction converts "
                         "glucose-6-phosphate to fructose-6-phosphate.",
                         {}});
    sio::sio_class(ont, {"phosphofructokinase reaction", reaction,
                         "the phosphofructokinase reaction phosphorylates "
                         "fructose-6-phosphate to fructose-1,6-bisphosphate.",
                         {}});
    sio::biochemical_pathway(ont, "glycolysis",
                             {ont.name("hexokinase_reaction"),
                              ont.name("phosphoglucose_isomerase_reaction"),
                              ont.name("phosphofructokinase_reaction")});

    auto in = open_file(atoms_path);
    for (const auto& spec : sio::load_atom_specs(in)) sio::owl_atom(ont, spec);

    emit(render(ont, opts), opts);
    return 0;
}

int run_stats(const std::string& path) {
    owl::Ontology ont = serialize::read_functional_subset(slurp(path));
    auto rows = karyotype::karyotype_stats(ont);

    std::size_t width = std::string("Category").size();
    for (const auto& row : rows) width = std::max(width, row.category.size());

    std::ostringstream table;
    table << std::left << std::setw(static_cast<int>(width)) << "Category" << std::right
          << std::setw(12) << "Biological" << std::setw(10) << "Classes" << "\n";
    for (const auto& row : rows)
        table << std::left << std::setw(static_cast<int>(width)) << row.category << std::right
              << std::setw(12) << row.biological << std::setw(10) << row.classes << "\n";
    std::cout << table.str();
    return 0;
}

int run_validate(const std::string& path, bool require_closure,
                 const std::vector<std::string>& required_annotations,
                 const std::string& scope_text) {
    owl::Ontology ont = serialize::read_functional_subset(slurp(path));
    serialize::NameContext names(ont);
    std::vector<std::string> findings;

    for (const auto& iri : owl::finalize_check(ont))
        findings.push_back("undeclared reference: " + names.display(iri));

    if (require_closure)
        for (const auto& f : patterns::check_closures(ont))
            findings.push_back("closure mismatch: " + names.display(f.subject) + " / " +
                               names.display(f.property));

    if (!required_annotations.empty()) {
        std::vector<owl::Iri> required;
        for (const auto& text : required_annotations)
            required.push_back(serialize::resolve_name(ont, text));
        auto audit = scope_text.empty()
                         ? sio::audit_annotations(ont, required)
                         : sio::audit_annotations(ont, required,
                                                  serialize::resolve_name(ont, scope_text));
        for (const auto& f : audit)
            findings.push_back("missing annotation: " + names.display(f.subject) + " lacks " +
                               names.display(f.missing));
    }

    for (const auto& line : findings) std::cout << line << "\n";
    return findings.empty() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pattern-driven ontology construction toolkit"};
    app.require_subcommand(1);

    auto* pizza = app.add_subcommand("pizza", "Pizza ontology patterns");
    pizza->require_subcommand(1);
    auto* pizza_build =
        pizza->add_subcommand("build", "Build the pizza ontology from a pizza spec file");
    std::string pizzas_path;
    EmitOptions pizza_opts;
    pizza_build->add_option("--pizzas", pizzas_path, "Pizza spec file (name then toppings per line)")
        ->required();
    add_emit_options(*pizza_build, pizza_opts, "functional");

    auto* karyo = app.add_subcommand("karyotype", "Human karyotype ontology patterns");
    karyo->require_subcommand(1);
    auto* karyo_build = karyo->add_subcommand(
        "build", "Build the karyotype scaffold, bands and centromeres/telomeres");
    std::string bands_path;
    EmitOptions karyo_opts;
    karyo_build->add_option("--bands", bands_path, "Band dataset (JSON)");
    add_emit_options(*karyo_build, karyo_opts, "functional");

    auto* iscn_cmd = app.add_subcommand("iscn", "ISCN karyotype strings");
    iscn_cmd->require_subcommand(1);
    auto* iscn_compile =
        iscn_cmd->add_subcommand("compile", "Compile an ISCN string to a karyotype class");
    std::string iscn_text;
    std::string iscn_name;
    std::string iscn_bands;
    EmitOptions iscn_opts;
    iscn_compile->add_option("string", iscn_text, "ISCN designation, e.g. \"45,X\"")->required();
    iscn_compile->add_option("--name", iscn_name, "Class name (defaults to a safe form of the string)");
    iscn_compile->add_option("--bands", iscn_bands, "Band dataset (JSON), needed for inversions");
    add_emit_options(*iscn_compile, iscn_opts, "manchester");
    auto* iscn_check = iscn_cmd->add_subcommand("check", "Parse an ISCN string and echo it");
    std::string check_text;
    iscn_check->add_option("string", check_text, "ISCN designation")->required();

    auto* sio_cmd = app.add_subcommand("sio", "SIO-style ontology patterns");
    sio_cmd->require_subcommand(1);
    auto* sio_demo = sio_cmd->add_subcommand("demo", "Build the SIO pattern showcase");
    std::string atoms_path;
    EmitOptions sio_opts;
    sio_demo->add_option("--atoms", atoms_path, "Chemical element dataset (JSON)")->required();
    add_emit_options(*sio_demo, sio_opts, "functional");

    auto* stats_cmd = app.add_subcommand("stats", "Karyotype model statistics for an ontology file");
    std::string stats_path;
    stats_cmd->add_option("file", stats_path, "Ontology in functional syntax")->required();

    auto* validate_cmd = app.add_subcommand("validate", "Audit an ontology file");
    std::string validate_path;
    bool require_closure = false;
    std::vector<std::string> required_annotations;
    std::string scope_text;
    validate_cmd->add_option("file", validate_path, "Ontology in functional syntax")->required();
    validate_cmd->add_flag("--require-closure", require_closure,
                           "Check universal restrictions against existential fillers");
    validate_cmd->add_option("--require-annotation", required_annotations,
                             "Annotation property every class must carry (repeatable)");
    validate_cmd->add_option("--scope", scope_text,
                             "Audit only classes strictly under this class");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*pizza_build) return run_pizza_build(pizzas_path, pizza_opts);
        if (*karyo_build) return run_karyotype_build(bands_path, karyo_opts);
        if (*iscn_compile) return run_iscn_compile(iscn_text, iscn_name, iscn_bands, iscn_opts);
        if (*iscn_check) return run_iscn_check(check_text);
        if (*sio_demo) return run_sio_demo(atoms_path, sio_opts);
        if (*stats_cmd) return run_stats(stats_path);
        if (*validate_cmd)
            return run_validate(validate_path, require_closure, required_annotations, scope_text);
    } catch (const ontoforge::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
