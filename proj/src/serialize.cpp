#include "ontoforge/serialize.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace ontoforge::serialize {

using owl::Annotation;
using owl::Axiom;
using owl::ClassExpression;
using owl::Entity;
using owl::EntityKind;
using owl::Iri;
using owl::Literal;
using owl::Ontology;

namespace {

bool pname_safe(std::string_view fragment) {
    if (fragment.empty()) return false;
    return std::all_of(fragment.begin(), fragment.end(), [](unsigned char c) {
        return std::isalnum(c) != 0 || c == '_' || c == '-' || c == '.';
    });
}

void require_finalized(const Ontology& ont) {
    auto undeclared = owl::finalize_check(ont);
    if (!undeclared.empty())
        throw SerializeError("undeclared reference: " + undeclared.front().str());
}

// The split position is cosmetic (equality is on the full form);
// prefer the last '#' or '/', falling back to ':'.
std::optional<Iri> try_split_full(const std::string& text) {
    for (char sep : {'#', '/', ':'}) {
        auto pos = text.rfind(sep);
        if (pos != std::string::npos && pos + 1 < text.size()) {
            try {
                return Iri(text.substr(0, pos + 1), text.substr(pos + 1));
            } catch (const owl::OntologyError&) {
                continue;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

NameContext::NameContext(const owl::Ontology& ont) : default_ns_(ont.default_namespace()) {
    // First prefix name wins when two prefixes share an expansion;
    // the map is already in name order.
    for (const auto& [name, ns] : ont.prefixes()) prefix_of_ns_.emplace(ns, name);
}

std::string NameContext::shorten(const Iri& iri) const {
    if (pname_safe(iri.fragment())) {
        if (iri.base() == default_ns_) return ":" + std::string(iri.fragment());
        auto it = prefix_of_ns_.find(iri.base());
        if (it != prefix_of_ns_.end())
            return it->second + ":" + std::string(iri.fragment());
    }
    return "<" + iri.str() + ">";
}

std::string NameContext::display(const Iri& iri) const {
    if (pname_safe(iri.fragment())) {
        if (iri.base() == default_ns_) return std::string(iri.fragment());
        auto it = prefix_of_ns_.find(iri.base());
        if (it != prefix_of_ns_.end())
            return it->second + ":" + std::string(iri.fragment());
    }
    return "<" + iri.str() + ">";
}

namespace {

std::string quoted(const std::string& lexical) {
    std::string out = "\"";
    for (char c : lexical) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

std::string render_literal(const Literal& lit, const NameContext& names, Format format) {
    std::string out = quoted(lit.lexical());
    if (lit.lang()) {
        out += "@" + *lit.lang();
    } else if (lit.datatype()) {
        out += "^^";
        out += format == Format::Functional ? names.shorten(*lit.datatype())
                                            : names.display(*lit.datatype());
    }
    return out;
}

std::string render_annotation_value(const Annotation& ann, const NameContext& names,
                                    Format format) {
    if (const auto* lit = std::get_if<Literal>(&ann.value))
        return render_literal(*lit, names, format);
    const auto& iri = std::get<Iri>(ann.value);
    return format == Format::Functional ? names.shorten(iri) : names.display(iri);
}

// ---------------------------------------------------------------- functional

std::string functional_expr(const ClassExpression& expr, const NameContext& names) {
    return std::visit(
        [&names](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, owl::Named>) {
                return names.shorten(node.iri);
            } else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>) {
                return "ObjectSomeValuesFrom(" + names.shorten(node.property) + " " +
                       functional_expr(*node.filler, names) + ")";
            } else if constexpr (std::is_same_v<T, owl::AllValuesFrom>) {
                return "ObjectAllValuesFrom(" + names.shorten(node.property) + " " +
                       functional_expr(*node.filler, names) + ")";
            } else if constexpr (std::is_same_v<T, owl::IntersectionOf> ||
                                 std::is_same_v<T, owl::UnionOf>) {
                std::string out = std::is_same_v<T, owl::IntersectionOf>
                                      ? "ObjectIntersectionOf("
                                      : "ObjectUnionOf(";
                for (std::size_t i = 0; i < node.operands.size(); ++i) {
                    if (i > 0) out += ' ';
                    out += functional_expr(node.operands[i], names);
                }
                return out + ")";
            } else {
                static_assert(std::is_same_v<T, owl::ExactCardinality>);
                return "ObjectExactCardinality(" + std::to_string(node.n) + " " +
                       names.shorten(node.property) + " " +
                       functional_expr(*node.filler, names) + ")";
            }
        },
        expr.node);
}

std::string functional_axiom(const Axiom& axiom, const NameContext& names) {
    return std::visit(
        [&names](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, owl::Declaration>) {
                return "Declaration(" + std::string(owl::kind_name(node.entity.kind)) + "(" +
                       names.shorten(node.entity.iri) + "))";
            } else if constexpr (std::is_same_v<T, owl::SubClassOf>) {
                return "SubClassOf(" + functional_expr(node.sub, names) + " " +
                       functional_expr(node.super, names) + ")";
            } else if constexpr (std::is_same_v<T, owl::EquivalentClasses> ||
                                 std::is_same_v<T, owl::DisjointClasses>) {
                std::string out = std::is_same_v<T, owl::EquivalentClasses>
                                      ? "EquivalentClasses("
                                      : "DisjointClasses(";
                for (std::size_t i = 0; i < node.expressions.size(); ++i) {
                    if (i > 0) out += ' ';
                    out += functional_expr(node.expressions[i], names);
                }
                return out + ")";
            } else if constexpr (std::is_same_v<T, owl::AnnotationAssertion>) {
                return "AnnotationAssertion(" + names.shorten(node.annotation.property) + " " +
                       names.shorten(node.subject) + " " +
                       render_annotation_value(node.annotation, names, Format::Functional) + ")";
            } else {
                static_assert(std::is_same_v<T, owl::FunctionalObjectProperty>);
                return "FunctionalObjectProperty(" + names.shorten(node.property) + ")";
            }
        },
        axiom.node);
}

int axiom_rank(const Axiom& axiom) {
    return std::visit(
        [](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, owl::Declaration>) return 0;
            if constexpr (std::is_same_v<T, owl::FunctionalObjectProperty>) return 1;
            if constexpr (std::is_same_v<T, owl::SubClassOf>) return 2;
            if constexpr (std::is_same_v<T, owl::EquivalentClasses>) return 3;
            if constexpr (std::is_same_v<T, owl::DisjointClasses>) return 4;
            return 5;  // AnnotationAssertion
        },
        axiom.node);
}

std::vector<std::pair<int, std::string>> rendered_axioms(const Ontology& ont,
                                                         const NameContext& names, Sort sort) {
    std::vector<std::pair<int, std::string>> lines;
    lines.reserve(ont.size());
    for (const auto& axiom : ont.axioms())
        lines.emplace_back(axiom_rank(axiom), functional_axiom(axiom, names));
    if (sort == Sort::Canonical) std::stable_sort(lines.begin(), lines.end());
    return lines;
}

void emit_prefix_block(std::string& out, const Ontology& ont, Format format) {
    if (format == Format::Functional) {
        out += "Prefix(:=<" + ont.default_namespace() + ">)\n";
        for (const auto& [name, ns] : ont.prefixes())
            out += "Prefix(" + name + ":=<" + ns + ">)\n";
    } else {
        out += "Prefix: : <" + ont.default_namespace() + ">\n";
        for (const auto& [name, ns] : ont.prefixes())
            out += "Prefix: " + name + ": <" + ns + ">\n";
    }
}

}  // namespace

std::string to_functional(const Ontology& ont, SerializationConfig cfg) {
    require_finalized(ont);
    NameContext names(ont);
    std::string out;
    emit_prefix_block(out, ont, Format::Functional);
    out += "Ontology(<" + ont.iri().str() + ">\n";
    for (const auto& [rank, line] : rendered_axioms(ont, names, cfg.sort)) {
        (void)rank;
        out += line;
        out += '\n';
    }
    out += ")\n";
    return out;
}

// ---------------------------------------------------------------- manchester

namespace {

bool compound(const ClassExpression& expr) {
    return !std::holds_alternative<owl::Named>(expr.node);
}

bool nary(const ClassExpression& expr) {
    return std::holds_alternative<owl::IntersectionOf>(expr.node) ||
           std::holds_alternative<owl::UnionOf>(expr.node);
}

std::string manchester_expr(const ClassExpression& expr, const NameContext& names);

std::string filler_text(const ClassExpression& filler, const NameContext& names) {
    std::string text = manchester_expr(filler, names);
    return compound(filler) ? "(" + text + ")" : text;
}

std::string manchester_expr(const ClassExpression& expr, const NameContext& names) {
    return std::visit(
        [&names](const auto& node) -> std::string {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, owl::Named>) {
                return names.display(node.iri);
            } else if constexpr (std::is_same_v<T, owl::SomeValuesFrom>) {
                return names.display(node.property) + " some " + filler_text(*node.filler, names);
            } else if constexpr (std::is_same_v<T, owl::AllValuesFrom>) {
                return names.display(node.property) + " only " + filler_text(*node.filler, names);
            } else if constexpr (std::is_same_v<T, owl::IntersectionOf> ||
                                 std::is_same_v<T, owl::UnionOf>) {
                const char* op = std::is_same_v<T, owl::IntersectionOf> ? " and " : " or ";
                std::string out;
                for (std::size_t i = 0; i < node.operands.size(); ++i) {
                    if (i > 0) out += op;
                    std::string text = manchester_expr(node.operands[i], names);
                    out += nary(node.operands[i]) ? "(" + text + ")" : text;
                }
                return out;
            } else {
                static_assert(std::is_same_v<T, owl::ExactCardinality>);
                return names.display(node.property) + " exactly " + std::to_string(node.n) + " " +
                       filler_text(*node.filler, names);
            }
        },
        expr.node);
}

struct Frame {
    Entity entity;
    std::vector<std::string> annotations;
    std::vector<std::string> equivalent;
    std::vector<std::string> subclass;
    bool functional = false;
};

struct FrameSet {
    std::vector<Frame> frames;
    std::map<Iri, std::size_t> index;
    std::vector<std::string> disjoints;

    Frame& at(const Iri& subject, std::size_t line_hint) {
        auto it = index.find(subject);
        if (it == index.end())
            throw SerializeError("axiom " + std::to_string(line_hint) +
                                 " refers to undeclared frame subject: " + subject.str());
        return frames[it->second];
    }
};

FrameSet build_frames(const Ontology& ont, const NameContext& names) {
    FrameSet set;
    // Frames first: axiom storage is a set, so declarations may come
    // after the axioms that hang off them.
    for (const auto& axiom : ont.axioms())
        if (const auto* decl = std::get_if<owl::Declaration>(&axiom.node)) {
            set.index.emplace(decl->entity.iri, set.frames.size());
            set.frames.push_back(Frame{decl->entity, {}, {}, {}, false});
        }
    std::size_t line = 0;
    for (const auto& axiom : ont.axioms()) {
        ++line;
        if (std::holds_alternative<owl::Declaration>(axiom.node)) {
            continue;
        } else if (const auto* sco = std::get_if<owl::SubClassOf>(&axiom.node)) {
            const auto* sub = std::get_if<owl::Named>(&sco->sub.node);
            if (!sub)
                throw SerializeError("Manchester frames require a named subclass subject");
            set.at(sub->iri, line).subclass.push_back(manchester_expr(sco->super, names));
        } else if (const auto* eq = std::get_if<owl::EquivalentClasses>(&axiom.node)) {
            const auto* head = std::get_if<owl::Named>(&eq->expressions.front().node);
            if (!head)
                throw SerializeError("Manchester frames require a named equivalence subject");
            Frame& frame = set.at(head->iri, line);
            for (std::size_t i = 1; i < eq->expressions.size(); ++i)
                frame.equivalent.push_back(manchester_expr(eq->expressions[i], names));
        } else if (const auto* dj = std::get_if<owl::DisjointClasses>(&axiom.node)) {
            std::string text = "DisjointClasses: ";
            for (std::size_t i = 0; i < dj->expressions.size(); ++i) {
                if (i > 0) text += ", ";
                text += manchester_expr(dj->expressions[i], names);
            }
            set.disjoints.push_back(std::move(text));
        } else if (const auto* ann = std::get_if<owl::AnnotationAssertion>(&axiom.node)) {
            set.at(ann->subject, line)
                .annotations.push_back(
                    names.display(ann->annotation.property) + " " +
                    render_annotation_value(ann->annotation, names, Format::Manchester));
        } else if (const auto* fop = std::get_if<owl::FunctionalObjectProperty>(&axiom.node)) {
            set.at(fop->property, line).functional = true;
        }
    }
    return set;
}

void emit_section(std::string& out, const char* heading, std::vector<std::string> lines,
                  Sort sort) {
    if (lines.empty()) return;
    if (sort == Sort::Canonical) std::sort(lines.begin(), lines.end());
    out += "  ";
    out += heading;
    out += "\n";
    for (const auto& line : lines) out += "    " + line + "\n";
}

void emit_frame(std::string& out, const Frame& frame, const NameContext& names, Sort sort) {
    out += std::string(owl::kind_name(frame.entity.kind)) + ": " +
           names.display(frame.entity.iri) + "\n";
    emit_section(out, "Annotations:", frame.annotations, sort);
    if (frame.functional) {
        out += "  Characteristics:\n";
        out += "    Functional\n";
    }
    emit_section(out, "EquivalentTo:", frame.equivalent, sort);
    emit_section(out, "SubClassOf:", frame.subclass, sort);
}

int frame_rank(EntityKind kind) {
    switch (kind) {
        case EntityKind::AnnotationProperty: return 0;
        case EntityKind::ObjectProperty: return 1;
        case EntityKind::Class: return 2;
    }
    return 3;
}

}  // namespace

std::string manchester(const ClassExpression& expr, const NameContext& names) {
    return manchester_expr(expr, names);
}

std::string to_manchester(const Ontology& ont, SerializationConfig cfg) {
    require_finalized(ont);
    NameContext names(ont);
    FrameSet set = build_frames(ont, names);

    std::vector<std::size_t> order(set.frames.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&set, &names, cfg](std::size_t a, std::size_t b) {
        int ra = frame_rank(set.frames[a].entity.kind);
        int rb = frame_rank(set.frames[b].entity.kind);
        if (ra != rb) return ra < rb;
        if (cfg.sort == Sort::Canonical)
            return names.display(set.frames[a].entity.iri) <
                   names.display(set.frames[b].entity.iri);
        return false;
    });

    std::string out;
    emit_prefix_block(out, ont, Format::Manchester);
    out += "Ontology: <" + ont.iri().str() + ">\n";
    for (std::size_t i : order) {
        out += "\n";
        emit_frame(out, set.frames[i], names, cfg.sort);
    }
    auto disjoints = set.disjoints;
    if (cfg.sort == Sort::Canonical) std::sort(disjoints.begin(), disjoints.end());
    for (const auto& line : disjoints) {
        out += "\n";
        out += line + "\n";
    }
    return out;
}

std::string manchester_frames(const Ontology& ont, const std::vector<Iri>& subjects) {
    NameContext names(ont);
    FrameSet set = build_frames(ont, names);
    std::string out;
    for (const auto& subject : subjects) {
        auto it = set.index.find(subject);
        if (it == set.index.end())
            throw SerializeError("no frame for subject: " + subject.str());
        if (!out.empty()) out += "\n";
        emit_frame(out, set.frames[it->second], names, Sort::InsertionOrder);
    }
    return out;
}

// -------------------------------------------------------------------- reader

namespace {

struct Token {
    enum Kind { LParen, RParen, Ident, Pname, IriRef, Quoted, Integer, End };
    Kind kind = End;
    std::string text;        // Ident name, IriRef body, Integer digits
    std::string prefix;      // Pname only
    std::string local;       // Pname only
    Literal literal{""};     // Quoted only
};

class LineParser {
public:
    LineParser(const std::string& line, std::size_t lineno,
               const std::map<std::string, std::string>* prefixes,
               const std::string* default_ns)
        : line_(line), lineno_(lineno), prefixes_(prefixes), default_ns_(default_ns) {
        advance();
    }

    [[noreturn]] void fail(const std::string& message) const {
        throw ReadError(message, lineno_);
    }

    const Token& peek() const { return tok_; }

    Token take() {
        Token out = std::move(tok_);
        advance();
        return out;
    }

    void expect(Token::Kind kind, const char* what) {
        if (tok_.kind != kind) fail(std::string("expected ") + what);
        advance();
    }

    Iri iri() {
        Token tok = take();
        if (tok.kind == Token::IriRef) return split_full(tok.text);
        if (tok.kind == Token::Pname) return resolve(tok);
        fail("expected an IRI");
    }

    Iri resolve(const Token& tok) {
        if (tok.prefix.empty()) return make_iri(*default_ns_, tok.local);
        auto it = prefixes_->find(tok.prefix);
        if (it == prefixes_->end()) fail("unknown prefix '" + tok.prefix + "'");
        return make_iri(it->second, tok.local);
    }

    Iri split_full(const std::string& text) {
        if (auto iri = try_split_full(text)) return *iri;
        fail("malformed IRI <" + text + ">");
    }

    Iri make_iri(std::string_view base, std::string_view fragment) {
        try {
            return Iri(base, fragment);
        } catch (const owl::OntologyError& err) {
            fail(err.what());
        }
    }

private:
    void advance() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        if (pos_ >= line_.size()) {
            tok_ = Token{Token::End, "", "", "", Literal("")};
            return;
        }
        char c = line_[pos_];
        if (c == '(') {
            ++pos_;
            tok_ = Token{Token::LParen, "(", "", "", Literal("")};
        } else if (c == ')') {
            ++pos_;
            tok_ = Token{Token::RParen, ")", "", "", Literal("")};
        } else if (c == '<') {
            auto end = line_.find('>', pos_);
            if (end == std::string::npos) fail("unterminated IRI");
            tok_ = Token{Token::IriRef, line_.substr(pos_ + 1, end - pos_ - 1), "", "",
                         Literal("")};
            pos_ = end + 1;
        } else if (c == '"') {
            tok_ = quoted_token();
        } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   std::isdigit(static_cast<unsigned char>(line_[pos_])) != 0)
                ++pos_;
            tok_ = Token{Token::Integer, line_.substr(start, pos_ - start), "", "", Literal("")};
        } else if (c == ':' || std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_') {
            std::size_t start = pos_;
            while (pos_ < line_.size() && name_char(line_[pos_])) ++pos_;
            std::string head = line_.substr(start, pos_ - start);
            if (pos_ < line_.size() && line_[pos_] == ':') {
                ++pos_;
                std::size_t local_start = pos_;
                while (pos_ < line_.size() && name_char(line_[pos_])) ++pos_;
                tok_ = Token{Token::Pname, "", head, line_.substr(local_start, pos_ - local_start),
                             Literal("")};
                if (tok_.local.empty()) fail("empty local name after '" + head + ":'");
            } else if (head.empty()) {
                fail(std::string("unexpected character '") + c + "'");
            } else {
                tok_ = Token{Token::Ident, head, "", "", Literal("")};
            }
        } else {
            fail(std::string("unexpected character '") + c + "'");
        }
    }

    static bool name_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-' ||
               c == '.';
    }

    Token quoted_token() {
        ++pos_;  // opening quote
        std::string lexical;
        while (pos_ < line_.size() && line_[pos_] != '"') {
            if (line_[pos_] == '\\') {
                ++pos_;
                if (pos_ >= line_.size()) fail("dangling escape in literal");
            }
            lexical += line_[pos_++];
        }
        if (pos_ >= line_.size()) fail("unterminated literal");
        ++pos_;  // closing quote
        if (pos_ < line_.size() && line_[pos_] == '@') {
            ++pos_;
            std::size_t start = pos_;
            while (pos_ < line_.size() &&
                   (std::isalnum(static_cast<unsigned char>(line_[pos_])) != 0 ||
                    line_[pos_] == '-'))
                ++pos_;
            if (pos_ == start) fail("empty language tag");
            return Token{Token::Quoted, "", "", "",
                         Literal(lexical, line_.substr(start, pos_ - start))};
        }
        if (pos_ + 1 < line_.size() && line_[pos_] == '^' && line_[pos_ + 1] == '^') {
            pos_ += 2;
            Token old = tok_;
            advance();  // reuse the scanner for the datatype name
            Token dt = tok_;
            tok_ = old;
            if (dt.kind == Token::IriRef)
                return Token{Token::Quoted, "", "", "", Literal(lexical, split_full(dt.text))};
            if (dt.kind == Token::Pname)
                return Token{Token::Quoted, "", "", "", Literal(lexical, resolve(dt))};
            fail("expected a datatype after '^^'");
        }
        return Token{Token::Quoted, "", "", "", Literal(lexical)};
    }

    const std::string& line_;
    std::size_t lineno_;
    const std::map<std::string, std::string>* prefixes_;
    const std::string* default_ns_;
    std::size_t pos_ = 0;
    Token tok_;
};

ClassExpression parse_expr(LineParser& p);

std::vector<ClassExpression> parse_expr_list(LineParser& p) {
    std::vector<ClassExpression> out;
    while (p.peek().kind != Token::RParen && p.peek().kind != Token::End)
        out.push_back(parse_expr(p));
    if (out.size() < 2) p.fail("expected at least two expressions");
    return out;
}

ClassExpression parse_expr(LineParser& p) {
    if (p.peek().kind == Token::Pname || p.peek().kind == Token::IriRef)
        return owl::named(p.iri());
    if (p.peek().kind != Token::Ident) p.fail("expected a class expression");
    std::string head = p.take().text;
    p.expect(Token::LParen, "'('");
    if (head == "ObjectSomeValuesFrom" || head == "ObjectAllValuesFrom") {
        Iri property = p.iri();
        ClassExpression filler = parse_expr(p);
        p.expect(Token::RParen, "')'");
        if (head == "ObjectSomeValuesFrom")
            return owl::SomeValuesFrom{property, owl::Box<ClassExpression>(std::move(filler))};
        return owl::AllValuesFrom{property, owl::Box<ClassExpression>(std::move(filler))};
    }
    if (head == "ObjectIntersectionOf" || head == "ObjectUnionOf") {
        auto operands = parse_expr_list(p);
        p.expect(Token::RParen, "')'");
        if (head == "ObjectIntersectionOf") return owl::IntersectionOf{std::move(operands)};
        return owl::UnionOf{std::move(operands)};
    }
    if (head == "ObjectExactCardinality") {
        if (p.peek().kind != Token::Integer) p.fail("expected a cardinality");
        std::uint32_t n = static_cast<std::uint32_t>(std::stoul(p.take().text));
        Iri property = p.iri();
        ClassExpression filler = parse_expr(p);
        p.expect(Token::RParen, "')'");
        return owl::ExactCardinality{n, property, owl::Box<ClassExpression>(std::move(filler))};
    }
    p.fail("unsupported construct '" + head + "'");
}

Axiom parse_axiom(LineParser& p) {
    if (p.peek().kind != Token::Ident) p.fail("expected an axiom");
    std::string head = p.take().text;
    p.expect(Token::LParen, "'('");
    if (head == "Declaration") {
        if (p.peek().kind != Token::Ident) p.fail("expected an entity kind");
        std::string kind_text = p.take().text;
        EntityKind kind;
        if (kind_text == "Class") kind = EntityKind::Class;
        else if (kind_text == "ObjectProperty") kind = EntityKind::ObjectProperty;
        else if (kind_text == "AnnotationProperty") kind = EntityKind::AnnotationProperty;
        else p.fail("unsupported construct '" + kind_text + "'");
        p.expect(Token::LParen, "'('");
        Iri iri = p.iri();
        p.expect(Token::RParen, "')'");
        p.expect(Token::RParen, "')'");
        return owl::Declaration{Entity{kind, iri}};
    }
    if (head == "SubClassOf") {
        ClassExpression sub = parse_expr(p);
        ClassExpression super = parse_expr(p);
        p.expect(Token::RParen, "')'");
        return owl::SubClassOf{std::move(sub), std::move(super)};
    }
    if (head == "EquivalentClasses" || head == "DisjointClasses") {
        auto exprs = parse_expr_list(p);
        p.expect(Token::RParen, "')'");
        if (head == "EquivalentClasses") return owl::EquivalentClasses{std::move(exprs)};
        return owl::DisjointClasses{std::move(exprs)};
    }
    if (head == "AnnotationAssertion") {
        Iri property = p.iri();
        Iri subject = p.iri();
        Token value = p.take();
        Annotation annotation{property, Literal("")};
        if (value.kind == Token::Quoted) {
            annotation.value = value.literal;
        } else if (value.kind == Token::IriRef) {
            annotation.value = p.split_full(value.text);
        } else if (value.kind == Token::Pname) {
            annotation.value = p.resolve(value);
        } else {
            p.fail("expected an annotation value");
        }
        p.expect(Token::RParen, "')'");
        return owl::AnnotationAssertion{subject, std::move(annotation)};
    }
    if (head == "FunctionalObjectProperty") {
        Iri property = p.iri();
        p.expect(Token::RParen, "')'");
        return owl::FunctionalObjectProperty{property};
    }
    p.fail("unsupported construct '" + head + "'");
}

// "Prefix(name:=<iri>)"; the name may be empty for the default
// namespace. Returns false when the line is not a Prefix line.
bool parse_prefix_line(const std::string& line, std::size_t lineno, std::string& name,
                       std::string& ns) {
    if (line.rfind("Prefix(", 0) != 0) return false;
    auto assign = line.find(":=<", 7);
    auto close = line.rfind(">)");
    if (assign == std::string::npos || close == std::string::npos || close < assign)
        throw ReadError("malformed Prefix line", lineno);
    name = line.substr(7, assign - 7);
    ns = line.substr(assign + 3, close - assign - 3);
    return true;
}

std::string strip(const std::string& line) {
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    auto end = line.find_last_not_of(" \t\r");
    return line.substr(begin, end - begin + 1);
}

}  // namespace

Ontology read_functional_subset(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;

    std::string default_ns;
    bool saw_default = false;
    std::map<std::string, std::string> prefixes;
    std::optional<Ontology> ont;
    bool closed = false;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = strip(raw);
        if (line.empty()) continue;

        if (closed) throw ReadError("content after closing ')'", lineno);

        if (!ont) {
            std::string name, ns;
            if (parse_prefix_line(line, lineno, name, ns)) {
                if (name.empty()) {
                    default_ns = ns;
                    saw_default = true;
                } else {
                    prefixes[name] = ns;
                }
                continue;
            }
            if (line.rfind("Ontology(", 0) == 0) {
                LineParser p(line, lineno, &prefixes, &default_ns);
                p.take();  // "Ontology" ident
                p.expect(Token::LParen, "'('");
                if (p.peek().kind != Token::IriRef) p.fail("expected the ontology IRI");
                Iri iri = p.split_full(p.take().text);
                if (p.peek().kind != Token::End) p.fail("unexpected trailing content");
                if (!saw_default) default_ns = iri.str() + "#";
                try {
                    ont.emplace(iri, prefixes, default_ns);
                } catch (const owl::OntologyError& err) {
                    throw ReadError(err.what(), lineno);
                }
                continue;
            }
            throw ReadError("expected a Prefix or Ontology line", lineno);
        }

        if (line == ")") {
            closed = true;
            continue;
        }

        LineParser p(line, lineno, &ont->prefixes(), &ont->default_namespace());
        Axiom axiom = parse_axiom(p);
        if (p.peek().kind != Token::End) p.fail("unexpected trailing content");
        try {
            ont->add(std::move(axiom));
        } catch (const owl::OntologyError& err) {
            throw ReadError(err.what(), lineno);
        }
    }

    if (!ont) throw ReadError("no Ontology block found", lineno == 0 ? 1 : lineno);
    if (!closed) throw ReadError("missing closing ')'", lineno == 0 ? 1 : lineno);
    return *std::move(ont);
}

Iri parse_absolute_iri(const std::string& text) {
    if (auto iri = try_split_full(text)) return *iri;
    throw SerializeError("malformed IRI '" + text + "'");
}

Iri resolve_name(const Ontology& ont, const std::string& text) {
    std::string name = text;
    if (name.size() >= 2 && name.front() == '<' && name.back() == '>')
        name = name.substr(1, name.size() - 2);
    if (name.find("://") != std::string::npos) return parse_absolute_iri(name);
    auto colon = name.find(':');
    if (colon != std::string::npos) {
        auto it = ont.prefixes().find(name.substr(0, colon));
        if (it == ont.prefixes().end())
            throw SerializeError("unknown prefix in '" + text + "'");
        try {
            return Iri(it->second, name.substr(colon + 1));
        } catch (const owl::OntologyError& err) {
            throw SerializeError(err.what());
        }
    }
    return ont.name(name);
}

}  // namespace ontoforge::serialize
