#include "ll/parser.hpp"

#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace ll {

ParseError::ParseError(SourcePos p, std::string msg, std::vector<std::string> exp)
    : std::runtime_error("parse error at " + std::to_string(p.line) + ":" +
                         std::to_string(p.column) + ": " + msg),
      pos(p),
      message(std::move(msg)),
      expected(std::move(exp)) {}

namespace {

enum class Tok {
    Ident,       // [a-z][a-z0-9_]*
    UpperIdent,  // [A-Z][A-Za-z0-9_]* other than I
    One,         // 1
    Bot,         // bot
    UnitI,       // I
    Star,        // *
    Hash,        // #
    Lolli,       // -o
    Caret,       // ^
    LParen,
    RParen,
    Comma,
    Turnstile,  // |-
    End,
};

const char* tok_name(Tok t) {
    switch (t) {
        case Tok::Ident: return "atom";
        case Tok::UpperIdent: return "context variable";
        case Tok::One: return "'1'";
        case Tok::Bot: return "'bot'";
        case Tok::UnitI: return "'I'";
        case Tok::Star: return "'*'";
        case Tok::Hash: return "'#'";
        case Tok::Lolli: return "'-o'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::Comma: return "','";
        case Tok::Turnstile: return "'|-'";
        case Tok::End: return "end of input";
    }
    return "?";
}

struct Token {
    Tok kind;
    std::string text;
    SourcePos pos;
};

class Lexer {
public:
    Lexer(const std::string& text, SourcePos start) : text_(text), pos_(start) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (true) {
            skip_space();
            SourcePos here = pos_;
            if (i_ >= text_.size()) {
                out.push_back({Tok::End, "", here});
                return out;
            }
            char c = text_[i_];
            if (c == '(') { out.push_back({Tok::LParen, "(", here}); bump(); }
            else if (c == ')') { out.push_back({Tok::RParen, ")", here}); bump(); }
            else if (c == ',') { out.push_back({Tok::Comma, ",", here}); bump(); }
            else if (c == '*') { out.push_back({Tok::Star, "*", here}); bump(); }
            else if (c == '#') { out.push_back({Tok::Hash, "#", here}); bump(); }
            else if (c == '^') { out.push_back({Tok::Caret, "^", here}); bump(); }
            else if (c == '1') { out.push_back({Tok::One, "1", here}); bump(); }
            else if (c == '|') {
                bump();
                if (i_ < text_.size() && text_[i_] == '-') {
                    bump();
                    out.push_back({Tok::Turnstile, "|-", here});
                } else {
                    throw ParseError(here, "stray '|'", {"'|-'"});
                }
            } else if (c == '-') {
                bump();
                if (i_ < text_.size() && text_[i_] == 'o') {
                    bump();
                    out.push_back({Tok::Lolli, "-o", here});
                } else {
                    throw ParseError(here, "stray '-'", {"'-o'"});
                }
            } else if (std::islower(static_cast<unsigned char>(c))) {
                std::string name = ident();
                if (name == "bot")
                    out.push_back({Tok::Bot, name, here});
                else
                    out.push_back({Tok::Ident, name, here});
            } else if (std::isupper(static_cast<unsigned char>(c))) {
                std::string name = ident();
                if (name == "I")
                    out.push_back({Tok::UnitI, name, here});
                else
                    out.push_back({Tok::UpperIdent, name, here});
            } else {
                throw ParseError(here,
                                 std::string("unexpected character '") + c + "'");
            }
        }
    }

private:
    void bump() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    void skip_space() {
        while (i_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[i_])))
            bump();
    }

    std::string ident() {
        std::string out;
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                out += c;
                bump();
            } else {
                break;
            }
        }
        return out;
    }

    const std::string& text_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

class Parser {
public:
    Parser(std::vector<Token> toks, bool allow_context_vars)
        : toks_(std::move(toks)), allow_context_vars_(allow_context_vars) {}

    const Token& peek() const { return toks_[i_]; }

    Token take(Tok kind) {
        if (peek().kind != kind)
            throw ParseError(peek().pos,
                             std::string("unexpected ") + tok_name(peek().kind),
                             {tok_name(kind)});
        return toks_[i_++];
    }

    bool accept(Tok kind) {
        if (peek().kind == kind) {
            ++i_;
            return true;
        }
        return false;
    }

    // formula := par_exp | par_exp "-o" formula
    Formula formula() {
        Formula lhs = par_exp();
        if (accept(Tok::Lolli)) return Formula::lollipop(lhs, formula());
        return lhs;
    }

    Formula par_exp() {
        Formula f = tens_exp();
        while (accept(Tok::Hash)) f = Formula::par(f, tens_exp());
        return f;
    }

    Formula tens_exp() {
        Formula f = post_exp();
        while (accept(Tok::Star)) f = Formula::tensor(f, post_exp());
        return f;
    }

    Formula post_exp() {
        Formula f = primary();
        while (accept(Tok::Caret)) f = Formula::dual(f);
        return f;
    }

    Formula primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Ident:
                ++i_;
                return Formula::atom(t.text);
            case Tok::One:
                ++i_;
                return Formula::one();
            case Tok::Bot:
                ++i_;
                return Formula::bot();
            case Tok::UnitI:
                ++i_;
                return Formula::unit_i();
            case Tok::LParen: {
                ++i_;
                Formula f = formula();
                take(Tok::RParen);
                return f;
            }
            case Tok::UpperIdent:
                throw ParseError(
                    t.pos, "context variable '" + t.text +
                               "' not allowed inside a formula",
                    {"atom", "'1'", "'bot'", "'I'", "'('"});
            default:
                throw ParseError(t.pos,
                                 std::string("unexpected ") + tok_name(t.kind),
                                 {"atom", "'1'", "'bot'", "'I'", "'('"});
        }
    }

    // One comma-separated side of a sequent; empty when the next token ends it.
    std::vector<SchemaItem> side() {
        std::vector<SchemaItem> out;
        if (peek().kind == Tok::Turnstile || peek().kind == Tok::End) return out;
        out.push_back(item());
        while (accept(Tok::Comma)) out.push_back(item());
        return out;
    }

    SchemaItem item() {
        const Token& t = peek();
        if (t.kind == Tok::UpperIdent) {
            if (!allow_context_vars_)
                throw ParseError(t.pos, "context variable '" + t.text +
                                            "' not allowed in a plain sequent");
            ++i_;
            return ContextVar{t.text};
        }
        return formula();
    }

    void expect_end() { take(Tok::End); }

private:
    std::vector<Token> toks_;
    std::size_t i_ = 0;
    bool allow_context_vars_;
};

Multiset to_multiset(const std::vector<SchemaItem>& items, SourcePos pos) {
    std::vector<Formula> fs;
    for (const auto& it : items) {
        if (std::holds_alternative<ContextVar>(it))
            throw ParseError(pos, "context variable not allowed here");
        fs.push_back(std::get<Formula>(it));
    }
    return Multiset(std::move(fs));
}

struct SchemaLine {
    std::vector<SchemaItem> antecedent;
    std::vector<SchemaItem> succedent;
};

SchemaLine parse_schema_line(const std::string& text, SourcePos start,
                             bool allow_context_vars) {
    Parser p(Lexer(text, start).run(), allow_context_vars);
    SchemaLine out;
    out.antecedent = p.side();
    p.take(Tok::Turnstile);
    out.succedent = p.side();
    p.expect_end();
    return out;
}

}  // namespace

bool SequentSchema::is_ground() const {
    for (const auto& it : items)
        if (std::holds_alternative<ContextVar>(it)) return false;
    return true;
}

std::string SequentSchema::pretty() const {
    std::string out = "|-";
    for (std::size_t i = 0; i < items.size(); ++i) {
        out += i ? ", " : " ";
        if (const auto* cv = std::get_if<ContextVar>(&items[i]))
            out += cv->name;
        else
            out += std::get<Formula>(items[i]).pretty();
    }
    return out;
}

Formula parse_formula(const std::string& text) {
    Parser p(Lexer(text, SourcePos{}).run(), false);
    Formula f = p.formula();
    p.expect_end();
    return f;
}

Sequent parse_sequent(const std::string& text) {
    SchemaLine line = parse_schema_line(text, SourcePos{}, false);
    return Sequent{to_multiset(line.antecedent, SourcePos{}),
                   to_multiset(line.succedent, SourcePos{})};
}

namespace {

bool is_separator(const std::string& line) {
    if (line.size() < 4) return false;
    for (char c : line)
        if (c != '-') return false;
    return true;
}

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::vector<RuleFile> parse_rule_files(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        lines.push_back(cur);
    }

    std::vector<RuleFile> out;
    std::set<std::string> names;
    std::size_t i = 0;
    auto pos_of = [](std::size_t idx) {
        return SourcePos{static_cast<int>(idx) + 1, 1};
    };

    while (true) {
        while (i < lines.size() && strip(lines[i]).empty()) ++i;
        if (i >= lines.size()) break;

        std::string header = strip(lines[i]);
        if (header.rfind("rule ", 0) != 0 || header.back() != ':')
            throw ParseError(pos_of(i), "expected rule header 'rule <name>:'");
        std::string name = strip(header.substr(5, header.size() - 6));
        if (name.empty())
            throw ParseError(pos_of(i), "empty rule name");
        if (!names.insert(name).second)
            throw ParseError(pos_of(i), "duplicate rule name '" + name + "'");
        ++i;

        RuleFile rule;
        rule.name = name;

        bool saw_separator = false;
        while (i < lines.size()) {
            std::string line = strip(lines[i]);
            if (line.empty()) { ++i; continue; }
            if (is_separator(line)) {
                saw_separator = true;
                ++i;
                break;
            }
            if (line.rfind("rule ", 0) == 0) break;
            SchemaLine parsed = parse_schema_line(line, pos_of(i), true);
            if (!parsed.antecedent.empty())
                throw ParseError(pos_of(i), "rule schemas are one-sided");
            rule.premises.push_back(SequentSchema{parsed.succedent});
            ++i;
        }
        if (!saw_separator)
            throw ParseError(pos_of(i < lines.size() ? i : lines.size() - 1),
                             "missing separator line in rule '" + name + "'");

        while (i < lines.size() && strip(lines[i]).empty()) ++i;
        if (i >= lines.size() || strip(lines[i]).rfind("rule ", 0) == 0)
            throw ParseError(pos_of(i < lines.size() ? i : lines.size() - 1),
                             "rule '" + name + "' has no conclusion");
        SchemaLine parsed = parse_schema_line(strip(lines[i]), pos_of(i), true);
        if (!parsed.antecedent.empty())
            throw ParseError(pos_of(i), "rule schemas are one-sided");
        rule.conclusion = SequentSchema{parsed.succedent};
        ++i;

        out.push_back(std::move(rule));
    }

    if (out.empty())
        throw ParseError(SourcePos{}, "no rules in input");
    return out;
}

RuleFile parse_rule_file(const std::string& text) {
    std::vector<RuleFile> rules = parse_rule_files(text);
    if (rules.size() != 1)
        throw ParseError(SourcePos{}, "expected exactly one rule, found " +
                                          std::to_string(rules.size()));
    return rules.front();
}

}  // namespace ll
