#include "ll/smt.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace ll {

TheoryKind theory_for(const Calculus& calc) {
    calc.validate();
    if (calc.base == CalculusBase::MILL) return TheoryKind::Mill;
    if (calc.empty_seq)
        throw DomainError(
            "no SMT encoding for the empty-sequent rule; it needs the "
            "empty-multiset convention for comma");
    if (!calc.mix)
        throw DomainError("no SMT encoding for MLL without mix");
    return calc.contraction ? TheoryKind::MllMixC : TheoryKind::MllMix;
}

std::string theory_name(TheoryKind kind) {
    switch (kind) {
        case TheoryKind::Fragment: return "fragment";
        case TheoryKind::MllMix: return "mll+mix";
        case TheoryKind::MllMixC: return "mll+mix+c";
        case TheoryKind::Mill: return "mill";
    }
    return "?";
}

std::string Sexp::str() const {
    if (leaf) return symbol;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].str();
    }
    out += ')';
    return out;
}

namespace {

Sexp S(std::string s) { return Sexp::sym(std::move(s)); }

template <typename... Args>
Sexp app(std::string head, Args... args) {
    std::vector<Sexp> items{S(std::move(head)), std::move(args)...};
    return Sexp::list(std::move(items));
}

Sexp forall(const std::vector<std::string>& vars, Sexp body) {
    std::vector<Sexp> bindings;
    for (const auto& v : vars) bindings.push_back(Sexp::list({S(v), S("F")}));
    return Sexp::list({S("forall"), Sexp::list(std::move(bindings)), std::move(body)});
}

}  // namespace

SmtTheory encode_theory(TheoryKind kind) {
    SmtTheory t;
    t.kind = kind;
    switch (kind) {
        case TheoryKind::Fragment: {
            t.functions = {{"entails", 2, true}, {"tensor", 2, false},
                           {"lollipop", 2, false}};
            t.axioms = {
                // (i) identity
                forall({"x"}, app("entails", S("x"), S("x"))),
                // (c) currying
                forall({"x", "y", "z"},
                       app("=", app("entails", app("tensor", S("x"), S("y")), S("z")),
                           app("entails", S("y"), app("lollipop", S("x"), S("z"))))),
            };
            return t;
        }
        case TheoryKind::MllMix:
        case TheoryKind::MllMixC: {
            t.functions = {{"entails", 2, true}, {"provable", 1, true},
                           {"comma", 2, false}, {"par", 2, false},
                           {"tensor", 2, false}, {"dual", 1, false}};
            t.constants = {"bot", "one"};
            t.notes = {"entails is declared for fidelity with the source "
                       "encoding; the MLL+Mix axioms do not use it"};
            auto p = [](Sexp x) { return app("provable", std::move(x)); };
            auto comma = [](Sexp a, Sexp b) {
                return app("comma", std::move(a), std::move(b));
            };
            t.axioms = {
                // comma is a multiset union: associative and commutative
                forall({"a", "b", "g"},
                       app("=", comma(S("a"), comma(S("b"), S("g"))),
                           comma(comma(S("a"), S("b")), S("g")))),
                forall({"a", "b"},
                       app("=", comma(S("a"), S("b")), comma(S("b"), S("a")))),
                // (bot)
                forall({"g"}, app("=>", p(S("g")), p(comma(S("g"), S("bot"))))),
                // (1)
                p(S("one")),
                // (par)
                forall({"g", "a", "b"},
                       app("=>", p(comma(comma(S("g"), S("a")), S("b"))),
                           p(comma(S("g"), app("par", S("a"), S("b")))))),
                // (tensor)
                forall({"g", "a", "d", "b"},
                       app("=>",
                           app("and", p(comma(S("g"), S("a"))),
                               p(comma(S("d"), S("b")))),
                           p(comma(S("g"),
                                   comma(S("d"), app("tensor", S("a"), S("b"))))))),
                // (ax)
                forall({"a"}, p(comma(S("a"), app("dual", S("a"))))),
                // (cut)
                forall({"g", "d", "a"},
                       app("=>",
                           app("and", p(comma(S("g"), S("a"))),
                               p(comma(S("d"), app("dual", S("a"))))),
                           p(comma(S("g"), S("d"))))),
                // (mix)
                forall({"g", "d"},
                       app("=>", app("and", p(S("g")), p(S("d"))),
                           p(comma(S("g"), S("d"))))),
            };
            if (kind == TheoryKind::MllMixC) {
                // contraction (subset) rule
                t.axioms.push_back(forall(
                    {"a"}, app("=>", p(comma(S("one"), S("a"))), p(S("a")))));
            }
            return t;
        }
        case TheoryKind::Mill: {
            t.functions = {{"entails", 2, true}, {"par", 2, false},
                           {"tensor", 2, false}, {"lollipop", 2, false},
                           {"dual", 1, false}};
            t.constants = {"I"};
            auto e = [](Sexp a, Sexp b) {
                return app("entails", std::move(a), std::move(b));
            };
            auto ten = [](Sexp a, Sexp b) {
                return app("tensor", std::move(a), std::move(b));
            };
            t.axioms = {
                // (i)
                forall({"x"}, e(S("x"), S("x"))),
                // (o) composition
                forall({"x", "y", "z"},
                       app("=>", app("and", e(S("x"), S("y")), e(S("y"), S("z"))),
                           e(S("x"), S("z")))),
                // (tensor)
                forall({"w", "x", "y", "z"},
                       app("=>", app("and", e(S("w"), S("x")), e(S("y"), S("z"))),
                           e(ten(S("w"), S("y")), ten(S("x"), S("z"))))),
                // (a) associativity, double bar
                forall({"w", "x", "y", "z"},
                       app("=", e(S("w"), ten(ten(S("x"), S("y")), S("z"))),
                           e(S("w"), ten(S("x"), ten(S("y"), S("z")))))),
                // (l)
                forall({"x", "y"},
                       app("=", e(S("x"), ten(S("I"), S("y"))), e(S("x"), S("y")))),
                // (r)
                forall({"x", "y"},
                       app("=", e(S("x"), ten(S("y"), S("I"))), e(S("x"), S("y")))),
                // (b) braiding
                forall({"w", "x", "y"},
                       app("=", e(S("w"), ten(S("x"), S("y"))),
                           e(S("w"), ten(S("y"), S("x"))))),
                // (c) currying
                forall({"x", "y", "z"},
                       app("=", e(ten(S("x"), S("y")), S("z")),
                           e(S("y"), app("lollipop", S("x"), S("z"))))),
                // dual and par, by definition
                forall({"x"}, app("=", app("dual", S("x")),
                                  app("lollipop", S("x"), S("I")))),
                forall({"x", "y"},
                       app("=", app("par", S("x"), S("y")),
                           app("lollipop", app("dual", S("x")), S("y")))),
            };
            return t;
        }
    }
    throw DomainError("encode_theory: unreachable");
}

SmtTheory encode_theory(const Calculus& calc) {
    return encode_theory(theory_for(calc));
}

SmtGoal SmtGoal::from_rule(RuleFile r) {
    SmtGoal g;
    g.kind = Kind::Rule;
    g.rule = std::move(r);
    return g;
}

SmtGoal SmtGoal::entailment(Formula lhs, Formula rhs) {
    SmtGoal g;
    g.kind = Kind::Entailment;
    g.lhs = std::move(lhs);
    g.rhs = std::move(rhs);
    return g;
}

SmtGoal SmtGoal::equation(Formula lhs, Formula rhs) {
    SmtGoal g;
    g.kind = Kind::Equation;
    g.lhs = std::move(lhs);
    g.rhs = std::move(rhs);
    return g;
}

namespace {

struct GoalBuilder {
    const SmtTheory& theory;
    std::vector<std::string> formula_vars;  // first-appearance order
    std::vector<std::string> context_vars;

    bool has_function(const std::string& name) const {
        for (const auto& f : theory.functions)
            if (f.name == name) return true;
        return false;
    }

    bool has_constant(const std::string& name) const {
        return std::find(theory.constants.begin(), theory.constants.end(),
                         name) != theory.constants.end();
    }

    Sexp fn(const std::string& name, std::vector<Sexp> args) const {
        if (!has_function(name))
            throw DomainError("goal uses '" + name +
                              "', which theory " + theory_name(theory.kind) +
                              " does not declare");
        std::vector<Sexp> items{S(name)};
        for (auto& a : args) items.push_back(std::move(a));
        return Sexp::list(std::move(items));
    }

    Sexp constant(const std::string& name) const {
        if (!has_constant(name))
            throw DomainError("goal uses constant '" + name +
                              "', which theory " + theory_name(theory.kind) +
                              " does not declare");
        return S(name);
    }

    void note_var(std::vector<std::string>& vars, const std::string& name) {
        if (has_constant(name))
            throw DomainError("goal variable '" + name +
                              "' shadows a theory constant");
        if (std::find(vars.begin(), vars.end(), name) == vars.end())
            vars.push_back(name);
    }

    Sexp term(const Formula& f) {
        switch (f.conn()) {
            case Conn::Atom:
                note_var(formula_vars, f.name());
                return S(f.name());
            case Conn::DualAtom:
                note_var(formula_vars, f.name());
                return fn("dual", {S(f.name())});
            case Conn::Dual:
                return fn("dual", {term(f.child())});
            case Conn::Tensor:
                return fn("tensor", {term(f.left()), term(f.right())});
            case Conn::Par:
                return fn("par", {term(f.left()), term(f.right())});
            case Conn::Lollipop:
                return fn("lollipop", {term(f.left()), term(f.right())});
            case Conn::One:
                return constant("one");
            case Conn::Bot:
                return constant("bot");
            case Conn::UnitI:
                return constant("I");
        }
        throw DomainError("term: unreachable");
    }

    std::string context_var_symbol(const std::string& name) {
        std::string sym;
        for (char c : name)
            sym += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        while (std::find(formula_vars.begin(), formula_vars.end(), sym) !=
                   formula_vars.end() ||
               has_constant(sym))
            sym += "_ctx";
        return sym;
    }

    Sexp schema_term(const SequentSchema& schema) {
        if (schema.items.empty())
            throw DomainError(
                "empty schema side has no SMT term (the comma convention for "
                "the empty multiset is not encoded)");
        std::optional<Sexp> folded;
        for (const auto& item : schema.items) {
            Sexp t = S("");
            if (const auto* cv = std::get_if<ContextVar>(&item)) {
                std::string sym = context_var_symbol(cv->name);
                note_var(context_vars, sym);
                t = S(sym);
            } else {
                t = term(std::get<Formula>(item));
            }
            if (!folded)
                folded = std::move(t);
            else
                folded = fn("comma", {std::move(*folded), std::move(t)});
        }
        return fn("provable", {std::move(*folded)});
    }

    Sexp build(const SmtGoal& goal) {
        Sexp body = S("");
        switch (goal.kind) {
            case SmtGoal::Kind::Rule: {
                // formula variables are collected before context variables so
                // the binder order is formula-vars-first, as in the source
                // encodings
                std::vector<Sexp> premises;
                for (const auto& p : goal.rule.premises)
                    premises.push_back(schema_term(p));
                Sexp conclusion = schema_term(goal.rule.conclusion);
                if (premises.empty()) {
                    body = std::move(conclusion);
                } else {
                    Sexp conj = std::move(premises[0]);
                    for (std::size_t i = 1; i < premises.size(); ++i)
                        conj = app("and", std::move(conj), std::move(premises[i]));
                    body = app("=>", std::move(conj), std::move(conclusion));
                }
                break;
            }
            case SmtGoal::Kind::Entailment:
                body = fn("entails", {term(*goal.lhs), term(*goal.rhs)});
                break;
            case SmtGoal::Kind::Equation:
                body = app("=", term(*goal.lhs), term(*goal.rhs));
                break;
        }
        std::vector<std::string> vars = formula_vars;
        vars.insert(vars.end(), context_vars.begin(), context_vars.end());
        if (vars.empty()) return body;
        return forall(vars, std::move(body));
    }
};

}  // namespace

SmtScript encode_check(const SmtTheory& theory,
                       const std::optional<SmtGoal>& goal, bool negate) {
    std::string out;
    out += "; theory: " + theory_name(theory.kind) + "\n";
    out += "(set-logic UF)\n";
    out += "(declare-sort " + theory.sort + " 0)\n";
    for (const auto& f : theory.functions) {
        out += "(declare-fun " + f.name + " (";
        for (int i = 0; i < f.arity; ++i) {
            if (i) out += ' ';
            out += theory.sort;
        }
        out += ") ";
        out += f.returns_bool ? "Bool" : theory.sort;
        out += ")\n";
    }
    for (const auto& c : theory.constants)
        out += "(declare-const " + c + " " + theory.sort + ")\n";
    for (const auto& n : theory.notes) out += "; " + n + "\n";
    for (const auto& a : theory.axioms) out += "(assert " + a.str() + ")\n";
    if (goal) {
        GoalBuilder builder{theory};
        Sexp body = builder.build(*goal);
        if (negate) body = app("not", std::move(body));
        out += "(assert " + body.str() + ")\n";
    }
    out += "(check-sat)\n";
    return SmtScript{std::move(out)};
}

SmtScript paper_theory_listing(TheoryKind kind) {
    return encode_check(encode_theory(kind), std::nullopt, false);
}

// ---------------------------------------------------------------------------
// Script reader: declaration and arity checking for emitted scripts.

namespace {

struct Reader {
    const std::string& text;
    std::size_t i = 0;
    std::vector<std::string> errors;

    void skip() {
        while (i < text.size()) {
            char c = text[i];
            if (c == ';') {
                while (i < text.size() && text[i] != '\n') ++i;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++i;
            } else {
                break;
            }
        }
    }

    std::optional<Sexp> next() {
        skip();
        if (i >= text.size()) return std::nullopt;
        if (text[i] == '(') {
            ++i;
            std::vector<Sexp> items;
            while (true) {
                skip();
                if (i >= text.size()) {
                    errors.push_back("unbalanced '('");
                    return std::nullopt;
                }
                if (text[i] == ')') {
                    ++i;
                    return Sexp::list(std::move(items));
                }
                auto item = next();
                if (!item) return std::nullopt;
                items.push_back(std::move(*item));
            }
        }
        if (text[i] == ')') {
            errors.push_back("unbalanced ')'");
            ++i;
            return std::nullopt;
        }
        std::string sym;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
               text[i] != '(' && text[i] != ')' && text[i] != ';')
            sym += text[i++];
        return S(std::move(sym));
    }
};

struct ScriptChecker {
    std::vector<std::string> errors;
    std::set<std::string> sorts;
    std::map<std::string, std::pair<std::vector<std::string>, std::string>> funcs;
    std::map<std::string, std::string> consts;

    void fail(const std::string& msg) { errors.push_back(msg); }

    bool known_sort(const std::string& s) {
        return s == "Bool" || sorts.count(s) > 0;
    }

    // returns the sort of the term, or "" on error
    std::string term_sort(const Sexp& t,
                          std::map<std::string, std::string>& vars) {
        if (t.leaf) {
            if (auto it = vars.find(t.symbol); it != vars.end()) return it->second;
            if (auto it = consts.find(t.symbol); it != consts.end())
                return it->second;
            if (t.symbol == "true" || t.symbol == "false") return "Bool";
            fail("undeclared symbol '" + t.symbol + "'");
            return "";
        }
        if (t.items.empty() || !t.items[0].leaf) {
            fail("malformed application");
            return "";
        }
        const std::string& head = t.items[0].symbol;
        auto args_bool = [&](const char* name) {
            for (std::size_t k = 1; k < t.items.size(); ++k)
                if (term_sort(t.items[k], vars) != "Bool")
                    fail(std::string(name) + ": Bool argument expected");
            return std::string("Bool");
        };
        if (head == "and" || head == "or") return args_bool(head.c_str());
        if (head == "not" || head == "=>") {
            if ((head == "not" && t.items.size() != 2) ||
                (head == "=>" && t.items.size() < 3))
                fail(head + ": wrong argument count");
            return args_bool(head.c_str());
        }
        if (head == "=") {
            if (t.items.size() < 3) {
                fail("=: needs two arguments");
                return "Bool";
            }
            std::string s1 = term_sort(t.items[1], vars);
            for (std::size_t k = 2; k < t.items.size(); ++k)
                if (term_sort(t.items[k], vars) != s1)
                    fail("=: argument sorts differ");
            return "Bool";
        }
        if (head == "forall" || head == "exists") {
            if (t.items.size() != 3 || t.items[1].leaf) {
                fail(head + ": malformed binder");
                return "Bool";
            }
            std::map<std::string, std::string> inner = vars;
            for (const auto& b : t.items[1].items) {
                if (b.leaf || b.items.size() != 2 || !b.items[0].leaf ||
                    !b.items[1].leaf) {
                    fail(head + ": malformed binding");
                    continue;
                }
                if (!known_sort(b.items[1].symbol))
                    fail(head + ": unknown sort '" + b.items[1].symbol + "'");
                inner[b.items[0].symbol] = b.items[1].symbol;
            }
            if (term_sort(t.items[2], inner) != "Bool")
                fail(head + ": body must be Bool");
            return "Bool";
        }
        auto it = funcs.find(head);
        if (it == funcs.end()) {
            fail("undeclared function '" + head + "'");
            return "";
        }
        const auto& [params, ret] = it->second;
        if (t.items.size() - 1 != params.size()) {
            fail("'" + head + "': expected " + std::to_string(params.size()) +
                 " arguments, got " + std::to_string(t.items.size() - 1));
            return ret;
        }
        for (std::size_t k = 0; k < params.size(); ++k)
            if (term_sort(t.items[k + 1], vars) != params[k])
                fail("'" + head + "': argument " + std::to_string(k + 1) +
                     " has the wrong sort");
        return ret;
    }

    void command(const Sexp& c) {
        if (c.leaf || c.items.empty() || !c.items[0].leaf) {
            fail("malformed command");
            return;
        }
        const std::string& head = c.items[0].symbol;
        if (head == "set-logic" || head == "set-option" || head == "set-info" ||
            head == "check-sat" || head == "exit" || head == "get-model")
            return;
        if (head == "declare-sort") {
            if (c.items.size() == 3 && c.items[1].leaf)
                sorts.insert(c.items[1].symbol);
            else
                fail("declare-sort: malformed");
            return;
        }
        if (head == "declare-fun") {
            if (c.items.size() != 4 || !c.items[1].leaf || c.items[2].leaf ||
                !c.items[3].leaf) {
                fail("declare-fun: malformed");
                return;
            }
            std::vector<std::string> params;
            for (const auto& p : c.items[2].items) {
                if (!p.leaf || !known_sort(p.symbol))
                    fail("declare-fun: unknown parameter sort");
                params.push_back(p.leaf ? p.symbol : "");
            }
            if (!known_sort(c.items[3].symbol))
                fail("declare-fun: unknown return sort");
            if (params.empty())
                consts[c.items[1].symbol] = c.items[3].symbol;
            else
                funcs[c.items[1].symbol] = {params, c.items[3].symbol};
            return;
        }
        if (head == "declare-const") {
            if (c.items.size() != 3 || !c.items[1].leaf || !c.items[2].leaf ||
                !known_sort(c.items[2].symbol)) {
                fail("declare-const: malformed");
                return;
            }
            consts[c.items[1].symbol] = c.items[2].symbol;
            return;
        }
        if (head == "assert") {
            if (c.items.size() != 2) {
                fail("assert: needs one term");
                return;
            }
            std::map<std::string, std::string> vars;
            if (term_sort(c.items[1], vars) != "Bool")
                fail("assert: term must be Bool");
            return;
        }
        fail("unknown command '" + head + "'");
    }
};

}  // namespace

std::vector<std::string> check_script(const SmtScript& script) {
    Reader reader{script.text};
    ScriptChecker checker;
    while (auto c = reader.next()) checker.command(*c);
    checker.errors.insert(checker.errors.begin(), reader.errors.begin(),
                          reader.errors.end());
    return checker.errors;
}

}  // namespace ll
