#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ll/formula.hpp"
#include "ll/parser.hpp"
#include "ll/sequent.hpp"

namespace ll {

/// The axiomatizations emitted to SMT-LIB2.
enum class TheoryKind {
    Fragment,  // the two-rule illustration: identity and currying
    MllMix,
    MllMixC,
    Mill,
};

TheoryKind theory_for(const Calculus& calc);
std::string theory_name(TheoryKind kind);

/// Minimal s-expression value used to build axioms and goals.
struct Sexp {
    std::string symbol;        // meaningful when leaf
    std::vector<Sexp> items;   // meaningful when !leaf
    bool leaf = true;

    static Sexp sym(std::string s) { return Sexp{std::move(s), {}, true}; }
    static Sexp list(std::vector<Sexp> items) {
        return Sexp{{}, std::move(items), false};
    }
    std::string str() const;
};

struct SmtFunction {
    std::string name;
    int arity = 0;
    bool returns_bool = false;  // otherwise returns the formula sort
};

struct SmtTheory {
    TheoryKind kind = TheoryKind::MllMix;
    std::string sort = "F";
    std::vector<SmtFunction> functions;
    std::vector<std::string> constants;
    std::vector<Sexp> axioms;
    std::vector<std::string> notes;  // emitted as leading comments
};

struct SmtScript {
    std::string text;
};

/// Goal of a satisfiability check: a candidate rule whose negation is
/// asserted on top of a theory.
struct SmtGoal {
    enum class Kind {
        Rule,        // one-sided schematic rule over provable/comma
        Entailment,  // lhs |- rhs between single formulas (entails)
        Equation,    // lhs == rhs on the formula sort
    };

    Kind kind = Kind::Rule;
    RuleFile rule;              // Kind::Rule
    std::optional<Formula> lhs, rhs;  // Entailment / Equation

    static SmtGoal from_rule(RuleFile r);
    static SmtGoal entailment(Formula lhs, Formula rhs);
    static SmtGoal equation(Formula lhs, Formula rhs);
};

/// Builds the axiom set for one of the tracked theories.
SmtTheory encode_theory(TheoryKind kind);
SmtTheory encode_theory(const Calculus& calc);

/// Renders a complete SMT-LIB2 script: preamble, declarations, one assert
/// per axiom, the (negated) goal, and a final (check-sat). Deterministic
/// byte-for-byte. Throws DomainError when the goal uses symbols the theory
/// does not declare.
SmtScript encode_check(const SmtTheory& theory,
                       const std::optional<SmtGoal>& goal, bool negate);

/// Golden consistency script for one of the appendix listings (no goal).
SmtScript paper_theory_listing(TheoryKind kind);

/// Re-parses a script and checks declarations, arities and variable
/// bindings. Empty result means well-formed.
std::vector<std::string> check_script(const SmtScript& script);

}  // namespace ll
