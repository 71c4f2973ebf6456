#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ll/parser.hpp"
#include "ll/proof.hpp"
#include "ll/sequent.hpp"

namespace ll {

struct CheckConfig {
    /// Cap on cut applications along one branch of the derivation search.
    int cut_budget = 4;
    /// How many fresh atoms each context variable is instantiated with.
    int context_arity = 1;
};

struct SkolemizedRule {
    std::vector<Sequent> hypotheses;
    Sequent goal;
    std::vector<std::string> context_atoms;
};

/// Replaces each context variable with fresh atoms and normalizes all
/// formulas to literal NNF. Throws DomainError on schema violations
/// (repeated context variable, non-MLL formulas).
SkolemizedRule skolemize(const RuleFile& rule, int context_arity = 1);

struct RuleVerdict {
    enum class Kind { Derivable, NotDerivable, Unknown };

    Kind kind = Kind::Unknown;
    std::optional<ProofTree> derivation;  // Derivable only; hypothesis leaves
    std::string reason;

    bool derivable() const { return kind == Kind::Derivable; }
    std::string str() const;
};

/// Checks whether the rule's conclusion is derivable from its premises in
/// the given MLL-family calculus, allowing cut against a finite candidate
/// set. Zero-premise rules are decided exactly via prove(); with premises a
/// failed bounded search yields Unknown, never NotDerivable.
RuleVerdict check_rule(const RuleFile& rule, const Calculus& calc,
                       const CheckConfig& cfg = {});

}  // namespace ll
