#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ll/sequent.hpp"

namespace ll {

enum class Rule {
    // one-sided MLL family
    Ax,
    One,
    Bot,
    Par,
    Tensor,
    Mix,
    Contraction,
    Empty,
    Hypothesis,
    Cut,
    // two-sided MILL family
    MillAx,
    MillUnitRight,
    MillUnitLeft,
    MillTensorLeft,
    MillTensorRight,
    MillLolliLeft,
    MillLolliRight,
};

std::string rule_name(Rule r);

struct ProofTree {
    Sequent conclusion;
    Rule rule = Rule::Ax;
    std::vector<ProofTree> premises;

    std::size_t rule_count() const;
    /// Rule names in premise-first order, e.g. {"one", "bot", "contraction"}.
    std::vector<std::string> rule_trace() const;
    std::string pretty(int indent = 0) const;
};

struct Violation {
    std::string where;    // path of premise indices from the root, e.g. "0.1"
    std::string message;
};

struct ValidationOptions {
    bool allow_cut = false;
    std::vector<Sequent> hypotheses;
    /// Skolem atoms standing for context variables; they must never be
    /// principal (ax pair or cut formula) so derivations lift to arbitrary
    /// multisets.
    std::vector<std::string> context_atoms;
};

/// Checks every node against its rule schema, including the multiset
/// bookkeeping of splits. Empty result means the proof is valid.
std::vector<Violation> validate_proof(const ProofTree& p, const Calculus& calc,
                                      const ValidationOptions& opts = {});

struct Verdict {
    enum class Kind { Provable, NotProvable, Unknown };

    Kind kind = Kind::Unknown;
    std::optional<ProofTree> proof;  // present iff Provable
    std::string reason;              // Unknown only

    bool provable() const { return kind == Kind::Provable; }
    std::string str() const;
};

}  // namespace ll
