#pragma once

#include <optional>

#include "ll/proof.hpp"
#include "ll/sequent.hpp"

namespace ll {

struct SearchConfig {
    /// Per-branch cap on backward contraction steps; defaults to twice the
    /// node count of the input sequent.
    std::optional<int> c_budget;
};

/// Decides a one-sided sequent in MLL, MLL+Mix or MLL+Mix+(empty);
/// sound-but-bounded for MLL+Mix+C. Formulas are normalized to literal NNF
/// first (duals of units stay opaque, matching the axiomatization where dual
/// is a free symbol). Provable verdicts carry a validated proof.
Verdict prove(const Sequent& s, const Calculus& calc,
              const SearchConfig& cfg = {});

struct Equiprovability {
    Verdict first;
    Verdict second;
    /// True when both verdicts are definite and equal.
    bool agree = false;
};

Equiprovability decide_equiprovable(const Sequent& s1, const Sequent& s2,
                                    const Calculus& calc);

}  // namespace ll
