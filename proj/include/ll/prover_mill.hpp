#pragma once

#include "ll/proof.hpp"
#include "ll/prover_mll.hpp"
#include "ll/sequent.hpp"

namespace ll {

/// Decides a two-sided IMLL sequent (single succedent, formulas in
/// MILL-expanded form) by exhaustive cut-free backward search.
Verdict prove_mill(const Sequent& s, const SearchConfig& cfg = {});

/// Expands dual/par definitions on both sides and decides lhs |- rhs.
Verdict check_entailment(const Formula& lhs, const Formula& rhs);

}  // namespace ll
