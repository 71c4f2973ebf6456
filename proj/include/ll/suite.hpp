#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ll/sequent.hpp"
#include "ll/smt.hpp"
#include "ll/solver_runner.hpp"

namespace ll {

/// One row of the checked-in result manifest: a rule or sequent, the
/// calculus it lives in, and the previously reported solver verdict for it
/// (if any).
struct ManifestEntry {
    enum class Kind { ProveMll, CheckRule, Equiprovable, MillEntailment };
    enum class PaperVerdict { Unsat, Sat, OutOfMemory, None };

    std::string name;
    Kind kind = Kind::ProveMll;
    Calculus calculus;
    std::string sequent;    // ProveMll; first sequent for Equiprovable
    std::string sequent2;   // Equiprovable
    std::string rule_text;  // CheckRule
    std::string lhs, rhs;   // MillEntailment
    PaperVerdict paper = PaperVerdict::None;
    TheoryKind theory = TheoryKind::MllMix;
    std::string citation;
};

const std::vector<ManifestEntry>& paper_manifest();

/// The negated-rule goal for the entry's SMT check.
SmtGoal manifest_goal(const ManifestEntry& entry);

struct SuiteRow {
    std::string name;
    std::string calculus;
    std::string native_verdict;
    std::optional<bool> native_holds;
    std::string paper_verdict;
    std::optional<bool> paper_holds;
    std::string solver_verdict;  // empty when the solver was not run
    std::optional<bool> solver_holds;
    std::string agree;  // "yes", "no" or "n/a"
    bool ok = true;     // native matches the recorded verdict where definite
    double native_s = 0.0;
};

struct SuiteOptions {
    std::optional<SolverConfig> solver;  // run the SMT path when set
};

std::vector<SuiteRow> run_paper_suite(const SuiteOptions& opts = {});

std::string render_suite_table(const std::vector<SuiteRow>& rows);
std::string render_suite_json(const std::vector<SuiteRow>& rows);
bool suite_ok(const std::vector<SuiteRow>& rows);

}  // namespace ll
