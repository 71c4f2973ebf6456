#include "ll/suite.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "ll/parser.hpp"
#include "ll/prover_mill.hpp"
#include "ll/prover_mll.hpp"
#include "ll/rule_checker.hpp"

namespace ll {

namespace {

using Kind = ManifestEntry::Kind;
using Paper = ManifestEntry::PaperVerdict;

ManifestEntry prove_entry(std::string name, Calculus calc, std::string seq,
                          Paper paper, TheoryKind theory, std::string cite) {
    ManifestEntry e;
    e.name = std::move(name);
    e.kind = Kind::ProveMll;
    e.calculus = calc;
    e.sequent = std::move(seq);
    e.paper = paper;
    e.theory = theory;
    e.citation = std::move(cite);
    return e;
}

ManifestEntry mill_entry(std::string name, std::string lhs, std::string rhs,
                         Paper paper, std::string cite,
                         TheoryKind theory = TheoryKind::Mill) {
    ManifestEntry e;
    e.name = std::move(name);
    e.kind = Kind::MillEntailment;
    e.calculus = Calculus::mill();
    e.lhs = std::move(lhs);
    e.rhs = std::move(rhs);
    e.paper = paper;
    e.theory = theory;
    e.citation = std::move(cite);
    return e;
}

std::vector<ManifestEntry> build_manifest() {
    std::vector<ManifestEntry> m;

    // --- MLL+Mix: derived rules (solver verdict unsat in the source) ---
    m.push_back(prove_entry("mix1", Calculus::mll_mix(), "|- 1, bot",
                            Paper::Unsat, TheoryKind::MllMix,
                            "derived rule (mix1)"));
    m.push_back(prove_entry("mix2", Calculus::mll_mix(), "|- a * b, a^ # b^",
                            Paper::Unsat, TheoryKind::MllMix,
                            "derived rule (mix2)"));
    {
        ManifestEntry e;
        e.name = "mix3";
        e.kind = Kind::CheckRule;
        e.calculus = Calculus::mll_mix();
        e.rule_text =
            "rule mix3:\n"
            "|- G, a\n"
            "|- D, b\n"
            "|- L, a^, b^\n"
            "----\n"
            "|- G, D, L\n";
        e.paper = Paper::Unsat;
        e.theory = TheoryKind::MllMix;
        e.citation = "derived rule (mix3)";
        m.push_back(e);
    }

    // --- MLL+Mix: invalid alternate formulations (solver verdict sat) ---
    {
        ManifestEntry e;
        e.name = "one-iff-bot";
        e.kind = Kind::Equiprovable;
        e.calculus = Calculus::mll_mix();
        e.sequent = "|- 1";
        e.sequent2 = "|- bot";
        e.paper = Paper::Sat;
        e.theory = TheoryKind::MllMix;
        e.citation = "invalid rule: 1 and bot interchangeable";
        m.push_back(e);
    }
    m.push_back(prove_entry("dual-bot-par-one", Calculus::mll_mix(),
                            "|- bot^ # 1", Paper::Sat, TheoryKind::MllMix,
                            "invalid rule: |- bot^ # 1"));
    m.push_back(prove_entry("bot", Calculus::mll_mix(), "|- bot", Paper::Sat,
                            TheoryKind::MllMix, "invalid rule: |- bot"));

    // --- MLL+Mix+C ---
    m.push_back(prove_entry("bot-under-contraction", Calculus::mll_mix_c(),
                            "|- bot", Paper::Unsat, TheoryKind::MllMixC,
                            "contraction makes |- bot provable"));

    // --- the two-rule illustration fragment ---
    m.push_back(mill_entry("modus-ponens-fragment", "x * (x -o y)", "y",
                           Paper::Unsat, "modus ponens over rules (i),(c)",
                           TheoryKind::Fragment));

    // --- MILL: derived rules (solver verdict unsat) ---
    m.push_back(mill_entry("modus-ponens", "x * (x -o y)", "y", Paper::Unsat,
                           "rule (ev)"));
    m.push_back(mill_entry("internal-composition", "(x -o y) * (y -o z)",
                           "x -o z", Paper::Unsat, "internal composition"));
    m.push_back(mill_entry("double-dual-intro", "x", "x^^", Paper::Unsat,
                           "x |- x dual dual"));
    m.push_back(mill_entry("par-to-lollipop", "x^ # y", "x -o y", Paper::Unsat,
                           "X dual par Y |- X -o Y"));
    m.push_back(mill_entry("par-to-dual-tensor", "x # y", "(x^ * y^)^",
                           Paper::Unsat, "x par y |- -(-x tensor -y)"));
    m.push_back(mill_entry("dual-i-to-i", "I^", "I", Paper::Unsat,
                           "I dual |- I"));
    m.push_back(mill_entry("i-to-dual-i", "I", "I^", Paper::Unsat,
                           "I |- I dual"));
    m.push_back(mill_entry("par-unit-intro", "x", "x # I", Paper::Unsat,
                           "X |- X par I"));

    // --- MILL: the propositions the solver ran out of memory on ---
    m.push_back(mill_entry("double-dual-elim", "x^^", "x", Paper::OutOfMemory,
                           "x dual dual |- x"));
    m.push_back(mill_entry("lollipop-to-par", "x -o y", "x^ # y",
                           Paper::OutOfMemory, "X -o Y |- X dual par Y"));
    m.push_back(mill_entry("dual-tensor-to-par", "(x^ * y^)^", "x # y",
                           Paper::OutOfMemory, "-(-x tensor -y) |- x par y"));
    m.push_back(mill_entry("par-unit-elim", "x # I", "x", Paper::OutOfMemory,
                           "X par I |- X"));
    m.push_back(mill_entry("distrib-par-over-tensor", "(x * y) # z",
                           "(x # z) * (y # z)", Paper::OutOfMemory,
                           "distributivity par tensor"));
    m.push_back(mill_entry("distrib-tensor-over-par", "(x # z) * (y # z)",
                           "(x * y) # z", Paper::OutOfMemory,
                           "distributivity par tensor"));

    return m;
}

std::string paper_str(Paper p) {
    switch (p) {
        case Paper::Unsat: return "unsat";
        case Paper::Sat: return "sat";
        case Paper::OutOfMemory: return "out-of-memory";
        case Paper::None: return "none";
    }
    return "?";
}

}  // namespace

const std::vector<ManifestEntry>& paper_manifest() {
    static const std::vector<ManifestEntry> manifest = build_manifest();
    return manifest;
}

SmtGoal manifest_goal(const ManifestEntry& entry) {
    switch (entry.kind) {
        case Kind::ProveMll: {
            RuleFile rule;
            rule.name = entry.name;
            std::string text = "rule r:\n----\n" + entry.sequent + "\n";
            return SmtGoal::from_rule(parse_rule_file(text));
        }
        case Kind::CheckRule:
            return SmtGoal::from_rule(parse_rule_file(entry.rule_text));
        case Kind::Equiprovable:
            // the source checks the bidirectional claim as an equation on
            // the formula sort
            return SmtGoal::equation(Formula::one(), Formula::bot());
        case Kind::MillEntailment:
            return SmtGoal::entailment(parse_formula(entry.lhs),
                                       parse_formula(entry.rhs));
    }
    throw DomainError("manifest_goal: unreachable");
}

std::vector<SuiteRow> run_paper_suite(const SuiteOptions& opts) {
    std::vector<SuiteRow> rows;
    for (const auto& entry : paper_manifest()) {
        SuiteRow row;
        row.name = entry.name;
        row.calculus = entry.calculus.name();

        auto t0 = std::chrono::steady_clock::now();
        switch (entry.kind) {
            case Kind::ProveMll: {
                Verdict v = prove(parse_sequent(entry.sequent), entry.calculus);
                row.native_verdict = v.str();
                if (v.kind == Verdict::Kind::Provable) row.native_holds = true;
                if (v.kind == Verdict::Kind::NotProvable) row.native_holds = false;
                break;
            }
            case Kind::CheckRule: {
                RuleVerdict v =
                    check_rule(parse_rule_file(entry.rule_text), entry.calculus);
                row.native_verdict = v.str();
                if (v.kind == RuleVerdict::Kind::Derivable) row.native_holds = true;
                if (v.kind == RuleVerdict::Kind::NotDerivable)
                    row.native_holds = false;
                break;
            }
            case Kind::Equiprovable: {
                Equiprovability eq =
                    decide_equiprovable(parse_sequent(entry.sequent),
                                        parse_sequent(entry.sequent2),
                                        entry.calculus);
                row.native_verdict =
                    eq.agree ? "equiprovable" : "not-equiprovable";
                if (eq.first.kind != Verdict::Kind::Unknown &&
                    eq.second.kind != Verdict::Kind::Unknown)
                    row.native_holds = eq.agree;
                break;
            }
            case Kind::MillEntailment: {
                Verdict v = check_entailment(parse_formula(entry.lhs),
                                             parse_formula(entry.rhs));
                row.native_verdict = v.str();
                if (v.kind == Verdict::Kind::Provable) row.native_holds = true;
                if (v.kind == Verdict::Kind::NotProvable) row.native_holds = false;
                break;
            }
        }
        row.native_s = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0)
                           .count();

        row.paper_verdict = paper_str(entry.paper);
        if (entry.paper == Paper::Unsat) row.paper_holds = true;
        if (entry.paper == Paper::Sat) row.paper_holds = false;

        if (opts.solver) {
            try {
                SmtScript script = encode_check(encode_theory(entry.theory),
                                                manifest_goal(entry), true);
                SolverResult r = run_solver(script, *opts.solver);
                row.solver_verdict = r.str();
                if (r.kind == SolverResult::Kind::Unsat) row.solver_holds = true;
                if (r.kind == SolverResult::Kind::Sat) row.solver_holds = false;
            } catch (const std::exception& ex) {
                row.solver_verdict = std::string("tool-error (") + ex.what() + ")";
            }
        }

        if (row.paper_holds && row.native_holds) {
            bool same = *row.paper_holds == *row.native_holds;
            row.agree = same ? "yes" : "no";
            row.ok = same;
        } else if (row.paper_holds) {
            row.agree = "no";
            row.ok = false;  // recorded verdict is definite, native is not
        } else {
            row.agree = "n/a";
            row.ok = true;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

bool suite_ok(const std::vector<SuiteRow>& rows) {
    for (const auto& r : rows)
        if (!r.ok) return false;
    return true;
}

std::string render_suite_table(const std::vector<SuiteRow>& rows) {
    std::ostringstream out;
    auto col = [&](const std::string& s, std::size_t w) {
        out << s;
        for (std::size_t i = s.size(); i < w; ++i) out << ' ';
        out << "  ";
    };
    col("rule", 24);
    col("calculus", 11);
    col("native", 26);
    col("paper", 13);
    col("solver", 18);
    out << "agree\n";
    for (const auto& r : rows) {
        col(r.name, 24);
        col(r.calculus, 11);
        col(r.native_verdict, 26);
        col(r.paper_verdict, 13);
        col(r.solver_verdict.empty() ? "-" : r.solver_verdict, 18);
        out << r.agree << "\n";
    }
    return out.str();
}

std::string render_suite_json(const std::vector<SuiteRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        arr.push_back({{"rule", r.name},
                       {"calculus", r.calculus},
                       {"native_verdict", r.native_verdict},
                       {"paper_verdict", r.paper_verdict},
                       {"solver_verdict", r.solver_verdict},
                       {"agree", r.agree}});
    }
    return arr.dump(2) + "\n";
}

}  // namespace ll
