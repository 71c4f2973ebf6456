// Acceptance gate: one PASS/FAIL line per criterion, exit nonzero on any
// failure. Criteria that need an external SMT solver degrade to a note when
// none is installed.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "ll/parser.hpp"
#include "ll/prover_mill.hpp"
#include "ll/prover_mll.hpp"
#include "ll/rule_checker.hpp"
#include "ll/smt.hpp"
#include "ll/solver_runner.hpp"
#include "ll/suite.hpp"

using namespace ll;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
    void note(const std::string& what) {
        if (!detail.empty()) detail += "; ";
        detail += what;
    }
};

void run(const std::string& name, const std::function<void(Criterion&)>& body) {
    Criterion c{name};
    try {
        body(c);
    } catch (const std::exception& e) {
        c.ok = false;
        c.note(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok ? "PASS" : "FAIL") << "  " << name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
    if (!c.ok) ++failures;
}

double secs_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
auto timed(Criterion& c, double limit, const std::string& what, F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    auto result = f();
    double s = secs_since(t0);
    c.require(s < limit, what + " took " + std::to_string(s) + "s");
    return result;
}

const char* kMix3 =
    "rule mix3:\n|- G, a\n|- D, b\n|- L, a^, b^\n----\n|- G, D, L\n";

}  // namespace

int main() {
    run("1. first batch of derived and refuted rules", [](Criterion& c) {
        auto mm = Calculus::mll_mix();
        c.require(timed(c, 1.0, "|- 1, bot", [&] {
                      return prove(parse_sequent("|- 1, bot"), mm);
                  }).provable(),
                  "|- 1, bot not provable");
        c.require(timed(c, 1.0, "|- a*b, a^#b^", [&] {
                      return prove(parse_sequent("|- a * b, a^ # b^"), mm);
                  }).provable(),
                  "|- a*b, a^#b^ not provable");
        c.require(timed(c, 1.0, "mix3", [&] {
                      return check_rule(parse_rule_file(kMix3), mm);
                  }).derivable(),
                  "mix3 not derivable");
        c.require(timed(c, 1.0, "|- bot", [&] {
                      return prove(parse_sequent("|- bot"), mm);
                  }).kind == Verdict::Kind::NotProvable,
                  "|- bot not refuted");
        c.require(timed(c, 1.0, "|- bot^ # 1", [&] {
                      return prove(parse_sequent("|- bot^ # 1"), mm);
                  }).kind == Verdict::Kind::NotProvable,
                  "|- bot^ # 1 not refuted");
        auto eq = timed(c, 1.0, "1 vs bot", [&] {
            return decide_equiprovable(parse_sequent("|- 1"),
                                       parse_sequent("|- bot"), mm);
        });
        c.require(!eq.agree && eq.first.provable() &&
                      eq.second.kind == Verdict::Kind::NotProvable,
                  "1 vs bot equiprovability must disagree");
    });

    run("2. contraction and empty-sequent extensions", [](Criterion& c) {
        Verdict v = prove(parse_sequent("|- bot"), Calculus::mll_mix_c());
        c.require(v.provable(), "|- bot not provable with contraction");
        if (v.proof) {
            c.require(v.proof->rule_count() == 3, "proof is not 3 rules");
            c.require(v.proof->rule_trace() ==
                          std::vector<std::string>{"one", "bot", "contraction"},
                      "rule order is not (one),(bot),(contraction)");
            c.require(
                validate_proof(*v.proof, Calculus::mll_mix_c()).empty(),
                "proof does not validate");
        }
        Verdict e = prove(parse_sequent("|- bot"), Calculus::mll_mix_empty());
        c.require(e.provable(), "|- bot not provable with the empty rule");
        if (e.proof)
            c.require(e.proof->rule_trace() ==
                          std::vector<std::string>{"empty", "bot"},
                      "empty-rule proof is not (empty),(bot)");
    });

    run("3. the eight derived entailments in the intuitionistic fragment",
        [](Criterion& c) {
            const std::pair<const char*, const char*> cases[] = {
                {"x * (x -o y)", "y"},
                {"(x -o y) * (y -o z)", "x -o z"},
                {"x", "x^^"},
                {"x^ # y", "x -o y"},
                {"x # y", "(x^ * y^)^"},
                {"x", "x # I"},
                {"I^", "I"},
                {"I", "I^"},
            };
            for (const auto& [l, r] : cases) {
                std::string what = std::string(l) + " |- " + r;
                auto v = timed(c, 5.0, what, [&] {
                    return check_entailment(parse_formula(l), parse_formula(r));
                });
                c.require(v.provable(), what + " not provable");
            }
        });

    run("4. definite verdicts where the solver ran out of memory",
        [](Criterion& c) {
            const std::pair<const char*, const char*> refuted[] = {
                {"x^^", "x"},
                {"x -o y", "x^ # y"},
                {"(x^ * y^)^", "x # y"},
                {"x # I", "x"},
                {"(x * y) # z", "(x # z) * (y # z)"},
                {"(x # z) * (y # z)", "(x * y) # z"},
            };
            for (const auto& [l, r] : refuted) {
                Verdict v = check_entailment(parse_formula(l), parse_formula(r));
                std::string what = std::string(l) + " |- " + r;
                c.require(v.kind != Verdict::Kind::Unknown,
                          what + " is not definite");
                c.require(v.kind == Verdict::Kind::NotProvable,
                          what + " expected refuted");
                if (v.proof)
                    c.require(
                        validate_proof(*v.proof, Calculus::mill()).empty(),
                        what + " proof invalid");
            }
            Verdict a = check_entailment(parse_formula("x # I"),
                                         parse_formula("x"));
            Verdict b = check_entailment(parse_formula("x^^"),
                                         parse_formula("x"));
            c.require(a.kind == b.kind,
                      "x # I |- x and x^^ |- x must agree");
        });

    auto solver = default_solver();

    run("5. golden scripts and live solver verdicts", [&](Criterion& c) {
        auto read = [](const std::string& p) {
            std::ifstream in(p, std::ios::binary);
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        };
        std::string dir = std::string(LL_DATA_DIR) + "/smt/";
        c.require(paper_theory_listing(TheoryKind::Fragment).text ==
                      read(dir + "listing1.smt2"),
                  "listing1 differs from golden");
        c.require(paper_theory_listing(TheoryKind::MllMix).text ==
                      read(dir + "listing2.smt2"),
                  "listing2 differs from golden");
        c.require(paper_theory_listing(TheoryKind::Mill).text ==
                      read(dir + "listing3.smt2"),
                  "listing3 differs from golden");
        if (!solver) {
            c.note("no SMT solver on PATH; live checks skipped");
            return;
        }
        SolverConfig cfg = *solver;
        cfg.timeout_s = 60;
        auto verdict = [&](TheoryKind th, const SmtGoal& g) {
            return run_solver(encode_check(encode_theory(th), g, true), cfg);
        };
        c.require(verdict(TheoryKind::Fragment,
                          SmtGoal::entailment(parse_formula("x * (x -o y)"),
                                              parse_formula("y")))
                          .kind == SolverResult::Kind::Unsat,
                  "modus ponens not unsat");
        c.require(run_solver(paper_theory_listing(TheoryKind::MllMix), cfg)
                          .kind == SolverResult::Kind::Sat,
                  "mll+mix consistency not sat");
        c.require(verdict(TheoryKind::MllMix,
                          SmtGoal::equation(Formula::one(), Formula::bot()))
                          .kind == SolverResult::Kind::Sat,
                  "one == bot negation not sat");
        c.require(
            verdict(TheoryKind::MllMix,
                    SmtGoal::from_rule(
                        parse_rule_file("rule g:\n----\n|- bot^ # 1\n")))
                    .kind == SolverResult::Kind::Sat,
            "|- bot^ # 1 negation not sat");
        c.require(verdict(TheoryKind::MllMix,
                          SmtGoal::from_rule(
                              parse_rule_file("rule g:\n----\n|- bot\n")))
                          .kind == SolverResult::Kind::Sat,
                  "|- bot negation not sat");
        // a known runaway case under a tight cap: unknown/timeout/oom all pass
        SolverConfig capped = *solver;
        capped.timeout_s = 5;
        SolverResult oom = run_solver(
            encode_check(encode_theory(TheoryKind::Mill),
                         SmtGoal::entailment(parse_formula("x^^"),
                                             parse_formula("x")),
                         true),
            capped);
        c.require(oom.kind != SolverResult::Kind::Sat &&
                      oom.kind != SolverResult::Kind::ToolError,
                  "capped runaway case: got " + oom.str());
    });

    run("6. native/solver cross-validation over the manifest",
        [&](Criterion& c) {
            SuiteOptions opts;
            if (solver) {
                opts.solver = *solver;
                opts.solver->timeout_s = 10;
            } else {
                c.note("no SMT solver on PATH; native-vs-reported only");
            }
            auto rows = run_paper_suite(opts);
            c.require(rows.size() >= 20, "manifest unexpectedly small");
            for (const auto& row : rows) {
                c.require(row.ok, row.name + ": native disagrees with the reported verdict");
                if (row.native_holds && row.solver_holds)
                    c.require(*row.native_holds == *row.solver_holds,
                              row.name + ": native and live solver disagree");
            }
        });

    run("7. property suites", [](Criterion& c) {
        auto t0 = std::chrono::steady_clock::now();

        std::mt19937 rng(20260823);
        for (int i = 0; i < 10000; ++i) {
            Formula f = gen::random_mll_nnf(rng, 12);
            if (dualize(dualize(f)) != f) {
                c.require(false, "dualize not involutive on " + f.pretty());
                break;
            }
        }

        std::mt19937 rng2(4242);
        for (int i = 0; i < 1000; ++i) {
            Sequent s = gen::random_one_sided(rng2, 4, 5);
            std::vector<Formula> items = s.succedent.items();
            std::shuffle(items.begin(), items.end(), rng2);
            Sequent t{{}, Multiset(items)};
            if (prove(s, Calculus::mll_mix()).kind !=
                prove(t, Calculus::mll_mix()).kind) {
                c.require(false, "permutation changed verdict of " + s.pretty());
                break;
            }
        }

        std::mt19937 rng3(777);
        int checked = 0;
        for (int i = 0; i < 300; ++i) {
            Sequent s = gen::random_one_sided(rng3, 3, 5);
            Verdict v = prove(s, Calculus::mll_mix());
            if (v.provable()) {
                ++checked;
                if (!validate_proof(*v.proof, Calculus::mll_mix()).empty()) {
                    c.require(false, "invalid proof for " + s.pretty());
                    break;
                }
            }
        }
        c.require(checked > 10, "too few provable instances generated");

        int mill_checked = 0;
        const char* mill_seqs[] = {"x * (x -o y) |- y", "x, y |- x * y",
                                   "|- x -o x", "x -o y, x |- y"};
        for (const char* text : mill_seqs) {
            Sequent parsed = parse_sequent(text);
            std::vector<Formula> ante, succ;
            for (const auto& f : parsed.antecedent.items())
                ante.push_back(expand_defs(f));
            for (const auto& f : parsed.succedent.items())
                succ.push_back(expand_defs(f));
            Verdict v = prove_mill(Sequent{Multiset(ante), Multiset(succ)});
            if (v.provable() &&
                validate_proof(*v.proof, Calculus::mill()).empty())
                ++mill_checked;
        }
        c.require(mill_checked == 4, "a mill proof failed validation");

        auto formulas = gen::enumerate_mll_nnf(6);
        c.require(formulas.size() == 1806,
                  "enumeration produced " + std::to_string(formulas.size()));
        for (const auto& f : formulas) {
            Verdict v = prove(Sequent{{}, Multiset{f, dualize(f)}},
                              Calculus::mll_mix());
            if (!v.provable()) {
                c.require(false, "|- f, f-dual failed for " + f.pretty());
                break;
            }
        }

        std::mt19937 rng4(123456);
        for (int i = 0; i < 10000; ++i) {
            Formula f = gen::random_formula(rng4, 5);
            if (parse_formula(f.pretty()) != f) {
                c.require(false, "round-trip failed for " + f.pretty());
                break;
            }
        }

        double total = secs_since(t0);
        c.require(total < 60.0,
                  "native suite took " + std::to_string(total) + "s");
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
