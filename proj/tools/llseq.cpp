// llseq: sequent toolkit for multiplicative linear logic.
//
// Subcommands: parse, prove, check-rule, emit-smt, run-smt, paper-suite.
// Exit codes: 0 = provable/derivable/ok, 1 = not provable, 2 = unknown,
// 64 = usage or parse error. Reports go to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ll/parser.hpp"
#include "ll/prover_mill.hpp"
#include "ll/prover_mll.hpp"
#include "ll/rule_checker.hpp"
#include "ll/smt.hpp"
#include "ll/solver_runner.hpp"
#include "ll/suite.hpp"

namespace {

constexpr int kExitProvable = 0;
constexpr int kExitNotProvable = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 64;

ll::Calculus calculus_from_name(const std::string& name) {
    if (name == "mll") return ll::Calculus::mll();
    if (name == "mll-mix") return ll::Calculus::mll_mix();
    if (name == "mll-mix-c") return ll::Calculus::mll_mix_c();
    if (name == "mll-mix-empty") return ll::Calculus::mll_mix_empty();
    if (name == "mill") return ll::Calculus::mill();
    throw CLI::ValidationError("--calculus", "unknown calculus: " + name);
}

ll::TheoryKind theory_from_name(const std::string& name) {
    if (name == "fragment") return ll::TheoryKind::Fragment;
    if (name == "mll-mix") return ll::TheoryKind::MllMix;
    if (name == "mll-mix-c") return ll::TheoryKind::MllMixC;
    if (name == "mill") return ll::TheoryKind::Mill;
    throw CLI::ValidationError("--calculus", "unknown theory: " + name);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void report_parse_error(const ll::ParseError& e) {
    std::cerr << "parse error at " << e.pos.line << ":" << e.pos.column << ": "
              << e.message;
    if (!e.expected.empty()) {
        std::cerr << " (expected";
        for (const auto& x : e.expected) std::cerr << " " << x;
        std::cerr << ")";
    }
    std::cerr << "\n";
}

std::string json_ast(const ll::Formula& f) {
    using nlohmann::json;
    json j;
    switch (f.conn()) {
        case ll::Conn::One: j["conn"] = "one"; break;
        case ll::Conn::Bot: j["conn"] = "bot"; break;
        case ll::Conn::UnitI: j["conn"] = "unit-i"; break;
        case ll::Conn::Atom:
            j["conn"] = "atom";
            j["name"] = f.name();
            break;
        case ll::Conn::DualAtom:
            j["conn"] = "dual-atom";
            j["name"] = f.name();
            break;
        case ll::Conn::Dual:
            j["conn"] = "dual";
            j["child"] = json::parse(json_ast(f.child()));
            break;
        case ll::Conn::Tensor:
        case ll::Conn::Par:
        case ll::Conn::Lollipop:
            j["conn"] = f.conn() == ll::Conn::Tensor  ? "tensor"
                        : f.conn() == ll::Conn::Par   ? "par"
                                                      : "lollipop";
            j["left"] = json::parse(json_ast(f.left()));
            j["right"] = json::parse(json_ast(f.right()));
            break;
    }
    return j.dump();
}

int cmd_parse(const std::string& text, bool as_sequent,
              const std::string& format) {
    if (as_sequent) {
        ll::Sequent s = ll::parse_sequent(text);
        if (format == "json") {
            nlohmann::json j;
            auto side = [](const ll::Multiset& m) {
                nlohmann::json arr = nlohmann::json::array();
                for (const auto& f : m.items())
                    arr.push_back(nlohmann::json::parse(json_ast(f)));
                return arr;
            };
            j["antecedent"] = side(s.antecedent);
            j["succedent"] = side(s.succedent);
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << s.pretty() << "\n";
        }
    } else {
        ll::Formula f = ll::parse_formula(text);
        if (format == "json")
            std::cout << nlohmann::json::parse(json_ast(f)).dump(2) << "\n";
        else
            std::cout << f.pretty() << "\n";
    }
    return kExitProvable;
}

int cmd_prove(const std::string& text, const std::string& calculus,
              const std::string& format, bool show_proof) {
    ll::Calculus calc = calculus_from_name(calculus);
    ll::Sequent s = ll::parse_sequent(text);

    ll::Verdict v;
    if (calc.base == ll::CalculusBase::MILL) {
        std::vector<ll::Formula> ante, succ;
        for (const auto& f : s.antecedent.items())
            ante.push_back(ll::expand_defs(f));
        for (const auto& f : s.succedent.items())
            succ.push_back(ll::expand_defs(f));
        v = ll::prove_mill(
            ll::Sequent{ll::Multiset(ante), ll::Multiset(succ)});
    } else {
        v = ll::prove(s, calc);
    }

    if (format == "json") {
        nlohmann::json j;
        j["sequent"] = s.pretty();
        j["calculus"] = calc.name();
        j["verdict"] = v.str();
        if (!v.reason.empty()) j["reason"] = v.reason;
        if (show_proof && v.proof) j["proof"] = v.proof->pretty();
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << v.str() << "\n";
        if (show_proof && v.proof) std::cout << v.proof->pretty();
    }

    switch (v.kind) {
        case ll::Verdict::Kind::Provable: return kExitProvable;
        case ll::Verdict::Kind::NotProvable: return kExitNotProvable;
        case ll::Verdict::Kind::Unknown: return kExitUnknown;
    }
    return kExitUnknown;
}

int cmd_check_rule(const std::string& path, const std::string& calculus,
                   const std::string& format, bool show_proof,
                   int cut_budget) {
    ll::Calculus calc = calculus_from_name(calculus);
    std::vector<ll::RuleFile> rules = ll::parse_rule_files(read_file(path));
    ll::CheckConfig cfg;
    cfg.cut_budget = cut_budget;

    int exit = kExitProvable;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& rule : rules) {
        ll::RuleVerdict v = ll::check_rule(rule, calc, cfg);
        if (format == "json") {
            nlohmann::json j;
            j["rule"] = rule.name;
            j["verdict"] = v.str();
            if (!v.reason.empty()) j["reason"] = v.reason;
            if (show_proof && v.derivation) j["derivation"] = v.derivation->pretty();
            arr.push_back(j);
        } else {
            std::cout << rule.name << ": " << v.str() << "\n";
            if (show_proof && v.derivation) std::cout << v.derivation->pretty();
        }
        if (v.kind == ll::RuleVerdict::Kind::NotDerivable)
            exit = std::max(exit, kExitNotProvable);
        if (v.kind == ll::RuleVerdict::Kind::Unknown)
            exit = std::max(exit, kExitUnknown);
    }
    if (format == "json") std::cout << arr.dump(2) << "\n";
    return exit;
}

ll::SmtGoal parse_goal_file(const std::string& text) {
    // three goal shapes: a named rule, "lhs == rhs", or "lhs |- rhs"
    if (text.find("rule") != std::string::npos &&
        text.find(':') != std::string::npos)
        return ll::SmtGoal::from_rule(ll::parse_rule_file(text));
    if (auto eq = text.find("=="); eq != std::string::npos)
        return ll::SmtGoal::equation(ll::parse_formula(text.substr(0, eq)),
                                     ll::parse_formula(text.substr(eq + 2)));
    if (auto ts = text.find("|-"); ts != std::string::npos) {
        std::string lhs = text.substr(0, ts);
        std::string rhs = text.substr(ts + 2);
        if (lhs.find_first_not_of(" \t\r\n") == std::string::npos)
            return ll::SmtGoal::from_rule(
                ll::parse_rule_file("rule goal:\n----\n" + text + "\n"));
        return ll::SmtGoal::entailment(ll::parse_formula(lhs),
                                       ll::parse_formula(rhs));
    }
    throw std::runtime_error(
        "goal file must hold a rule, an entailment (|-) or an equation (==)");
}

int cmd_emit_smt(const std::string& calculus, const std::string& goal_path,
                 bool negate, const std::string& out_path) {
    ll::SmtTheory theory = ll::encode_theory(theory_from_name(calculus));
    std::optional<ll::SmtGoal> goal;
    if (!goal_path.empty()) goal = parse_goal_file(read_file(goal_path));
    ll::SmtScript script = ll::encode_check(theory, goal, negate);

    auto issues = ll::check_script(script);
    for (const auto& msg : issues) std::cerr << "script check: " << msg << "\n";
    if (!issues.empty()) return kExitUsage;

    if (out_path.empty()) {
        std::cout << script.text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write: " << out_path << "\n";
            return kExitUsage;
        }
        out << script.text;
    }
    return 0;
}

int cmd_run_smt(const std::string& path, const std::string& config_path,
                const std::string& solver, double timeout, bool raw) {
    ll::SolverConfig cfg;
    if (!config_path.empty()) {
        cfg = ll::load_solver_config(config_path);
    } else if (!solver.empty()) {
        cfg.command = solver;
    } else if (auto def = ll::default_solver()) {
        cfg = *def;
    } else {
        std::cerr << "no solver configured and none found on PATH\n";
        return kExitUsage;
    }
    if (timeout > 0) cfg.timeout_s = timeout;

    ll::SmtScript script{read_file(path)};
    ll::SolverResult r = ll::run_solver(script, cfg);
    std::cout << r.str() << "\n";
    if (raw && !r.raw_output.empty()) std::cout << r.raw_output;

    if (r.definite()) return 0;
    if (r.kind == ll::SolverResult::Kind::ToolError) {
        std::cerr << r.message << "\n";
        return kExitUsage;
    }
    return kExitUnknown;
}

int cmd_paper_suite(bool with_solver, const std::string& config_path,
                    const std::string& format) {
    ll::SuiteOptions opts;
    if (!config_path.empty()) {
        opts.solver = ll::load_solver_config(config_path);
    } else if (with_solver) {
        opts.solver = ll::default_solver();
        if (!opts.solver)
            std::cerr << "no solver found on PATH; solver column skipped\n";
    }

    auto rows = ll::run_paper_suite(opts);
    if (format == "json")
        std::cout << ll::render_suite_json(rows);
    else
        std::cout << ll::render_suite_table(rows);
    return ll::suite_ok(rows) ? 0 : kExitNotProvable;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sequent toolkit for multiplicative linear logic"};
    app.require_subcommand(1);

    std::string text, calculus = "mll-mix", format = "text", path;
    std::string goal_path, out_path, config_path, solver;
    bool show_proof = false, negate = false, as_sequent = false, raw = false;
    bool with_solver = false;
    int cut_budget = 4;
    double timeout = 0;

    auto* parse_cmd = app.add_subcommand("parse", "parse and echo an AST");
    parse_cmd->add_option("input", text, "formula or sequent text")->required();
    parse_cmd->add_flag("--sequent", as_sequent, "parse as a sequent");
    parse_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    auto* prove_cmd = app.add_subcommand("prove", "decide a sequent");
    prove_cmd->add_option("sequent", text, "sequent text")->required();
    prove_cmd->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"mll", "mll-mix", "mll-mix-c", "mll-mix-empty", "mill"}));
    prove_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    prove_cmd->add_flag("--show-proof", show_proof);

    auto* rule_cmd = app.add_subcommand("check-rule", "check derived rules from a file");
    rule_cmd->add_option("file", path, "rule file")->required();
    rule_cmd->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"mll", "mll-mix", "mll-mix-c", "mll-mix-empty"}));
    rule_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    rule_cmd->add_option("--cut-budget", cut_budget);
    rule_cmd->add_flag("--show-proof", show_proof);

    auto* emit_cmd = app.add_subcommand("emit-smt", "emit an SMT-LIB2 script");
    emit_cmd->add_option("--calculus", calculus)
        ->check(CLI::IsMember({"fragment", "mll-mix", "mll-mix-c", "mill"}))
        ->required();
    emit_cmd->add_option("--goal", goal_path, "goal file (rule, |- or ==)");
    emit_cmd->add_flag("--negate", negate, "assert the goal negated");
    emit_cmd->add_option("-o,--output", out_path, "write here instead of stdout");

    auto* run_cmd = app.add_subcommand("run-smt", "run a script through a solver");
    run_cmd->add_option("script", path, "SMT-LIB2 script file")->required();
    run_cmd->add_option("--config", config_path, "solver config file");
    run_cmd->add_option("--solver", solver, "solver command");
    run_cmd->add_option("--timeout", timeout, "wall-clock seconds");
    run_cmd->add_flag("--raw", raw, "echo the solver's raw output");

    auto* suite_cmd = app.add_subcommand("paper-suite", "run the result manifest");
    suite_cmd->add_flag("--with-solver", with_solver);
    suite_cmd->add_option("--config", config_path, "solver config file");
    suite_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;  // help/version exit 0
    }

    try {
        if (*parse_cmd) return cmd_parse(text, as_sequent, format);
        if (*prove_cmd) return cmd_prove(text, calculus, format, show_proof);
        if (*rule_cmd)
            return cmd_check_rule(path, calculus, format, show_proof, cut_budget);
        if (*emit_cmd) return cmd_emit_smt(calculus, goal_path, negate, out_path);
        if (*run_cmd) return cmd_run_smt(path, config_path, solver, timeout, raw);
        if (*suite_cmd) return cmd_paper_suite(with_solver, config_path, format);
    } catch (const ll::ParseError& e) {
        report_parse_error(e);
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
