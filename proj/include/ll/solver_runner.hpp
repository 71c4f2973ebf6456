#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ll/smt.hpp"

namespace ll {

struct SolverConfig {
    std::string command;             // executable, searched on PATH
    std::vector<std::string> flags;  // passed before the script path
    double timeout_s = 60.0;
    std::optional<long> memory_mb;   // address-space cap for the child
};

/// Reads key=value lines: solver.command, solver.flags, solver.timeout_s,
/// solver.memory_mb. '#' starts a comment.
SolverConfig load_solver_config(const std::string& path);

struct SolverResult {
    enum class Kind { Sat, Unsat, Unknown, Timeout, OutOfMemory, ToolError };

    Kind kind = Kind::ToolError;
    std::string message;     // ToolError detail
    std::string raw_output;  // stdout+stderr pass-through (includes models)
    double elapsed_s = 0.0;

    bool definite() const { return kind == Kind::Sat || kind == Kind::Unsat; }
    std::string str() const;
};

/// Writes the script to a temp file, invokes `command flags... path`, and
/// parses the first sat/unsat/unknown token from the output. Enforces the
/// wall-clock timeout and optional memory cap.
SolverResult run_solver(const SmtScript& script, const SolverConfig& cfg);

/// Looks for a usable default solver (z3 or cvc5 on PATH). Returns nullopt
/// when none is installed.
std::optional<SolverConfig> default_solver();

}  // namespace ll
