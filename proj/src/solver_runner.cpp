#include "ll/solver_runner.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

namespace ll {

std::string SolverResult::str() const {
    switch (kind) {
        case Kind::Sat: return "sat";
        case Kind::Unsat: return "unsat";
        case Kind::Unknown: return "unknown";
        case Kind::Timeout: return "timeout";
        case Kind::OutOfMemory: return "out-of-memory";
        case Kind::ToolError:
            return message.empty() ? "tool-error" : "tool-error (" + message + ")";
    }
    return "?";
}

namespace {

std::string strip(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::optional<std::string> find_executable(const std::string& command) {
    if (command.find('/') != std::string::npos) {
        if (access(command.c_str(), X_OK) == 0) return command;
        return std::nullopt;
    }
    const char* path = std::getenv("PATH");
    if (!path) return std::nullopt;
    std::stringstream ss(path);
    std::string dir;
    while (std::getline(ss, dir, ':')) {
        if (dir.empty()) continue;
        std::string full = dir + "/" + command;
        if (access(full.c_str(), X_OK) == 0) return full;
    }
    return std::nullopt;
}

class TempScript {
public:
    explicit TempScript(const std::string& contents) {
        char tmpl[] = "/tmp/ll-smt-XXXXXX";
        int fd = mkstemp(tmpl);
        if (fd < 0) throw std::runtime_error("mkstemp failed");
        path_ = tmpl;
        ssize_t off = 0;
        while (off < static_cast<ssize_t>(contents.size())) {
            ssize_t n = write(fd, contents.data() + off, contents.size() - off);
            if (n < 0) {
                close(fd);
                throw std::runtime_error("temp file write failed");
            }
            off += n;
        }
        close(fd);
    }
    ~TempScript() { unlink(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace

SolverConfig load_solver_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    SolverConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("config line has no '=': " + line);
        std::string key = strip(line.substr(0, eq));
        std::string value = strip(line.substr(eq + 1));
        if (key == "solver.command") {
            cfg.command = value;
        } else if (key == "solver.flags") {
            std::stringstream ss(value);
            std::string flag;
            while (ss >> flag) cfg.flags.push_back(flag);
        } else if (key == "solver.timeout_s") {
            cfg.timeout_s = std::stod(value);
        } else if (key == "solver.memory_mb") {
            cfg.memory_mb = std::stol(value);
        } else {
            throw std::runtime_error("unknown config key: " + key);
        }
    }
    return cfg;
}

SolverResult run_solver(const SmtScript& script, const SolverConfig& cfg) {
    auto started = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             started)
            .count();
    };
    auto tool_error = [&](std::string msg) {
        return SolverResult{SolverResult::Kind::ToolError, std::move(msg), "",
                            elapsed()};
    };

    auto exe = find_executable(cfg.command);
    if (!exe) return tool_error("solver not found: " + cfg.command);

    TempScript tmp(script.text);

    int pipefd[2];
    if (pipe(pipefd) != 0) return tool_error("pipe failed");

    pid_t pid = fork();
    if (pid < 0) {
        close(pipefd[0]);
        close(pipefd[1]);
        return tool_error("fork failed");
    }
    if (pid == 0) {
        // child: merge stdout/stderr into the pipe, apply the memory cap
        dup2(pipefd[1], STDOUT_FILENO);
        dup2(pipefd[1], STDERR_FILENO);
        close(pipefd[0]);
        close(pipefd[1]);
        if (cfg.memory_mb) {
            rlimit lim{};
            lim.rlim_cur = lim.rlim_max =
                static_cast<rlim_t>(*cfg.memory_mb) << 20;
            setrlimit(RLIMIT_AS, &lim);
        }
        std::vector<char*> argv;
        argv.push_back(const_cast<char*>(exe->c_str()));
        for (const auto& f : cfg.flags)
            argv.push_back(const_cast<char*>(f.c_str()));
        argv.push_back(const_cast<char*>(tmp.path().c_str()));
        argv.push_back(nullptr);
        execv(exe->c_str(), argv.data());
        _exit(127);
    }

    close(pipefd[1]);
    fcntl(pipefd[0], F_SETFL, O_NONBLOCK);

    std::string output;
    bool timed_out = false;
    while (true) {
        double remaining = cfg.timeout_s - elapsed();
        if (remaining <= 0) {
            timed_out = true;
            break;
        }
        pollfd pfd{pipefd[0], POLLIN, 0};
        int rc = poll(&pfd, 1, static_cast<int>(remaining * 1000) + 1);
        if (rc < 0 && errno != EINTR) break;
        if (rc <= 0) continue;
        char buf[4096];
        ssize_t n = read(pipefd[0], buf, sizeof buf);
        if (n > 0) {
            output.append(buf, static_cast<std::size_t>(n));
        } else if (n == 0) {
            break;  // EOF: child closed its end
        } else if (errno != EAGAIN && errno != EINTR) {
            break;
        }
    }
    close(pipefd[0]);

    int status = 0;
    if (timed_out) {
        kill(pid, SIGKILL);
        waitpid(pid, &status, 0);
        return SolverResult{SolverResult::Kind::Timeout, "", output, elapsed()};
    }
    waitpid(pid, &status, 0);
    double secs = elapsed();

    // first sat/unsat/unknown token decides the result
    std::stringstream ss(output);
    std::string tok;
    while (ss >> tok) {
        if (tok == "sat")
            return SolverResult{SolverResult::Kind::Sat, "", output, secs};
        if (tok == "unsat")
            return SolverResult{SolverResult::Kind::Unsat, "", output, secs};
        if (tok == "unknown")
            return SolverResult{SolverResult::Kind::Unknown, "", output, secs};
    }

    std::string lower;
    for (char c : output)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (lower.find("out of memory") != std::string::npos ||
        lower.find("memory exhausted") != std::string::npos ||
        lower.find("std::bad_alloc") != std::string::npos)
        return SolverResult{SolverResult::Kind::OutOfMemory, "", output, secs};

    if (WIFEXITED(status) && WEXITSTATUS(status) == 127)
        return SolverResult{SolverResult::Kind::ToolError,
                            "solver not found: " + cfg.command, output, secs};
    return SolverResult{SolverResult::Kind::ToolError,
                        "no result token in solver output", output, secs};
}

std::optional<SolverConfig> default_solver() {
    if (const char* env = std::getenv("LL_SOLVER")) {
        std::stringstream ss(env);
        SolverConfig cfg;
        ss >> cfg.command;
        std::string flag;
        while (ss >> flag) cfg.flags.push_back(flag);
        if (!cfg.command.empty() && find_executable(cfg.command)) return cfg;
    }
    for (const char* name : {"z3", "cvc5"}) {
        if (find_executable(name)) {
            SolverConfig cfg;
            cfg.command = name;
            return cfg;
        }
    }
    return std::nullopt;
}

}  // namespace ll
