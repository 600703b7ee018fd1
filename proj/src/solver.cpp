/*
 * Copyright (C) 2026 The petriproof Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Runs an external SMT-LIB2 solver on a script file and reads its verdict.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <thread>

#include "petriproof/error.hpp"
#include "petriproof/smtgen.hpp"

namespace petriproof::smt {

namespace fs = std::filesystem;

namespace {

bool executable(const std::string& path) { return !path.empty() && ::access(path.c_str(), X_OK) == 0 && !fs::is_directory(path); }

std::string search_path(const std::string& name) {
    const char* path = std::getenv("PATH");
    if (!path) return {};
    std::string p(path);
    std::size_t start = 0;
    while (start <= p.size()) {
        auto end = p.find(':', start);
        std::string dir = p.substr(start, end == std::string::npos ? std::string::npos : end - start);
        if (!dir.empty()) {
            std::string cand = dir + "/" + name;
            if (executable(cand)) return cand;
        }
        if (end == std::string::npos) break;
        start = end + 1;
    }
    return {};
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& text) {
        std::string tmpl = (fs::temp_directory_path() / "petriproof-XXXXXX.smt2").string();
        std::vector<char> buf(tmpl.begin(), tmpl.end());
        buf.push_back('\0');
        int fd = ::mkstemps(buf.data(), 5);
        if (fd < 0) throw Error(ErrorCode::IoError, "cannot create temporary script in " + fs::temp_directory_path().string());
        path = buf.data();
        std::size_t off = 0;
        while (off < text.size()) {
            ssize_t n = ::write(fd, text.data() + off, text.size() - off);
            if (n <= 0) {
                ::close(fd);
                throw Error(ErrorCode::IoError, "cannot write " + path);
            }
            off += static_cast<std::size_t>(n);
        }
        ::close(fd);
    }
    ~TempFile() { ::unlink(path.c_str()); }
    TempFile(const TempFile&) = delete;
    TempFile& operator=(const TempFile&) = delete;
};

}  // namespace

std::string resolve_solver(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* env = std::getenv("PETRIPROOF_SOLVER"); env && *env) return env;
    if (auto z3 = search_path("z3"); !z3.empty()) return z3;
    if (executable("/usr/local/bin/z3")) return "/usr/local/bin/z3";
    return {};
}

SolverVerdict run_solver(const SmtScript& script, const std::string& solver_path, double timeout_s) {
    return run_solver_text(script.text(), solver_path, timeout_s);
}

SolverVerdict run_solver_text(const std::string& text, const std::string& solver_path, double timeout_s) {
    auto problems = validate(text);
    if (!problems.empty()) throw Error(ErrorCode::MalformedScript, problems.front());
    if (!executable(solver_path))
        throw Error(ErrorCode::SolverNotFound, solver_path.empty() ? std::string("no solver configured") : solver_path);
    TempFile file(text);

    int out[2];
    if (::pipe(out) != 0) throw Error(ErrorCode::IoError, "pipe");
    auto start = std::chrono::steady_clock::now();
    pid_t pid = ::fork();
    if (pid < 0) {
        ::close(out[0]);
        ::close(out[1]);
        throw Error(ErrorCode::IoError, "fork");
    }
    if (pid == 0) {
        ::dup2(out[1], STDOUT_FILENO);
        ::dup2(out[1], STDERR_FILENO);
        ::close(out[0]);
        ::close(out[1]);
        int devnull = ::open("/dev/null", O_RDONLY);
        if (devnull >= 0) ::dup2(devnull, STDIN_FILENO);
        ::execl(solver_path.c_str(), solver_path.c_str(), file.path.c_str(), static_cast<char*>(nullptr));
        ::_exit(127);
    }
    ::close(out[1]);

    std::string raw;
    bool timed_out = false;
    auto deadline = start + std::chrono::duration<double>(timeout_s);
    char buf[4096];
    for (;;) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            timed_out = true;
            break;
        }
        pollfd pfd{out[0], POLLIN, 0};
        int rc = ::poll(&pfd, 1, static_cast<int>(std::min<long long>(left.count(), 1000)));
        if (rc < 0 && errno == EINTR) continue;
        if (rc <= 0) continue;
        ssize_t n = ::read(out[0], buf, sizeof buf);
        if (n <= 0) break;
        raw.append(buf, static_cast<std::size_t>(n));
    }
    ::close(out[0]);
    if (timed_out) ::kill(pid, SIGKILL);
    int status = 0;
    ::waitpid(pid, &status, 0);
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (timed_out) throw Error(ErrorCode::SolverTimeout, solver_path + " after " + std::to_string(timeout_s) + " s");
    if (WIFEXITED(status) && WEXITSTATUS(status) == 127 && raw.empty())
        throw Error(ErrorCode::SolverNotFound, solver_path + " could not be started");

    SolverVerdict v;
    v.raw_output = raw;
    v.elapsed_seconds = std::max(0.0, elapsed);
    v.result = parse_verdict(raw);
    return v;
}

std::vector<VerdictRow> verify_all(const std::string& solver_path, double timeout_s) {
    const auto& names = property_names();
    std::vector<VerdictRow> rows(names.size());
    unsigned cores = std::max(1u, std::thread::hardware_concurrency());
    std::size_t width = std::min<std::size_t>(6, cores);

    auto one = [&](std::size_t i) {
        rows[i].property = names[i];
        try {
            rows[i].verdict = run_solver(emit_property(names[i]), solver_path, timeout_s);
        } catch (const Error& e) {
            rows[i].error = e.what();
        }
    };
    for (std::size_t base = 0; base < names.size(); base += width) {
        std::vector<std::future<void>> batch;
        for (std::size_t i = base; i < std::min(names.size(), base + width); ++i)
            batch.push_back(std::async(std::launch::async, one, i));
        for (auto& f : batch) f.get();
    }
    return rows;
}

}  // namespace petriproof::smt
