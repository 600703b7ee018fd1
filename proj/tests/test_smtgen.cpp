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

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "petriproof/error.hpp"
#include "petriproof/smtgen.hpp"

using namespace petriproof;
using namespace petriproof::smt;

namespace {

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return ErrorCode::IoError;
}

bool has_problem(const std::string& text) { return !validate(text).empty(); }

std::string fake_solver(const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("petriproof_fake_" + std::to_string(std::rand()) + ".sh");
    std::ofstream(path) << "#!/bin/sh\n" << body << "\n";
    std::filesystem::permissions(path, std::filesystem::perms::owner_all);
    return path.string();
}

}  // namespace

TEST_SUITE("smtgen") {

TEST_CASE("six properties, addressable by model name too") {
    CHECK(property_names().size() == 6);
    CHECK(canonical_property("lps-gen-proof") == "generate-location-proof");
    CHECK(canonical_property("calculate-location") == "calculate-location");
    CHECK(code_of([] { canonical_property("nope"); }) == ErrorCode::UnknownProperty);
    CHECK(code_of([] { emit_rule("R22"); }) == ErrorCode::UnknownRule);
}

TEST_CASE("every emitted script is well formed") {
    for (const auto& p : property_names()) {
        CAPTURE(p);
        auto s = emit_property(p);
        auto problems = validate(s.text());
        for (auto& x : problems) MESSAGE(x);
        CHECK(problems.empty());
        CHECK(validate(s.without_bindings().text()).empty());
        CHECK_FALSE(s.bindings.empty());
        CHECK(s.without_bindings().bindings.empty());
        CHECK(s.text().find("(set-logic QF_AUFLIA)") != std::string::npos);
        CHECK(s.text().find("(check-sat)") != std::string::npos);
        CHECK(emit_property(p).text() == s.text());
        CHECK_FALSE(rules_for(p).empty());
    }
    for (int r = 1; r <= 21; ++r) {
        auto s = emit_rule("R" + std::to_string(r));
        CHECK(validate(s.text()).empty());
    }
}

TEST_CASE("validator catches malformed scripts") {
    const std::string ok = "(set-logic QF_AUFLIA)\n(declare-fun |x| () Int)\n(assert (= |x| 1))\n(check-sat)\n";
    CHECK_FALSE(has_problem(ok));
    CHECK(has_problem("(set-logic QF_AUFLIA)\n(assert (= |x| 1))\n(check-sat)\n"));
    CHECK(has_problem("(set-logic QF_AUFLIA)\n(declare-fun |x| () Int)\n(assert (= |x| 1)\n(check-sat)\n"));
    CHECK(has_problem(ok + "(check-sat)\n"));
    CHECK(has_problem("(declare-fun |x| () Int)\n(check-sat)\n"));
    CHECK(has_problem("(set-logic QF_AUFLIA)\n(declare-fun |x| () Int)\n(assert (= (select |x| 1) 1))\n(check-sat)\n"));
    CHECK(has_problem("(set-logic QF_AUFLIA)\n(assert (= |y| 1))\n(declare-fun |y| () Int)\n(check-sat)\n"));
}

TEST_CASE("verdict parsing") {
    CHECK(parse_verdict("unsat\n") == Result::Unsat);
    CHECK(parse_verdict("sat\n") == Result::Sat);
    CHECK(parse_verdict("unknown\n") == Result::Unknown);
    CHECK(parse_verdict("; z3 banner\nunsat\n") == Result::Unsat);
    CHECK(code_of([] { parse_verdict(""); }) == ErrorCode::UnparseableOutput);
    CHECK(code_of([] { parse_verdict("(error \"boom\")"); }) == ErrorCode::UnparseableOutput);
    CHECK(to_string(Result::Unsat) == "unsat");
}

TEST_CASE("solver harness errors") {
    auto script = emit_property("ecdsa-keygen");
    CHECK(code_of([&] { run_solver(script, "/nonexistent/solver", 5); }) == ErrorCode::SolverNotFound);
    CHECK(code_of([&] { run_solver_text("(assert", "/bin/true", 5); }) == ErrorCode::MalformedScript);

    auto slow = fake_solver("sleep 10");
    auto t0 = std::chrono::steady_clock::now();
    CHECK(code_of([&] { run_solver(script, slow, 0.3); }) == ErrorCode::SolverTimeout);
    CHECK(std::chrono::steady_clock::now() - t0 < std::chrono::seconds(5));

    auto garbage = fake_solver("echo hello");
    CHECK(code_of([&] { run_solver(script, garbage, 5); }) == ErrorCode::UnparseableOutput);

    auto canned = fake_solver("echo unsat");
    CHECK(run_solver(script, canned, 5).result == Result::Unsat);
    std::filesystem::remove(slow);
    std::filesystem::remove(garbage);
    std::filesystem::remove(canned);
}

TEST_CASE("solver lookup order") {
    CHECK(resolve_solver("/explicit/path") == "/explicit/path");
    setenv("PETRIPROOF_SOLVER", "/from/env", 1);
    CHECK(resolve_solver("") == "/from/env");
    unsetenv("PETRIPROOF_SOLVER");
}

TEST_CASE("properties are unsat and the unbound scripts are sat") {
    std::string z3 = resolve_solver("");
    if (z3.empty() || !std::filesystem::exists(z3)) {
        MESSAGE("no SMT solver available; skipping");
        return;
    }
    auto rows = verify_all(z3, 10);
    REQUIRE(rows.size() == 6);
    for (auto& r : rows) {
        CAPTURE(r.property);
        REQUIRE(r.verdict.has_value());
        CHECK(r.verdict->result == Result::Unsat);
        CHECK(r.verdict->elapsed_seconds < 10);
    }
    for (const auto& p : property_names()) {
        CAPTURE(p);
        CHECK(run_solver(emit_property(p).without_bindings(), z3, 10).result == Result::Sat);
    }
    auto csv = verdict_csv(rows, false);
    CHECK(csv.rfind("property,verdict\n", 0) == 0);
    CHECK(csv.find("ecdsa-keygen,unsat") != std::string::npos);
}

TEST_CASE("rule fragments are satisfiable on their own") {
    std::string z3 = resolve_solver("");
    if (z3.empty() || !std::filesystem::exists(z3)) return;
    for (int r = 1; r <= 21; ++r) {
        CAPTURE(r);
        CHECK(run_solver(emit_rule("R" + std::to_string(r)), z3, 10).result == Result::Sat);
    }
}

}
