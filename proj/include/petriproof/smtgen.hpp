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

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace petriproof::smt {

struct SmtScript {
    std::string name;
    std::string logic = "QF_AUFLIA";
    std::vector<std::string> declarations;
    std::vector<std::string> definitions;  // rule fragments
    std::vector<std::string> bindings;     // ground values from the reference run
    std::vector<std::string> assertions;
    std::string trailer = "(check-sat)";

    std::string text() const;
    SmtScript without_bindings() const;
};

/* The six property ids, in model order. */
const std::vector<std::string>& property_names();
/* Accepts a property id or the name of the model it belongs to. */
std::string canonical_property(std::string_view id);

SmtScript emit_property(std::string_view id);
/* "R1".."R21". */
SmtScript emit_rule(std::string_view rule);
/* Rules making up the property's model. */
std::vector<std::string> rules_for(std::string_view property);

/* Empty when well formed: balanced parentheses, one set-logic, one check-sat,
 * every non-builtin symbol declared before use, selects only on arrays. */
std::vector<std::string> validate(const std::string& text);

enum class Result { Sat, Unsat, Unknown };
std::string to_string(Result r);

struct SolverVerdict {
    Result result = Result::Unknown;
    double elapsed_seconds = 0;
    std::string raw_output;
};

/* First standalone sat/unsat/unknown token; solver banners are skipped. */
Result parse_verdict(const std::string& raw);

/* Flag value, then PETRIPROOF_SOLVER, then z3 on PATH. Empty when none found. */
std::string resolve_solver(const std::string& flag);

SolverVerdict run_solver(const SmtScript& script, const std::string& solver_path, double timeout_s);
SolverVerdict run_solver_text(const std::string& text, const std::string& solver_path, double timeout_s);

struct VerdictRow {
    std::string property;
    std::optional<SolverVerdict> verdict;
    std::string error;  // set when verdict is empty
};

std::vector<VerdictRow> verify_all(const std::string& solver_path, double timeout_s);
/* property,elapsed_seconds,verdict */
std::string verdict_csv(const std::vector<VerdictRow>& rows, bool with_timing = true);

}  // namespace petriproof::smt
