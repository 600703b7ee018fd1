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

#include <stdexcept>
#include <string>
#include <string_view>

namespace petriproof {

enum class ErrorCode {
    DuplicateId,
    ArcBetweenSameClass,
    UnknownNodeReference,
    TypeMismatch,
    InvalidDefinition,
    NotEnabled,
    BindingStale,
    RuleContractViolation,
    EmptySamples,
    InvalidArgument,
    SyntaxError,
    UndeclaredColourSet,
    UndeclaredVariable,
    TimedTokenInUntimedPlace,
    UnknownFunction,
    ExpressionTypeError,
    DeadlockedAndNoFutureTokens,
    NonceExhaustion,
    PointNotOnCurve,
    EmptyBatch,
    InvalidCoordinate,
    InvalidTime,
    UnknownProver,
    NotFound,
    UnknownModel,
    UnknownProperty,
    UnknownRule,
    SolverNotFound,
    SolverTimeout,
    UnparseableOutput,
    MalformedScript,
    IoError,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/* Parse failures keep their position so callers can point at the source. */
class SyntaxError : public Error {
public:
    SyntaxError(int line, int column, const std::string& expected)
        : Error(ErrorCode::SyntaxError,
                std::to_string(line) + ":" + std::to_string(column) + ": expected " + expected),
          line_(line), column_(column), expected_(expected) {}

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    int line_;
    int column_;
    std::string expected_;
};

}  // namespace petriproof
