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

#include <map>
#include <string>
#include <string_view>
#include <variant>

#include "petriproof/cpn.hpp"
#include "petriproof/net.hpp"

namespace petriproof {

/* Host functions a model file may name: arc functions for CPN models,
 * transition rules (via `bind`) for HLPN models. */
struct FunctionRegistry {
    std::map<std::string, CpnFunction> functions;
    std::map<std::string, RuleFn> rules;
};

using ParsedModel = std::variant<Net, CpnModel>;

/* Reads a `.pnet` source. Positions in errors are 1-based line:column. */
ParsedModel parse_model(std::string_view text, const FunctionRegistry& registry);

std::string print_model(const CpnModel& model);
std::string print_model(const Net& net);
std::string print_model(const ParsedModel& model);

/* Literal token values as written in init multisets: symbols, numbers,
 * "text", 0xbytes, (tuples) and {records}. */
Value parse_value(std::string_view text);

/* Structural equality for HLPN nets (rules compared by name only). */
bool same_structure(const Net& a, const Net& b);

}  // namespace petriproof
