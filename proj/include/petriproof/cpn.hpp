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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "petriproof/net.hpp"
#include "petriproof/value.hpp"

namespace petriproof {

using ColourSet = ColourSetDecl;

/* Arc inscriptions and guards share one small expression language. */
struct Expr {
    enum class Kind { Variable, Constant, Call, Tuple, Equal, NotEqual, And, Or, Not };

    Kind kind = Kind::Constant;
    std::string name;  // variable or function name
    Value constant;
    std::vector<Expr> args;

    static Expr variable(std::string n) { return Expr{Kind::Variable, std::move(n), {}, {}}; }
    static Expr literal(Value v) { return Expr{Kind::Constant, {}, std::move(v), {}}; }
    static Expr call(std::string n, std::vector<Expr> a) { return Expr{Kind::Call, std::move(n), {}, std::move(a)}; }
    static Expr tuple(std::vector<Expr> a) { return Expr{Kind::Tuple, {}, {}, std::move(a)}; }
    static Expr binary(Kind k, Expr l, Expr r) { return Expr{k, {}, {}, {std::move(l), std::move(r)}}; }

    std::string to_string() const;
    void collect_variables(std::vector<std::string>& out) const;
    /* Variables, constants and tuples of those can be matched against tokens. */
    bool is_pattern() const;
};

Value bool_value(bool b);

struct Inscription {
    int coefficient = 1;
    Expr expr;
    std::optional<std::int64_t> delay;

    std::string to_string() const;
};

struct FunctionContext {
    const TokenType* result = nullptr;  // expected colour set of the value, when known
    std::vector<const TokenType*> args;
};

using ColourFn = std::function<Value(const std::vector<Value>&, const FunctionContext&)>;

struct CpnFunction {
    int arity = 1;
    ColourFn fn;
};

struct InitialToken {
    Value value;
    std::int64_t timestamp = 0;
    int count = 1;
    bool timed = false;  // written with @+
};

struct CpnPlace {
    std::string id;
    std::string display;
    std::size_t colset = 0;
    std::vector<InitialToken> initial;
};

struct CpnTransition {
    std::string id;
    std::string display;
    std::optional<Expr> guard;
    std::string bind;
    TransitionKind kind = TransitionKind::Timed;
    int budget = 0;
};

struct CpnArc {
    std::string source;
    std::string target;
    ArcKind kind = ArcKind::Normal;
    Inscription inscription;
};

/* Multiset of (value, timestamp); untimed places keep timestamp 0. */
using TimedMultiset = std::map<std::pair<Value, std::int64_t>, int>;

struct CpnState {
    std::vector<TimedMultiset> marking;
    std::int64_t clock = 0;
    std::vector<int> budgets;

    int size(std::size_t p) const;
    bool operator==(const CpnState& o) const {
        return marking == o.marking && clock == o.clock && budgets == o.budgets;
    }
};

using CpnBinding = std::map<std::string, Value>;

struct CpnEnabled {
    std::size_t transition;
    CpnBinding binding;
};

class CpnModel {
public:
    std::string name;
    bool timed = false;
    std::vector<ColourSet> colsets;
    std::vector<std::pair<std::string, std::size_t>> variables;
    std::vector<CpnPlace> places;
    std::vector<CpnTransition> transitions;
    std::vector<CpnArc> arcs;
    std::map<std::string, CpnFunction> functions;

    /* Builds indices and checks the structural invariants. */
    void finalize();

    std::optional<std::size_t> colset_index(std::string_view n) const;
    std::optional<std::size_t> variable_colset(std::string_view n) const;
    std::optional<std::size_t> place_index(std::string_view id) const;
    std::optional<std::size_t> transition_index(std::string_view id) const;
    const ColourSet& place_colset(std::size_t p) const { return colsets.at(places.at(p).colset); }
    bool place_timed(std::size_t p) const { return place_colset(p).timed; }

    const std::vector<std::size_t>& input_arcs(std::size_t t) const { return inputs_.at(t); }
    const std::vector<std::size_t>& output_arcs(std::size_t t) const { return outputs_.at(t); }
    const std::vector<std::size_t>& inhibitor_arcs(std::size_t t) const { return inhibitors_.at(t); }
    std::size_t arc_place(std::size_t a) const { return arc_place_.at(a); }

    /* Every input place untimed; such transitions go first under priority. */
    bool transition_untimed(std::size_t t) const;

    CpnState initial_state() const;

    bool operator==(const CpnModel& o) const;

private:
    std::vector<std::vector<std::size_t>> inputs_, outputs_, inhibitors_;
    std::vector<std::size_t> arc_place_;
};

Value evaluate(const CpnModel& model, const Expr& e, const CpnBinding& b, const TokenType* expected = nullptr);

std::vector<CpnEnabled> enabled_bindings(const CpnModel& model, const CpnState& state);

enum class Policy { SeededRandom, Priority };
Policy default_policy(const CpnModel& model);

struct StepResult {
    CpnState state;
    std::size_t transition;
    CpnBinding binding;
};

/* Advances the clock if needed, then fires one binding chosen by `policy`. */
StepResult step(const CpnModel& model, const CpnState& state, Policy policy, std::mt19937_64& rng);
CpnState fire(const CpnModel& model, const CpnState& state, std::size_t transition, const CpnBinding& binding);

enum class MonitorKind { DiscreteAverage, TimeAverage };
std::string_view to_string(MonitorKind k);

struct MonitorStats {
    MonitorKind kind = MonitorKind::DiscreteAverage;
    long count = 0;
    double sum = 0;
    double average = 0;
    double min = 0;
    double max = 0;
    bool average_defined = false;
};

class Monitor {
public:
    Monitor(std::size_t place, MonitorKind kind) : place_(place), kind_(kind) {}

    std::size_t place() const { return place_; }
    MonitorKind kind() const { return kind_; }
    void observe(double value, std::int64_t clock);
    MonitorStats stats() const;

private:
    std::size_t place_;
    MonitorKind kind_;
    long count_ = 0;
    double sum_ = 0, min_ = 0, max_ = 0;
    double area_ = 0, last_ = 0;
    std::int64_t first_clock_ = 0, last_clock_ = 0;
};

MonitorStats monitor_stats(const Monitor& m);

struct FiredEvent {
    std::size_t transition;
    CpnBinding binding;
    std::int64_t clock;
};

struct CpnRun {
    CpnState final_state;
    std::vector<FiredEvent> events;
    std::vector<MonitorStats> stats;  // one per place
    bool stopped_early = false;       // no binding now or later
};

/* Monitors of `kind` on every place; observes M0 and each step. */
CpnRun run_cpn(const CpnModel& model, int steps, std::uint64_t seed, Policy policy, MonitorKind kind);

std::string stats_csv(const CpnModel& model, const std::vector<MonitorStats>& stats);

}  // namespace petriproof
