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

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "petriproof/value.hpp"

namespace petriproof {

enum class TransitionKind { Timed, Immediate, Source };
enum class ArcKind { Normal, Inhibitor };

std::string_view to_string(TransitionKind k);

/* A named colour set as declared in a model file. `parts` names the
 * component (product) or field (record) colour sets. */
struct ColourSetDecl {
    std::string name;
    TokenType type;
    bool timed = false;
    std::vector<std::string> parts;

    bool operator==(const ColourSetDecl& o) const {
        return name == o.name && type == o.type && timed == o.timed && parts == o.parts;
    }
};

struct PlaceDef {
    std::string id;
    std::string display;
    TokenType type;
    std::string type_name;
};

struct TransitionDef {
    std::string id;
    std::string display;
    TransitionKind kind = TransitionKind::Timed;
    int budget = 0;    // only meaningful for sources
    std::string rule;  // registered rule name, empty for label passing
};

struct ArcDef {
    std::string source;
    std::string target;
    ArcKind kind = ArcKind::Normal;
    std::string label;
    int multiplicity = 1;
};

/* Tokens bound to the input arcs of one transition, keyed by arc label. */
class RuleInput {
public:
    RuleInput(const std::map<std::string, std::vector<Value>>& by_label, int firing_index)
        : by_label_(by_label), firing_index_(firing_index) {}

    const Value& one(std::string_view label) const;
    const std::vector<Value>& all(std::string_view label) const;
    bool has(std::string_view label) const { return by_label_.count(std::string(label)) != 0; }
    const std::map<std::string, std::vector<Value>>& tokens() const { return by_label_; }

    /* Number of times the transition fired before; lets sources emit a sequence. */
    int firing_index() const { return firing_index_; }

private:
    const std::map<std::string, std::vector<Value>>& by_label_;
    int firing_index_;
};

/* Produced tokens keyed by output arc label. nullopt from a RuleFn means
 * the binding does not satisfy the rule. */
using RuleOutput = std::map<std::string, std::vector<Value>>;
using RuleFn = std::function<std::optional<RuleOutput>(const RuleInput&)>;

struct NetDefinition {
    std::string name;
    std::vector<PlaceDef> places;
    std::vector<TransitionDef> transitions;
    std::vector<ArcDef> arcs;
    std::map<std::string, RuleFn> rules;  // transition id -> rule
    std::vector<std::pair<std::string, Value>> initial;
    std::vector<ColourSetDecl> colsets;  // kept for printing
};

using Multiset = std::map<Value, int>;

class Marking {
public:
    Marking() = default;
    explicit Marking(std::size_t places) : tokens_(places) {}

    std::size_t places() const { return tokens_.size(); }
    const Multiset& tokens(std::size_t p) const { return tokens_.at(p); }
    int count(std::size_t p) const;
    int total() const;
    void add(std::size_t p, const Value& v, int k = 1);
    void remove(std::size_t p, const Value& v, int k = 1);
    Eigen::VectorXi counts() const;

    bool operator==(const Marking& o) const { return tokens_ == o.tokens_; }
    bool operator<(const Marking& o) const { return tokens_ < o.tokens_; }

private:
    std::vector<Multiset> tokens_;
};

/* A marking plus what is left of each source transition's budget. */
struct ExecutionState {
    Marking marking;
    std::vector<int> budgets;

    bool operator==(const ExecutionState& o) const { return marking == o.marking && budgets == o.budgets; }
    bool operator<(const ExecutionState& o) const {
        if (marking == o.marking) return budgets < o.budgets;
        return marking < o.marking;
    }
};

/* Tokens per input arc of the transition, in Net::input_arcs order. */
using Binding = std::vector<std::vector<Value>>;

struct Enabled {
    std::size_t transition;
    Binding binding;
};

class Net {
public:
    const std::string& name() const { return name_; }
    const std::vector<PlaceDef>& places() const { return places_; }
    const std::vector<TransitionDef>& transitions() const { return transitions_; }
    const std::vector<ArcDef>& arcs() const { return arcs_; }

    std::optional<std::size_t> place_index(std::string_view id) const;
    std::optional<std::size_t> transition_index(std::string_view id) const;
    std::size_t require_transition(std::string_view id) const;

    /* Arc indices, in declaration order. */
    const std::vector<std::size_t>& input_arcs(std::size_t t) const { return inputs_.at(t); }
    const std::vector<std::size_t>& output_arcs(std::size_t t) const { return outputs_.at(t); }
    const std::vector<std::size_t>& inhibitor_arcs(std::size_t t) const { return inhibitors_.at(t); }
    std::size_t arc_place(std::size_t a) const { return arc_place_.at(a); }
    std::size_t arc_transition(std::size_t a) const { return arc_transition_.at(a); }
    const std::string& arc_label(std::size_t a) const { return arc_labels_.at(a); }

    bool has_rule(std::size_t t) const { return static_cast<bool>(rules_.at(t)); }
    const RuleFn& rule(std::size_t t) const { return rules_.at(t); }

    /* A place with no outgoing normal arc. */
    bool is_sink(std::size_t p) const { return sinks_.at(p); }

    const std::vector<ColourSetDecl>& colsets() const { return colsets_; }
    const Marking& initial_marking() const { return initial_; }
    ExecutionState initial_state() const;

private:
    friend Net build_net(NetDefinition definition);

    std::string name_;
    std::vector<PlaceDef> places_;
    std::vector<TransitionDef> transitions_;
    std::vector<ArcDef> arcs_;
    std::vector<RuleFn> rules_;
    std::vector<std::vector<std::size_t>> inputs_, outputs_, inhibitors_;
    std::vector<std::size_t> arc_place_, arc_transition_;
    std::vector<std::string> arc_labels_;
    std::vector<bool> sinks_;
    std::vector<ColourSetDecl> colsets_;
    Marking initial_;
};

Net build_net(NetDefinition definition);

std::vector<Enabled> enabled_transitions(const Net& net, const ExecutionState& state);
std::vector<Enabled> enabled_transitions(const Net& net, const Marking& marking);

ExecutionState fire(const Net& net, const ExecutionState& state, std::size_t transition, const Binding& binding);
Marking fire(const Net& net, const Marking& marking, std::string_view transition, const Binding& binding);

/* Budgets spent and every token resting in a sink place. */
bool is_completion(const Net& net, const ExecutionState& state);

std::string describe_binding(const Net& net, std::size_t transition, const Binding& binding);

}  // namespace petriproof
