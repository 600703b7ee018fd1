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

#include "petriproof/net.hpp"

#include <algorithm>
#include <set>

#include "petriproof/error.hpp"

namespace petriproof {

std::string_view to_string(TransitionKind k) {
    switch (k) {
        case TransitionKind::Timed: return "timed";
        case TransitionKind::Immediate: return "immediate";
        case TransitionKind::Source: return "source";
    }
    return "timed";
}

const Value& RuleInput::one(std::string_view label) const {
    auto& v = all(label);
    if (v.size() != 1)
        throw Error(ErrorCode::RuleContractViolation, "arc '" + std::string(label) + "' binds " +
                                                          std::to_string(v.size()) + " tokens, expected 1");
    return v.front();
}

const std::vector<Value>& RuleInput::all(std::string_view label) const {
    auto it = by_label_.find(std::string(label));
    if (it == by_label_.end())
        throw Error(ErrorCode::RuleContractViolation, "no input arc labelled '" + std::string(label) + "'");
    return it->second;
}

int Marking::count(std::size_t p) const {
    int n = 0;
    for (auto& [v, k] : tokens_.at(p)) n += k;
    return n;
}

int Marking::total() const {
    int n = 0;
    for (std::size_t p = 0; p < tokens_.size(); ++p) n += count(p);
    return n;
}

void Marking::add(std::size_t p, const Value& v, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative multiplicity");
    if (k) tokens_.at(p)[v] += k;
}

void Marking::remove(std::size_t p, const Value& v, int k) {
    auto& ms = tokens_.at(p);
    auto it = ms.find(v);
    if (it == ms.end() || it->second < k)
        throw Error(ErrorCode::BindingStale, "token " + v.to_string() + " no longer present");
    it->second -= k;
    if (it->second == 0) ms.erase(it);
}

Eigen::VectorXi Marking::counts() const {
    Eigen::VectorXi c(static_cast<Eigen::Index>(tokens_.size()));
    for (std::size_t p = 0; p < tokens_.size(); ++p) c(static_cast<Eigen::Index>(p)) = count(p);
    return c;
}

std::optional<std::size_t> Net::place_index(std::string_view id) const {
    for (std::size_t i = 0; i < places_.size(); ++i)
        if (places_[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> Net::transition_index(std::string_view id) const {
    for (std::size_t i = 0; i < transitions_.size(); ++i)
        if (transitions_[i].id == id) return i;
    return std::nullopt;
}

std::size_t Net::require_transition(std::string_view id) const {
    auto t = transition_index(id);
    if (!t) throw Error(ErrorCode::UnknownNodeReference, "no transition '" + std::string(id) + "'");
    return *t;
}

ExecutionState Net::initial_state() const {
    ExecutionState s{initial_, {}};
    for (auto& t : transitions_) s.budgets.push_back(t.kind == TransitionKind::Source ? t.budget : 0);
    return s;
}

Net build_net(NetDefinition def) {
    Net net;
    net.name_ = def.name;
    net.colsets_ = def.colsets;
    std::set<std::string> ids;
    for (auto& p : def.places) {
        if (p.id.empty()) throw Error(ErrorCode::InvalidDefinition, "place with empty id");
        if (!ids.insert(p.id).second) throw Error(ErrorCode::DuplicateId, "'" + p.id + "' declared twice");
        if (p.display.empty()) p.display = p.id;
    }
    for (auto& t : def.transitions) {
        if (t.id.empty()) throw Error(ErrorCode::InvalidDefinition, "transition with empty id");
        if (!ids.insert(t.id).second) throw Error(ErrorCode::DuplicateId, "'" + t.id + "' declared twice");
        if (t.display.empty()) t.display = t.id;
    }
    net.places_ = std::move(def.places);
    net.transitions_ = std::move(def.transitions);

    const std::size_t np = net.places_.size(), nt = net.transitions_.size();
    net.inputs_.assign(nt, {});
    net.outputs_.assign(nt, {});
    net.inhibitors_.assign(nt, {});
    net.sinks_.assign(np, true);
    std::vector<std::set<std::string>> in_labels(nt), out_labels(nt);

    for (std::size_t a = 0; a < def.arcs.size(); ++a) {
        auto& arc = def.arcs[a];
        auto sp = net.place_index(arc.source), st = net.transition_index(arc.source);
        auto tp = net.place_index(arc.target), tt = net.transition_index(arc.target);
        if (!sp && !st) throw Error(ErrorCode::UnknownNodeReference, "arc source '" + arc.source + "'");
        if (!tp && !tt) throw Error(ErrorCode::UnknownNodeReference, "arc target '" + arc.target + "'");
        if ((sp && tp) || (st && tt))
            throw Error(ErrorCode::ArcBetweenSameClass, arc.source + " -> " + arc.target);
        if (arc.multiplicity < 1) throw Error(ErrorCode::InvalidDefinition, "arc multiplicity must be >= 1");
        std::size_t p = sp ? *sp : *tp;
        std::size_t t = st ? *st : *tt;
        if (arc.kind == ArcKind::Inhibitor && !sp)
            throw Error(ErrorCode::InvalidDefinition, "inhibitor arc must run from a place to a transition");
        std::string label = arc.label.empty() ? net.places_[p].id : arc.label;
        if (arc.kind == ArcKind::Inhibitor) {
            net.inhibitors_[t].push_back(a);
        } else if (sp) {
            if (!in_labels[t].insert(label).second)
                throw Error(ErrorCode::InvalidDefinition, "duplicate input label '" + label + "' on " + net.transitions_[t].id);
            net.inputs_[t].push_back(a);
            net.sinks_[p] = false;
        } else {
            if (!out_labels[t].insert(label).second)
                throw Error(ErrorCode::InvalidDefinition, "duplicate output label '" + label + "' on " + net.transitions_[t].id);
            net.outputs_[t].push_back(a);
        }
        net.arc_place_.push_back(p);
        net.arc_transition_.push_back(t);
        net.arc_labels_.push_back(label);
    }
    net.arcs_ = std::move(def.arcs);

    for (std::size_t t = 0; t < nt; ++t) {
        auto& tr = net.transitions_[t];
        if (tr.kind == TransitionKind::Source) {
            if (!net.inputs_[t].empty() || !net.inhibitors_[t].empty())
                throw Error(ErrorCode::InvalidDefinition, "source transition '" + tr.id + "' has input arcs");
            if (tr.budget < 1) throw Error(ErrorCode::InvalidDefinition, "source '" + tr.id + "' needs a budget >= 1");
        }
    }
    net.rules_.assign(nt, RuleFn{});
    for (auto& [id, fn] : def.rules) {
        auto t = net.transition_index(id);
        if (!t) throw Error(ErrorCode::UnknownNodeReference, "rule for unknown transition '" + id + "'");
        net.rules_[*t] = fn;
    }

    net.initial_ = Marking(np);
    for (auto& [pid, v] : def.initial) {
        auto p = net.place_index(pid);
        if (!p) throw Error(ErrorCode::UnknownNodeReference, "initial token for unknown place '" + pid + "'");
        if (!net.places_[*p].type.conforms(v))
            throw Error(ErrorCode::TypeMismatch, v.to_string() + " does not conform to " + net.places_[*p].type.describe());
        net.initial_.add(*p, v);
    }
    return net;
}

namespace {

/* All sub-multisets of `ms` with exactly k elements, as sorted value lists. */
void choose(const Multiset& ms, Multiset::const_iterator it, int k, std::vector<Value>& cur,
            std::vector<std::vector<Value>>& out) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    if (it == ms.end()) return;
    auto next = std::next(it);
    for (int take = std::min(k, it->second); take >= 0; --take) {
        for (int i = 0; i < take; ++i) cur.push_back(it->first);
        choose(ms, next, k - take, cur, out);
        cur.resize(cur.size() - take);
    }
}

std::optional<RuleOutput> evaluate(const Net& net, const ExecutionState& state, std::size_t t, const Binding& b) {
    std::map<std::string, std::vector<Value>> by_label;
    auto& ins = net.input_arcs(t);
    for (std::size_t i = 0; i < ins.size(); ++i) by_label[net.arc_label(ins[i])] = b[i];
    int index = 0;
    auto& tr = net.transitions()[t];
    if (tr.kind == TransitionKind::Source) index = tr.budget - state.budgets[t];
    RuleInput input(by_label, index);
    if (net.has_rule(t)) return net.rule(t)(input);
    // Label passing: each output arc copies the input bound under the same label.
    RuleOutput out;
    for (auto a : net.output_arcs(t)) {
        auto& label = net.arc_label(a);
        if (!input.has(label))
            throw Error(ErrorCode::RuleContractViolation, "transition '" + tr.id + "' has no rule and no input labelled '" + label + "'");
        out[label] = input.all(label);
    }
    return out;
}

bool available(const Net& net, const Marking& m, std::size_t t, const Binding& b) {
    std::map<std::size_t, Multiset> need;
    auto& ins = net.input_arcs(t);
    for (std::size_t i = 0; i < ins.size(); ++i)
        for (auto& v : b[i]) need[net.arc_place(ins[i])][v] += 1;
    for (auto& [p, ms] : need)
        for (auto& [v, k] : ms) {
            auto it = m.tokens(p).find(v);
            if (it == m.tokens(p).end() || it->second < k) return false;
        }
    return true;
}

bool inhibited(const Net& net, const Marking& m, std::size_t t) {
    for (auto a : net.inhibitor_arcs(t))
        if (m.count(net.arc_place(a)) >= net.arcs()[a].multiplicity) return true;
    return false;
}

}  // namespace

std::vector<Enabled> enabled_transitions(const Net& net, const ExecutionState& state) {
    std::vector<Enabled> out;
    auto& m = state.marking;
    for (std::size_t t = 0; t < net.transitions().size(); ++t) {
        auto& tr = net.transitions()[t];
        if (tr.kind == TransitionKind::Source && state.budgets[t] <= 0) continue;
        if (inhibited(net, m, t)) continue;
        auto& ins = net.input_arcs(t);
        std::vector<std::vector<std::vector<Value>>> options;
        bool empty = false;
        for (auto a : ins) {
            std::vector<std::vector<Value>> opts;
            std::vector<Value> cur;
            auto& ms = m.tokens(net.arc_place(a));
            choose(ms, ms.begin(), net.arcs()[a].multiplicity, cur, opts);
            if (opts.empty()) empty = true;
            options.push_back(std::move(opts));
        }
        if (empty) continue;
        std::vector<std::size_t> idx(ins.size(), 0);
        while (true) {
            Binding b;
            for (std::size_t i = 0; i < ins.size(); ++i) b.push_back(options[i][idx[i]]);
            if (available(net, m, t, b) && evaluate(net, state, t, b)) out.push_back({t, std::move(b)});
            std::size_t i = 0;
            while (i < idx.size() && ++idx[i] == options[i].size()) idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    std::sort(out.begin(), out.end(), [&](const Enabled& a, const Enabled& b) {
        auto& ia = net.transitions()[a.transition].id;
        auto& ib = net.transitions()[b.transition].id;
        if (ia != ib) return ia < ib;
        return a.binding < b.binding;
    });
    return out;
}

std::vector<Enabled> enabled_transitions(const Net& net, const Marking& marking) {
    auto s = net.initial_state();
    s.marking = marking;
    return enabled_transitions(net, s);
}

ExecutionState fire(const Net& net, const ExecutionState& state, std::size_t t, const Binding& b) {
    if (t >= net.transitions().size()) throw Error(ErrorCode::UnknownNodeReference, "transition index out of range");
    auto& tr = net.transitions()[t];
    auto& ins = net.input_arcs(t);
    if (b.size() != ins.size()) throw Error(ErrorCode::NotEnabled, "binding arity does not match '" + tr.id + "'");
    for (std::size_t i = 0; i < ins.size(); ++i)
        if (static_cast<int>(b[i].size()) != net.arcs()[ins[i]].multiplicity)
            throw Error(ErrorCode::NotEnabled, "binding size does not match arc multiplicity on '" + tr.id + "'");
    if (!available(net, state.marking, t, b))
        throw Error(ErrorCode::BindingStale, "tokens bound for '" + tr.id + "' are no longer present");
    if (tr.kind == TransitionKind::Source && state.budgets[t] <= 0)
        throw Error(ErrorCode::NotEnabled, "source '" + tr.id + "' has no budget left");
    if (inhibited(net, state.marking, t)) throw Error(ErrorCode::NotEnabled, "'" + tr.id + "' is inhibited");
    auto produced = evaluate(net, state, t, b);
    if (!produced) throw Error(ErrorCode::NotEnabled, "rule of '" + tr.id + "' rejects the binding");

    ExecutionState next = state;
    for (std::size_t i = 0; i < ins.size(); ++i)
        for (auto& v : b[i]) next.marking.remove(net.arc_place(ins[i]), v);
    for (auto a : net.output_arcs(t)) {
        auto& label = net.arc_label(a);
        auto it = produced->find(label);
        if (it == produced->end() || static_cast<int>(it->second.size()) != net.arcs()[a].multiplicity)
            throw Error(ErrorCode::RuleContractViolation,
                        "rule of '" + tr.id + "' must produce " + std::to_string(net.arcs()[a].multiplicity) +
                            " token(s) for '" + label + "'");
        auto p = net.arc_place(a);
        for (auto& v : it->second) {
            if (!net.places()[p].type.conforms(v))
                throw Error(ErrorCode::TypeMismatch, "'" + tr.id + "' produced " + v.to_string() + " for " +
                                                         net.places()[p].id);
            next.marking.add(p, v);
        }
    }
    if (tr.kind == TransitionKind::Source) next.budgets[t] -= 1;
    return next;
}

Marking fire(const Net& net, const Marking& marking, std::string_view transition, const Binding& binding) {
    auto s = net.initial_state();
    s.marking = marking;
    return fire(net, s, net.require_transition(transition), binding).marking;
}

bool is_completion(const Net& net, const ExecutionState& state) {
    for (auto b : state.budgets)
        if (b > 0) return false;
    for (std::size_t p = 0; p < net.places().size(); ++p)
        if (!net.is_sink(p) && state.marking.count(p) > 0) return false;
    return true;
}

std::string describe_binding(const Net& net, std::size_t t, const Binding& b) {
    std::string s = net.transitions()[t].id + "{";
    auto& ins = net.input_arcs(t);
    for (std::size_t i = 0; i < ins.size(); ++i) {
        if (i) s += ", ";
        s += net.arc_label(ins[i]) + "=";
        for (std::size_t j = 0; j < b[i].size(); ++j) s += (j ? "," : "") + b[i][j].to_string();
    }
    return s + "}";
}

}  // namespace petriproof
