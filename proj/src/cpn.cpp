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

#include "petriproof/cpn.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

#include "petriproof/error.hpp"

namespace petriproof {

Value bool_value(bool b) { return Value::symbol(b ? "true" : "false"); }

namespace {

bool as_bool(const Value& v, const std::string& where) {
    if (v.is_symbol("true")) return true;
    if (v.is_symbol("false")) return false;
    throw Error(ErrorCode::ExpressionTypeError, where + " is not boolean: " + v.to_string());
}

int precedence(Expr::Kind k) {
    switch (k) {
        case Expr::Kind::Or: return 1;
        case Expr::Kind::And: return 2;
        case Expr::Kind::Not: return 3;
        case Expr::Kind::Equal:
        case Expr::Kind::NotEqual: return 4;
        default: return 5;
    }
}

std::string wrap(const Expr& e, int min_prec) {
    std::string s = e.to_string();
    return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

}  // namespace

std::string Expr::to_string() const {
    switch (kind) {
        case Kind::Variable: return name;
        case Kind::Constant: return constant.to_string();
        case Kind::Call:
        case Kind::Tuple: {
            std::string out = kind == Kind::Call ? name + "(" : "(";
            for (std::size_t i = 0; i < args.size(); ++i) {
                if (i) out += ", ";
                out += args[i].to_string();
            }
            return out + ")";
        }
        case Kind::Equal: return wrap(args[0], 5) + " = " + wrap(args[1], 5);
        case Kind::NotEqual: return wrap(args[0], 5) + " <> " + wrap(args[1], 5);
        case Kind::And: return wrap(args[0], 2) + " and " + wrap(args[1], 3);
        case Kind::Or: return wrap(args[0], 1) + " or " + wrap(args[1], 2);
        case Kind::Not: return "not " + wrap(args[0], 3);
    }
    return {};
}

void Expr::collect_variables(std::vector<std::string>& out) const {
    if (kind == Kind::Variable) {
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
        return;
    }
    for (const auto& a : args) a.collect_variables(out);
}

bool Expr::is_pattern() const {
    if (kind == Kind::Variable || kind == Kind::Constant) return true;
    if (kind != Kind::Tuple) return false;
    return std::all_of(args.begin(), args.end(), [](const Expr& a) { return a.is_pattern(); });
}

std::string Inscription::to_string() const {
    std::string out;
    if (coefficient != 1) out += std::to_string(coefficient) + "'";
    out += expr.to_string();
    if (delay) out += "@+" + std::to_string(*delay);
    return out;
}

int CpnState::size(std::size_t p) const {
    int n = 0;
    for (const auto& [tok, k] : marking.at(p)) n += k;
    return n;
}

std::optional<std::size_t> CpnModel::colset_index(std::string_view n) const {
    for (std::size_t i = 0; i < colsets.size(); ++i)
        if (colsets[i].name == n) return i;
    return std::nullopt;
}

std::optional<std::size_t> CpnModel::variable_colset(std::string_view n) const {
    for (const auto& [name, cs] : variables)
        if (name == n) return cs;
    return std::nullopt;
}

std::optional<std::size_t> CpnModel::place_index(std::string_view id) const {
    for (std::size_t i = 0; i < places.size(); ++i)
        if (places[i].id == id) return i;
    return std::nullopt;
}

std::optional<std::size_t> CpnModel::transition_index(std::string_view id) const {
    for (std::size_t i = 0; i < transitions.size(); ++i)
        if (transitions[i].id == id) return i;
    return std::nullopt;
}

void CpnModel::finalize() {
    std::set<std::string> ids;
    for (const auto& p : places)
        if (!ids.insert(p.id).second) throw Error(ErrorCode::DuplicateId, p.id);
    for (const auto& t : transitions)
        if (!ids.insert(t.id).second) throw Error(ErrorCode::DuplicateId, t.id);

    for (auto& p : places) {
        if (p.display.empty()) p.display = p.id;
        if (p.colset >= colsets.size()) throw Error(ErrorCode::UndeclaredColourSet, p.id);
        const auto& cs = colsets[p.colset];
        for (const auto& tok : p.initial) {
            if (tok.timed && !cs.timed) throw Error(ErrorCode::TimedTokenInUntimedPlace, p.id);
            if (tok.timestamp < 0 || tok.count < 1)
                throw Error(ErrorCode::InvalidDefinition, "bad initial token in " + p.id);
            if (!cs.type.conforms(tok.value))
                throw Error(ErrorCode::TypeMismatch, tok.value.to_string() + " in " + p.id);
        }
    }
    for (auto& t : transitions) {
        if (t.display.empty()) t.display = t.id;
        if (t.kind == TransitionKind::Source && t.budget < 1)
            throw Error(ErrorCode::InvalidDefinition, "source " + t.id + " needs a budget");
    }

    inputs_.assign(transitions.size(), {});
    outputs_.assign(transitions.size(), {});
    inhibitors_.assign(transitions.size(), {});
    arc_place_.clear();
    for (std::size_t a = 0; a < arcs.size(); ++a) {
        const auto& arc = arcs[a];
        auto sp = place_index(arc.source), st = transition_index(arc.source);
        auto tp = place_index(arc.target), tt = transition_index(arc.target);
        if (!(sp || st)) throw Error(ErrorCode::UnknownNodeReference, arc.source);
        if (!(tp || tt)) throw Error(ErrorCode::UnknownNodeReference, arc.target);
        if ((sp && tp) || (st && tt))
            throw Error(ErrorCode::ArcBetweenSameClass, arc.source + " -> " + arc.target);
        if (arc.inscription.coefficient < 1)
            throw Error(ErrorCode::InvalidDefinition, "coefficient below 1 on " + arc.source + " -> " + arc.target);
        std::size_t p = sp ? *sp : *tp;
        arc_place_.push_back(p);
        if (arc.kind == ArcKind::Inhibitor) {
            if (!sp) throw Error(ErrorCode::InvalidDefinition, "inhibitor arc must leave a place");
            inhibitors_[*tt].push_back(a);
        } else if (sp) {
            if (arc.inscription.delay) throw Error(ErrorCode::InvalidDefinition, "delay on an input arc");
            inputs_[*tt].push_back(a);
        } else {
            if (arc.inscription.delay && !colsets[places[p].colset].timed)
                throw Error(ErrorCode::TimedTokenInUntimedPlace, arc.target);
            outputs_[*st].push_back(a);
        }
    }

    auto check_expr = [&](const Expr& e, const std::string& where, auto&& self) -> void {
        if (e.kind == Expr::Kind::Variable && !variable_colset(e.name))
            throw Error(ErrorCode::UndeclaredVariable, e.name + " in " + where);
        if (e.kind == Expr::Kind::Call) {
            auto it = functions.find(e.name);
            if (it == functions.end()) throw Error(ErrorCode::UnknownFunction, e.name + " in " + where);
            if (it->second.arity != static_cast<int>(e.args.size()))
                throw Error(ErrorCode::ExpressionTypeError, e.name + " takes " +
                                                               std::to_string(it->second.arity) + " arguments");
        }
        for (const auto& a : e.args) self(a, where, self);
    };

    for (std::size_t t = 0; t < transitions.size(); ++t) {
        std::vector<std::string> bound;
        for (auto a : inputs_[t]) {
            check_expr(arcs[a].inscription.expr, transitions[t].id, check_expr);
            if (arcs[a].inscription.expr.is_pattern()) arcs[a].inscription.expr.collect_variables(bound);
        }
        std::vector<std::string> used;
        for (auto a : inputs_[t]) arcs[a].inscription.expr.collect_variables(used);
        for (auto a : outputs_[t]) {
            check_expr(arcs[a].inscription.expr, transitions[t].id, check_expr);
            arcs[a].inscription.expr.collect_variables(used);
        }
        for (auto a : inhibitors_[t]) check_expr(arcs[a].inscription.expr, transitions[t].id, check_expr);
        if (transitions[t].guard) {
            check_expr(*transitions[t].guard, transitions[t].id, check_expr);
            transitions[t].guard->collect_variables(used);
        }
        for (const auto& v : used) {
            if (std::find(bound.begin(), bound.end(), v) != bound.end()) continue;
            if (!colsets[*variable_colset(v)].type.finite())
                throw Error(ErrorCode::UndeclaredVariable,
                            v + " in " + transitions[t].id + " is not bound by an input arc");
        }
    }
}

bool CpnModel::transition_untimed(std::size_t t) const {
    for (auto a : inputs_.at(t))
        if (place_timed(arc_place_[a])) return false;
    return true;
}

CpnState CpnModel::initial_state() const {
    CpnState s;
    s.marking.resize(places.size());
    for (std::size_t p = 0; p < places.size(); ++p)
        for (const auto& tok : places[p].initial)
            s.marking[p][{tok.value, colsets[places[p].colset].timed ? tok.timestamp : 0}] += tok.count;
    s.budgets.resize(transitions.size(), 0);
    for (std::size_t t = 0; t < transitions.size(); ++t)
        if (transitions[t].kind == TransitionKind::Source) s.budgets[t] = transitions[t].budget;
    return s;
}

bool CpnModel::operator==(const CpnModel& o) const {
    if (name != o.name || timed != o.timed || colsets != o.colsets || variables != o.variables) return false;
    if (places.size() != o.places.size() || transitions.size() != o.transitions.size() ||
        arcs.size() != o.arcs.size())
        return false;
    for (std::size_t i = 0; i < places.size(); ++i) {
        const auto &a = places[i], &b = o.places[i];
        if (a.id != b.id || a.display != b.display || a.colset != b.colset ||
            a.initial.size() != b.initial.size())
            return false;
        for (std::size_t k = 0; k < a.initial.size(); ++k) {
            const auto &x = a.initial[k], &y = b.initial[k];
            if (x.value != y.value || x.timestamp != y.timestamp || x.count != y.count || x.timed != y.timed)
                return false;
        }
    }
    for (std::size_t i = 0; i < transitions.size(); ++i) {
        const auto &a = transitions[i], &b = o.transitions[i];
        if (a.id != b.id || a.display != b.display || a.bind != b.bind || a.kind != b.kind ||
            a.budget != b.budget || a.guard.has_value() != b.guard.has_value())
            return false;
        if (a.guard && a.guard->to_string() != b.guard->to_string()) return false;
    }
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const auto &a = arcs[i], &b = o.arcs[i];
        if (a.source != b.source || a.target != b.target || a.kind != b.kind ||
            a.inscription.to_string() != b.inscription.to_string())
            return false;
    }
    return true;
}

Value evaluate(const CpnModel& model, const Expr& e, const CpnBinding& b, const TokenType* expected) {
    switch (e.kind) {
        case Expr::Kind::Variable: {
            auto it = b.find(e.name);
            if (it == b.end()) throw Error(ErrorCode::UndeclaredVariable, e.name + " is unbound");
            return it->second;
        }
        case Expr::Kind::Constant: return e.constant;
        case Expr::Kind::Tuple: {
            std::vector<Value> items;
            bool typed = expected && expected->kind() == TokenType::Kind::Product &&
                         expected->components().size() == e.args.size();
            for (std::size_t i = 0; i < e.args.size(); ++i)
                items.push_back(evaluate(model, e.args[i], b, typed ? &expected->components()[i] : nullptr));
            return Value::tuple(std::move(items));
        }
        case Expr::Kind::Call: {
            auto it = model.functions.find(e.name);
            if (it == model.functions.end()) throw Error(ErrorCode::UnknownFunction, e.name);
            FunctionContext ctx;
            ctx.result = expected;
            std::vector<Value> args;
            for (const auto& a : e.args) {
                args.push_back(evaluate(model, a, b));
                const TokenType* at = nullptr;
                if (a.kind == Expr::Kind::Variable) {
                    if (auto cs = model.variable_colset(a.name)) at = &model.colsets[*cs].type;
                }
                ctx.args.push_back(at);
            }
            return it->second.fn(args, ctx);
        }
        case Expr::Kind::Equal:
            return bool_value(evaluate(model, e.args[0], b) == evaluate(model, e.args[1], b));
        case Expr::Kind::NotEqual:
            return bool_value(evaluate(model, e.args[0], b) != evaluate(model, e.args[1], b));
        case Expr::Kind::And:
            return bool_value(as_bool(evaluate(model, e.args[0], b), e.args[0].to_string()) &&
                              as_bool(evaluate(model, e.args[1], b), e.args[1].to_string()));
        case Expr::Kind::Or:
            return bool_value(as_bool(evaluate(model, e.args[0], b), e.args[0].to_string()) ||
                              as_bool(evaluate(model, e.args[1], b), e.args[1].to_string()));
        case Expr::Kind::Not: return bool_value(!as_bool(evaluate(model, e.args[0], b), e.args[0].to_string()));
    }
    return {};
}

namespace {

bool match(const Expr& pat, const Value& v, CpnBinding& b) {
    switch (pat.kind) {
        case Expr::Kind::Variable: {
            auto [it, fresh] = b.emplace(pat.name, v);
            return fresh || it->second == v;
        }
        case Expr::Kind::Constant: return pat.constant == v;
        case Expr::Kind::Tuple: {
            if (v.kind() != Value::Kind::Tuple || v.items().size() != pat.args.size()) return false;
            for (std::size_t i = 0; i < pat.args.size(); ++i)
                if (!match(pat.args[i], v.items()[i], b)) return false;
            return true;
        }
        default: return false;
    }
}

/* Tokens usable at `clock`, collapsed by value. */
std::map<Value, int> available(const CpnState& s, std::size_t p) {
    std::map<Value, int> out;
    for (const auto& [tok, k] : s.marking[p])
        if (tok.second <= s.clock) out[tok.first] += k;
    return out;
}

using Demand = std::map<std::pair<std::size_t, Value>, int>;

Demand demand_of(const CpnModel& m, std::size_t t, const CpnBinding& b) {
    Demand d;
    for (auto a : m.input_arcs(t)) {
        const auto& ins = m.arcs[a].inscription;
        std::size_t p = m.arc_place(a);
        d[{p, evaluate(m, ins.expr, b, &m.place_colset(p).type)}] += ins.coefficient;
    }
    return d;
}

bool binding_ok(const CpnModel& m, const CpnState& s, std::size_t t, const CpnBinding& b,
                const std::vector<std::map<Value, int>>& avail) {
    for (const auto& [key, k] : demand_of(m, t, b)) {
        auto it = avail[key.first].find(key.second);
        if (it == avail[key.first].end() || it->second < k) return false;
    }
    for (auto a : m.inhibitor_arcs(t))
        if (s.size(m.arc_place(a)) >= m.arcs[a].inscription.coefficient) return false;
    if (const auto& g = m.transitions[t].guard)
        return as_bool(evaluate(m, *g, b), "guard of " + m.transitions[t].id);
    return true;
}

void extend_free(const CpnModel& m, std::size_t t, CpnBinding b, const std::vector<std::string>& free,
                 std::size_t i, const CpnState& s, const std::vector<std::map<Value, int>>& avail,
                 std::set<CpnBinding>& out) {
    if (i == free.size()) {
        if (binding_ok(m, s, t, b, avail)) out.insert(b);
        return;
    }
    for (const auto& v : m.colsets[*m.variable_colset(free[i])].type.elements()) {
        b[free[i]] = v;
        extend_free(m, t, b, free, i + 1, s, avail, out);
    }
}

void match_arcs(const CpnModel& m, std::size_t t, const std::vector<std::size_t>& pats, std::size_t i,
                const CpnBinding& b, const std::vector<std::string>& vars, const CpnState& s,
                const std::vector<std::map<Value, int>>& avail, std::set<CpnBinding>& out) {
    if (i == pats.size()) {
        std::vector<std::string> free;
        for (const auto& v : vars)
            if (!b.count(v)) free.push_back(v);
        extend_free(m, t, b, free, 0, s, avail, out);
        return;
    }
    std::size_t a = pats[i];
    for (const auto& [v, k] : avail[m.arc_place(a)]) {
        CpnBinding next = b;
        if (match(m.arcs[a].inscription.expr, v, next)) match_arcs(m, t, pats, i + 1, next, vars, s, avail, out);
    }
}

}  // namespace

std::vector<CpnEnabled> enabled_bindings(const CpnModel& model, const CpnState& state) {
    std::vector<std::map<Value, int>> avail;
    for (std::size_t p = 0; p < model.places.size(); ++p) avail.push_back(available(state, p));

    std::vector<std::size_t> order(model.transitions.size());
    for (std::size_t t = 0; t < order.size(); ++t) order[t] = t;
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return model.transitions[x].id < model.transitions[y].id; });

    std::vector<CpnEnabled> out;
    for (auto t : order) {
        if (model.transitions[t].kind == TransitionKind::Source && state.budgets.at(t) <= 0) continue;
        std::vector<std::size_t> pats;
        std::vector<std::string> vars;
        for (auto a : model.input_arcs(t)) {
            const auto& e = model.arcs[a].inscription.expr;
            if (e.is_pattern()) pats.push_back(a);
            e.collect_variables(vars);
        }
        for (auto a : model.output_arcs(t)) model.arcs[a].inscription.expr.collect_variables(vars);
        if (const auto& g = model.transitions[t].guard) g->collect_variables(vars);

        std::set<CpnBinding> found;
        match_arcs(model, t, pats, 0, {}, vars, state, avail, found);
        for (const auto& b : found) out.push_back({t, b});
    }
    return out;
}

Policy default_policy(const CpnModel& model) { return model.timed ? Policy::Priority : Policy::SeededRandom; }

CpnState fire(const CpnModel& model, const CpnState& state, std::size_t t, const CpnBinding& binding) {
    if (t >= model.transitions.size()) throw Error(ErrorCode::NotEnabled, "no such transition");
    std::vector<std::map<Value, int>> avail;
    for (std::size_t p = 0; p < model.places.size(); ++p) avail.push_back(available(state, p));
    if (model.transitions[t].kind == TransitionKind::Source && state.budgets.at(t) <= 0)
        throw Error(ErrorCode::NotEnabled, model.transitions[t].id + " has no budget left");

    Demand demand = demand_of(model, t, binding);
    for (const auto& [key, k] : demand) {
        auto it = avail[key.first].find(key.second);
        if (it == avail[key.first].end() || it->second < k)
            throw Error(ErrorCode::BindingStale, key.second.to_string() + " not available in " +
                                                     model.places[key.first].id);
    }
    if (!binding_ok(model, state, t, binding, avail))
        throw Error(ErrorCode::NotEnabled, model.transitions[t].id);

    CpnState next = state;
    for (const auto& [key, k] : demand) {
        auto& ms = next.marking[key.first];
        int left = k;
        // earliest timestamps go first
        for (auto it = ms.lower_bound({key.second, std::numeric_limits<std::int64_t>::min()});
             left > 0 && it != ms.end() && it->first.first == key.second && it->first.second <= state.clock;) {
            int take = std::min(left, it->second);
            it->second -= take;
            left -= take;
            it = it->second == 0 ? ms.erase(it) : std::next(it);
        }
    }
    for (auto a : model.output_arcs(t)) {
        const auto& ins = model.arcs[a].inscription;
        std::size_t p = model.arc_place(a);
        const auto& cs = model.place_colset(p);
        Value v = evaluate(model, ins.expr, binding, &cs.type);
        if (!cs.type.conforms(v))
            throw Error(ErrorCode::ExpressionTypeError,
                        ins.expr.to_string() + " produced " + v.to_string() + ", not a " + cs.name);
        std::int64_t ts = cs.timed ? state.clock + ins.delay.value_or(0) : 0;
        next.marking[p][{v, ts}] += ins.coefficient;
    }
    if (model.transitions[t].kind == TransitionKind::Source) --next.budgets[t];
    return next;
}

StepResult step(const CpnModel& model, const CpnState& state, Policy policy, std::mt19937_64& rng) {
    CpnState cur = state;
    for (;;) {
        auto en = enabled_bindings(model, cur);
        if (!en.empty()) {
            if (policy == Policy::Priority) {
                std::vector<CpnEnabled> untimed;
                for (const auto& e : en)
                    if (model.transition_untimed(e.transition)) untimed.push_back(e);
                if (!untimed.empty()) en = std::move(untimed);
            }
            std::uniform_int_distribution<std::size_t> pick(0, en.size() - 1);
            const auto& chosen = en[pick(rng)];
            return {fire(model, cur, chosen.transition, chosen.binding), chosen.transition, chosen.binding};
        }
        std::optional<std::int64_t> next;
        for (std::size_t p = 0; p < model.places.size(); ++p)
            for (const auto& [tok, k] : cur.marking[p])
                if (tok.second > cur.clock && (!next || tok.second < *next)) next = tok.second;
        if (!next)
            throw Error(ErrorCode::DeadlockedAndNoFutureTokens, "no binding at clock " + std::to_string(cur.clock));
        cur.clock = *next;
    }
}

std::string_view to_string(MonitorKind k) {
    return k == MonitorKind::DiscreteAverage ? "discrete-average" : "time-average";
}

void Monitor::observe(double value, std::int64_t clock) {
    if (count_ == 0) {
        min_ = max_ = value;
        first_clock_ = clock;
    } else {
        area_ += last_ * static_cast<double>(clock - last_clock_);
        min_ = std::min(min_, value);
        max_ = std::max(max_, value);
    }
    ++count_;
    sum_ += value;
    last_ = value;
    last_clock_ = clock;
}

MonitorStats Monitor::stats() const {
    MonitorStats s;
    s.kind = kind_;
    s.count = count_;
    s.sum = sum_;
    s.min = min_;
    s.max = max_;
    if (count_ == 0) return s;
    s.average_defined = true;
    auto elapsed = last_clock_ - first_clock_;
    if (kind_ == MonitorKind::TimeAverage && elapsed > 0)
        s.average = area_ / static_cast<double>(elapsed);
    else
        s.average = sum_ / static_cast<double>(count_);
    // clamp rounding noise so min <= average <= max holds exactly
    s.average = std::clamp(s.average, s.min, s.max);
    return s;
}

MonitorStats monitor_stats(const Monitor& m) { return m.stats(); }

CpnRun run_cpn(const CpnModel& model, int steps, std::uint64_t seed, Policy policy, MonitorKind kind) {
    if (steps < 0) throw Error(ErrorCode::InvalidArgument, "steps must be non-negative");
    std::mt19937_64 rng(seed);
    CpnRun run;
    CpnState state = model.initial_state();
    std::vector<Monitor> monitors;
    for (std::size_t p = 0; p < model.places.size(); ++p) {
        monitors.emplace_back(p, kind);
        monitors.back().observe(state.size(p), state.clock);
    }
    for (int i = 0; i < steps; ++i) {
        StepResult r;
        try {
            r = step(model, state, policy, rng);
        } catch (const Error& e) {
            if (e.code() != ErrorCode::DeadlockedAndNoFutureTokens) throw;
            run.stopped_early = true;
            break;
        }
        run.events.push_back({r.transition, r.binding, r.state.clock});
        state = std::move(r.state);
        for (auto& m : monitors) m.observe(state.size(m.place()), state.clock);
    }
    run.final_state = std::move(state);
    for (const auto& m : monitors) run.stats.push_back(m.stats());
    return run;
}

std::string stats_csv(const CpnModel& model, const std::vector<MonitorStats>& stats) {
    std::ostringstream out;
    out.precision(6);
    out << std::fixed;
    out << "place,count,sum,average,min,max\n";
    for (std::size_t p = 0; p < stats.size(); ++p) {
        const auto& s = stats[p];
        std::string name = model.places.at(p).display;
        if (name.find_first_of(",\"") != std::string::npos) {
            std::string q = "\"";
            for (char c : name) q += c == '"' ? std::string("\"\"") : std::string(1, c);
            name = q + "\"";
        }
        out << name << ',' << s.count << ',' << s.sum << ',';
        if (s.average_defined)
            out << s.average;
        else
            out << "NA";
        out << ',' << s.min << ',' << s.max << '\n';
    }
    return out.str();
}

}  // namespace petriproof
