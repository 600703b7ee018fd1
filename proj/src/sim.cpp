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

#include "petriproof/sim.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <set>
#include <sstream>

#include <boost/math/distributions/students_t.hpp>

#include "json.hpp"
#include "petriproof/error.hpp"

namespace petriproof {

std::uint64_t mix_seed(std::uint64_t master, std::uint64_t k) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (k + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string_view to_string(Termination t) {
    switch (t) {
        case Termination::BudgetExhausted: return "budget-exhausted";
        case Termination::Completion: return "completion";
        case Termination::Deadlock: return "deadlock";
    }
    return "deadlock";
}

Trace run_trace(const Net& net, int firings, std::uint64_t seed) {
    Trace tr;
    tr.final_state = net.initial_state();
    std::mt19937_64 rng(mix_seed(seed, 0));
    for (int i = 0; i < firings; ++i) {
        auto en = enabled_transitions(net, tr.final_state);
        if (en.empty()) {
            tr.termination = is_completion(net, tr.final_state) ? Termination::Completion : Termination::Deadlock;
            return tr;
        }
        std::uniform_int_distribution<std::size_t> pick(0, en.size() - 1);
        auto& choice = en[pick(rng)];
        tr.final_state = fire(net, tr.final_state, choice.transition, choice.binding);
        tr.series.push_back(tr.final_state.marking.counts());
        tr.fired.push_back(choice);
    }
    tr.termination = Termination::BudgetExhausted;
    return tr;
}

std::pair<double, double> confidence_interval(std::span<const double> samples, double alpha) {
    if (samples.empty()) throw Error(ErrorCode::EmptySamples, "no samples");
    if (!(alpha > 0 && alpha < 1)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (0,1)");
    const double n = static_cast<double>(samples.size());
    double mean = 0;
    for (double s : samples) mean += s;
    mean /= n;
    if (samples.size() == 1) return {mean, mean};
    double ss = 0;
    for (double s : samples) ss += (s - mean) * (s - mean);
    double sd = std::sqrt(ss / (n - 1));
    boost::math::students_t dist(n - 1);
    double t = boost::math::quantile(boost::math::complement(dist, alpha / 2));
    double h = t * sd / std::sqrt(n);
    return {mean - h, mean + h};
}

SimReport replicate(const Net& net, const SimConfig& config) {
    if (config.firings < 1 || config.replications < 1)
        throw Error(ErrorCode::InvalidArgument, "firings and replications must be >= 1");
    SimReport rep;
    rep.model = net.name();
    rep.config = config;
    const std::size_t np = net.places().size();
    std::vector<std::vector<double>> samples(np);
    std::set<ExecutionState> seen;
    for (int k = 0; k < config.replications; ++k) {
        auto tr = run_trace(net, config.firings, mix_seed(config.seed, static_cast<std::uint64_t>(k)));
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(np));
        if (tr.series.empty()) {
            acc = net.initial_marking().counts().cast<double>();
        } else {
            for (auto& obs : tr.series) acc += obs.cast<double>();
            acc /= static_cast<double>(tr.series.size());
        }
        for (std::size_t p = 0; p < np; ++p) samples[p].push_back(acc(static_cast<Eigen::Index>(p)));
        rep.trace_lengths.push_back(static_cast<int>(tr.fired.size()));
        rep.terminations.push_back(tr.termination);
        if (tr.termination == Termination::Deadlock) ++rep.deadlocks;
        // Replay to count distinct states visited.
        auto s = net.initial_state();
        seen.insert(s);
        for (auto& f : tr.fired) {
            s = fire(net, s, f.transition, f.binding);
            seen.insert(s);
        }
    }
    rep.states_explored = seen.size();
    for (std::size_t p = 0; p < np; ++p) {
        PlaceStatistic st;
        st.name = net.places()[p].display;
        double sum = 0;
        for (double x : samples[p]) sum += x;
        st.mean = sum / static_cast<double>(samples[p].size());
        auto [lo, hi] = confidence_interval(samples[p], config.alpha);
        st.ci_lo = std::min(lo, st.mean);
        st.ci_hi = std::max(hi, st.mean);
        rep.places.push_back(st);
    }
    return rep;
}

ExploreResult bounded_explore(const Net& net, std::size_t max_states) {
    if (max_states < 1) throw Error(ErrorCode::InvalidArgument, "max_states must be >= 1");
    ExploreResult res;
    res.place_reachable.assign(net.places().size(), false);
    std::set<ExecutionState> seen;
    std::deque<ExecutionState> queue;
    auto visit = [&](const ExecutionState& s) {
        if (seen.count(s)) return;
        if (seen.size() >= max_states) {
            res.truncated = true;
            return;
        }
        seen.insert(s);
        queue.push_back(s);
    };
    visit(net.initial_state());
    while (!queue.empty()) {
        auto s = std::move(queue.front());
        queue.pop_front();
        for (std::size_t p = 0; p < net.places().size(); ++p)
            if (s.marking.count(p) > 0) res.place_reachable[p] = true;
        auto en = enabled_transitions(net, s);
        if (en.empty()) {
            if (is_completion(net, s)) ++res.completions;
            else res.deadlocks.push_back(s);
            continue;
        }
        for (auto& e : en) visit(fire(net, s, e.transition, e.binding));
    }
    res.states = seen.size();
    return res;
}

std::string to_json(const SimReport& r) {
    nlohmann::ordered_json j;
    j["model"] = r.model;
    j["config"] = {{"firings", r.config.firings},
                   {"replications", r.config.replications},
                   {"seed", r.config.seed},
                   {"alpha", r.config.alpha}};
    auto places = nlohmann::ordered_json::array();
    for (auto& p : r.places)
        places.push_back({{"name", p.name}, {"mean", p.mean}, {"ci_lo", p.ci_lo}, {"ci_hi", p.ci_hi}});
    j["places"] = places;
    j["trace_lengths"] = r.trace_lengths;
    std::vector<std::string> term;
    for (auto t : r.terminations) term.emplace_back(to_string(t));
    j["terminated"] = term;
    j["deadlocks"] = r.deadlocks;
    j["states_explored"] = r.states_explored;
    return j.dump(2) + "\n";
}

std::string to_csv(const SimReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "place,mean,ci_lo,ci_hi\n";
    for (auto& p : r.places) os << p.name << "," << p.mean << "," << p.ci_lo << "," << p.ci_hi << "\n";
    return os.str();
}

}  // namespace petriproof
