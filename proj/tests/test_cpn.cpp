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

#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "petriproof/cpn.hpp"
#include "petriproof/error.hpp"
#include "petriproof/models.hpp"
#include "petriproof/pnet.hpp"
#include "fixtures.hpp"

using namespace petriproof;
using fixtures::kMixed;
using fixtures::kRows;
using fixtures::kTimedRows;

namespace {

const char* kDelay = R"(net "delay" kind cpn timed
colset T = enum { x } timed
var t : T
place P "P" : T init 1'x@+1
trans Tick "Tick"
arc P -> Tick : t
arc Tick -> P : t@+2
)";

CpnModel parse_cpn(const char* text) { return std::get<CpnModel>(parse_model(text, FunctionRegistry{})); }

void check_identities(const MonitorStats& s) {
    if (!s.average_defined) return;
    CHECK(s.min <= s.average);
    CHECK(s.average <= s.max);
    if (s.kind == MonitorKind::DiscreteAverage && s.sum != 0)
        CHECK(std::abs(s.average * static_cast<double>(s.count) - s.sum) <= 1e-9 * std::abs(s.sum));
}

}  // namespace

TEST_SUITE("cpn") {

TEST_CASE("reference monitor rows satisfy the count/sum/average identities") {
    for (const auto& r : kRows) {
        CAPTURE(r.place);
        CHECK(std::abs(r.sum / static_cast<double>(r.count) - r.average) < 5e-7);
        CHECK(r.min <= r.average);
        CHECK(r.average <= r.max);

        Monitor m(0, MonitorKind::DiscreteAverage);
        auto xs = fixtures::sequence_for(r);
        REQUIRE_FALSE(xs.empty());
        for (std::size_t i = 0; i < xs.size(); ++i) m.observe(xs[i], static_cast<std::int64_t>(i));
        auto s = m.stats();
        CHECK(s.count == r.count);
        CHECK(s.sum == r.sum);
        CHECK(s.min == r.min);
        CHECK(s.max == r.max);
        CHECK(std::abs(s.average - r.average) < 5e-7);
        check_identities(s);
    }
    for (const auto& r : kTimedRows) {
        CAPTURE(r.place);
        CHECK(r.min <= r.average);
        CHECK(r.average <= r.max);
    }
}

TEST_CASE("time-average monitor weights by holding time") {
    Monitor m(0, MonitorKind::TimeAverage);
    m.observe(2, 0);
    m.observe(4, 3);
    m.observe(0, 5);
    auto s = m.stats();
    CHECK(s.average == doctest::Approx(14.0 / 5.0));
    CHECK(s.count == 3);
    CHECK(s.sum == 6);
    CHECK(s.min == 0);
    CHECK(s.max == 4);

    Monitor empty(0, MonitorKind::DiscreteAverage);
    CHECK_FALSE(empty.stats().average_defined);
}

TEST_CASE("monitor identities hold on every built-in run") {
    for (const auto& name : models::base_names())
        for (bool timed : {false, true}) {
            CAPTURE(name);
            CAPTURE(timed);
            auto m = models::instantiate_cpn(name, timed);
            for (std::uint64_t seed = 0; seed < 5; ++seed)
                for (auto kind : {MonitorKind::DiscreteAverage, MonitorKind::TimeAverage}) {
                    auto run = run_cpn(m, 50, seed, default_policy(m), kind);
                    REQUIRE(run.stats.size() == m.places.size());
                    for (auto& s : run.stats) {
                        CHECK(s.count == static_cast<long>(run.events.size()) + 1);
                        check_identities(s);
                    }
                }
        }
}

TEST_CASE("timed key generation fires only at odd clocks from 1") {
    auto m = models::instantiate_cpn("ecdsa-keygen", true);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto run = run_cpn(m, 200, seed, default_policy(m), MonitorKind::TimeAverage);
        REQUIRE_FALSE(run.events.empty());
        for (auto& e : run.events) {
            CHECK(e.clock >= 1);
            CHECK(e.clock % 2 == 1);
        }
        for (std::size_t i = 1; i < run.events.size(); ++i) CHECK(run.events[i - 1].clock <= run.events[i].clock);
    }
}

TEST_CASE("tokens become available at their timestamp and delays add to the clock") {
    auto m = parse_cpn(kDelay);
    auto s = m.initial_state();
    CHECK(s.clock == 0);
    CHECK(enabled_bindings(m, s).empty());
    std::mt19937_64 rng(1);
    auto r1 = step(m, s, Policy::Priority, rng);
    CHECK(r1.state.clock == 1);
    CHECK(r1.state.marking[0].begin()->first.second == 3);
    auto r2 = step(m, r1.state, Policy::Priority, rng);
    CHECK(r2.state.clock == 3);
}

TEST_CASE("untimed transitions fire before timed ones") {
    auto m = parse_cpn(kMixed);
    CHECK(m.transition_untimed(0));
    CHECK_FALSE(m.transition_untimed(1));
    CHECK(default_policy(m) == Policy::Priority);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto run = run_cpn(m, 10, seed, Policy::Priority, MonitorKind::DiscreteAverage);
        REQUIRE(run.events.size() == 5);
        for (int i = 0; i < 3; ++i) CHECK(run.events[static_cast<std::size_t>(i)].transition == 0);
        CHECK(run.events[3].transition == 1);
        CHECK(run.events[4].transition == 1);
        CHECK(run.stopped_early);
    }
    // without priority the timed path sometimes goes first
    bool interleaved = false;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto run = run_cpn(m, 10, seed, Policy::SeededRandom, MonitorKind::DiscreteAverage);
        interleaved = interleaved || run.events[0].transition == 1;
    }
    CHECK(interleaved);
}

TEST_CASE("no binding and no future token is reported") {
    auto m = parse_cpn(kMixed);
    auto run = run_cpn(m, 10, 0, Policy::Priority, MonitorKind::DiscreteAverage);
    std::mt19937_64 rng(0);
    try {
        step(m, run.final_state, Policy::Priority, rng);
        FAIL("stepped a dead model");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DeadlockedAndNoFutureTokens);
    }
}

TEST_CASE("firing a binding twice is stale") {
    auto m = parse_cpn(kMixed);
    auto s = m.initial_state();
    CpnBinding b{{"u", Value::symbol("a")}};
    s = fire(m, s, 0, b);
    try {
        fire(m, s, 0, b);
        FAIL("fired a consumed token");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BindingStale);
    }
}

TEST_CASE("guards filter bindings") {
    auto m = models::instantiate_cpn("lps-verify-proof", false);
    auto t = *m.transition_index("VerifyContextInformation");
    REQUIRE(m.transitions[t].guard.has_value());
    auto run = run_cpn(m, 300, 3, Policy::SeededRandom, MonitorKind::DiscreteAverage);
    bool fired = false;
    for (auto& e : run.events)
        if (e.transition == t) {
            fired = true;
            CHECK(e.binding.at("eci") == Value::symbol("CI_Exist"));
        }
    CHECK(fired);
}

TEST_CASE("every coloured transition fires across twenty seeds") {
    for (const auto& name : models::base_names())
        for (bool timed : {false, true}) {
            CAPTURE(name);
            CAPTURE(timed);
            auto m = models::instantiate_cpn(name, timed);
            std::set<std::size_t> fired;
            for (std::uint64_t seed = 0; seed < 20; ++seed) {
                auto run = run_cpn(m, 100, seed, default_policy(m), MonitorKind::DiscreteAverage);
                for (auto& e : run.events) fired.insert(e.transition);
            }
            CHECK(fired.size() == m.transitions.size());
        }
}

TEST_CASE("runs are reproducible") {
    auto m = models::instantiate_cpn("ecdsa-sigverify", true);
    auto a = run_cpn(m, 100, 17, default_policy(m), MonitorKind::TimeAverage);
    auto b = run_cpn(m, 100, 17, default_policy(m), MonitorKind::TimeAverage);
    CHECK(a.final_state == b.final_state);
    CHECK(stats_csv(m, a.stats) == stats_csv(m, b.stats));
}

}
