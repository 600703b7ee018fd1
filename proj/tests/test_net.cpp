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

#include "doctest.h"
#include "petriproof/error.hpp"
#include "petriproof/net.hpp"

using namespace petriproof;

namespace {

Value I(long v) { return Value::integer(v); }

// src -> a -> T -> b, with T doubling its input
NetDefinition doubling() {
    NetDefinition d;
    d.name = "doubling";
    d.places = {{"a", "A", TokenType::integer(), "Int"}, {"b", "B", TokenType::integer(), "Int"}};
    d.transitions = {{"src", "Source", TransitionKind::Source, 2, ""}, {"T", "T", TransitionKind::Timed, 0, ""}};
    d.arcs = {{"src", "a", ArcKind::Normal, "x", 1}, {"a", "T", ArcKind::Normal, "x", 1}, {"T", "b", ArcKind::Normal, "y", 1}};
    d.rules["src"] = [](const RuleInput& in) -> std::optional<RuleOutput> {
        return RuleOutput{{"x", {I(in.firing_index() + 1)}}};
    };
    d.rules["T"] = [](const RuleInput& in) -> std::optional<RuleOutput> {
        return RuleOutput{{"y", {I(static_cast<long>(in.one("x").as_integer()) * 2)}}};
    };
    return d;
}

ErrorCode code_of(NetDefinition d) {
    try {
        build_net(std::move(d));
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("build_net accepted an invalid definition");
    return ErrorCode::IoError;
}

}  // namespace

TEST_SUITE("net") {

TEST_CASE("structural errors are reported with their codes") {
    auto d = doubling();
    d.places.push_back({"a", "dup", TokenType::integer(), "Int"});
    CHECK(code_of(d) == ErrorCode::DuplicateId);

    d = doubling();
    d.arcs.push_back({"a", "b", ArcKind::Normal, "z", 1});
    CHECK(code_of(d) == ErrorCode::ArcBetweenSameClass);

    d = doubling();
    d.arcs.push_back({"T", "nowhere", ArcKind::Normal, "z", 1});
    CHECK(code_of(d) == ErrorCode::UnknownNodeReference);

    d = doubling();
    d.initial.push_back({"a", Value::text("nope")});
    CHECK(code_of(d) == ErrorCode::TypeMismatch);

    d = doubling();
    d.transitions[0].budget = 0;
    CHECK(code_of(d) == ErrorCode::InvalidDefinition);

    d = doubling();
    d.arcs.push_back({"T", "a", ArcKind::Inhibitor, "", 1});
    CHECK(code_of(d) == ErrorCode::InvalidDefinition);
}

TEST_CASE("sources spend their budget and rules transform tokens") {
    Net net = build_net(doubling());
    auto s = net.initial_state();
    auto en = enabled_transitions(net, s);
    REQUIRE(en.size() == 1);
    CHECK(net.transitions()[en[0].transition].id == "src");
    s = fire(net, s, en[0].transition, en[0].binding);
    s = fire(net, s, net.require_transition("src"), {});
    CHECK(s.marking.count(0) == 2);
    CHECK(s.marking.tokens(0).count(I(1)) == 1);
    CHECK(s.marking.tokens(0).count(I(2)) == 1);
    CHECK_THROWS_AS(fire(net, s, net.require_transition("src"), {}), Error);

    auto t = net.require_transition("T");
    s = fire(net, s, t, {{I(2)}});
    CHECK(s.marking.tokens(1).count(I(4)) == 1);
    try {
        fire(net, s, t, {{I(2)}});
        FAIL("stale binding fired");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::BindingStale);
    }
    s = fire(net, s, t, {{I(1)}});
    CHECK(enabled_transitions(net, s).empty());
    CHECK(is_completion(net, s));
}

TEST_CASE("a rule returning nullopt disables the binding") {
    auto d = doubling();
    d.rules["T"] = [](const RuleInput& in) -> std::optional<RuleOutput> {
        if (in.one("x").as_integer() % 2 == 1) return std::nullopt;
        return RuleOutput{{"y", {in.one("x")}}};
    };
    Net net = build_net(d);
    auto s = net.initial_state();
    s = fire(net, s, 0, {});
    s = fire(net, s, 0, {});
    auto en = enabled_transitions(net, s);
    REQUIRE(en.size() == 1);
    CHECK(en[0].binding[0][0] == I(2));
}

TEST_CASE("a rule producing the wrong type violates its contract") {
    auto d = doubling();
    d.rules["T"] = [](const RuleInput&) -> std::optional<RuleOutput> {
        return RuleOutput{{"y", {Value::text("oops")}}};
    };
    Net net = build_net(d);
    auto s = fire(net, net.initial_state(), 0, {});
    CHECK_THROWS_AS(fire(net, s, 1, {{I(1)}}), Error);
}

TEST_CASE("inhibitor arcs block while the place is marked") {
    NetDefinition d;
    d.name = "inhibit";
    d.places = {{"p", "P", TokenType::integer(), "Int"}, {"q", "Q", TokenType::integer(), "Int"},
                {"r", "R", TokenType::integer(), "Int"}};
    d.transitions = {{"T", "T", TransitionKind::Timed, 0, ""}};
    d.arcs = {{"p", "T", ArcKind::Normal, "x", 1}, {"q", "T", ArcKind::Inhibitor, "", 1},
              {"T", "r", ArcKind::Normal, "x", 1}};
    d.initial = {{"p", I(5)}, {"q", I(0)}};
    Net net = build_net(d);
    CHECK(enabled_transitions(net, net.initial_state()).empty());

    d.initial = {{"p", I(5)}};
    Net free = build_net(d);
    auto en = enabled_transitions(free, free.initial_state());
    REQUIRE(en.size() == 1);
    auto s = fire(free, free.initial_state(), 0, en[0].binding);
    CHECK(s.marking.tokens(2).count(I(5)) == 1);  // label passing
}

TEST_CASE("arc multiplicity binds sub-multisets") {
    NetDefinition d;
    d.name = "pairs";
    d.places = {{"p", "P", TokenType::integer(), "Int"}, {"r", "R", TokenType::integer(), "Int"}};
    d.transitions = {{"T", "T", TransitionKind::Timed, 0, ""}};
    d.arcs = {{"p", "T", ArcKind::Normal, "x", 2}, {"T", "r", ArcKind::Normal, "x", 2}};
    d.initial = {{"p", I(1)}, {"p", I(2)}, {"p", I(3)}};
    Net net = build_net(d);
    // C(3,2) distinct pairs
    CHECK(enabled_transitions(net, net.initial_state()).size() == 3);
}

TEST_CASE("marking arithmetic") {
    Marking m(2);
    m.add(0, I(1), 3);
    m.add(1, I(2));
    CHECK(m.total() == 4);
    m.remove(0, I(1), 2);
    CHECK(m.count(0) == 1);
    CHECK_THROWS_AS(m.remove(1, I(9)), Error);
    CHECK(m.counts()(0) == 1);
}

}
