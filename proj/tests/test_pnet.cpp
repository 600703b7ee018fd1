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

#include <string>

#include "doctest.h"
#include "petriproof/error.hpp"
#include "petriproof/models.hpp"
#include "petriproof/pnet.hpp"

using namespace petriproof;

namespace {

const char* kSmall = R"(# two places
net "small" kind cpn timed

colset U = enum { a b }
colset T = enum { x y } timed

var u : U
var t : T

place PU "P U" : U init 1'a ++ 1'b
place PT "P T" : T init 2'x@+1
place Out "Out" : U

trans Move "Move"
trans Tick "Tick"

arc PU -> Move : u
arc Move -> Out : u
arc PT -> Tick : t
arc Tick -> PT : t@+2
)";

ErrorCode parse_code(const std::string& text) {
    try {
        parse_model(text, FunctionRegistry{});
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("parsed without error");
    return ErrorCode::IoError;
}

std::string replace(std::string s, const std::string& from, const std::string& to) {
    auto pos = s.find(from);
    REQUIRE(pos != std::string::npos);
    return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("pnet") {

TEST_CASE("every built-in model survives print and reparse") {
    for (const auto& id : models::catalog()) {
        CAPTURE(id.key());
        auto first = parse_model(models::source(id), models::registry());
        std::string printed = print_model(first);
        auto second = parse_model(printed, models::registry());
        CHECK(print_model(second) == printed);
        if (auto* n = std::get_if<Net>(&first))
            CHECK(same_structure(*n, std::get<Net>(second)));
        else
            CHECK(std::get<CpnModel>(first) == std::get<CpnModel>(second));
    }
}

TEST_CASE("composite nets print and reparse") {
    for (const auto& name : models::composite_names()) {
        Net net = models::instantiate_hlpn(name);
        auto back = parse_model(print_model(net), models::registry());
        CHECK(same_structure(net, std::get<Net>(back)));
    }
}

TEST_CASE("a small timed model parses") {
    auto m = std::get<CpnModel>(parse_model(kSmall, FunctionRegistry{}));
    CHECK(m.name == "small");
    CHECK(m.timed);
    CHECK(m.places.size() == 3);
    CHECK(m.places[0].display == "P U");
    CHECK_FALSE(m.place_timed(0));
    CHECK(m.place_timed(1));
    auto s = m.initial_state();
    CHECK(s.size(0) == 2);
    CHECK(s.size(1) == 2);
    CHECK(s.marking[1].begin()->first.second == 1);
}

TEST_CASE("syntax errors carry line and column") {
    std::string bad = replace(kSmall, "arc PU -> Move : u", "arc PU -> Move u");
    try {
        parse_model(bad, FunctionRegistry{});
        FAIL("accepted bad arrow");
    } catch (const SyntaxError& e) {
        CHECK(e.line() == 17);
        CHECK(e.column() == 16);
        CHECK(std::string(e.what()).find("17:16") != std::string::npos);
    }
    CHECK(parse_code("net \"x\" kind cpn\nplace P \"unterminated : U\n") == ErrorCode::SyntaxError);
    CHECK(parse_code("bogus line\n") == ErrorCode::SyntaxError);
}

TEST_CASE("semantic errors have distinct codes") {
    CHECK(parse_code(replace(kSmall, "place Out \"Out\" : U", "place Out \"Out\" : Nope")) ==
          ErrorCode::UndeclaredColourSet);
    CHECK(parse_code(replace(kSmall, "arc Move -> Out : u", "arc Move -> Out : w")) == ErrorCode::UndeclaredVariable);
    CHECK(parse_code(replace(kSmall, "1'a ++ 1'b", "1'a@+3 ++ 1'b")) == ErrorCode::TimedTokenInUntimedPlace);
    CHECK(parse_code(replace(kSmall, "arc Move -> Out : u", "arc Move -> Out : f(u)")) == ErrorCode::UnknownFunction);
    CHECK(parse_code(kSmall + std::string("bind Move = nothing\n")) == ErrorCode::UnknownFunction);
    CHECK(parse_code(kSmall + std::string("place PU \"again\" : U\n")) == ErrorCode::DuplicateId);
    CHECK(parse_code(kSmall + std::string("arc PU -> Out : u\n")) == ErrorCode::ArcBetweenSameClass);
    CHECK(parse_code(replace(kSmall, "1'a ++ 1'b", "1'a ++ 1'z")) == ErrorCode::TypeMismatch);
}

TEST_CASE("literal values") {
    CHECK(parse_value("sym") == Value::symbol("sym"));
    CHECK(parse_value("-42") == Value::integer(-42));
    CHECK(parse_value("\"hi there\"") == Value::text("hi there"));
    CHECK(parse_value("0x0aff") == Value::bytes({0x0a, 0xff}));
    CHECK(parse_value("(1, a)") == Value::tuple({Value::integer(1), Value::symbol("a")}));
    auto r = parse_value("{ d = 7, Q = (1, 2) }");
    CHECK(r.field("d") == Value::integer(7));
    CHECK_THROWS_AS(parse_value("0xabc"), Error);
    CHECK_THROWS_AS(parse_value("(1,"), Error);
}

TEST_CASE("literal values print back to themselves") {
    for (const char* text : {"sym", "-42", "\"a b\"", "(1, a)", "0x0aff"}) {
        auto v = parse_value(text);
        CHECK(parse_value(v.to_string()) == v);
    }
}

}
