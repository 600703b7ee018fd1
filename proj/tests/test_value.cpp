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

#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "petriproof/error.hpp"
#include "petriproof/value.hpp"

using namespace petriproof;

TEST_SUITE("value") {

TEST_CASE("values compare structurally and order totally") {
    auto a = Value::tuple({Value::integer(1), Value::symbol("x")});
    auto b = Value::tuple({Value::integer(1), Value::symbol("x")});
    auto c = Value::tuple({Value::integer(2), Value::symbol("x")});
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a < c);
    CHECK_FALSE(c < a);
    CHECK(a.fingerprint() == b.fingerprint());
}

TEST_CASE("ordering is a strict weak order over mixed kinds") {
    std::vector<Value> vs = {
        Value::symbol("b"), Value::integer(-3), Value::real(2.5), Value::text("hi"), Value::bytes({1, 2}),
        Value::tuple({}), Value::record({"a"}, {Value::integer(1)}), Value::symbol("a"), Value::integer(7),
    };
    for (auto& x : vs) {
        CHECK_FALSE(x < x);
        for (auto& y : vs) {
            CHECK((x < y) + (y < x) + (x == y) == 1);
            for (auto& z : vs)
                if (x < y && y < z) CHECK(x < z);
        }
    }
}

TEST_CASE("big integers keep full precision") {
    BigInt big = BigInt(1) << 200;
    auto v = Value::integer(big + 1);
    CHECK(v.as_integer() - big == 1);
    CHECK(Value::integer(big) < v);
}

TEST_CASE("record fields") {
    auto r = Value::record({"d", "Q"}, {Value::integer(7), Value::tuple({Value::integer(1), Value::integer(2)})});
    CHECK(r.has_field("Q"));
    CHECK_FALSE(r.has_field("q"));
    CHECK(r.field("d").as_integer() == 7);
    CHECK_THROWS_AS(r.field("missing"), Error);
    CHECK_THROWS_AS(Value::integer(1).as_symbol(), Error);
}

TEST_CASE("token types check conformance") {
    auto e = TokenType::enumeration({"p", "E", "P"});
    CHECK(e.conforms(Value::symbol("E")));
    CHECK_FALSE(e.conforms(Value::symbol("q")));
    CHECK_FALSE(e.conforms(Value::integer(0)));
    CHECK(e.ordinal("P") == 2u);
    CHECK_FALSE(e.ordinal("x").has_value());

    auto prod = TokenType::product({e, TokenType::enumeration({"u", "v"})});
    CHECK(prod.finite());
    CHECK(prod.elements().size() == 6);
    CHECK(prod.conforms(Value::tuple({Value::symbol("p"), Value::symbol("v")})));
    CHECK_FALSE(prod.conforms(Value::tuple({Value::symbol("p")})));

    auto rec = TokenType::record({"x", "y"}, {TokenType::integer(), TokenType::text()});
    CHECK(rec.conforms(Value::record({"x", "y"}, {Value::integer(1), Value::text("a")})));
    CHECK_FALSE(rec.conforms(Value::record({"x", "y"}, {Value::text("a"), Value::text("a")})));
    CHECK_FALSE(TokenType::integer().finite());
}

TEST_CASE("elements of a finite type all conform and are distinct") {
    auto t = TokenType::product({TokenType::enumeration({"a", "b", "c"}), TokenType::enumeration({"x", "y"})});
    auto els = t.elements();
    for (auto& v : els) CHECK(t.conforms(v));
    std::sort(els.begin(), els.end());
    CHECK(std::adjacent_find(els.begin(), els.end()) == els.end());
}

TEST_CASE("fnv1a reference vectors") {
    CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
    CHECK(fnv1a("a") == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a("foobar") == 0x85944171f73967e8ULL);
}

}
