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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace petriproof {

using BigInt = boost::multiprecision::cpp_int;
using Bytes = std::vector<std::uint8_t>;

/*
 * A token payload. Values are immutable, totally ordered and compared
 * structurally, so they can key multisets directly.
 */
class Value {
public:
    enum class Kind { Symbol, Integer, Real, Bytes, Text, Tuple, Record };

    Value() : Value(symbol("unit")) {}

    static Value symbol(std::string name);
    static Value integer(BigInt v);
    static Value real(double v);
    static Value bytes(Bytes v);
    static Value text(std::string v);
    static Value tuple(std::vector<Value> items);
    static Value record(std::vector<std::string> names, std::vector<Value> values);

    Kind kind() const { return static_cast<Kind>(rep_.index()); }

    const std::string& as_symbol() const;
    const BigInt& as_integer() const;
    double as_real() const;
    const Bytes& as_bytes() const;
    const std::string& as_text() const;
    const std::vector<Value>& items() const;
    const std::vector<std::string>& field_names() const;
    const std::vector<Value>& field_values() const;
    const Value& field(std::string_view name) const;
    bool has_field(std::string_view name) const;

    bool is_symbol(std::string_view name) const {
        return kind() == Kind::Symbol && as_symbol() == name;
    }

    int compare(const Value& other) const;
    bool operator==(const Value& o) const { return compare(o) == 0; }
    bool operator!=(const Value& o) const { return compare(o) != 0; }
    bool operator<(const Value& o) const { return compare(o) < 0; }

    std::string to_string() const;
    std::uint64_t fingerprint() const;

private:
    struct SymbolRep { std::string name; };
    struct TupleRep { std::vector<Value> items; };
    struct RecordRep {
        std::vector<std::string> names;
        std::vector<Value> values;
    };
    using Rep = std::variant<SymbolRep, BigInt, double, Bytes, std::string, TupleRep, RecordRep>;

    explicit Value(Rep rep) : rep_(std::move(rep)) {}

    Rep rep_;
};

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 0xcbf29ce484222325ULL);

/* Descriptor for the set of values a place may hold (the type map phi). */
class TokenType {
public:
    enum class Kind { Enumeration, Integer, Real, Bytes, Text, Record, Product };

    TokenType() : kind_(Kind::Integer) {}

    static TokenType enumeration(std::vector<std::string> symbols);
    static TokenType integer() { return TokenType(Kind::Integer); }
    static TokenType real() { return TokenType(Kind::Real); }
    static TokenType bytes() { return TokenType(Kind::Bytes); }
    static TokenType text() { return TokenType(Kind::Text); }
    static TokenType record(std::vector<std::string> names, std::vector<TokenType> types);
    static TokenType product(std::vector<TokenType> components);

    Kind kind() const { return kind_; }
    const std::vector<std::string>& symbols() const { return symbols_; }
    const std::vector<std::string>& field_names() const { return names_; }
    const std::vector<TokenType>& components() const { return components_; }

    std::optional<std::size_t> ordinal(std::string_view symbol) const;
    bool conforms(const Value& v) const;

    /* Enumerations and products of enumerations can be listed exhaustively. */
    bool finite() const;
    std::vector<Value> elements() const;

    std::string describe() const;

    bool operator==(const TokenType& o) const;
    bool operator!=(const TokenType& o) const { return !(*this == o); }

private:
    explicit TokenType(Kind k) : kind_(k) {}

    Kind kind_;
    std::vector<std::string> symbols_;
    std::vector<std::string> names_;
    std::vector<TokenType> components_;
};

}  // namespace petriproof
