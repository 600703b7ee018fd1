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

#include "petriproof/value.hpp"

#include <charconv>
#include <cmath>
#include <set>

#include "petriproof/error.hpp"

namespace petriproof {

std::string_view error_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::DuplicateId: return "DuplicateId";
        case ErrorCode::ArcBetweenSameClass: return "ArcBetweenSameClass";
        case ErrorCode::UnknownNodeReference: return "UnknownNodeReference";
        case ErrorCode::TypeMismatch: return "TypeMismatch";
        case ErrorCode::InvalidDefinition: return "InvalidDefinition";
        case ErrorCode::NotEnabled: return "NotEnabled";
        case ErrorCode::BindingStale: return "BindingStale";
        case ErrorCode::RuleContractViolation: return "RuleContractViolation";
        case ErrorCode::EmptySamples: return "EmptySamples";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::UndeclaredColourSet: return "UndeclaredColourSet";
        case ErrorCode::UndeclaredVariable: return "UndeclaredVariable";
        case ErrorCode::TimedTokenInUntimedPlace: return "TimedTokenInUntimedPlace";
        case ErrorCode::UnknownFunction: return "UnknownFunction";
        case ErrorCode::ExpressionTypeError: return "ExpressionTypeError";
        case ErrorCode::DeadlockedAndNoFutureTokens: return "DeadlockedAndNoFutureTokens";
        case ErrorCode::NonceExhaustion: return "NonceExhaustion";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::EmptyBatch: return "EmptyBatch";
        case ErrorCode::InvalidCoordinate: return "InvalidCoordinate";
        case ErrorCode::InvalidTime: return "InvalidTime";
        case ErrorCode::UnknownProver: return "UnknownProver";
        case ErrorCode::NotFound: return "NotFound";
        case ErrorCode::UnknownModel: return "UnknownModel";
        case ErrorCode::UnknownProperty: return "UnknownProperty";
        case ErrorCode::UnknownRule: return "UnknownRule";
        case ErrorCode::SolverNotFound: return "SolverNotFound";
        case ErrorCode::SolverTimeout: return "SolverTimeout";
        case ErrorCode::UnparseableOutput: return "UnparseableOutput";
        case ErrorCode::MalformedScript: return "MalformedScript";
        case ErrorCode::IoError: return "IoError";
    }
    return "Error";
}

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
    std::uint64_t h = seed;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

Value Value::symbol(std::string name) { return Value(Rep(SymbolRep{std::move(name)})); }
Value Value::integer(BigInt v) { return Value(Rep(std::move(v))); }
Value Value::real(double v) { return Value(Rep(v)); }
Value Value::bytes(Bytes v) { return Value(Rep(std::move(v))); }
Value Value::text(std::string v) { return Value(Rep(std::move(v))); }
Value Value::tuple(std::vector<Value> items) { return Value(Rep(TupleRep{std::move(items)})); }

Value Value::record(std::vector<std::string> names, std::vector<Value> values) {
    if (names.size() != values.size())
        throw Error(ErrorCode::InvalidArgument, "record names and values differ in length");
    return Value(Rep(RecordRep{std::move(names), std::move(values)}));
}

namespace {

[[noreturn]] void wrong_kind(const char* wanted, const Value& v) {
    throw Error(ErrorCode::TypeMismatch, std::string("expected ") + wanted + ", got " + v.to_string());
}

}  // namespace

const std::string& Value::as_symbol() const {
    if (auto* s = std::get_if<SymbolRep>(&rep_)) return s->name;
    wrong_kind("symbol", *this);
}

const BigInt& Value::as_integer() const {
    if (auto* s = std::get_if<BigInt>(&rep_)) return *s;
    wrong_kind("integer", *this);
}

double Value::as_real() const {
    if (auto* s = std::get_if<double>(&rep_)) return *s;
    wrong_kind("real", *this);
}

const Bytes& Value::as_bytes() const {
    if (auto* s = std::get_if<Bytes>(&rep_)) return *s;
    wrong_kind("bytes", *this);
}

const std::string& Value::as_text() const {
    if (auto* s = std::get_if<std::string>(&rep_)) return *s;
    wrong_kind("text", *this);
}

const std::vector<Value>& Value::items() const {
    if (auto* s = std::get_if<TupleRep>(&rep_)) return s->items;
    wrong_kind("tuple", *this);
}

const std::vector<std::string>& Value::field_names() const {
    if (auto* s = std::get_if<RecordRep>(&rep_)) return s->names;
    wrong_kind("record", *this);
}

const std::vector<Value>& Value::field_values() const {
    if (auto* s = std::get_if<RecordRep>(&rep_)) return s->values;
    wrong_kind("record", *this);
}

bool Value::has_field(std::string_view name) const {
    auto* r = std::get_if<RecordRep>(&rep_);
    if (!r) return false;
    for (auto& n : r->names)
        if (n == name) return true;
    return false;
}

const Value& Value::field(std::string_view name) const {
    auto& names = field_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return field_values()[i];
    throw Error(ErrorCode::TypeMismatch, "record has no field '" + std::string(name) + "'");
}

namespace {

template <typename T>
int three_way(const T& a, const T& b) {
    if (a < b) return -1;
    if (b < a) return 1;
    return 0;
}

int compare_seq(const std::vector<Value>& a, const std::vector<Value>& b) {
    std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (int c = a[i].compare(b[i])) return c;
    return three_way(a.size(), b.size());
}

}  // namespace

int Value::compare(const Value& other) const {
    if (rep_.index() != other.rep_.index()) return three_way(rep_.index(), other.rep_.index());
    switch (kind()) {
        case Kind::Symbol: return three_way(as_symbol(), other.as_symbol());
        case Kind::Integer: return as_integer().compare(other.as_integer()) < 0 ? -1
                                   : as_integer() == other.as_integer()      ? 0
                                                                             : 1;
        case Kind::Real: return three_way(as_real(), other.as_real());
        case Kind::Bytes: return three_way(as_bytes(), other.as_bytes());
        case Kind::Text: return three_way(as_text(), other.as_text());
        case Kind::Tuple: return compare_seq(items(), other.items());
        case Kind::Record: {
            if (int c = three_way(field_names(), other.field_names())) return c;
            return compare_seq(field_values(), other.field_values());
        }
    }
    return 0;
}

std::string Value::to_string() const {
    switch (kind()) {
        case Kind::Symbol: return as_symbol();
        case Kind::Integer: return as_integer().str();
        case Kind::Real: {
            char buf[64];
            auto res = std::to_chars(buf, buf + sizeof buf, as_real());
            std::string s(buf, res.ptr);
            if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
            return s;
        }
        case Kind::Bytes: {
            static const char* hex = "0123456789abcdef";
            std::string s = "0x";
            for (auto b : as_bytes()) {
                s += hex[b >> 4];
                s += hex[b & 15];
            }
            return s;
        }
        case Kind::Text: {
            std::string s = "\"";
            for (char c : as_text()) {
                if (c == '"' || c == '\\') s += '\\';
                s += c;
            }
            return s + "\"";
        }
        case Kind::Tuple: {
            std::string s = "(";
            for (std::size_t i = 0; i < items().size(); ++i) {
                if (i) s += ",";
                s += items()[i].to_string();
            }
            return s + ")";
        }
        case Kind::Record: {
            std::string s = "{";
            for (std::size_t i = 0; i < field_names().size(); ++i) {
                if (i) s += ",";
                s += field_names()[i] + "=" + field_values()[i].to_string();
            }
            return s + "}";
        }
    }
    return {};
}

std::uint64_t Value::fingerprint() const { return fnv1a(to_string()); }

TokenType TokenType::enumeration(std::vector<std::string> symbols) {
    if (symbols.empty()) throw Error(ErrorCode::InvalidDefinition, "enumerated colour set is empty");
    std::set<std::string> seen;
    for (auto& s : symbols)
        if (!seen.insert(s).second)
            throw Error(ErrorCode::DuplicateId, "symbol '" + s + "' repeated in enumeration");
    TokenType t(Kind::Enumeration);
    t.symbols_ = std::move(symbols);
    return t;
}

TokenType TokenType::record(std::vector<std::string> names, std::vector<TokenType> types) {
    if (names.empty() || names.size() != types.size())
        throw Error(ErrorCode::InvalidDefinition, "record needs matching, non-empty fields");
    std::set<std::string> seen;
    for (auto& s : names)
        if (!seen.insert(s).second) throw Error(ErrorCode::DuplicateId, "field '" + s + "' repeated");
    TokenType t(Kind::Record);
    t.names_ = std::move(names);
    t.components_ = std::move(types);
    return t;
}

TokenType TokenType::product(std::vector<TokenType> components) {
    if (components.size() < 2) throw Error(ErrorCode::InvalidDefinition, "product arity must be at least 2");
    TokenType t(Kind::Product);
    t.components_ = std::move(components);
    return t;
}

std::optional<std::size_t> TokenType::ordinal(std::string_view symbol) const {
    for (std::size_t i = 0; i < symbols_.size(); ++i)
        if (symbols_[i] == symbol) return i;
    return std::nullopt;
}

bool TokenType::conforms(const Value& v) const {
    switch (kind_) {
        case Kind::Enumeration: return v.kind() == Value::Kind::Symbol && ordinal(v.as_symbol()).has_value();
        case Kind::Integer: return v.kind() == Value::Kind::Integer;
        case Kind::Real: return v.kind() == Value::Kind::Real && std::isfinite(v.as_real());
        case Kind::Bytes: return v.kind() == Value::Kind::Bytes;
        case Kind::Text: return v.kind() == Value::Kind::Text;
        case Kind::Product: {
            if (v.kind() != Value::Kind::Tuple || v.items().size() != components_.size()) return false;
            for (std::size_t i = 0; i < components_.size(); ++i)
                if (!components_[i].conforms(v.items()[i])) return false;
            return true;
        }
        case Kind::Record: {
            if (v.kind() != Value::Kind::Record || v.field_names() != names_) return false;
            for (std::size_t i = 0; i < components_.size(); ++i)
                if (!components_[i].conforms(v.field_values()[i])) return false;
            return true;
        }
    }
    return false;
}

bool TokenType::finite() const {
    if (kind_ == Kind::Enumeration) return true;
    if (kind_ == Kind::Product || kind_ == Kind::Record) {
        for (auto& c : components_)
            if (!c.finite()) return false;
        return true;
    }
    return false;
}

std::vector<Value> TokenType::elements() const {
    if (!finite()) throw Error(ErrorCode::InvalidArgument, "colour set " + describe() + " is not finite");
    if (kind_ == Kind::Enumeration) {
        std::vector<Value> out;
        for (auto& s : symbols_) out.push_back(Value::symbol(s));
        return out;
    }
    std::vector<std::vector<Value>> acc{{}};
    for (auto& c : components_) {
        std::vector<std::vector<Value>> next;
        for (auto& prefix : acc)
            for (auto& e : c.elements()) {
                auto p = prefix;
                p.push_back(e);
                next.push_back(std::move(p));
            }
        acc = std::move(next);
    }
    std::vector<Value> out;
    for (auto& a : acc)
        out.push_back(kind_ == Kind::Product ? Value::tuple(std::move(a)) : Value::record(names_, std::move(a)));
    return out;
}

std::string TokenType::describe() const {
    switch (kind_) {
        case Kind::Enumeration: {
            std::string s = "enum {";
            for (auto& x : symbols_) s += " " + x;
            return s + " }";
        }
        case Kind::Integer: return "int";
        case Kind::Real: return "real";
        case Kind::Bytes: return "bytes";
        case Kind::Text: return "text";
        case Kind::Product: {
            std::string s;
            for (std::size_t i = 0; i < components_.size(); ++i) s += (i ? " * " : "") + components_[i].describe();
            return "(" + s + ")";
        }
        case Kind::Record: {
            std::string s = "record {";
            for (std::size_t i = 0; i < names_.size(); ++i)
                s += std::string(i ? "," : "") + " " + names_[i] + " : " + components_[i].describe();
            return s + " }";
        }
    }
    return {};
}

bool TokenType::operator==(const TokenType& o) const {
    return kind_ == o.kind_ && symbols_ == o.symbols_ && names_ == o.names_ && components_ == o.components_;
}

}  // namespace petriproof
