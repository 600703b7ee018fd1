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

#include "petriproof/pnet.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "petriproof/error.hpp"

namespace petriproof {
namespace {

struct Tok {
    enum class Kind { Ident, Number, String, Punct, End };
    Kind kind = Kind::End;
    std::string text;
    int line = 1;
    int col = 1;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Tok> lex_line(std::string_view s, int line) {
    std::vector<Tok> out;
    std::size_t i = 0;
    auto col = [&](std::size_t at) { return static_cast<int>(at) + 1; };
    while (i < s.size()) {
        char c = s[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        Tok t;
        t.line = line;
        t.col = col(i);
        if (c == '"') {
            t.kind = Tok::Kind::String;
            ++i;
            bool closed = false;
            while (i < s.size()) {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    t.text += s[i + 1];
                    i += 2;
                } else if (s[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                } else {
                    t.text += s[i++];
                }
            }
            if (!closed) throw SyntaxError(line, col(i), "closing quote");
        } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                   (c == '-' && i + 1 < s.size() && std::isdigit(static_cast<unsigned char>(s[i + 1])))) {
            t.kind = Tok::Kind::Number;
            std::size_t j = i + 1;
            if (c == '0' && j < s.size() && (s[j] == 'x' || s[j] == 'X')) {
                ++j;
                while (j < s.size() && std::isxdigit(static_cast<unsigned char>(s[j]))) ++j;
            } else {
                while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                if (j + 1 < s.size() && s[j] == '.' && std::isdigit(static_cast<unsigned char>(s[j + 1]))) {
                    ++j;
                    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                }
                if (j < s.size() && (s[j] == 'e' || s[j] == 'E')) {
                    std::size_t k = j + 1;
                    if (k < s.size() && (s[k] == '+' || s[k] == '-')) ++k;
                    if (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) {
                        j = k;
                        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
                    }
                }
            }
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else if (ident_start(c)) {
            t.kind = Tok::Kind::Ident;
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            t.text = std::string(s.substr(i, j - i));
            i = j;
        } else {
            t.kind = Tok::Kind::Punct;
            auto two = s.substr(i, 2);
            if (two == "<>" || two == "++" || two == "->" || two == "@+") {
                t.text = std::string(two);
                i += 2;
            } else if (two == "-o" && (i + 2 >= s.size() || !ident_char(s[i + 2]))) {
                t.text = "-o";
                i += 2;
            } else if (std::string_view("=:{}(),*'|`").find(c) != std::string_view::npos) {
                // the backquote is accepted as a coefficient mark, as in some hand-written inscriptions
                t.text = c == '`' ? "'" : std::string(1, c);
                ++i;
            } else {
                throw SyntaxError(line, col(i), "a token");
            }
        }
        out.push_back(std::move(t));
    }
    Tok end;
    end.kind = Tok::Kind::End;
    end.line = line;
    end.col = static_cast<int>(s.size()) + 1;
    out.push_back(end);
    return out;
}

class Cursor {
public:
    explicit Cursor(std::vector<Tok> toks) : toks_(std::move(toks)) {}

    const Tok& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
    const Tok& next() {
        const Tok& t = peek();
        if (pos_ < toks_.size() - 1) ++pos_;
        return t;
    }
    bool at_end() const { return peek().kind == Tok::Kind::End; }
    [[noreturn]] void fail(const std::string& expected) const { throw SyntaxError(peek().line, peek().col, expected); }

    bool is_punct(std::string_view p, std::size_t ahead = 0) const {
        return peek(ahead).kind == Tok::Kind::Punct && peek(ahead).text == p;
    }
    bool is_word(std::string_view w) const { return peek().kind == Tok::Kind::Ident && peek().text == w; }
    bool accept_punct(std::string_view p) {
        if (!is_punct(p)) return false;
        next();
        return true;
    }
    bool accept_word(std::string_view w) {
        if (!is_word(w)) return false;
        next();
        return true;
    }
    void expect_punct(std::string_view p) {
        if (!accept_punct(p)) fail("'" + std::string(p) + "'");
    }
    void expect_word(std::string_view w) {
        if (!accept_word(w)) fail("'" + std::string(w) + "'");
    }
    const Tok& expect_ident(const std::string& what) {
        if (peek().kind != Tok::Kind::Ident) fail(what);
        return next();
    }
    long long expect_int(const std::string& what) {
        if (peek().kind != Tok::Kind::Number) fail(what);
        const Tok& t = peek();
        long long v = 0;
        auto r = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (r.ec != std::errc() || r.ptr != t.text.data() + t.text.size()) fail(what);
        next();
        return v;
    }
    void expect_end() {
        if (!at_end()) fail("end of line");
    }

private:
    std::vector<Tok> toks_;
    std::size_t pos_ = 0;
};

Value number_value(const Tok& t) {
    const std::string& s = t.text;
    if (s.size() > 2 && s[0] == '0' && (s[1] == 'x' || s[1] == 'X')) {
        std::string hex = s.substr(2);
        if (hex.size() % 2) throw SyntaxError(t.line, t.col, "an even number of hex digits");
        Bytes b;
        for (std::size_t i = 0; i < hex.size(); i += 2) b.push_back(static_cast<std::uint8_t>(std::stoi(hex.substr(i, 2), nullptr, 16)));
        return Value::bytes(std::move(b));
    }
    if (s.find_first_of(".eE") != std::string::npos) {
        double d = 0;
        auto r = std::from_chars(s.data(), s.data() + s.size(), d);
        if (r.ec != std::errc()) throw SyntaxError(t.line, t.col, "a number");
        return Value::real(d);
    }
    return Value::integer(BigInt(s));
}

Value parse_literal(Cursor& c) {
    const Tok& t = c.peek();
    switch (t.kind) {
        case Tok::Kind::Ident: return Value::symbol(c.next().text);
        case Tok::Kind::Number: return number_value(c.next());
        case Tok::Kind::String: return Value::text(c.next().text);
        default: break;
    }
    if (c.accept_punct("(")) {
        std::vector<Value> items{parse_literal(c)};
        while (c.accept_punct(",")) items.push_back(parse_literal(c));
        c.expect_punct(")");
        return Value::tuple(std::move(items));
    }
    if (c.accept_punct("{")) {
        std::vector<std::string> names;
        std::vector<Value> values;
        do {
            names.push_back(c.expect_ident("field name").text);
            c.expect_punct("=");
            values.push_back(parse_literal(c));
        } while (c.accept_punct(","));
        c.expect_punct("}");
        return Value::record(std::move(names), std::move(values));
    }
    c.fail("a value");
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        out += ch;
    }
    return out + "\"";
}

std::string at(const Tok& t) { return " at " + std::to_string(t.line) + ":" + std::to_string(t.col); }

struct Document {
    bool seen_net = false;
    bool cpn = false;
    CpnModel model;  // HLPN files reuse the same containers before conversion
    std::map<std::string, std::string> binds;
    std::vector<std::pair<std::string, Tok>> bind_pos;
};

class Parser {
public:
    Parser(const FunctionRegistry& reg) : reg_(reg) {}

    ParsedModel run(std::string_view text) {
        int line = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t nl = text.find('\n', start);
            std::string_view raw = text.substr(start, nl == std::string_view::npos ? std::string_view::npos : nl - start);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            ++line;
            Cursor c(lex_line(raw, line));
            if (!c.at_end()) statement(c);
            if (nl == std::string_view::npos) break;
            start = nl + 1;
        }
        if (!doc_.seen_net) throw SyntaxError(1, 1, "net declaration");
        return finish();
    }

private:
    void statement(Cursor& c) {
        const Tok& head = c.peek();
        if (head.kind != Tok::Kind::Ident) c.fail("a statement keyword");
        if (!doc_.seen_net && head.text != "net") c.fail("net declaration");
        std::string kw = c.next().text;
        if (kw == "net") return net(c, head);
        if (kw == "colset") return colset(c);
        if (kw == "var") return var(c);
        if (kw == "place") return place(c);
        if (kw == "trans") return trans(c);
        if (kw == "arc") return arc(c);
        if (kw == "bind") return bind(c);
        throw SyntaxError(head.line, head.col, "a statement keyword");
    }

    void net(Cursor& c, const Tok& head) {
        if (doc_.seen_net) throw SyntaxError(head.line, head.col, "a single net declaration");
        doc_.seen_net = true;
        if (c.peek().kind != Tok::Kind::String) c.fail("net name in quotes");
        doc_.model.name = c.next().text;
        c.expect_word("kind");
        if (c.accept_word("cpn"))
            doc_.cpn = true;
        else if (!c.accept_word("hlpn"))
            c.fail("'hlpn' or 'cpn'");
        doc_.model.timed = c.accept_word("timed");
        if (doc_.model.timed && !doc_.cpn) c.fail("end of line (hlpn nets are untimed)");
        c.expect_end();
    }

    std::size_t resolve_colset(const Tok& t) const {
        auto idx = doc_.model.colset_index(t.text);
        if (!idx) throw Error(ErrorCode::UndeclaredColourSet, t.text + at(t));
        return *idx;
    }

    void colset(Cursor& c) {
        const Tok& name = c.expect_ident("colour set name");
        if (doc_.model.colset_index(name.text)) throw Error(ErrorCode::DuplicateId, name.text + at(name));
        c.expect_punct("=");
        ColourSet cs;
        cs.name = name.text;
        try {
            if (c.accept_word("enum")) {
                c.expect_punct("{");
                std::vector<std::string> syms;
                while (!c.is_punct("}")) {
                    syms.push_back(c.expect_ident("symbol").text);
                    if (!c.accept_punct(",")) c.accept_punct("|");
                }
                c.expect_punct("}");
                cs.type = TokenType::enumeration(std::move(syms));
            } else if (c.accept_word("with")) {
                std::vector<std::string> syms{c.expect_ident("symbol").text};
                while (c.accept_punct("|")) syms.push_back(c.expect_ident("symbol").text);
                cs.type = TokenType::enumeration(std::move(syms));
            } else if (c.accept_word("product")) {
                std::vector<TokenType> comps;
                do {
                    const Tok& part = c.expect_ident("colour set name");
                    comps.push_back(doc_.model.colsets[resolve_colset(part)].type);
                    cs.parts.push_back(part.text);
                } while (c.accept_punct("*"));
                if (comps.size() < 2) c.fail("'*'");
                cs.type = TokenType::product(std::move(comps));
            } else if (c.accept_word("record")) {
                c.expect_punct("{");
                std::vector<std::string> fields;
                std::vector<TokenType> types;
                do {
                    fields.push_back(c.expect_ident("field name").text);
                    c.expect_punct(":");
                    const Tok& part = c.expect_ident("colour set name");
                    types.push_back(doc_.model.colsets[resolve_colset(part)].type);
                    cs.parts.push_back(part.text);
                } while (c.accept_punct(","));
                c.expect_punct("}");
                cs.type = TokenType::record(std::move(fields), std::move(types));
            } else if (c.accept_word("int")) {
                cs.type = TokenType::integer();
            } else if (c.accept_word("real")) {
                cs.type = TokenType::real();
            } else if (c.accept_word("bytes")) {
                cs.type = TokenType::bytes();
            } else if (c.accept_word("text")) {
                cs.type = TokenType::text();
            } else {
                c.fail("'enum', 'product', 'record', 'int', 'real', 'bytes' or 'text'");
            }
        } catch (const SyntaxError&) {
            throw;
        } catch (const Error& e) {
            if (e.code() != ErrorCode::InvalidDefinition) throw;
            throw Error(ErrorCode::InvalidDefinition, std::string(e.what()) + at(name));
        }
        cs.timed = c.accept_word("timed");
        c.expect_end();
        doc_.model.colsets.push_back(std::move(cs));
    }

    void var(Cursor& c) {
        std::vector<Tok> names{c.expect_ident("variable name")};
        while (c.accept_punct(",")) names.push_back(c.expect_ident("variable name"));
        c.expect_punct(":");
        std::size_t cs = resolve_colset(c.expect_ident("colour set name"));
        c.expect_end();
        for (const auto& n : names) {
            if (doc_.model.variable_colset(n.text)) throw Error(ErrorCode::DuplicateId, n.text + at(n));
            doc_.model.variables.emplace_back(n.text, cs);
        }
    }

    void place(Cursor& c) {
        CpnPlace p;
        const Tok& id = c.expect_ident("place name");
        p.id = id.text;
        if (c.peek().kind == Tok::Kind::String) p.display = c.next().text;
        c.expect_punct(":");
        p.colset = resolve_colset(c.expect_ident("colour set name"));
        if (c.accept_word("init")) {
            do {
                InitialToken tok;
                if (c.peek().kind == Tok::Kind::Number && c.is_punct("'", 1)) {
                    tok.count = static_cast<int>(c.expect_int("count"));
                    c.next();
                }
                const Tok& vt = c.peek();
                tok.value = parse_literal(c);
                if (c.accept_punct("@+")) {
                    tok.timed = true;
                    tok.timestamp = c.expect_int("timestamp");
                    if (!doc_.model.colsets[p.colset].timed)
                        throw Error(ErrorCode::TimedTokenInUntimedPlace, p.id + at(vt));
                }
                if (!doc_.model.colsets[p.colset].type.conforms(tok.value))
                    throw Error(ErrorCode::TypeMismatch, tok.value.to_string() + " is not a " +
                                                             doc_.model.colsets[p.colset].name + at(vt));
                p.initial.push_back(std::move(tok));
            } while (c.accept_punct("++"));
        }
        c.expect_end();
        doc_.model.places.push_back(std::move(p));
    }

    void trans(Cursor& c) {
        CpnTransition t;
        t.id = c.expect_ident("transition name").text;
        if (c.peek().kind == Tok::Kind::String) t.display = c.next().text;
        while (!c.at_end()) {
            if (c.accept_word("guard")) {
                if (!doc_.cpn) c.fail("'kind' (guards need a cpn net)");
                t.guard = expr(c);
            } else if (c.accept_word("kind")) {
                if (c.accept_word("source")) {
                    t.kind = TransitionKind::Source;
                    c.expect_word("budget");
                    t.budget = static_cast<int>(c.expect_int("budget"));
                } else if (c.accept_word("immediate")) {
                    t.kind = TransitionKind::Immediate;
                } else if (c.accept_word("timed")) {
                    t.kind = TransitionKind::Timed;
                } else {
                    c.fail("'source', 'immediate' or 'timed'");
                }
            } else {
                c.fail("'guard', 'kind' or end of line");
            }
        }
        doc_.model.transitions.push_back(std::move(t));
    }

    void arc(Cursor& c) {
        CpnArc a;
        a.source = c.expect_ident("node name").text;
        if (c.accept_punct("-o"))
            a.kind = ArcKind::Inhibitor;
        else
            c.expect_punct("->");
        a.target = c.expect_ident("node name").text;
        c.expect_punct(":");
        if (c.peek().kind == Tok::Kind::Number && c.is_punct("'", 1)) {
            a.inscription.coefficient = static_cast<int>(c.expect_int("coefficient"));
            c.next();
        }
        if (doc_.cpn) {
            a.inscription.expr = expr(c);
            if (c.accept_punct("@+")) a.inscription.delay = c.expect_int("delay");
        } else {
            a.inscription.expr = Expr::variable(c.expect_ident("arc label").text);
        }
        c.expect_end();
        doc_.model.arcs.push_back(std::move(a));
    }

    void bind(Cursor& c) {
        const Tok& t = c.expect_ident("transition name");
        c.expect_punct("=");
        const Tok& fn = c.expect_ident("function name");
        c.expect_end();
        bool known = doc_.cpn ? reg_.functions.count(fn.text) != 0 : reg_.rules.count(fn.text) != 0;
        if (!known) throw Error(ErrorCode::UnknownFunction, fn.text + at(fn));
        if (doc_.binds.count(t.text)) throw Error(ErrorCode::DuplicateId, "second bind for " + t.text + at(t));
        doc_.binds[t.text] = fn.text;
        doc_.bind_pos.emplace_back(t.text, t);
    }

    // guard / inscription expressions
    Expr expr(Cursor& c) {
        Expr lhs = conj(c);
        while (c.accept_word("or") || c.accept_word("orelse")) lhs = Expr::binary(Expr::Kind::Or, lhs, conj(c));
        return lhs;
    }
    Expr conj(Cursor& c) {
        Expr lhs = neg(c);
        while (c.accept_word("and") || c.accept_word("andalso")) lhs = Expr::binary(Expr::Kind::And, lhs, neg(c));
        return lhs;
    }
    Expr neg(Cursor& c) {
        if (c.accept_word("not")) return Expr{Expr::Kind::Not, {}, {}, {neg(c)}};
        return cmp(c);
    }
    Expr cmp(Cursor& c) {
        Expr lhs = primary(c);
        if (c.accept_punct("=")) return Expr::binary(Expr::Kind::Equal, lhs, primary(c));
        if (c.accept_punct("<>")) return Expr::binary(Expr::Kind::NotEqual, lhs, primary(c));
        return lhs;
    }
    Expr primary(Cursor& c) {
        const Tok& t = c.peek();
        if (c.accept_punct("(")) {
            std::vector<Expr> items{expr(c)};
            while (c.accept_punct(",")) items.push_back(expr(c));
            c.expect_punct(")");
            return items.size() == 1 ? items[0] : Expr::tuple(std::move(items));
        }
        if (t.kind == Tok::Kind::Number) return Expr::literal(number_value(c.next()));
        if (t.kind == Tok::Kind::String) return Expr::literal(Value::text(c.next().text));
        if (t.kind != Tok::Kind::Ident) c.fail("an expression");
        Tok name = c.next();
        if (c.accept_punct("(")) {
            if (!reg_.functions.count(name.text)) throw Error(ErrorCode::UnknownFunction, name.text + at(name));
            std::vector<Expr> args;
            if (!c.is_punct(")")) {
                args.push_back(expr(c));
                while (c.accept_punct(",")) args.push_back(expr(c));
            }
            c.expect_punct(")");
            return Expr::call(name.text, std::move(args));
        }
        if (doc_.model.variable_colset(name.text)) return Expr::variable(name.text);
        if (name.text == "true" || name.text == "false") return Expr::literal(Value::symbol(name.text));
        for (const auto& cs : doc_.model.colsets)
            if (cs.type.kind() == TokenType::Kind::Enumeration && cs.type.ordinal(name.text))
                return Expr::literal(Value::symbol(name.text));
        throw Error(ErrorCode::UndeclaredVariable, name.text + at(name));
    }

    ParsedModel finish() {
        auto& m = doc_.model;
        for (const auto& [tid, tok] : doc_.bind_pos)
            if (!m.transition_index(tid)) throw Error(ErrorCode::UnknownNodeReference, tid + at(tok));
        if (doc_.cpn) {
            for (auto& t : m.transitions) {
                auto it = doc_.binds.find(t.id);
                if (it != doc_.binds.end()) t.bind = it->second;
            }
            std::set<std::string> used;
            auto collect = [&](const Expr& e, auto&& self) -> void {
                if (e.kind == Expr::Kind::Call) used.insert(e.name);
                for (const auto& a : e.args) self(a, self);
            };
            for (const auto& a : m.arcs) collect(a.inscription.expr, collect);
            for (const auto& t : m.transitions) {
                if (t.guard) collect(*t.guard, collect);
                if (!t.bind.empty()) used.insert(t.bind);
            }
            for (const auto& f : used) m.functions[f] = reg_.functions.at(f);
            m.finalize();
            return m;
        }

        NetDefinition def;
        def.name = m.name;
        def.colsets = m.colsets;
        for (const auto& p : m.places) {
            const auto& cs = m.colsets[p.colset];
            def.places.push_back({p.id, p.display, cs.type, cs.name});
            for (const auto& tok : p.initial)
                for (int k = 0; k < tok.count; ++k) def.initial.emplace_back(p.id, tok.value);
        }
        for (const auto& t : m.transitions) {
            TransitionDef td{t.id, t.display, t.kind, t.budget, {}};
            auto it = doc_.binds.find(t.id);
            if (it != doc_.binds.end()) {
                td.rule = it->second;
                def.rules[t.id] = reg_.rules.at(it->second);
            }
            def.transitions.push_back(std::move(td));
        }
        for (const auto& a : m.arcs)
            def.arcs.push_back({a.source, a.target, a.kind, a.inscription.expr.name, a.inscription.coefficient});
        return build_net(std::move(def));
    }

    const FunctionRegistry& reg_;
    Document doc_;
};

std::string colset_line(const ColourSetDecl& cs) {
    std::string out = "colset " + cs.name + " = ";
    const auto& ty = cs.type;
    switch (ty.kind()) {
        case TokenType::Kind::Enumeration: {
            out += "enum {";
            for (const auto& s : ty.symbols()) out += " " + s;
            out += " }";
            break;
        }
        case TokenType::Kind::Product: {
            out += "product ";
            for (std::size_t i = 0; i < cs.parts.size(); ++i) out += (i ? " * " : "") + cs.parts[i];
            break;
        }
        case TokenType::Kind::Record: {
            out += "record { ";
            for (std::size_t i = 0; i < cs.parts.size(); ++i)
                out += (i ? ", " : "") + ty.field_names()[i] + " : " + cs.parts[i];
            out += " }";
            break;
        }
        case TokenType::Kind::Integer: out += "int"; break;
        case TokenType::Kind::Real: out += "real"; break;
        case TokenType::Kind::Bytes: out += "bytes"; break;
        case TokenType::Kind::Text: out += "text"; break;
    }
    if (cs.timed) out += " timed";
    return out;
}

std::string kind_suffix(TransitionKind k, int budget) {
    switch (k) {
        case TransitionKind::Source: return " kind source budget " + std::to_string(budget);
        case TransitionKind::Immediate: return " kind immediate";
        case TransitionKind::Timed: return {};
    }
    return {};
}

}  // namespace

ParsedModel parse_model(std::string_view text, const FunctionRegistry& registry) {
    return Parser(registry).run(text);
}

Value parse_value(std::string_view text) {
    Cursor c(lex_line(text, 1));
    Value v = parse_literal(c);
    c.expect_end();
    return v;
}

std::string print_model(const CpnModel& m) {
    std::ostringstream out;
    out << "net " << quote(m.name) << " kind cpn" << (m.timed ? " timed" : "") << "\n\n";
    for (const auto& cs : m.colsets) out << colset_line(cs) << '\n';
    if (!m.variables.empty()) out << '\n';
    for (const auto& [v, cs] : m.variables) out << "var " << v << " : " << m.colsets[cs].name << '\n';
    out << '\n';
    for (const auto& p : m.places) {
        out << "place " << p.id << ' ' << quote(p.display) << " : " << m.colsets[p.colset].name;
        for (std::size_t i = 0; i < p.initial.size(); ++i) {
            const auto& tok = p.initial[i];
            out << (i ? " ++ " : " init ") << tok.count << '\'' << tok.value.to_string();
            if (tok.timed) out << "@+" << tok.timestamp;
        }
        out << '\n';
    }
    out << '\n';
    for (const auto& t : m.transitions) {
        out << "trans " << t.id << ' ' << quote(t.display);
        if (t.guard) out << " guard " << t.guard->to_string();
        out << kind_suffix(t.kind, t.budget) << '\n';
    }
    out << '\n';
    for (const auto& a : m.arcs)
        out << "arc " << a.source << (a.kind == ArcKind::Inhibitor ? " -o " : " -> ") << a.target << " : "
            << a.inscription.to_string() << '\n';
    bool any = false;
    for (const auto& t : m.transitions) {
        if (t.bind.empty()) continue;
        if (!any) out << '\n';
        any = true;
        out << "bind " << t.id << " = " << t.bind << '\n';
    }
    return out.str();
}

std::string print_model(const Net& net) {
    std::ostringstream out;
    out << "net " << quote(net.name()) << " kind hlpn\n\n";
    for (const auto& cs : net.colsets()) out << colset_line(cs) << '\n';
    out << '\n';
    const auto& m0 = net.initial_marking();
    for (std::size_t p = 0; p < net.places().size(); ++p) {
        const auto& pl = net.places()[p];
        out << "place " << pl.id << ' ' << quote(pl.display) << " : " << pl.type_name;
        bool first = true;
        for (const auto& [v, k] : m0.tokens(p)) {
            out << (first ? " init " : " ++ ") << k << '\'' << v.to_string();
            first = false;
        }
        out << '\n';
    }
    out << '\n';
    for (const auto& t : net.transitions())
        out << "trans " << t.id << ' ' << quote(t.display) << kind_suffix(t.kind, t.budget) << '\n';
    out << '\n';
    for (std::size_t a = 0; a < net.arcs().size(); ++a) {
        const auto& arc = net.arcs()[a];
        out << "arc " << arc.source << (arc.kind == ArcKind::Inhibitor ? " -o " : " -> ") << arc.target << " : ";
        if (arc.multiplicity != 1) out << arc.multiplicity << '\'';
        out << net.arc_label(a) << '\n';
    }
    bool any = false;
    for (const auto& t : net.transitions()) {
        if (t.rule.empty()) continue;
        if (!any) out << '\n';
        any = true;
        out << "bind " << t.id << " = " << t.rule << '\n';
    }
    return out.str();
}

std::string print_model(const ParsedModel& model) {
    return std::visit([](const auto& m) { return print_model(m); }, model);
}

bool same_structure(const Net& a, const Net& b) {
    if (a.name() != b.name() || !(a.colsets() == b.colsets())) return false;
    if (a.places().size() != b.places().size() || a.transitions().size() != b.transitions().size() ||
        a.arcs().size() != b.arcs().size())
        return false;
    for (std::size_t i = 0; i < a.places().size(); ++i) {
        const auto &x = a.places()[i], &y = b.places()[i];
        if (x.id != y.id || x.display != y.display || x.type != y.type || x.type_name != y.type_name) return false;
    }
    for (std::size_t i = 0; i < a.transitions().size(); ++i) {
        const auto &x = a.transitions()[i], &y = b.transitions()[i];
        if (x.id != y.id || x.display != y.display || x.kind != y.kind || x.budget != y.budget || x.rule != y.rule)
            return false;
    }
    for (std::size_t i = 0; i < a.arcs().size(); ++i) {
        const auto &x = a.arcs()[i], &y = b.arcs()[i];
        if (x.source != y.source || x.target != y.target || x.kind != y.kind ||
            x.multiplicity != y.multiplicity || a.arc_label(i) != b.arc_label(i))
            return false;
    }
    return a.initial_marking() == b.initial_marking();
}

}  // namespace petriproof
