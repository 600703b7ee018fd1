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

#include "petriproof/smtgen.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <cstdio>
#include <sstream>

#include "petriproof/error.hpp"
#include "petriproof/models.hpp"
#include "petriproof/net.hpp"

namespace petriproof::smt {

std::string SmtScript::text() const {
    std::ostringstream os;
    os << "; " << name << "\n";
    os << "(set-logic " << logic << ")\n";
    for (const auto& d : declarations) os << d << "\n";
    if (!definitions.empty()) os << "; transition rules\n";
    for (const auto& a : definitions) os << "(assert " << a << ")\n";
    if (!bindings.empty()) os << "; values from the reference run\n";
    for (const auto& a : bindings) os << "(assert " << a << ")\n";
    if (!assertions.empty()) os << "; property\n";
    for (const auto& a : assertions) os << "(assert " << a << ")\n";
    os << trailer << "\n";
    return os.str();
}

SmtScript SmtScript::without_bindings() const {
    SmtScript s = *this;
    s.name += " (bindings removed)";
    s.bindings.clear();
    return s;
}

namespace {

std::string q(const std::string& sym) { return "|" + sym + "|"; }
std::string sel(const std::string& array, const std::string& index) { return "(select " + q(array) + " " + index + ")"; }

// ---- declarations with sort checking

class Decls {
public:
    void array(const std::string& name) { add(name, "() (Array Int Int)"); }
    void integer(const std::string& name) { add(name, "() Int"); }
    void function(const std::string& name, std::size_t arity) {
        std::string sig = "(";
        for (std::size_t i = 0; i < arity; ++i) sig += i ? " Int" : "Int";
        add(name, sig + ") Int");
    }
    std::vector<std::string> lines() const { return lines_; }

private:
    void add(const std::string& name, const std::string& sort) {
        auto it = sorts_.find(name);
        if (it != sorts_.end()) {
            if (it->second != sort)
                throw Error(ErrorCode::MalformedScript, name + " declared as " + it->second + " and " + sort);
            return;
        }
        sorts_[name] = sort;
        lines_.push_back("(declare-fun " + q(name) + " " + sort + ")");
    }
    std::map<std::string, std::string> sorts_;
    std::vector<std::string> lines_;
};

// ---- transition rules

struct Def {
    int index;
    std::string fn;
    std::vector<std::string> args;  // element variables or out[i] references
};

struct RuleSpec {
    std::string id;
    std::string out;  // per-firing array
    std::string set;  // accumulated place contents
    std::vector<Def> defs;
    std::vector<int> set_members;
    bool verdict = false;  // two-way branch on out[last] vs verdict_ref
    std::string verdict_ref{};
    bool verdict_equal_means_verified = false;
};

const std::vector<RuleSpec>& rule_specs() {
    static const std::vector<RuleSpec> specs = {
        {"R1", "gdp", "GDP",
         {{1, "prime.field.order", {"dp"}},
          {2, "elliptic.curve", {"dp"}},
          {3, "base.point", {"dp"}},
          {4, "ordinal.value", {"dp"}},
          {5, "cofactor", {"dp"}},
          {6, "Generate Domain Parameters", {"gdp[1]", "gdp[2]", "gdp[3]", "gdp[4]", "gdp[5]"}}},
         {1, 2, 3, 4, 5, 6}},
        {"R2", "gk", "GK",
         {{1, "generate.private.key", {"dk"}},
          {2, "generate.public.key", {"dk"}},
          {3, "Generate Keys", {"gk[1]", "gk[2]"}}},
         {1, 2, 3}},
        {"R3", "c", "C",
         {{1, "random.integer", {"k"}}, {2, "base.point", {"gdp[3]"}}, {3, "Compute Coordinates", {"c[1]", "c[2]"}}},
         {1, 2, 3}},
        {"R4", "e", "E", {{1, "message", {"h"}}, {2, "compute.hash", {"e[1]"}}}, {1, 2}},
        {"R5", "sr", "SR",
         {{1, "mod", {"r"}}, {2, "mod", {"r"}}, {3, "Generate Signature Pair 1", {"sr[1]", "sr[2]"}}},
         {1, 2, 3}},
        {"R6", "ss", "SS",
         {{1, "private.key", {"gk[1]"}},
          {2, "random.integer", {"k[1]"}},
          {3, "hash.integer", {"s"}},
          {4, "Generate Signature Pair 2", {"ss[1]", "ss[2]", "ss[3]"}}},
         {1, 2, 3, 4}},
        {"R7", "sig", "SIG",
         {{1, "signature.integer.1", {"si"}},
          {2, "signature.integer.2", {"si"}},
          {3, "Generate Signature Integers", {"sig[1]", "sig[2]"}}},
         {1, 2, 3}},
        {"R8", "hi", "HI", {{1, "message", {"m"}}, {2, "Compute Hash", {"hi[1]"}}}, {1, 2}},
        {"R9", "cp", "CP", {{1, "get.integer.point", {"sp"}}, {2, "Calculate Point", {"cp[1]"}}}, {1, 2}},
        {"R10", "cc", "CC",
         {{1, "integer.point.1", {"he"}},
          {2, "integer.point.2", {"w"}},
          {3, "coordinate.point", {"rp"}},
          {4, "Compute Coordinates", {"cc[1]", "cc[2]", "cc[3]"}}},
         {1, 2, 3, 4}},
        {"R11", "ds", "DS",
         {{1, "point.1", {"pq"}},
          {2, "point.1", {"cci"}},
          {3, "calculate.point.1", {"ds[1]", "ds[2]"}},
          {4, "point2", {"pq"}},
          {5, "point2", {"cci"}},
          {6, "calculate.point.2", {"ds[4]", "ds[5]"}},
          {7, "Verify Signatures", {"ds[3]", "ds[6]"}}},
         {1, 2, 3, 4, 5, 6},
         true,
         "o[1]",
         false},
        {"R12", "ps", "PS",
         {{1, "prover.coordinate.1", {"p"}},
          {2, "prover.coordinate.2", {"p"}},
          {3, "verifier.coordinate.1", {"p"}},
          {4, "verifier.coordinate.2", {"p"}},
          {5, "Determine 2-D Point Space", {"ps[1]", "ps[2]", "ps[3]", "ps[4]"}}},
         {1, 2, 3, 4, 5}},
        {"R13", "pd", "PD",
         {{1, "prover.coordinate", {"d"}},
          {2, "verifier.coordinate", {"d"}},
          {3, "Calculate Location", {"pd[1]", "pd[2]"}}},
         {1, 2, 3}},
        {"R14", "cis", "CIS",
         {{1, "id", {"ci"}},
          {2, "time", {"ci"}},
          {3, "location", {"pd[3]"}},
          {4, "activity", {"ci"}},
          {5, "Sense Context Information", {"cis[1]", "cis[2]", "cis[3]", "cis[4]"}}},
         {1, 2, 3, 4, 5}},
        {"R15", "lci", "LCI",
         {{1, "extract.context.information", {"cis[5]"}},
          {2, "store.context.information", {"vci"}},
          {3, "Stored Context Information", {"lci[1]", "lci[2]"}}},
         {1, 2, 3}},
        {"R16", "lps", "LPS",
         {{1, "extract.context.information", {"rlp"}}, {2, "Request Location Proof", {"lps[1]"}}},
         {1, 2}},
        {"R17", "slp", "SLP",
         {{1, "location.proof", {"glp"}},
          {2, "extract.context.information", {"pci"}},
          {3, "private.key", {"pi"}},
          {4, "hash", {"pi"}},
          {5, "Generate Location Proof", {"slp[1]", "slp[2]", "slp[3]", "slp[4]"}}},
         {1, 2, 3, 4, 5}},
        {"R18", "eis", "EIS",
         {{1, "extract.context.information", {"rlp"}},
          {2, "extract.context.information", {"eci"}},
          {3, "Extract Context Information", {"eis[1]", "eis[2]"}}},
         {1, 2, 3}},
        {"R19", "lp", "LP",
         {{1, "location.proof.request", {"alp"}}, {2, "Accept Location Proof Request", {"lp[1]", "lp[2]"}}},
         {1, 2}},
        {"R20", "vci", "VCI",
         {{1, "location.proof.request", {"vls"}},
          {2, "extracted.context.information", {"cci"}},
          {3, "Verify Context Information", {"vci[1]", "vci[2]"}}},
         {1, 2, 3}},
        {"R21", "arl", "ARL",
         {{1, "verified.information", {"vi"}},
          {2, "public.key", {"pr"}},
          {3, "Verify Location Proof", {"arl[1]", "arl[2]"}}},
         {1, 2, 3},
         true,
         "arl[1]",
         true},
    };
    return specs;
}

const RuleSpec& find_rule(std::string_view id) {
    for (const auto& r : rule_specs())
        if (r.id == id) return r;
    throw Error(ErrorCode::UnknownRule, id.empty() ? std::string("(empty)") : std::string(id));
}

bool is_output_array(const std::string& name) {
    for (const auto& r : rule_specs())
        if (r.out == name) return true;
    return false;
}

// One-argument lower-case names are arrays; named transitions and the
// two-argument point combinations are uninterpreted functions.
bool is_function(const Def& d) {
    if (d.args.size() != 1) return true;
    return std::any_of(d.fn.begin(), d.fn.end(), [](char c) { return std::isupper(static_cast<unsigned char>(c)) || c == ' '; });
}

std::string term(const std::string& arg, Decls& decls) {
    auto lb = arg.find('[');
    if (lb == std::string::npos) {
        decls.integer(arg);
        return q(arg);
    }
    std::string name = arg.substr(0, lb);
    std::string idx = arg.substr(lb + 1, arg.size() - lb - 2);
    if (!is_output_array(name)) {
        // an indexed element that is not a rule's output: read as the element itself
        decls.integer(name);
        return q(name);
    }
    decls.array(name);
    return sel(name, idx);
}

void add_rule(const RuleSpec& r, Decls& decls, std::vector<std::string>& out) {
    decls.array(r.out);
    for (const auto& d : r.defs) {
        std::string lhs = sel(r.out, std::to_string(d.index));
        std::string rhs;
        if (is_function(d)) {
            decls.function(d.fn, d.args.size());
            rhs = "(" + q(d.fn);
            for (const auto& a : d.args) rhs += " " + term(a, decls);
            rhs += ")";
        } else {
            decls.array(d.fn);
            rhs = "(select " + q(d.fn) + " " + term(d.args[0], decls) + ")";
        }
        out.push_back("(= " + lhs + " " + rhs + ")");
    }
    if (r.verdict) {
        std::string last = sel(r.out, std::to_string(r.defs.back().index));
        std::string ref = term(r.verdict_ref, decls);
        decls.integer("verdict");
        std::string on_equal = r.verdict_equal_means_verified ? "1" : "0";
        std::string on_differ = r.verdict_equal_means_verified ? "0" : "1";
        out.push_back("(ite (= " + last + " " + ref + ") (= |verdict| " + on_equal + ") (= |verdict| " + on_differ + "))");
    }
    // S' = S u {out[..]} as a chain of stores
    decls.array(r.set);
    decls.array(r.set + "'");
    std::string acc = q(r.set);
    for (int m : r.set_members) acc = "(store " + acc + " " + std::to_string(m) + " " + sel(r.out, std::to_string(m)) + ")";
    out.push_back("(= " + q(r.set + "'") + " " + acc + ")");
}

// ---- properties

struct Select {
    std::string array;
    std::string index;       // numeral or "verified"
    std::string transition;  // display name whose firing the value records
};

struct PropertySpec {
    std::string id;
    std::string model;
    std::vector<std::string> rules;
    std::vector<std::vector<Select>> groups;
    std::string verified_transition;  // non-empty when the index symbol is used
};

const std::vector<PropertySpec>& property_specs() {
    static const std::vector<PropertySpec> specs = {
        {"ecdsa-keygen",
         "ecdsa-keygen",
         {"R1", "R2"},
         {{{"prime.field.order", "1", "Generate Domain Parameters"},
           {"elliptic.curve", "2", "Generate Domain Parameters"},
           {"base.point", "3", "Generate Domain Parameters"},
           {"ordinal.value", "4", "Generate Domain Parameters"},
           {"cofactor", "5", "Generate Domain Parameters"}},
          {{"generate.private.key", "6", "Generate Keys"}, {"generate.public.key", "7", "Generate Keys"}}},
         ""},
        {"ecdsa-siggen",
         "ecdsa-siggen",
         {"R3", "R4", "R5", "R6"},
         {{{"random.integer", "1", "Compute Coordinates"}, {"base.point", "2", "Compute Coordinates"}},
          {{"message", "3", "Compute Hash"}, {"compute.hash", "4", "Compute Hash"}},
          {{"mod", "5", "Generate Signature Pair 1"}},
          {{"private.key", "6", "Generate Signature Pair 2"}, {"hash.integer", "7", "Generate Signature Pair 2"}}},
         ""},
        {"ecdsa-sigverify",
         "ecdsa-sigverify",
         {"R7", "R8", "R9", "R10", "R11"},
         {{{"signature.integer", "1", "Get Signature Integers"}, {"signature.integer", "2", "Get Signature Integers"}},
          {{"message", "3", "Compute Hash"}},
          {{"get.integer.point", "4", "Calculate Point"}},
          {{"integer.point.1", "5", "Compute Coordinates"},
           {"integer.point2", "6", "Compute Coordinates"},
           {"coordinate.point", "7", "Compute Coordinates"}},
          {{"calculate point.1", "verified", "Verify Signatures"},
           {"calculate point.2", "verified", "Verify Signatures"}}},
         "Verify Signatures"},
        {"calculate-location",
         "lps-calc-location",
         {"R12", "R13"},
         {{{"prover.coordinate", "1", "Determine 2-D Point Space"}, {"prover.coordinate", "2", "Determine 2-D Point Space"}},
          {{"verifier.coordinate", "3", "Determine 2-D Point Space"},
           {"verifier.coordinate", "4", "Determine 2-D Point Space"}},
          {{"prover.coordinate", "5", "Calculate Distance"}, {"verifier.coordinate", "6", "Calculate Distance"}}},
         ""},
        {"generate-location-proof",
         "lps-gen-proof",
         {"R14", "R15", "R16", "R17"},
         {{{"id", "1", "Sense Context Information"}, {"time", "2", "Sense Context Information"}},
          {{"location", "3", "Sense Context Information"}, {"activity", "4", "Sense Context Information"}},
          {{"extract.context.information", "5", "Stored Context Information"},
           {"store.context.information", "6", "Stored Context Information"}},
          {{"location.proof", "7", "Generate Location Proof"},
           {"private.key", "8", "Generate Location Proof"},
           {"hash", "9", "Generate Location Proof"}}},
         ""},
        {"verify-location-proof",
         "lps-verify-proof",
         {"R18", "R19", "R20", "R21"},
         {{{"extract.context.information", "1", "Extract Context Information"},
           {"extract.context.information", "2", "Extract Context Information"}},
          {{"location.proof.request", "3", "Accept Location Proof Request"}},
          {{"extracted.context.information", "4", "Verify Context Information"}},
          {{"verified.information", "6", "Verify Location Proof"}, {"public.key", "7", "Verify Location Proof"}},
          {{"verified.location.proof", "verified", "Verify Location Proof"}}},
         "Verify Location Proof"},
    };
    return specs;
}

const PropertySpec& find_property(std::string_view id) {
    for (const auto& p : property_specs())
        if (p.id == id || p.model == id) return p;
    throw Error(ErrorCode::UnknownProperty, std::string(id));
}

// First firing step (1-based) of every transition on a run that always takes
// the first enabled binding.
std::map<std::string, int> reference_steps(const Net& net) {
    std::map<std::string, int> first;
    ExecutionState state = net.initial_state();
    for (int step = 1; step <= 10000; ++step) {
        auto en = enabled_transitions(net, state);
        if (en.empty()) break;
        const auto& pick = en.front();
        first.emplace(net.transitions()[pick.transition].display, step);
        state = fire(net, state, pick.transition, pick.binding);
    }
    return first;
}

std::string index_term(const std::string& index) { return index == "verified" ? q("verified") : index; }

}  // namespace

const std::vector<std::string>& property_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& p : property_specs()) v.push_back(p.id);
        return v;
    }();
    return names;
}

std::string canonical_property(std::string_view id) { return find_property(id).id; }

std::vector<std::string> rules_for(std::string_view property) { return find_property(property).rules; }

SmtScript emit_rule(std::string_view rule) {
    const RuleSpec& r = find_rule(rule);
    Decls decls;
    SmtScript s;
    s.name = "rule " + r.id;
    add_rule(r, decls, s.definitions);
    s.declarations = decls.lines();
    return s;
}

SmtScript emit_property(std::string_view id) {
    const PropertySpec& p = find_property(id);
    Decls decls;
    SmtScript s;
    s.name = "property " + p.id;

    for (const auto& r : p.rules) add_rule(find_rule(r), decls, s.definitions);

    Net net = models::instantiate_hlpn(p.model);
    auto steps = reference_steps(net);
    auto step_of = [&](const std::string& t) {
        auto it = steps.find(t);
        if (it == steps.end())
            throw Error(ErrorCode::InvalidDefinition, p.model + ": '" + t + "' never fires on the reference run");
        return std::to_string(it->second);
    };

    if (!p.verified_transition.empty()) {
        decls.integer("verified");
        s.bindings.push_back("(= |verified| " + step_of(p.verified_transition) + ")");
    }

    std::string body = "(not (or";
    for (const auto& g : p.groups) {
        for (const auto& x : g) {
            decls.array(x.array);
            s.bindings.push_back("(= " + sel(x.array, index_term(x.index)) + " " + step_of(x.transition) + ")");
        }
        body += " (=";
        for (const auto& x : g) body += " " + sel(x.array, index_term(x.index));
        // a lone operand is compared with the step its transition fires at
        if (g.size() == 1) body += " " + step_of(g[0].transition);
        body += ")";
    }
    body += "))";
    s.assertions.push_back(body);
    s.declarations = decls.lines();
    return s;
}

// ---- validator

namespace {

struct Sexp {
    bool atom = true;
    std::string text;
    std::vector<Sexp> items;
};

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    std::vector<std::string> problems{};

    void skip() {
        while (i < s.size()) {
            if (std::isspace(static_cast<unsigned char>(s[i]))) {
                ++i;
            } else if (s[i] == ';') {
                while (i < s.size() && s[i] != '\n') ++i;
            } else {
                break;
            }
        }
    }

    bool parse(Sexp& out) {
        skip();
        if (i >= s.size()) return false;
        if (s[i] == '(') {
            ++i;
            out.atom = false;
            for (;;) {
                skip();
                if (i >= s.size()) {
                    problems.push_back("unbalanced parentheses: missing ')'");
                    return true;
                }
                if (s[i] == ')') {
                    ++i;
                    return true;
                }
                Sexp child;
                parse(child);
                out.items.push_back(std::move(child));
            }
        }
        if (s[i] == ')') {
            problems.push_back("unbalanced parentheses: stray ')' at offset " + std::to_string(i));
            ++i;
            out.text = ")";
            return true;
        }
        if (s[i] == '|') {
            auto end = s.find('|', i + 1);
            if (end == std::string::npos) {
                problems.push_back("unterminated |symbol|");
                out.text = s.substr(i + 1);
                i = s.size();
            } else {
                out.text = s.substr(i + 1, end - i - 1);
                i = end + 1;
            }
            return true;
        }
        std::size_t start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '(' && s[i] != ')' && s[i] != ';')
            ++i;
        out.text = s.substr(start, i - start);
        return true;
    }
};

const std::set<std::string>& builtins() {
    static const std::set<std::string> b = {"=",  "distinct", "and", "or", "not", "=>", "xor", "ite",   "select", "store",
                                            "+",  "-",        "*",   "<=", "<",   ">=", ">",   "div",   "mod",    "abs",
                                            "true", "false"};
    return b;
}

bool numeral(const std::string& t) {
    return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

struct Symbol {
    std::size_t arity = 0;
    bool array = false;
};

void check_term(const Sexp& e, const std::map<std::string, Symbol>& syms, std::vector<std::string>& problems) {
    if (e.atom) {
        if (numeral(e.text) || syms.count(e.text) || builtins().count(e.text)) return;
        problems.push_back("undeclared symbol '" + e.text + "'");
        return;
    }
    if (e.items.empty() || !e.items[0].atom) {
        problems.push_back("application without a function symbol");
        return;
    }
    const std::string& head = e.items[0].text;
    auto it = syms.find(head);
    if (it != syms.end()) {
        if (it->second.arity != e.items.size() - 1)
            problems.push_back("'" + head + "' applied to " + std::to_string(e.items.size() - 1) + " arguments");
    } else if (!builtins().count(head)) {
        problems.push_back("undeclared function '" + head + "'");
    } else if (head == "select" || head == "store") {
        const Sexp& arr = e.items.size() > 1 ? e.items[1] : e.items[0];
        if (arr.atom) {
            auto a = syms.find(arr.text);
            if (a == syms.end() || !a->second.array)
                problems.push_back(head + " on '" + arr.text + "', which is not a declared array");
        }
    }
    for (std::size_t k = 1; k < e.items.size(); ++k) check_term(e.items[k], syms, problems);
}

}  // namespace

std::vector<std::string> validate(const std::string& text) {
    Lexer lx{text};
    std::vector<Sexp> top;
    for (;;) {
        Sexp e;
        if (!lx.parse(e)) break;
        top.push_back(std::move(e));
    }
    std::vector<std::string> problems = lx.problems;
    std::map<std::string, Symbol> syms;
    int logic = 0, checks = 0;
    for (const auto& cmd : top) {
        if (cmd.atom || cmd.items.empty() || !cmd.items[0].atom) {
            problems.push_back("top level item is not a command");
            continue;
        }
        const std::string& kw = cmd.items[0].text;
        if (kw == "set-logic") {
            ++logic;
        } else if (kw == "check-sat") {
            ++checks;
        } else if (kw == "declare-fun" && cmd.items.size() == 4) {
            Symbol s;
            s.arity = cmd.items[2].items.size();
            s.array = !cmd.items[3].atom && !cmd.items[3].items.empty() && cmd.items[3].items[0].text == "Array";
            syms[cmd.items[1].text] = s;
        } else if (kw == "declare-const" && cmd.items.size() == 3) {
            Symbol s;
            s.array = !cmd.items[2].atom && !cmd.items[2].items.empty() && cmd.items[2].items[0].text == "Array";
            syms[cmd.items[1].text] = s;
        } else if (kw == "assert" && cmd.items.size() == 2) {
            if (checks) problems.push_back("assert after check-sat");
            check_term(cmd.items[1], syms, problems);
        } else {
            problems.push_back("unsupported command '" + kw + "'");
        }
    }
    if (logic != 1) problems.push_back("expected exactly one set-logic, found " + std::to_string(logic));
    if (checks != 1) problems.push_back("expected exactly one check-sat, found " + std::to_string(checks));
    return problems;
}

std::string to_string(Result r) {
    switch (r) {
        case Result::Sat: return "sat";
        case Result::Unsat: return "unsat";
        case Result::Unknown: return "unknown";
    }
    return "unknown";
}

Result parse_verdict(const std::string& raw) {
    std::istringstream is(raw);
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok == "sat") return Result::Sat;
            if (tok == "unsat") return Result::Unsat;
            if (tok == "unknown") return Result::Unknown;
        }
    }
    throw Error(ErrorCode::UnparseableOutput, raw.empty() ? std::string("(no output)") : raw.substr(0, 200));
}

std::string verdict_csv(const std::vector<VerdictRow>& rows, bool with_timing) {
    std::ostringstream os;
    os << (with_timing ? "property,elapsed_seconds,verdict\n" : "property,verdict\n");
    for (const auto& r : rows) {
        os << r.property << ",";
        if (r.verdict) {
            if (with_timing) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.4f", r.verdict->elapsed_seconds);
                os << buf << ",";
            }
            os << to_string(r.verdict->result) << "\n";
        } else {
            if (with_timing) os << ",";
            std::string msg = "error: " + r.error;
            if (msg.find_first_of(",\"\n") != std::string::npos) {
                std::string q = "\"";
                for (char c : msg) q += c == '"' ? std::string("\"\"") : std::string(1, c == '\n' ? ' ' : c);
                msg = q + "\"";
            }
            os << msg << "\n";
        }
    }
    return os.str();
}

}  // namespace petriproof::smt
