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

// Rules for the place/transition level models. Each rule reads the tokens
// bound on its input arcs (by label), runs the matching scheme operation and
// returns the tokens for its output arcs. Returning nullopt means the binding
// is not acceptable, e.g. a token meant for a different transition.

#include <cmath>

#include "petriproof/models.hpp"
#include "petriproof/scheme/ecdsa.hpp"
#include "petriproof/scheme/lps.hpp"

namespace petriproof::models {
namespace {

using scheme::ContextInfo;

Value I(const BigInt& v) { return Value::integer(v); }
Value I(std::int64_t v) { return Value::integer(BigInt(v)); }
Value sym(std::string s) { return Value::symbol(std::move(s)); }

std::int64_t small(const Value& v) { return static_cast<std::int64_t>(v.as_integer()); }

bool role_is(const Value& token, std::string_view role) { return token.field("role").is_symbol(role); }

RuleOutput single(std::string label, Value v) { return RuleOutput{{std::move(label), {std::move(v)}}}; }

scheme::HashAlg alg_from(const Value& v) {
    return v.as_text() == "SHA-1" ? scheme::HashAlg::Sha1 : scheme::HashAlg::Sha256;
}
std::string alg_name(scheme::HashAlg a) { return a == scheme::HashAlg::Sha1 ? "SHA-1" : "SHA-256"; }

Value context_fields(std::vector<std::string> names, std::vector<Value> values, const ContextInfo& ci) {
    names.insert(names.end(), {"id", "time", "loc", "act"});
    values.insert(values.end(), {I(ci.id), I(ci.time), Value::real(ci.loc), Value::text(ci.activity)});
    return Value::record(std::move(names), std::move(values));
}

ContextInfo context_from(const Value& v) {
    return ContextInfo{small(v.field("id")), small(v.field("time")), v.field("loc").as_real(),
                       v.field("act").as_text()};
}

// ---- key generation

std::optional<RuleOutput> keygen_start(const RuleInput&) {
    return single("dp", domain_value(scenario().dp));
}

std::optional<RuleOutput> generate_domain_parameters(const RuleInput& in) {
    const Value& dp = in.one("dp");
    if (!scheme::validate(domain_from(dp))) return std::nullopt;
    return single("gdp", dp);
}

std::optional<RuleOutput> generate_keys(const RuleInput& in) {
    const Value& gdp = in.one("gdp");
    auto kp = scheme::generate_keys(domain_from(gdp), gdp.fingerprint());
    return single("gk", Value::record({"d", "Q"}, {I(kp.d), point_value(kp.Q)}));
}

// ---- signature generation

const char* const kSigRoles[] = {"coordinates", "hash", "signing"};

std::optional<RuleOutput> siggen_start(const RuleInput& in) {
    const auto& sc = scenario();
    int i = in.firing_index();
    if (i < 0 || i >= 3) return std::nullopt;
    return single("in", Value::record({"role", "m", "d", "H", "P", "k"},
                                      {sym(kSigRoles[i]), Value::bytes(sc.message), I(sc.signer.d),
                                       Value::text(alg_name(sc.hash)), point_value(sc.dp.P), I(sc.nonce)}));
}

std::optional<RuleOutput> siggen_compute_coordinates(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "coordinates")) return std::nullopt;
    const auto& dp = scenario().dp;
    auto X = scheme::mul(dp, t.field("k").as_integer(), point_from(t.field("P")));
    if (X.infinity) return std::nullopt;
    return single("X", point_value(X));
}

std::optional<RuleOutput> siggen_compute_hash(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "hash")) return std::nullopt;
    const auto& dp = scenario().dp;
    return single("e", I(scheme::hash_to_int(alg_from(t.field("H")), t.field("m").as_bytes(), dp.n)));
}

Value component(std::string_view which, const BigInt& v) {
    return Value::record({"component", "value"}, {sym(std::string(which)), I(v)});
}

std::optional<RuleOutput> generate_signature_pair_1(const RuleInput& in) {
    const auto& dp = scenario().dp;
    BigInt r = scheme::mod(point_from(in.one("X")).x, dp.n);
    if (r == 0) return std::nullopt;
    return single("sig", component("r", r));
}

std::optional<RuleOutput> generate_signature_pair_2(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "signing")) return std::nullopt;
    const auto& dp = scenario().dp;
    const BigInt& k = t.field("k").as_integer();
    auto X = scheme::mul(dp, k, point_from(t.field("P")));
    if (X.infinity) return std::nullopt;
    BigInt r = scheme::mod(X.x, dp.n);
    BigInt s = scheme::mod(scheme::inv_mod(k, dp.n) * (in.one("e").as_integer() + t.field("d").as_integer() * r),
                           dp.n);
    if (r == 0 || s == 0) return std::nullopt;
    return single("sig", component("s", s));
}

// ---- signature verification

const char* const kVerifyRoles[] = {"sig_r", "sig_s", "message", "key"};

std::optional<RuleOutput> sigverify_start(const RuleInput& in) {
    const auto& sc = scenario();
    int i = in.firing_index();
    if (i < 0 || i >= 4) return std::nullopt;
    return single("in", Value::record({"role", "r", "s", "Q", "m", "H"},
                                      {sym(kVerifyRoles[i]), I(sc.signature.r), I(sc.signature.s),
                                       point_value(sc.signer.Q), Value::bytes(sc.message),
                                       Value::text(alg_name(sc.hash))}));
}

std::optional<RuleOutput> get_signature_integers(const RuleInput& in) {
    const Value& t = in.one("in");
    if (role_is(t, "sig_r")) return single("si", component("r", t.field("r").as_integer()));
    if (role_is(t, "sig_s")) return single("si", component("s", t.field("s").as_integer()));
    return std::nullopt;
}

std::optional<RuleOutput> sigverify_compute_hash(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "message")) return std::nullopt;
    const auto& dp = scenario().dp;
    return single("e", I(scheme::hash_to_int(alg_from(t.field("H")), t.field("m").as_bytes(), dp.n)));
}

bool in_range(const BigInt& v, const BigInt& n) { return v >= 1 && v < n; }

std::optional<RuleOutput> calculate_point(const RuleInput& in) {
    const Value& si = in.one("si");
    if (!si.field("component").is_symbol("s")) return std::nullopt;
    const auto& dp = scenario().dp;
    const BigInt& s = si.field("value").as_integer();
    // an out-of-range s gets w = 0, which the final check rejects
    BigInt w = in_range(s, dp.n) ? scheme::inv_mod(s, dp.n) : BigInt(0);
    return single("w", I(w));
}

std::optional<RuleOutput> sigverify_compute_coordinates(const RuleInput& in) {
    const Value& si = in.one("si");
    if (!si.field("component").is_symbol("r")) return std::nullopt;
    const auto& dp = scenario().dp;
    const BigInt& r = si.field("value").as_integer();
    const BigInt& w = in.one("w").as_integer();
    BigInt u1 = scheme::mod(in.one("e").as_integer() * w, dp.n);
    BigInt u2 = scheme::mod(r * w, dp.n);
    return single("u", Value::record({"u1", "u2", "r"}, {I(u1), I(u2), I(r)}));
}

std::optional<RuleOutput> verify_signatures(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "key")) return std::nullopt;
    const auto& dp = scenario().dp;
    const Value& u = in.one("u");
    const BigInt& r = u.field("r").as_integer();
    bool ok = false;
    if (in_range(r, dp.n) && u.field("u2").as_integer() != 0) {
        auto X = scheme::mul_add(dp, u.field("u1").as_integer(), dp.P, u.field("u2").as_integer(),
                                 point_from(t.field("Q")));
        ok = !X.infinity && scheme::mod(X.x, dp.n) == r;
    }
    return single("decision", sym(ok ? "Accept" : "Reject"));
}

// ---- location

std::optional<RuleOutput> calc_location_start(const RuleInput&) {
    const auto& sc = scenario();
    return single("c", Value::record({"p1", "p2", "v1", "v2"}, {Value::real(sc.p1), Value::real(sc.p2),
                                                                Value::real(sc.v1), Value::real(sc.v2)}));
}

std::optional<RuleOutput> determine_2d_point_space(const RuleInput& in) {
    const Value& c = in.one("c");
    double f[4] = {c.field("p1").as_real(), c.field("p2").as_real(), c.field("v1").as_real(),
                   c.field("v2").as_real()};
    for (double x : f)
        if (!std::isfinite(x)) return std::nullopt;
    auto pp = scheme::determine_2d_point_space(f[0], f[1], f[2], f[3]);
    return single("ps", Value::record({"p1", "p2", "v1", "v2"}, {Value::real(pp.p1), Value::real(pp.p2),
                                                                 Value::real(pp.v1), Value::real(pp.v2)}));
}

std::optional<RuleOutput> calculate_distance(const RuleInput& in) {
    const Value& ps = in.one("ps");
    scheme::PointPlacement pp{ps.field("p1").as_real(), ps.field("p2").as_real(), ps.field("v1").as_real(),
                              ps.field("v2").as_real()};
    return single("d", Value::real(scheme::euclidean_distance(pp)));
}

// ---- proof generation

const char* const kProofRoles[] = {"prover", "verifier", "signer"};

std::optional<RuleOutput> gen_proof_start(const RuleInput& in) {
    const auto& sc = scenario();
    int i = in.firing_index();
    if (i < 0 || i >= 3) return std::nullopt;
    return single("in", Value::record({"role", "id", "time", "loc", "act", "prk", "H"},
                                      {sym(kProofRoles[i]), I(sc.prover_id), I(sc.time),
                                       Value::real(sc.context.loc), Value::text(sc.activity), I(sc.prover.d),
                                       Value::text(alg_name(sc.hash))}));
}

std::optional<RuleOutput> sense_context_information(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "prover") && !role_is(t, "verifier")) return std::nullopt;
    auto ci = scheme::sense_context(small(t.field("id")), small(t.field("time")), t.field("loc").as_real(),
                                    t.field("act").as_text());
    return single("ci", context_fields({"sensed_by"}, {t.field("role")}, ci));
}

scheme::LbsStore lbs_with(const ContextInfo& ci) {
    const auto& sc = scenario();
    auto lbs = scheme::register_verifier(scheme::LbsStore{}, sc.verifier_id);
    lbs = scheme::register_prover(std::move(lbs), sc.prover_id, sc.prover.Q);
    return scheme::store_context(std::move(lbs), ci);
}

std::optional<RuleOutput> stored_context_information(const RuleInput& in) {
    const Value& ci = in.one("ci");
    if (!ci.field("sensed_by").is_symbol("verifier")) return std::nullopt;
    auto c = context_from(ci);
    auto found = scheme::extract_context(lbs_with(c), c.id, c.time);
    if (!found) return std::nullopt;
    return single("lci", context_fields({}, {}, *found));
}

std::optional<RuleOutput> request_location_proof(const RuleInput& in) {
    auto c = context_from(in.one("lci"));
    auto req = scheme::request_location_proof(lbs_with(c), scenario().verifier_id, c.id, c.time);
    return single("req", Value::record({"verifier", "prover", "time"},
                                       {I(req.verifier_id), I(req.prover_id), I(req.time)}));
}

std::optional<RuleOutput> generate_location_proof(const RuleInput& in) {
    const Value& t = in.one("in");
    const Value& ci = in.one("ci");
    const Value& req = in.one("req");
    if (!role_is(t, "signer") || !ci.field("sensed_by").is_symbol("prover")) return std::nullopt;
    auto c = context_from(ci);
    if (small(req.field("prover")) != c.id || small(req.field("time")) != c.time) return std::nullopt;
    const auto& dp = scenario().dp;
    auto proof = scheme::generate_location_proof(c, scheme::key_from_private(dp, t.field("prk").as_integer()), dp);
    return single("proof", context_fields({"prover", "r", "s"},
                                          {I(proof.prover_id), I(proof.signature.r), I(proof.signature.s)},
                                          proof.context));
}

// ---- proof verification

const char* const kCheckRoles[] = {"request", "lbs", "verify"};

std::optional<RuleOutput> verify_proof_start(const RuleInput& in) {
    const auto& sc = scenario();
    int i = in.firing_index();
    if (i < 0 || i >= 3) return std::nullopt;
    return single("in", context_fields({"role", "r", "s", "Q"},
                                       {sym(kCheckRoles[i]), I(sc.proof.signature.r), I(sc.proof.signature.s),
                                        point_value(sc.prover.Q)},
                                       sc.proof.context));
}

std::optional<RuleOutput> extract_context_information(const RuleInput& in) {
    const Value& t = in.one("in");
    auto c = context_from(t);
    if (role_is(t, "request"))
        return single("eci", context_fields({"purpose", "r", "s"}, {sym("request"), t.field("r"), t.field("s")}, c));
    if (role_is(t, "lbs")) {
        auto found = scheme::extract_context(lbs_with(c), c.id, c.time);
        if (!found) return std::nullopt;
        return single("eci", context_fields({"purpose", "r", "s"}, {sym("lbs"), I(0), I(0)}, *found));
    }
    return std::nullopt;
}

std::optional<RuleOutput> accept_location_proof_request(const RuleInput& in) {
    const Value& e = in.one("eci");
    if (!e.field("purpose").is_symbol("request")) return std::nullopt;
    return single("lp", context_fields({"r", "s"}, {e.field("r"), e.field("s")}, context_from(e)));
}

std::optional<RuleOutput> verify_context_information(const RuleInput& in) {
    const Value& e = in.one("eci");
    if (!e.field("purpose").is_symbol("lbs")) return std::nullopt;
    const Value& lp = in.one("lp");
    bool ok = scheme::verify_context(context_from(lp), context_from(e), 1e-6);
    return single("vi", context_fields({"status", "r", "s"},
                                       {sym(ok ? "Verified" : "NotVerified"), lp.field("r"), lp.field("s")},
                                       context_from(lp)));
}

std::optional<RuleOutput> verify_location_proof(const RuleInput& in) {
    const Value& t = in.one("in");
    if (!role_is(t, "verify")) return std::nullopt;
    const Value& vi = in.one("vi");
    bool ok = false;
    if (vi.field("status").is_symbol("Verified")) {
        scheme::Signature sig{vi.field("r").as_integer(), vi.field("s").as_integer()};
        ok = scheme::verify(sig, point_from(t.field("Q")), scheme::encode(context_from(vi)), scenario().dp) ==
             scheme::Verdict::Accept;
    }
    return single("decision", sym(ok ? "Accept" : "Reject"));
}

}  // namespace

void register_hlpn_rules(FunctionRegistry& reg) {
    auto& r = reg.rules;
    r["keygen_start"] = keygen_start;
    r["generate_domain_parameters"] = generate_domain_parameters;
    r["generate_keys"] = generate_keys;

    r["siggen_start"] = siggen_start;
    r["siggen_compute_coordinates"] = siggen_compute_coordinates;
    r["siggen_compute_hash"] = siggen_compute_hash;
    r["generate_signature_pair_1"] = generate_signature_pair_1;
    r["generate_signature_pair_2"] = generate_signature_pair_2;

    r["sigverify_start"] = sigverify_start;
    r["get_signature_integers"] = get_signature_integers;
    r["sigverify_compute_hash"] = sigverify_compute_hash;
    r["calculate_point"] = calculate_point;
    r["sigverify_compute_coordinates"] = sigverify_compute_coordinates;
    r["verify_signatures"] = verify_signatures;

    r["calc_location_start"] = calc_location_start;
    r["determine_2d_point_space"] = determine_2d_point_space;
    r["calculate_distance"] = calculate_distance;

    r["gen_proof_start"] = gen_proof_start;
    r["sense_context_information"] = sense_context_information;
    r["stored_context_information"] = stored_context_information;
    r["request_location_proof"] = request_location_proof;
    r["generate_location_proof"] = generate_location_proof;

    r["verify_proof_start"] = verify_proof_start;
    r["extract_context_information"] = extract_context_information;
    r["accept_location_proof_request"] = accept_location_proof_request;
    r["verify_context_information"] = verify_context_information;
    r["verify_location_proof"] = verify_location_proof;
}

}  // namespace petriproof::models
