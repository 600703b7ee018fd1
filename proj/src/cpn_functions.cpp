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

// Colour functions for the coloured models. Colour sets there are symbolic
// (p, E, P, ...), so a function runs the scheme step it stands for on the
// fixed scenario and then maps its argument onto the result colour set by
// ordinal. Functions whose result is a product pass their arguments through.

#include "petriproof/error.hpp"
#include "petriproof/models.hpp"
#include "petriproof/scheme/ecdsa.hpp"
#include "petriproof/scheme/lps.hpp"

namespace petriproof::models {
namespace {

std::size_t ordinal_of(const Value& v, const TokenType* type) {
    if (type && v.kind() == Value::Kind::Symbol)
        if (auto o = type->ordinal(v.as_symbol())) return *o;
    return static_cast<std::size_t>(v.fingerprint());
}

void require(bool ok, const char* fn) {
    if (!ok) throw Error(ErrorCode::ExpressionTypeError, std::string(fn) + ": scheme step failed");
}

Value project(const std::vector<Value>& args, const FunctionContext& ctx, const char* fn) {
    if (!ctx.result) throw Error(ErrorCode::ExpressionTypeError, std::string(fn) + ": result colour set unknown");
    const TokenType& out = *ctx.result;
    if (out.kind() == TokenType::Kind::Enumeration) {
        const TokenType* in = ctx.args.empty() ? nullptr : ctx.args[0];
        return Value::symbol(out.symbols()[ordinal_of(args.at(0), in) % out.symbols().size()]);
    }
    if (out.kind() == TokenType::Kind::Product) {
        Value v = Value::tuple(args);
        if (!out.conforms(v)) throw Error(ErrorCode::ExpressionTypeError, std::string(fn) + ": arguments do not fit result");
        return v;
    }
    throw Error(ErrorCode::ExpressionTypeError, std::string(fn) + ": unsupported result colour set");
}

using Step = bool (*)();

CpnFunction make(int arity, const char* name, Step step) {
    return CpnFunction{arity, [name, step](const std::vector<Value>& args, const FunctionContext& ctx) {
                           require(step(), name);
                           return project(args, ctx, name);
                       }};
}

// scheme steps on the scenario

bool domain_ok() { return scheme::validate(scenario().dp); }

bool keys_ok() {
    const auto& sc = scenario();
    return scheme::mul(sc.dp, sc.signer.d, sc.dp.P) == sc.signer.Q;
}

bool coordinates_ok() {
    const auto& sc = scenario();
    auto X = scheme::mul(sc.dp, sc.nonce, sc.dp.P);
    return !X.infinity && scheme::mod(X.x, sc.dp.n) == sc.signature.r;
}

bool hash_ok() {
    const auto& sc = scenario();
    auto e = scheme::hash_to_int(sc.hash, sc.message, sc.dp.n);
    return e >= 0 && e < sc.dp.n;
}

bool signature_ok() {
    const auto& sc = scenario();
    return scheme::verify(sc.signature, sc.signer.Q, sc.message, sc.dp, sc.hash) == scheme::Verdict::Accept;
}

bool signature_ints_ok() {
    const auto& sc = scenario();
    return sc.signature.r >= 1 && sc.signature.r < sc.dp.n && sc.signature.s >= 1 && sc.signature.s < sc.dp.n;
}

bool point_ok() {
    const auto& sc = scenario();
    return scheme::mod(scheme::inv_mod(sc.signature.s, sc.dp.n) * sc.signature.s, sc.dp.n) == 1;
}

bool space_ok() {
    const auto& sc = scenario();
    auto pp = scheme::determine_2d_point_space(sc.p1, sc.p2, sc.v1, sc.v2);
    return pp.p1 == sc.p1 && pp.v2 == sc.v2;
}

bool distance_ok() {
    const auto& sc = scenario();
    return scheme::euclidean_distance({sc.p1, sc.p2}, {sc.v1, sc.v2}) >= 0;
}

bool sense_ok() {
    const auto& sc = scenario();
    return scheme::sense_context(sc.prover_id, sc.time, sc.context.loc, sc.activity) == sc.context;
}

bool store_ok() {
    const auto& sc = scenario();
    return scheme::extract_context(sc.lbs, sc.prover_id, sc.time).has_value();
}

bool request_ok() {
    const auto& sc = scenario();
    auto req = scheme::request_location_proof(sc.lbs, sc.verifier_id, sc.prover_id, sc.time);
    return req.prover_id == sc.prover_id;
}

bool proof_ok() {
    const auto& sc = scenario();
    return scheme::verify(sc.proof.signature, sc.prover.Q, scheme::encode(sc.proof.context), sc.dp) ==
           scheme::Verdict::Accept;
}

bool context_ok() {
    const auto& sc = scenario();
    auto found = scheme::extract_context(sc.lbs, sc.prover_id, sc.time);
    return found && scheme::verify_context(sc.proof.context, *found, 1e-6);
}

bool location_proof_ok() {
    const auto& sc = scenario();
    return scheme::verify_location_proof(sc.proof, sc.prover.Q, sc.lbs, sc.dp).accepted;
}

}  // namespace

void register_cpn_functions(FunctionRegistry& reg) {
    auto& f = reg.functions;
    f["genDomParms"] = make(1, "genDomParms", domain_ok);
    f["genKeys"] = make(1, "genKeys", keys_ok);

    f["compCoord"] = make(1, "compCoord", coordinates_ok);
    f["compHash"] = make(1, "compHash", hash_ok);
    f["genSigPair1"] = make(1, "genSigPair1", coordinates_ok);
    f["genSigPair2"] = make(1, "genSigPair2", signature_ok);
    f["comSign"] = make(2, "comSign", signature_ok);

    f["getSigInt"] = make(1, "getSigInt", signature_ints_ok);
    f["calcPoint"] = make(1, "calcPoint", point_ok);
    f["verSig"] = make(3, "verSig", signature_ok);

    f["det2DSpace"] = make(1, "det2DSpace", space_ok);
    f["calDistance"] = make(1, "calDistance", distance_ok);

    f["senConInformation"] = make(1, "senConInformation", sense_ok);
    f["storeConInformation"] = make(1, "storeConInformation", store_ok);
    f["reqLocProof"] = make(1, "reqLocProof", request_ok);
    f["genLocProof"] = make(3, "genLocProof", proof_ok);

    f["extConInform"] = make(1, "extConInform", store_ok);
    f["accetLocProof"] = make(1, "accetLocProof", request_ok);
    f["verConInform"] = make(2, "verConInform", context_ok);
    f["verLocProof"] = make(2, "verLocProof", location_proof_ok);
}

}  // namespace petriproof::models
