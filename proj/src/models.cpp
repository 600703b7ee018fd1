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

#include "petriproof/models.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "petriproof/error.hpp"
#include "petriproof/scheme/hash.hpp"

namespace petriproof::embedded {
const std::map<std::string, std::string>& model_sources();
const std::map<std::string, std::string>& golden_tables();
}  // namespace petriproof::embedded

namespace petriproof::models {

std::string ModelId::key() const {
    std::string k = name + (layer == Layer::Hlpn ? "/hlpn" : "/cpn");
    if (timing == Timing::Timed) k += "/timed";
    return k;
}

const std::vector<std::string>& base_names() {
    static const std::vector<std::string> names = {"ecdsa-keygen",  "ecdsa-siggen", "ecdsa-sigverify",
                                                   "lps-calc-location", "lps-gen-proof", "lps-verify-proof"};
    return names;
}

const std::vector<std::string>& composite_names() {
    static const std::vector<std::string> names = {"ecdsa-full", "lps-full"};
    return names;
}

std::vector<ModelId> catalog() {
    std::vector<ModelId> out;
    for (const auto& n : base_names()) out.push_back({n, Layer::Hlpn, Timing::Untimed});
    for (const auto& n : base_names()) out.push_back({n, Layer::Cpn, Timing::Untimed});
    for (const auto& n : base_names()) out.push_back({n, Layer::Cpn, Timing::Timed});
    return out;
}

namespace {

bool known(std::string_view name) {
    const auto& b = base_names();
    const auto& c = composite_names();
    return std::find(b.begin(), b.end(), name) != b.end() || std::find(c.begin(), c.end(), name) != c.end();
}

bool is_composite(std::string_view name) {
    const auto& c = composite_names();
    return std::find(c.begin(), c.end(), name) != c.end();
}

std::string file_stem(const ModelId& id) {
    if (id.layer == Layer::Hlpn) return id.name + "__hlpn";
    return id.name + (id.timing == Timing::Timed ? "__cpn_timed" : "__cpn");
}

}  // namespace

ModelId parse_model_id(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == '/') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);

    ModelId id;
    id.name = parts[0];
    if (!known(id.name)) throw Error(ErrorCode::UnknownModel, std::string(text));
    bool layer_seen = false;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const auto& p = parts[i];
        if (p == "hlpn" && !layer_seen) {
            layer_seen = true;
        } else if (p == "cpn" && !layer_seen) {
            id.layer = Layer::Cpn;
            layer_seen = true;
        } else if (p == "timed" && id.layer == Layer::Cpn && id.timing == Timing::Untimed) {
            id.timing = Timing::Timed;
        } else {
            throw Error(ErrorCode::UnknownModel, std::string(text));
        }
    }
    if (id.layer == Layer::Cpn && is_composite(id.name))
        throw Error(ErrorCode::UnknownModel, std::string(text) + " (composites exist only as hlpn)");
    return id;
}

const FunctionRegistry& registry() {
    static const FunctionRegistry reg = [] {
        FunctionRegistry r;
        register_hlpn_rules(r);
        register_cpn_functions(r);
        return r;
    }();
    return reg;
}

std::string source(const ModelId& id) {
    const auto& m = embedded::model_sources();
    auto it = m.find(file_stem(id));
    if (it == m.end()) throw Error(ErrorCode::UnknownModel, id.key());
    return it->second;
}

ParsedModel instantiate(const ModelId& id) {
    if (id.layer == Layer::Hlpn) return instantiate_hlpn(id.name);
    return instantiate_cpn(id.name, id.timing == Timing::Timed);
}

Net instantiate_hlpn(std::string_view name) {
    if (name == "ecdsa-full")
        return fuse("ecdsa-full", {{"keygen", instantiate_hlpn("ecdsa-keygen")},
                                   {"siggen", instantiate_hlpn("ecdsa-siggen")},
                                   {"sigverify", instantiate_hlpn("ecdsa-sigverify")}});
    if (name == "lps-full")
        return fuse("lps-full", {{"location", instantiate_hlpn("lps-calc-location")},
                                 {"generate", instantiate_hlpn("lps-gen-proof")},
                                 {"verify", instantiate_hlpn("lps-verify-proof")}});
    if (!known(name)) throw Error(ErrorCode::UnknownModel, std::string(name));
    auto parsed = parse_model(source({std::string(name), Layer::Hlpn, Timing::Untimed}), registry());
    return std::get<Net>(std::move(parsed));
}

CpnModel instantiate_cpn(std::string_view name, bool timed) {
    if (!known(name) || is_composite(name)) throw Error(ErrorCode::UnknownModel, std::string(name));
    ModelId id{std::string(name), Layer::Cpn, timed ? Timing::Timed : Timing::Untimed};
    auto parsed = parse_model(source(id), registry());
    return std::get<CpnModel>(std::move(parsed));
}

std::string golden_csv(std::string_view name) {
    const auto& m = embedded::golden_tables();
    auto it = m.find(std::string(name));
    if (it == m.end()) throw Error(ErrorCode::UnknownModel, std::string(name));
    return it->second;
}

Net fuse(const std::string& name, const std::vector<std::pair<std::string, Net>>& parts) {
    // a place id is shared when every part declaring it agrees on the type
    std::map<std::string, std::set<std::string>> types;
    std::map<std::string, int> owners;
    for (const auto& [prefix, net] : parts)
        for (const auto& p : net.places()) {
            types[p.id].insert(p.type.describe());
            ++owners[p.id];
        }
    auto shared = [&](const std::string& id) { return owners[id] > 1 && types[id].size() == 1; };

    NetDefinition def;
    def.name = name;
    std::set<std::string> placed;
    std::map<std::string, ColourSetDecl> declared;
    for (const auto& [prefix, net] : parts) {
        auto pid = [&](const std::string& id) { return shared(id) ? id : prefix + "_" + id; };
        auto tid = [&](const std::string& id) { return prefix + "_" + id; };

        // colsets clashing with an earlier part's declaration get the prefix,
        // and so does anything built from a renamed colset
        std::map<std::string, std::string> rename;
        std::vector<ColourSetDecl> mine = net.colsets();
        for (bool changed = true; changed;) {
            changed = false;
            for (auto& c : mine) {
                ColourSetDecl probe = c;
                for (auto& part : probe.parts)
                    if (rename.count(part)) part = rename[part];
                probe.name = c.name;
                auto it = declared.find(c.name);
                if (!rename.count(c.name) && it != declared.end() && !(it->second == probe)) {
                    rename[c.name] = prefix + "_" + c.name;
                    changed = true;
                }
            }
        }
        for (auto c : mine) {
            for (auto& part : c.parts)
                if (rename.count(part)) part = rename[part];
            if (rename.count(c.name)) c.name = rename[c.name];
            if (declared.emplace(c.name, c).second) def.colsets.push_back(c);
        }
        for (const auto& p : net.places()) {
            if (!placed.insert(pid(p.id)).second) continue;
            PlaceDef q = p;
            q.id = pid(p.id);
            if (rename.count(q.type_name)) q.type_name = rename[q.type_name];
            if (!shared(p.id)) q.display = prefix + ": " + p.display;
            def.places.push_back(q);
        }
        for (std::size_t t = 0; t < net.transitions().size(); ++t) {
            TransitionDef d = net.transitions()[t];
            d.id = tid(d.id);
            d.display = prefix + ": " + d.display;
            def.transitions.push_back(d);
            if (net.has_rule(t)) def.rules[d.id] = net.rule(t);
        }
        for (const auto& a : net.arcs()) {
            ArcDef b = a;
            bool from_place = net.place_index(a.source).has_value();
            b.source = from_place ? pid(a.source) : tid(a.source);
            b.target = from_place ? tid(a.target) : pid(a.target);
            def.arcs.push_back(b);
        }
        const auto& m0 = net.initial_marking();
        for (std::size_t p = 0; p < m0.places(); ++p)
            for (const auto& [v, k] : m0.tokens(p))
                for (int i = 0; i < k; ++i) def.initial.push_back({pid(net.places()[p].id), v});
    }
    return build_net(std::move(def));
}

// ---- scenario

Value point_value(const scheme::Point& p) {
    if (p.infinity) throw Error(ErrorCode::PointNotOnCurve, "point at infinity has no token form");
    return Value::tuple({Value::integer(p.x), Value::integer(p.y)});
}

scheme::Point point_from(const Value& v) {
    return scheme::Point::affine(v.items().at(0).as_integer(), v.items().at(1).as_integer());
}

Value domain_value(const scheme::DomainParams& dp) {
    return Value::record({"p", "E", "P", "n", "h"},
                         {Value::integer(dp.p), Value::tuple({Value::integer(dp.a), Value::integer(dp.b)}),
                          point_value(dp.P), Value::integer(dp.n), Value::integer(dp.h)});
}

scheme::DomainParams domain_from(const Value& v) {
    scheme::DomainParams dp;
    dp.name = "token";
    dp.p = v.field("p").as_integer();
    dp.a = v.field("E").items().at(0).as_integer();
    dp.b = v.field("E").items().at(1).as_integer();
    dp.P = point_from(v.field("P"));
    dp.n = v.field("n").as_integer();
    dp.h = v.field("h").as_integer();
    return dp;
}

const Scenario& scenario() {
    static const Scenario sc = [] {
        Scenario s;
        s.dp = scheme::generate_domain_parameters(scheme::Profile::Toy);
        s.signer = scheme::key_from_private(s.dp, 7);
        s.message = scheme::to_bytes("meet at the north gate");
        BigInt e = scheme::hash_to_int(s.hash, s.message, s.dp.n);
        // smallest nonce from 3 up that gives r != 0 and s != 0 without retries
        for (BigInt k = 3; k < s.dp.n; ++k) {
            auto X = scheme::mul(s.dp, k, s.dp.P);
            if (X.infinity) continue;
            BigInt r = scheme::mod(X.x, s.dp.n);
            if (r == 0 || scheme::mod(e + s.signer.d * r, s.dp.n) == 0) continue;
            s.nonce = k;
            break;
        }
        s.signature = scheme::sign(s.message, s.signer.d, s.dp, scheme::Nonce::fixed(s.nonce), s.hash);

        s.p1 = 1.0;
        s.p2 = 2.0;
        s.v1 = 4.0;
        s.v2 = 6.0;
        s.prover_id = 7;
        s.verifier_id = 2;
        s.time = 1000;
        s.activity = "patrol";
        s.prover = scheme::key_from_private(s.dp, 11);
        s.context = scheme::sense_context(s.prover_id, s.time,
                                          scheme::euclidean_distance({s.p1, s.p2}, {s.v1, s.v2}), s.activity);
        s.lbs = scheme::register_verifier(scheme::LbsStore{}, s.verifier_id);
        s.lbs = scheme::register_prover(std::move(s.lbs), s.prover_id, s.prover.Q);
        s.lbs = scheme::store_context(std::move(s.lbs), s.context);
        s.proof = scheme::generate_location_proof(s.context, s.prover, s.dp);
        return s;
    }();
    return sc;
}

}  // namespace petriproof::models
