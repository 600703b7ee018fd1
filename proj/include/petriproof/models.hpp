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
#include <vector>

#include "petriproof/pnet.hpp"
#include "petriproof/scheme/lps.hpp"

namespace petriproof::models {

enum class Layer { Hlpn, Cpn };
enum class Timing { Untimed, Timed };

struct ModelId {
    std::string name;
    Layer layer = Layer::Hlpn;
    Timing timing = Timing::Untimed;

    /* "ecdsa-keygen/hlpn", "ecdsa-keygen/cpn", "ecdsa-keygen/cpn/timed". */
    std::string key() const;
    bool operator==(const ModelId& o) const {
        return name == o.name && layer == o.layer && timing == o.timing;
    }
};

/* The six process models, in workflow order. */
const std::vector<std::string>& base_names();
/* The two fused nets (key generation through verification, and the full LPS). */
const std::vector<std::string>& composite_names();

/* 6 HLPN + 6 untimed CPN + 6 timed CPN. */
std::vector<ModelId> catalog();

/* Accepts a catalog key, or a bare name (hlpn) with optional /cpn and /timed. */
ModelId parse_model_id(std::string_view text);

const FunctionRegistry& registry();
void register_hlpn_rules(FunctionRegistry& reg);
void register_cpn_functions(FunctionRegistry& reg);

/* The embedded `.pnet` text. Composites have no source of their own. */
std::string source(const ModelId& id);

ParsedModel instantiate(const ModelId& id);
/* Base names and composites. */
Net instantiate_hlpn(std::string_view name);
CpnModel instantiate_cpn(std::string_view name, bool timed);

/* Bundled incidence tables for the six base models. */
std::string golden_csv(std::string_view name);

/* Fuses places with equal id and type; other ids get a "<prefix>_" prefix. */
Net fuse(const std::string& name, const std::vector<std::pair<std::string, Net>>& parts);

/* Fixed data the built-in models run on: the toy curve, one signer, one
 * prover/verifier pair and the context the prover senses. */
struct Scenario {
    scheme::DomainParams dp;
    scheme::KeyPair signer;
    Bytes message;
    BigInt nonce;
    scheme::HashAlg hash = scheme::HashAlg::Sha256;
    scheme::Signature signature;

    double p1 = 0, p2 = 0, v1 = 0, v2 = 0;
    std::int64_t prover_id = 0;
    std::int64_t verifier_id = 0;
    std::int64_t time = 0;
    std::string activity;
    scheme::KeyPair prover;
    scheme::ContextInfo context;
    scheme::LbsStore lbs;
    scheme::LocationProof proof;
};

const Scenario& scenario();

// token <-> scheme conversions shared by the rules and the SMT bindings
Value point_value(const scheme::Point& p);
scheme::Point point_from(const Value& v);
Value domain_value(const scheme::DomainParams& dp);
scheme::DomainParams domain_from(const Value& v);

}  // namespace petriproof::models
