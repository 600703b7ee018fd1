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
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "petriproof/scheme/ecdsa.hpp"

namespace petriproof::scheme {

struct ContextInfo {
    std::int64_t id = 0;
    std::int64_t time = 0;
    double loc = 0;
    std::string activity;

    bool operator==(const ContextInfo& o) const {
        return id == o.id && time == o.time && loc == o.loc && activity == o.activity;
    }
};

ContextInfo sense_context(std::int64_t id, std::int64_t time, double loc, std::string activity);

/* Each field as a 4-byte big-endian length then its bytes: ID and T as
 * 8-byte big-endian two's complement, Loc as binary64 bits, Actv as UTF-8. */
Bytes encode(const ContextInfo& ci);
ContextInfo decode(const Bytes& bytes);

struct PointPlacement {
    double p1 = 0, p2 = 0;  // prover
    double v1 = 0, v2 = 0;  // verifier
};

PointPlacement determine_2d_point_space(double p1, double p2, double v1, double v2);
double euclidean_distance(std::pair<double, double> prover, std::pair<double, double> verifier);
double euclidean_distance(const PointPlacement& placement);

struct LbsStore {
    std::vector<ContextInfo> records;
    std::set<std::int64_t> verifiers;
    std::map<std::int64_t, Point> public_keys;
};

/* Keyed by (ID, T); a second record with the same key replaces the first. */
LbsStore store_context(LbsStore lbs, const ContextInfo& ci);
LbsStore register_prover(LbsStore lbs, std::int64_t id, const Point& public_key);
LbsStore register_verifier(LbsStore lbs, std::int64_t id);
std::optional<ContextInfo> extract_context(const LbsStore& lbs, std::int64_t prover_id, std::int64_t time);

struct ProofRequest {
    std::int64_t verifier_id = 0;
    std::int64_t prover_id = 0;
    std::int64_t time = 0;
};

ProofRequest request_location_proof(const LbsStore& lbs, std::int64_t verifier_id, std::int64_t prover_id,
                                    std::int64_t ci_time);

struct LocationProof {
    ContextInfo context;
    Signature signature;
    std::int64_t prover_id = 0;
};

LocationProof generate_location_proof(const ContextInfo& ci, const KeyPair& k_pr, const DomainParams& dp);

/* ID, T and Actv equal; |Loc difference| <= tolerance. */
bool verify_context(const ContextInfo& proof_ci, const ContextInfo& lbs_ci, double tolerance);

enum class RejectReason { ContextNotFound, ContextMismatch, Signature };
std::string to_string(RejectReason r);

struct ProofOutcome {
    bool accepted = false;
    std::optional<RejectReason> reason;
};

ProofOutcome verify_location_proof(const LocationProof& proof, const Point& k_pb, const LbsStore& lbs,
                                   const DomainParams& dp, double tolerance = 1e-6);

}  // namespace petriproof::scheme
