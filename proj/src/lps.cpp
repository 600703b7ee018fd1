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

#include "petriproof/scheme/lps.hpp"

#include <bit>
#include <cmath>
#include <cstring>

#include "petriproof/error.hpp"

namespace petriproof::scheme {

ContextInfo sense_context(std::int64_t id, std::int64_t time, double loc, std::string activity) {
    if (time < 0) throw Error(ErrorCode::InvalidTime, "sensing time " + std::to_string(time) + " is negative");
    if (!std::isfinite(loc)) throw Error(ErrorCode::InvalidCoordinate, "location is not finite");
    return ContextInfo{id, time, loc, std::move(activity)};
}

namespace {

void put_u64(Bytes& out, std::uint64_t v) {
    for (int i = 7; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void put_field(Bytes& out, const Bytes& field) {
    auto n = static_cast<std::uint32_t>(field.size());
    for (int i = 3; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(n >> (8 * i)));
    out.insert(out.end(), field.begin(), field.end());
}

Bytes u64_bytes(std::uint64_t v) {
    Bytes b;
    put_u64(b, v);
    return b;
}

std::uint64_t get_u64(const Bytes& b) {
    if (b.size() != 8) throw Error(ErrorCode::InvalidArgument, "fixed-width field must be 8 bytes");
    std::uint64_t v = 0;
    for (auto c : b) v = (v << 8) | c;
    return v;
}

}  // namespace

Bytes encode(const ContextInfo& ci) {
    Bytes out;
    put_field(out, u64_bytes(static_cast<std::uint64_t>(ci.id)));
    put_field(out, u64_bytes(static_cast<std::uint64_t>(ci.time)));
    put_field(out, u64_bytes(std::bit_cast<std::uint64_t>(ci.loc)));
    put_field(out, Bytes(ci.activity.begin(), ci.activity.end()));
    return out;
}

ContextInfo decode(const Bytes& bytes) {
    std::vector<Bytes> fields;
    std::size_t pos = 0;
    while (pos < bytes.size()) {
        if (pos + 4 > bytes.size()) throw Error(ErrorCode::InvalidArgument, "truncated length prefix");
        std::uint32_t n = 0;
        for (int i = 0; i < 4; ++i) n = (n << 8) | bytes[pos + static_cast<std::size_t>(i)];
        pos += 4;
        if (pos + n > bytes.size()) throw Error(ErrorCode::InvalidArgument, "truncated field");
        fields.emplace_back(bytes.begin() + static_cast<long>(pos), bytes.begin() + static_cast<long>(pos + n));
        pos += n;
    }
    if (fields.size() != 4) throw Error(ErrorCode::InvalidArgument, "context encoding needs four fields");
    ContextInfo ci;
    ci.id = static_cast<std::int64_t>(get_u64(fields[0]));
    ci.time = static_cast<std::int64_t>(get_u64(fields[1]));
    ci.loc = std::bit_cast<double>(get_u64(fields[2]));
    ci.activity.assign(fields[3].begin(), fields[3].end());
    return ci;
}

PointPlacement determine_2d_point_space(double p1, double p2, double v1, double v2) {
    for (double c : {p1, p2, v1, v2})
        if (!std::isfinite(c)) throw Error(ErrorCode::InvalidCoordinate, "coordinate is not finite");
    return PointPlacement{p1, p2, v1, v2};
}

double euclidean_distance(std::pair<double, double> prover, std::pair<double, double> verifier) {
    return std::hypot(prover.first - verifier.first, prover.second - verifier.second);
}

double euclidean_distance(const PointPlacement& pl) { return euclidean_distance({pl.p1, pl.p2}, {pl.v1, pl.v2}); }

LbsStore store_context(LbsStore lbs, const ContextInfo& ci) {
    for (auto& r : lbs.records)
        if (r.id == ci.id && r.time == ci.time) {
            r = ci;
            return lbs;
        }
    lbs.records.push_back(ci);
    return lbs;
}

LbsStore register_prover(LbsStore lbs, std::int64_t id, const Point& public_key) {
    lbs.public_keys[id] = public_key;
    return lbs;
}

LbsStore register_verifier(LbsStore lbs, std::int64_t id) {
    lbs.verifiers.insert(id);
    return lbs;
}

std::optional<ContextInfo> extract_context(const LbsStore& lbs, std::int64_t prover_id, std::int64_t time) {
    for (auto& r : lbs.records)
        if (r.id == prover_id && r.time == time) return r;
    return std::nullopt;
}

ProofRequest request_location_proof(const LbsStore& lbs, std::int64_t verifier_id, std::int64_t prover_id,
                                    std::int64_t ci_time) {
    if (!lbs.public_keys.count(prover_id))
        throw Error(ErrorCode::UnknownProver, "prover " + std::to_string(prover_id) + " is not registered");
    return ProofRequest{verifier_id, prover_id, ci_time};
}

LocationProof generate_location_proof(const ContextInfo& ci, const KeyPair& k_pr, const DomainParams& dp) {
    Bytes msg = encode(ci);
    // Nonce stream seeded from the message and key so proofs are reproducible.
    std::uint64_t seed = fnv1a(std::string(msg.begin(), msg.end())) ^ fnv1a(k_pr.d.str());
    return LocationProof{ci, sign(msg, k_pr.d, dp, Nonce::seeded(seed)), ci.id};
}

bool verify_context(const ContextInfo& proof_ci, const ContextInfo& lbs_ci, double tolerance) {
    return proof_ci.id == lbs_ci.id && proof_ci.time == lbs_ci.time && proof_ci.activity == lbs_ci.activity &&
           std::fabs(proof_ci.loc - lbs_ci.loc) <= tolerance;
}

std::string to_string(RejectReason r) {
    switch (r) {
        case RejectReason::ContextNotFound: return "context-not-found";
        case RejectReason::ContextMismatch: return "context-mismatch";
        case RejectReason::Signature: return "signature";
    }
    return "signature";
}

ProofOutcome verify_location_proof(const LocationProof& proof, const Point& k_pb, const LbsStore& lbs,
                                   const DomainParams& dp, double tolerance) {
    auto stored = extract_context(lbs, proof.prover_id, proof.context.time);
    if (!stored) return {false, RejectReason::ContextNotFound};
    if (!verify_context(proof.context, *stored, tolerance)) return {false, RejectReason::ContextMismatch};
    if (verify(proof.signature, k_pb, encode(proof.context), dp) != Verdict::Accept)
        return {false, RejectReason::Signature};
    return {true, std::nullopt};
}

}  // namespace petriproof::scheme
