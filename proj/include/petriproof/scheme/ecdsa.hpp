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
#include <random>
#include <span>
#include <vector>

#include "petriproof/scheme/ec.hpp"
#include "petriproof/scheme/hash.hpp"

namespace petriproof::scheme {

struct KeyPair {
    BigInt d;
    Point Q;
};

struct Signature {
    BigInt r;
    BigInt s;

    bool operator==(const Signature& o) const { return r == o.r && s == o.s; }
};

enum class Verdict { Accept, Reject };

/* Uniform integer in [lo, hi] drawn from 64-bit words of `rng`. */
BigInt random_integer(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi);

KeyPair generate_keys(const DomainParams& dp, std::uint64_t seed);
KeyPair key_from_private(const DomainParams& dp, const BigInt& d);

/* Where the per-signature k comes from. A forced k is tried first; retries
 * after r = 0 or s = 0 draw from the seeded stream. */
struct Nonce {
    std::optional<BigInt> forced;
    std::uint64_t seed = 0;

    static Nonce fixed(BigInt k, std::uint64_t retry_seed = 0) { return Nonce{std::move(k), retry_seed}; }
    static Nonce seeded(std::uint64_t seed) { return Nonce{std::nullopt, seed}; }
};

Signature sign(const Bytes& m, const BigInt& d, const DomainParams& dp, const Nonce& nonce,
               HashAlg alg = HashAlg::Sha256);

Verdict verify(const Signature& sig, const Point& Q, const Bytes& m, const DomainParams& dp,
               HashAlg alg = HashAlg::Sha256);

struct BatchItem {
    Signature sig;
    Point Q;
    Bytes m;
};

struct BatchResult {
    bool all_valid = true;
    std::vector<std::size_t> invalid;
};

/*
 * Randomised linear-combination check over groups of at most eight items,
 * with bisection down to single items on failure.
 */
BatchResult batch_verify(std::span<const BatchItem> items, const DomainParams& dp, std::uint64_t seed,
                         HashAlg alg = HashAlg::Sha256);

}  // namespace petriproof::scheme
