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

#include "petriproof/scheme/ecdsa.hpp"

#include <algorithm>
#include <cmath>

#include "petriproof/error.hpp"

namespace petriproof::scheme {

BigInt random_integer(std::mt19937_64& rng, const BigInt& lo, const BigInt& hi) {
    if (hi < lo) throw Error(ErrorCode::InvalidArgument, "empty random range");
    BigInt span = hi - lo + 1;
    // 64 spare bits keep the modulo bias below 2^-64.
    unsigned words = static_cast<unsigned>(msb(span) / 64 + 2);
    BigInt acc = 0;
    for (unsigned i = 0; i < words; ++i) acc = (acc << 64) | BigInt(rng());
    return lo + acc % span;
}

KeyPair key_from_private(const DomainParams& dp, const BigInt& d) {
    if (d < 1 || d >= dp.n) throw Error(ErrorCode::InvalidArgument, "private key outside [1, n-1]");
    return KeyPair{d, mul(dp, d, dp.P)};
}

KeyPair generate_keys(const DomainParams& dp, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return key_from_private(dp, random_integer(rng, 1, dp.n - 1));
}

Signature sign(const Bytes& m, const BigInt& d, const DomainParams& dp, const Nonce& nonce, HashAlg alg) {
    if (d < 1 || d >= dp.n) throw Error(ErrorCode::InvalidArgument, "private key outside [1, n-1]");
    if (nonce.forced && (*nonce.forced < 1 || *nonce.forced >= dp.n))
        throw Error(ErrorCode::InvalidArgument, "forced nonce outside [1, n-1]");
    std::mt19937_64 rng(nonce.seed);
    const BigInt e = hash_to_int(alg, m, dp.n);
    for (int attempt = 0; attempt < 128; ++attempt) {
        BigInt k = (attempt == 0 && nonce.forced) ? *nonce.forced : random_integer(rng, 1, dp.n - 1);
        Point X = mul(dp, k, dp.P);
        BigInt r = mod(X.x, dp.n);
        if (X.infinity || r == 0) continue;
        BigInt s = mod(inv_mod(k, dp.n) * (e + d * r), dp.n);
        if (s == 0) continue;
        return Signature{r, s};
    }
    throw Error(ErrorCode::NonceExhaustion, "no usable nonce after 128 attempts");
}

Verdict verify(const Signature& sig, const Point& Q, const Bytes& m, const DomainParams& dp, HashAlg alg) {
    if (!on_curve(dp, Q)) throw Error(ErrorCode::PointNotOnCurve, "public key " + Q.to_string());
    if (sig.r < 1 || sig.r >= dp.n || sig.s < 1 || sig.s >= dp.n) return Verdict::Reject;
    BigInt e = hash_to_int(alg, m, dp.n);
    BigInt w = inv_mod(sig.s, dp.n);
    BigInt u1 = mod(e * w, dp.n), u2 = mod(sig.r * w, dp.n);
    Point X = mul_add(dp, u1, dp.P, u2, Q);
    if (X.infinity) return Verdict::Reject;
    return mod(X.x, dp.n) == sig.r ? Verdict::Accept : Verdict::Reject;
}

namespace {

struct Prepared {
    std::size_t index;
    BigInt u1, u2;
    Point Q;
    Point R;  // lift of r; the point u1 P + u2 Q of a valid item is R or -R
};

/*
 * Tests sum(l_i (u1_i P + u2_i Q_i)) == sum(+-l_i R_i) for some sign vector.
 * Valid items always pass. With an invalid item a sign vector survives a
 * round with chance at most 2^k / (L - 1) for multipliers in [1, L], so the
 * toy curve repeats rounds until that bound is under 2^-64; on P-256 a
 * single round with L = 2^128 and k <= 8 gives at most 2^-120.
 */
bool aggregate_holds(const std::vector<Prepared>& g, const DomainParams& dp, std::mt19937_64& rng) {
    const std::size_t k = g.size();
    const BigInt two128 = BigInt(1) << 128;
    const bool large = dp.n > two128;
    const BigInt lambda_hi = large ? two128 : dp.n - 1;
    int rounds = 1;
    if (!large) {
        double bits = std::log2(std::max(2.0, static_cast<double>(dp.n - 2)));
        rounds = static_cast<int>(std::ceil((64.0 + static_cast<double>(k)) / bits));
    }
    std::vector<std::uint32_t> survivors;
    for (int round = 0; round < rounds; ++round) {
        std::vector<BigInt> lambda(k);
        BigInt c1 = 0;
        for (std::size_t i = 0; i < k; ++i) {
            lambda[i] = random_integer(rng, 1, lambda_hi);
            c1 += lambda[i] * g[i].u1;
        }
        Point A = mul(dp, mod(c1, dp.n), dp.P);
        std::vector<Point> T(k);
        for (std::size_t i = 0; i < k; ++i) {
            A = add(dp, A, mul(dp, mod(lambda[i] * g[i].u2, dp.n), g[i].Q));
            T[i] = mul(dp, lambda[i], g[i].R);
        }
        if (round == 0) {
            // Gray-code walk: one point addition per sign vector.
            Point S = Point::at_infinity();
            for (auto& t : T) S = add(dp, S, t);
            std::uint32_t mask = 0;
            for (std::uint32_t step = 0; step < (1u << k); ++step) {
                if (step) {
                    unsigned j = static_cast<unsigned>(__builtin_ctz(step));
                    Point twice = add(dp, T[j], T[j]);
                    mask ^= 1u << j;
                    S = add(dp, S, ((mask >> j) & 1u) ? negate(dp, twice) : twice);
                }
                if (S == A) survivors.push_back(mask);
            }
        } else {
            std::vector<std::uint32_t> kept;
            for (auto mask : survivors) {
                Point S = Point::at_infinity();
                for (std::size_t i = 0; i < k; ++i) S = add(dp, S, ((mask >> i) & 1u) ? negate(dp, T[i]) : T[i]);
                if (S == A) kept.push_back(mask);
            }
            survivors = std::move(kept);
        }
        if (survivors.empty()) return false;
    }
    return true;
}

void isolate(const std::vector<Prepared>& g, std::span<const BatchItem> items, const DomainParams& dp, HashAlg alg,
             std::mt19937_64& rng, std::vector<std::size_t>& invalid) {
    if (g.empty()) return;
    if (g.size() == 1) {
        auto& it = items[g[0].index];
        if (verify(it.sig, it.Q, it.m, dp, alg) == Verdict::Reject) invalid.push_back(g[0].index);
        return;
    }
    if (aggregate_holds(g, dp, rng)) return;
    std::size_t half = g.size() / 2;
    isolate(std::vector<Prepared>(g.begin(), g.begin() + static_cast<long>(half)), items, dp, alg, rng, invalid);
    isolate(std::vector<Prepared>(g.begin() + static_cast<long>(half), g.end()), items, dp, alg, rng, invalid);
}

}  // namespace

BatchResult batch_verify(std::span<const BatchItem> items, const DomainParams& dp, std::uint64_t seed, HashAlg alg) {
    if (items.empty()) throw Error(ErrorCode::EmptyBatch, "batch has no items");
    std::mt19937_64 rng(seed ^ 0x6a09e667f3bcc908ULL);
    std::vector<std::size_t> invalid;
    std::vector<Prepared> ready;
    for (std::size_t i = 0; i < items.size(); ++i) {
        auto& it = items[i];
        if (!on_curve(dp, it.Q)) throw Error(ErrorCode::PointNotOnCurve, "public key " + it.Q.to_string());
        auto& sig = it.sig;
        if (sig.r < 1 || sig.r >= dp.n || sig.s < 1 || sig.s >= dp.n) {
            invalid.push_back(i);
            continue;
        }
        // x(X) = r or r + n; both being curve abscissae is too rare to batch.
        std::vector<Point> lifts;
        for (BigInt x = sig.r; x < dp.p; x += dp.n) {
            if (auto y = sqrt_mod(x * x * x + dp.a * x + dp.b, dp.p)) lifts.push_back(Point::affine(x, *y));
        }
        if (lifts.empty()) {
            invalid.push_back(i);
            continue;
        }
        if (lifts.size() > 1) {
            if (verify(sig, it.Q, it.m, dp, alg) == Verdict::Reject) invalid.push_back(i);
            continue;
        }
        BigInt w = inv_mod(sig.s, dp.n);
        BigInt e = hash_to_int(alg, it.m, dp.n);
        ready.push_back(Prepared{i, mod(e * w, dp.n), mod(sig.r * w, dp.n), it.Q, lifts.front()});
    }
    for (std::size_t start = 0; start < ready.size(); start += 8) {
        std::size_t end = std::min(ready.size(), start + 8);
        isolate(std::vector<Prepared>(ready.begin() + static_cast<long>(start), ready.begin() + static_cast<long>(end)),
                items, dp, alg, rng, invalid);
    }
    std::sort(invalid.begin(), invalid.end());
    return BatchResult{invalid.empty(), invalid};
}

}  // namespace petriproof::scheme
