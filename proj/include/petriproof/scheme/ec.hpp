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

#include <optional>
#include <string>

#include "petriproof/value.hpp"

// Arithmetic here is variable-time. This is a verification artifact and
// must not be used to protect real keys.

namespace petriproof::scheme {

struct Point {
    BigInt x;
    BigInt y;
    bool infinity = true;

    static Point at_infinity() { return Point{}; }
    static Point affine(BigInt x, BigInt y) { return Point{std::move(x), std::move(y), false}; }

    bool operator==(const Point& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x == o.x && y == o.y;
    }
    bool operator!=(const Point& o) const { return !(*this == o); }
    std::string to_string() const;
};

/* y^2 = x^3 + a x + b over F_p, base point P of prime order n, cofactor h. */
struct DomainParams {
    std::string name;
    BigInt p;
    BigInt a;
    BigInt b;
    Point P;
    BigInt n;
    BigInt h;
};

enum class Profile { Toy, Standard };

DomainParams generate_domain_parameters(Profile profile);

/* Checks every DomainParams invariant; counts the group outright when p is small. */
bool validate(const DomainParams& dp, std::string* why = nullptr);

BigInt mod(const BigInt& a, const BigInt& m);
BigInt inv_mod(const BigInt& a, const BigInt& m);
std::optional<BigInt> sqrt_mod(const BigInt& a, const BigInt& p);
bool is_probable_prime(const BigInt& v);

bool on_curve(const DomainParams& dp, const Point& pt);
Point negate(const DomainParams& dp, const Point& pt);
Point add(const DomainParams& dp, const Point& a, const Point& b);
Point mul(const DomainParams& dp, const BigInt& k, const Point& pt);
/* u1*P + u2*Q with one shared doubling chain. */
Point mul_add(const DomainParams& dp, const BigInt& u1, const Point& p, const BigInt& u2, const Point& q);

}  // namespace petriproof::scheme
