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

#include "petriproof/scheme/ec.hpp"

#include <boost/multiprecision/miller_rabin.hpp>
#include <random>

#include "petriproof/error.hpp"

namespace petriproof::scheme {

std::string Point::to_string() const {
    if (infinity) return "O";
    return "(" + x.str() + "," + y.str() + ")";
}

BigInt mod(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
    BigInt t = 0, nt = 1, r = m, nr = mod(a, m);
    while (nr != 0) {
        BigInt q = r / nr;
        BigInt tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw Error(ErrorCode::InvalidArgument, "value not invertible modulo " + m.str());
    return mod(t, m);
}

bool is_probable_prime(const BigInt& v) {
    if (v < 2) return false;
    std::mt19937 gen(12345);
    return boost::multiprecision::miller_rabin_test(v, 25, gen);
}

std::optional<BigInt> sqrt_mod(const BigInt& a0, const BigInt& p) {
    BigInt a = mod(a0, p);
    if (a == 0) return BigInt(0);
    if (p == 2) return a;
    if (powm(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powm(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    BigInt q = p - 1;
    unsigned s = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++s;
    }
    BigInt z = 2;
    while (powm(z, (p - 1) / 2, p) != p - 1) ++z;
    BigInt c = powm(z, q, p), x = powm(a, (q + 1) / 2, p), t = powm(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        BigInt t2 = t;
        while (t2 != 1) {
            t2 = t2 * t2 % p;
            ++i;
        }
        BigInt b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

DomainParams generate_domain_parameters(Profile profile) {
    DomainParams dp;
    if (profile == Profile::Toy) {
        dp.name = "toy";
        dp.p = 17;
        dp.a = 2;
        dp.b = 2;
        dp.P = Point::affine(5, 1);
        dp.n = 19;
        dp.h = 1;
        return dp;
    }
    dp.name = "standard";
    dp.p = BigInt("115792089210356248762697446949407573530086143415290314195533631308867097853951");
    dp.a = dp.p - 3;
    dp.b = BigInt("41058363725152142129326129780047268409114441015993725554835256314039467401291");
    dp.P = Point::affine(BigInt("48439561293906451759052585252797914202762949526041747995844080717082404635286"),
                         BigInt("36134250956749795798585127919587881956611106672985015071877198253568414405109"));
    dp.n = BigInt("115792089210356248762697446949407573529996955224135760342422259061068512044369");
    dp.h = 1;
    return dp;
}

bool on_curve(const DomainParams& dp, const Point& pt) {
    if (pt.infinity) return true;
    if (pt.x < 0 || pt.x >= dp.p || pt.y < 0 || pt.y >= dp.p) return false;
    return mod(pt.y * pt.y - (pt.x * pt.x * pt.x + dp.a * pt.x + dp.b), dp.p) == 0;
}

Point negate(const DomainParams& dp, const Point& pt) {
    if (pt.infinity) return pt;
    return Point::affine(pt.x, mod(-pt.y, dp.p));
}

Point add(const DomainParams& dp, const Point& a, const Point& b) {
    if (a.infinity) return b;
    if (b.infinity) return a;
    const BigInt& p = dp.p;
    BigInt lambda;
    if (a.x == b.x) {
        if (mod(a.y + b.y, p) == 0) return Point::at_infinity();
        lambda = mod((3 * a.x * a.x + dp.a) * inv_mod(2 * a.y, p), p);
    } else {
        lambda = mod((b.y - a.y) * inv_mod(b.x - a.x, p), p);
    }
    BigInt x = mod(lambda * lambda - a.x - b.x, p);
    BigInt y = mod(lambda * (a.x - x) - a.y, p);
    return Point::affine(x, y);
}

namespace {

// Jacobian coordinates (X, Y, Z) for x = X/Z^2, y = Y/Z^3; Z = 0 is infinity.
struct Jac {
    BigInt X, Y, Z;
};

Jac to_jac(const Point& pt) {
    if (pt.infinity) return {1, 1, 0};
    return {pt.x, pt.y, 1};
}

Point from_jac(const DomainParams& dp, const Jac& j) {
    if (j.Z == 0) return Point::at_infinity();
    BigInt zi = inv_mod(j.Z, dp.p);
    BigInt zi2 = zi * zi % dp.p;
    return Point::affine(mod(j.X * zi2, dp.p), mod(j.Y * zi2 % dp.p * zi, dp.p));
}

Jac jdouble(const DomainParams& dp, const Jac& j) {
    const BigInt& p = dp.p;
    if (j.Z == 0 || j.Y == 0) return {1, 1, 0};
    BigInt y2 = j.Y * j.Y % p;
    BigInt s = 4 * j.X % p * y2 % p;
    BigInt z2 = j.Z * j.Z % p;
    BigInt m = (3 * j.X % p * j.X + dp.a * (z2 * z2 % p)) % p;
    BigInt x3 = mod(m * m - 2 * s, p);
    BigInt y3 = mod(m * (s - x3) - 8 * (y2 * y2 % p), p);
    BigInt z3 = 2 * j.Y % p * j.Z % p;
    return {x3, y3, z3};
}

Jac jadd(const DomainParams& dp, const Jac& a, const Jac& b) {
    if (a.Z == 0) return b;
    if (b.Z == 0) return a;
    const BigInt& p = dp.p;
    BigInt z1z1 = a.Z * a.Z % p, z2z2 = b.Z * b.Z % p;
    BigInt u1 = a.X * z2z2 % p, u2 = b.X * z1z1 % p;
    BigInt s1 = a.Y * z2z2 % p * b.Z % p, s2 = b.Y * z1z1 % p * a.Z % p;
    if (u1 == u2) {
        if (s1 != s2) return {1, 1, 0};
        return jdouble(dp, a);
    }
    BigInt h = mod(u2 - u1, p), r = mod(s2 - s1, p);
    BigInt h2 = h * h % p, h3 = h2 * h % p;
    BigInt u1h2 = u1 * h2 % p;
    BigInt x3 = mod(r * r - h3 - 2 * u1h2, p);
    BigInt y3 = mod(r * (u1h2 - x3) - s1 * h3, p);
    BigInt z3 = h * a.Z % p * b.Z % p;
    return {x3, y3, z3};
}

}  // namespace

Point mul(const DomainParams& dp, const BigInt& k0, const Point& pt) {
    BigInt k = k0;
    Point base = pt;
    if (k < 0) {
        k = -k;
        base = negate(dp, pt);
    }
    if (k == 0 || base.infinity) return Point::at_infinity();
    Jac acc{1, 1, 0};
    Jac b = to_jac(base);
    for (long i = static_cast<long>(msb(k)); i >= 0; --i) {
        acc = jdouble(dp, acc);
        if (bit_test(k, static_cast<unsigned>(i))) acc = jadd(dp, acc, b);
    }
    return from_jac(dp, acc);
}

Point mul_add(const DomainParams& dp, const BigInt& u1, const Point& p, const BigInt& u2, const Point& q) {
    if (u1 < 0 || u2 < 0) return add(dp, mul(dp, u1, p), mul(dp, u2, q));
    Jac jp = to_jac(p), jq = to_jac(q), jpq = jadd(dp, jp, jq);
    Jac acc{1, 1, 0};
    long top = -1;
    if (u1 > 0) top = static_cast<long>(msb(u1));
    if (u2 > 0) top = std::max(top, static_cast<long>(msb(u2)));
    for (long i = top; i >= 0; --i) {
        acc = jdouble(dp, acc);
        bool a = u1 > 0 && bit_test(u1, static_cast<unsigned>(i));
        bool b = u2 > 0 && bit_test(u2, static_cast<unsigned>(i));
        if (a && b) acc = jadd(dp, acc, jpq);
        else if (a) acc = jadd(dp, acc, jp);
        else if (b) acc = jadd(dp, acc, jq);
    }
    return from_jac(dp, acc);
}

bool validate(const DomainParams& dp, std::string* why) {
    auto fail = [&](const char* msg) {
        if (why) *why = msg;
        return false;
    };
    if (!is_probable_prime(dp.p)) return fail("p is not prime");
    if (mod(4 * dp.a * dp.a * dp.a + 27 * dp.b * dp.b, dp.p) == 0) return fail("curve is singular");
    if (dp.P.infinity || !on_curve(dp, dp.P)) return fail("base point not on curve");
    if (!is_probable_prime(dp.n)) return fail("n is not prime");
    if (!mul(dp, dp.n, dp.P).infinity) return fail("n*P is not the point at infinity");
    const BigInt order = dp.h * dp.n;
    if (dp.p < 65536) {
        BigInt count = 1;
        for (BigInt x = 0; x < dp.p; ++x) {
            BigInt rhs = mod(x * x * x + dp.a * x + dp.b, dp.p);
            if (rhs == 0) count += 1;
            else if (sqrt_mod(rhs, dp.p)) count += 2;
        }
        if (count != order) return fail("h*n differs from the group order");
    } else {
        // Hasse: |#E - (p + 1)| <= 2 sqrt(p)
        BigInt diff = order - (dp.p + 1);
        if (diff * diff > 4 * dp.p) return fail("h*n outside the Hasse interval");
    }
    return true;
}

}  // namespace petriproof::scheme
