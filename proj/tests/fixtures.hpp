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

// Oracles and fixtures shared by the unit tests and the acceptance runner.

#include <algorithm>
#include <vector>

#include "petriproof/scheme/ec.hpp"

namespace fixtures {

using petriproof::scheme::Point;

// Plain-integer model of y^2 = x^3 + 2x + 2 over F_17, built by enumeration.
struct ToyOracle {
    static constexpr long p = 17, a = 2, b = 2;
    struct Pt {
        long x = 0, y = 0;
        bool inf = true;
        bool operator==(const Pt& o) const { return inf == o.inf && (inf || (x == o.x && y == o.y)); }
    };
    std::vector<Pt> points;

    static long md(long v) { return ((v % p) + p) % p; }
    static long inv(long v) {
        for (long i = 1; i < p; ++i)
            if (md(v * i) == 1) return i;
        return 0;
    }

    ToyOracle() {
        points.push_back(Pt{});
        for (long x = 0; x < p; ++x)
            for (long y = 0; y < p; ++y)
                if (md(y * y) == md(x * x * x + a * x + b)) points.push_back(Pt{x, y, false});
    }

    Pt add(const Pt& P, const Pt& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (P.x == Q.x && md(P.y + Q.y) == 0) return Pt{};
        long l = P.x == Q.x ? md((3 * P.x * P.x + a) * inv(2 * P.y)) : md((Q.y - P.y) * inv(Q.x - P.x));
        long x = md(l * l - P.x - Q.x);
        return Pt{x, md(l * (P.x - x) - P.y), false};
    }
    Pt mul(long k, const Pt& P) const {
        Pt r;
        for (long i = 0; i < k; ++i) r = add(r, P);
        return r;
    }
    static Point lift(const Pt& q) { return q.inf ? Point::at_infinity() : Point::affine(q.x, q.y); }
};

// One untimed and one timed path; both enabled from clock 0.
inline const char* kMixed = R"(net "mixed" kind cpn timed
colset U = enum { a b c }
colset T = enum { x y } timed
var u : U
var t : T
place PU "PU" : U init 1'a ++ 1'b ++ 1'c
place PT "PT" : T init 1'x@+0 ++ 1'y@+0
place Out "Out" : U
place OutT "OutT" : T
trans FromU "From U"
trans FromT "From T"
arc PU -> FromU : u
arc FromU -> Out : u
arc PT -> FromT : t
arc FromT -> OutT : t@+1
)";

struct Row {
    const char* place;
    long count;
    double sum;
    double average;
    double min;
    double max;
};

// Untimed marking-size reference rows: place, count, sum, average, min, max.
inline const Row kRows[] = {
    {"Inputs", 51, 56, 1.098039, 0, 5},
    {"Domain Parameters Store", 51, 454, 8.901961, 5, 10},
    {"Keys Store", 51, 1178, 23.098039, 2, 47},
    {"Inputs", 51, 204, 4.000000, 4, 4},
    {"Coordinates Store", 51, 377, 7.392157, 2, 13},
    {"Hash Integer Store", 51, 280, 5.490196, 1, 12},
    {"Signature Store", 51, 118, 2.313725, 0, 5},
    {"Inputs", 51, 153, 3.000000, 3, 3},
    {"Signature Store", 51, 123, 2.411765, 0, 5},
    {"Hash Integer Store", 51, 325, 6.372549, 2, 11},
    {"Point Store", 51, 429, 8.411765, 2, 15},
    {"Coordinates Store", 51, 175, 3.431373, 0, 8},
    {"Accept / Reject", 51, 354, 6.941176, 0, 11},
    {"Inputs", 51, 204, 4.000000, 4, 4},
    {"Point Store", 51, 834, 16.352941, 4, 28},
    {"Provers' Distance Store", 51, 696, 13.647059, 1, 27},
    {"Inputs", 51, 306, 6.000000, 6, 6},
    {"Context Information Store", 51, 628, 12.313725, 4, 19},
    {"LBS Information Store", 51, 408, 8.000000, 2, 16},
    {"Location Proof Store", 51, 511, 10.019608, 2, 18},
    {"Signed Location Proofs Store", 51, 340, 6.666667, 4, 9},
    {"Inputs", 51, 153, 3.000000, 3, 3},
    {"Extracted Context Information Store", 51, 484, 9.490196, 2, 14},
    {"Location Proofs Store", 51, 417, 8.176471, 2, 14},
    {"Verified Information Store", 51, 286, 5.607843, 0, 11},
    {"Accept / Reject Location Proof Store", 51, 292, 5.725490, 0, 15},
};

// Timed rows only give count, average, min, max.
inline const Row kTimedRows[] = {
    {"Inputs", 7, 0, 0.510204, 0, 5},
    {"Domain Parameters Store", 52, 0, 9.489796, 5, 10},
    {"Keys Store", 47, 0, 22.000000, 2, 47},
    {"Inputs", 16, 0, 3.000000, 3, 3},
    {"Extracted Context Information Store", 47, 0, 6.941176, 2, 11},
    {"Location Proofs Store", 38, 0, 9.441176, 2, 20},
    {"Verified Information Store", 25, 0, 6.764706, 0, 18},
    {"Accept / Reject Location Proof Store", 7, 0, 1.705882, 0, 5},
};

// An integer sequence with the row's count, sum, min and max; empty if none exists.
inline std::vector<double> sequence_for(const Row& r) {
    std::vector<double> xs(static_cast<std::size_t>(r.count), r.min);
    xs[1] = r.max;
    double left = r.sum - r.min * static_cast<double>(r.count) - (r.max - r.min);
    for (std::size_t i = 2; i < xs.size() && left > 0; ++i) {
        double add = std::min(left, r.max - r.min);
        xs[i] += add;
        left -= add;
    }
    if (left != 0) return {};
    return xs;
}

}  // namespace fixtures
