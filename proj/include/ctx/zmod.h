// Copyright 2026 The ctx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <tuple>

namespace ctx {

/// Element of Z_d stored as its representative in [0, d).
using zd = uint32_t;

inline zd reduce(int64_t v, uint32_t d) {
    int64_t r = v % static_cast<int64_t>(d);
    return static_cast<zd>(r < 0 ? r + d : r);
}

inline zd add_mod(zd a, zd b, uint32_t d) {
    return static_cast<zd>((static_cast<uint64_t>(a) + b) % d);
}

inline zd sub_mod(zd a, zd b, uint32_t d) {
    return static_cast<zd>((static_cast<uint64_t>(a) + d - b) % d);
}

inline zd mul_mod(zd a, zd b, uint32_t d) {
    return static_cast<zd>((static_cast<uint64_t>(a) * b) % d);
}

inline zd neg_mod(zd a, uint32_t d) {
    return a == 0 ? 0 : d - a;
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b) over the integers.
inline std::tuple<int64_t, int64_t, int64_t> ext_gcd(int64_t a, int64_t b) {
    int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        int64_t q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, old_r - q * r);
        std::tie(old_s, s) = std::make_tuple(s, old_s - q * s);
        std::tie(old_t, t) = std::make_tuple(t, old_t - q * t);
    }
    if (old_r < 0) {
        return {-old_r, -old_s, -old_t};
    }
    return {old_r, old_s, old_t};
}

/// Multiplicative inverse in Z_d, if a is a unit.
inline std::optional<zd> inverse_mod(zd a, uint32_t d) {
    auto [g, s, t] = ext_gcd(a, d);
    (void)t;
    if (g != 1) {
        return std::nullopt;
    }
    return reduce(s, d);
}

inline bool is_prime(uint32_t d) {
    if (d < 2) {
        return false;
    }
    for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= d; ++p) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

/// Writes a = u * g in Z_d with g = gcd(a, d) and u a unit; returns (g, u^{-1}).
/// For a = 0 returns (d, 1).
inline std::pair<zd, zd> unit_normalize(zd a, uint32_t d) {
    if (a == 0) {
        return {d, 1};
    }
    uint32_t g = std::gcd(a, d);
    uint32_t m = d / g;
    // a/g is a unit mod m; lift it to a unit mod d.
    zd u = (a / g) % m;
    if (m == 1) {
        u = 1;
    }
    zd lifted = u;
    while (std::gcd(lifted, d) != 1) {
        lifted += m;
    }
    return {g, *inverse_mod(lifted, d)};
}

}  // namespace ctx
