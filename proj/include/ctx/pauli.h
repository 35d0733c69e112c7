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

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ctx/zmod.h"

namespace ctx {

/// Phase-free label a = (x | z) of a Weyl operator on n qudits of dimension d.
struct PauliLabel {
    uint32_t d = 2;
    std::vector<zd> x;
    std::vector<zd> z;

    PauliLabel() = default;
    PauliLabel(uint32_t n, uint32_t d);
    PauliLabel(uint32_t d, std::vector<zd> x, std::vector<zd> z);

    size_t num_qudits() const {
        return x.size();
    }
    bool is_zero() const;

    PauliLabel operator+(const PauliLabel &other) const;
    PauliLabel operator-() const;
    PauliLabel scaled(zd k) const;

    bool operator==(const PauliLabel &other) const;
    bool operator!=(const PauliLabel &other) const {
        return !(*this == other);
    }
    /// Lexicographic on (x..., z...). The zero label sorts first.
    bool operator<(const PauliLabel &other) const;

    /// Compact "XYZI" form when every entry is 0/1, else "X^aZ^b" tokens joined by '.'.
    std::string str() const;
};

struct PauliLabelHash {
    size_t operator()(const PauliLabel &a) const;
};

/// Size of the lifted phase ring: 2d for even d, d for odd d.
uint32_t lifted_modulus(uint32_t d);

/// Exponent t with T_a = zeta^{t * sum(x_j z_j)} X^x Z^z, zeta = exp(2 pi i / D).
zd eta_phase(const PauliLabel &a);

/// zeta^phase * T_label, with T the fixed base convention (gamma = 0).
struct PauliOperator {
    PauliLabel label;
    zd phase = 0;

    bool operator==(const PauliOperator &other) const {
        return label == other.label && phase == other.phase;
    }
    std::string str() const;
};

PauliOperator identity_operator(uint32_t n, uint32_t d);

/// Sum_i (a.x_i b.z_i - a.z_i b.x_i) mod d.
zd symplectic_form(const PauliLabel &a, const PauliLabel &b);
bool commutes(const PauliLabel &a, const PauliLabel &b);

/// Exact product with phase in Z_D.
PauliOperator multiply(const PauliOperator &p, const PauliOperator &q);

/// Re-parametrization gamma: E -> Z_d of the base convention. T'_a = omega^{gamma(a)} T_a.
class PhaseConvention {
   public:
    PhaseConvention() = default;
    zd gamma(const PauliLabel &a) const;
    const std::map<PauliLabel, zd> &table() const {
        return gamma_;
    }
    bool is_trivial() const {
        return gamma_.empty();
    }

   private:
    friend PhaseConvention rephase(const PhaseConvention &conv, const std::map<PauliLabel, zd> &gamma);
    std::map<PauliLabel, zd> gamma_;
};

/// Composes gamma onto conv. gamma must vanish on the zero label.
PhaseConvention rephase(const PhaseConvention &conv, const std::map<PauliLabel, zd> &gamma);

/// The k in Z_d with T_{a+b} = omega^k T_a T_b. Throws NonCommuting off faces.
zd beta(const PauliLabel &a, const PauliLabel &b, const PhaseConvention &conv = {});

/// Smallest commuting-sum-closed label set containing 0 and the seeds, sorted.
std::vector<PauliLabel> closure(const std::vector<PauliLabel> &seed, size_t cap = 4096);
std::vector<PauliLabel> closure(const std::vector<PauliOperator> &seed, size_t cap = 4096);

/// Parses "XYZ", "-XZ", "w^2 X^1Z^2.I", "X.Z^3". n = 0 infers the qudit count.
PauliOperator parse_pauli(const std::string &text, uint32_t d, uint32_t n = 0);

/// All d^{2n} labels in lexicographic order.
std::vector<PauliLabel> all_labels(uint32_t n, uint32_t d);

}  // namespace ctx
