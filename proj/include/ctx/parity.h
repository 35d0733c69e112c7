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

#include <optional>
#include <utility>
#include <vector>

#include "ctx/chain_complex.h"

namespace ctx {

/// Eigenvalue data of a state: T_a |psi> = omega^{s(a)} |psi> for a in E_psi.
struct StateData {
    std::vector<PauliLabel> labels;  // closed, contains 0
    std::vector<zd> values;          // s_psi, aligned with labels

    zd value_of(const PauliLabel &a) const;
};

/// Closes the stabilizer labels inside E and extends s_psi by
/// s(a+b) = s(a) + s(b) + beta(a,b). Throws InconsistentStateData on conflict.
/// Each entry is (operator, k) meaning the operator has eigenvalue omega^k.
StateData make_state_data(const ObservableComplex &cx, const std::vector<std::pair<PauliOperator, zd>> &stabilizers);

/// s_psi extended by zero to all of E, indexed by label.
std::vector<zd> extend_by_zero(const ObservableComplex &cx, const StateData &st);

/// beta + d s_psi on every face of the parent complex.
std::vector<zd> beta_psi(const ObservableComplex &cx, const StateData &st);

struct Verdict {
    bool contextual = false;
    bool relative = false;
    /// Per label index; for relative verdicts it agrees with s_psi on E_psi.
    std::vector<zd> assignment;
    /// 2-cycle (relative 2-cycle) with nonzero pairing, parent face indices.
    Chain witness{2, {}};
    zd witness_value = 0;
    /// Left-null combination of face equations, one entry per (surviving) face.
    std::vector<zd> certificate;
};

/// Decides ds = -beta over all faces.
Verdict check_state_independent(const ObservableComplex &cx);

/// Decides the relative system ds = -beta_psi with s = s_psi on E_psi.
Verdict check_state_dependent(const ObservableComplex &cx, const StateData &st);

/// ds = -beta on all faces (or on faces outside E_psi x E_psi, with s = s_psi on E_psi).
bool is_consistent(const ObservableComplex &cx, const std::vector<zd> &s, const StateData *st = nullptr);

/// Boundary (relative boundary) is zero and the (relative) beta pairing is nonzero.
bool verify_witness(const ObservableComplex &cx, const Chain &F, const StateData *st = nullptr);

/// Value of beta (or beta_psi) on a 2-chain.
zd witness_value(const ObservableComplex &cx, const Chain &F, const StateData *st = nullptr);

/// A 3-chain V with F1 - F2 = boundary(V), if one exists.
std::optional<Chain> homologous(const ObservableComplex &cx, const Chain &F1, const Chain &F2);

}  // namespace ctx
