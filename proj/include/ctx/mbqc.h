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

#include <gmpxx.h>

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctx/modlinalg.h"
#include "ctx/pauli.h"

namespace ctx {

/// Measurement direction cos(t) X + sin(t) Y. Multiples of pi/2 are kept exactly.
struct Angle {
    double radians = 0.0;
    std::optional<int> quarter_turns;  // in [0, 4)

    static Angle quarter(int k);
    static Angle parse(const std::string &text);
    static Angle from_radians(double t);
    std::string str() const;
};

enum class ResourceKind { GHZ, Plus, Stabilizers, Amplitudes };

struct Resource {
    ResourceKind kind = ResourceKind::GHZ;
    std::vector<PauliOperator> stabilizers;          // +1 eigenstate of each
    std::vector<std::complex<double>> amplitudes;    // qubit j is bit j of the index
};

enum class Backend { Auto, Statevector, Stabilizer };

struct MbqcSpec {
    uint32_t n = 0;
    Resource resource;
    /// angles[i][q]: direction measured on qubit i when its basis bit is q.
    std::vector<std::array<Angle, 2>> angles;
    std::vector<std::vector<uint8_t>> Z;  // k x n
    std::vector<std::vector<uint8_t>> T;  // n x n, strictly lower triangular
    std::vector<std::vector<uint8_t>> S;  // n x m
    /// Probability of flipping the recorded outcome of each qubit.
    std::vector<double> flip_prob;

    uint32_t inputs() const {
        return S.empty() ? 0 : static_cast<uint32_t>(S[0].size());
    }
    uint32_t outputs() const {
        return static_cast<uint32_t>(Z.size());
    }
    void check() const;
    bool pauli_angles() const;
};

/// The three-qubit GHZ OR-gate.
MbqcSpec ghz_or_spec();

struct RunRecord {
    std::vector<uint8_t> input;
    std::vector<uint8_t> q;
    std::vector<uint8_t> s;
    std::vector<uint8_t> o;
    Backend backend = Backend::Statevector;
    uint64_t seed = 0;
};

std::string backend_name(Backend b);

RunRecord run(const MbqcSpec &spec, const std::vector<uint8_t> &input, uint64_t seed,
              Backend backend = Backend::Auto);

/// Recomputes o = Z s and q = T s + S i.
bool check_record(const MbqcSpec &spec, const RunRecord &rec);

/// Truth table, index = sum_j i_j 2^{m-1-j} (first input is the most significant bit).
struct BooleanFunction {
    uint32_t m = 0;
    std::vector<uint8_t> table;

    static BooleanFunction from_string(const std::string &bits);
    std::string str() const;
};

struct FunctionTable {
    BooleanFunction f;
    std::vector<double> frequency;      // share of runs agreeing with the majority, per input
    std::vector<uint64_t> ones;         // per qubit: runs with s_i = 1, over all inputs
    uint64_t runs = 0;
};

FunctionTable function_table(const MbqcSpec &spec, uint64_t trials, uint64_t seed = 1,
                             Backend backend = Backend::Auto);

uint64_t nonlinearity(const BooleanFunction &f);

mpq_class contextuality_threshold(const BooleanFunction &f);

/// Observables and state block handed to the parity prover.
struct BridgeScenario {
    std::vector<PauliOperator> observables;
    std::vector<std::pair<PauliOperator, zd>> state;
    /// Measured context per input: the operators multiplied into the output.
    std::vector<std::vector<PauliOperator>> contexts;
};

BridgeScenario ghz_parity_bridge(const MbqcSpec &spec);

/// One equation per input: sum of local values in the context = o(i); unknowns are the local observables.
struct HiddenVariableSystem {
    std::vector<PauliLabel> unknowns;
    ModMatrix A;
    std::vector<zd> b;
};

HiddenVariableSystem hidden_variable_system(const MbqcSpec &spec, const BooleanFunction &o);

}  // namespace ctx
