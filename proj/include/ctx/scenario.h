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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctx/chain_complex.h"
#include "ctx/mbqc.h"
#include "ctx/parity.h"
#include "ctx/symmetry.h"

namespace ctx {

using json = nlohmann::ordered_json;

inline constexpr const char *kSchema = "ctx/1";

struct SymmetrySpec {
    enum class Kind { Gates, Pauli, Table };
    Kind kind = Kind::Gates;
    std::string name;
    std::vector<Gate> gates;
    std::string pauli;
    std::vector<std::pair<std::string, std::string>> perm;
    std::map<std::string, zd> phi;
};

/// One summand of a named 2-chain: a context (list of commuting operators) or a single face [a|b].
struct ChainTerm {
    bool is_face = false;
    std::vector<std::string> ops;
    int64_t coeff = 1;
};

struct ScenarioOptions {
    size_t closure_cap = 4096;
    bool volumes = true;
    size_t group_cap = 4096;
    size_t budget = 2000000;
    size_t max_terms = 3;
    size_t q_cap = 64;
};

struct Scenario {
    std::string name;
    uint32_t d = 2;
    uint32_t n = 0;
    std::vector<std::string> observables;
    /// Use every label on n qudits instead of the closure of the observables.
    bool complete = false;
    std::vector<std::pair<std::string, zd>> state;
    std::vector<SymmetrySpec> symmetries;
    bool pauli_symmetries = false;
    std::vector<std::vector<std::string>> contexts;
    std::map<std::string, std::vector<ChainTerm>> chains;
    std::map<std::string, zd> rephase;
    ScenarioOptions options;
    std::optional<MbqcSpec> mbqc;

    static Scenario from_json(const json &j);
    json to_json() const;
};

MbqcSpec mbqc_from_json(const json &j);
json mbqc_to_json(const MbqcSpec &spec);

/// Fills observables, state and contexts from the attached MBQC spec when none are given.
Scenario with_bridge(Scenario sc);

std::vector<PauliLabel> scenario_labels(const Scenario &sc);
ObservableComplex build_complex(const Scenario &sc);
std::optional<StateData> build_state(const Scenario &sc, const ObservableComplex &cx);
std::vector<SymmetryElement> build_symmetries(const Scenario &sc, const ObservableComplex &cx);
SymmetryGroup build_group(const Scenario &sc, const ObservableComplex &cx);
std::vector<Chain> build_contexts(const Scenario &sc, const ObservableComplex &cx);
Chain build_chain(const Scenario &sc, const ObservableComplex &cx, const std::string &name);

// Reports.
json complex_to_json(const ObservableComplex &cx);
/// Rebuilds from labels and gamma, then checks the stored faces and beta agree.
ObservableComplex complex_from_json(const json &j);
json chain_to_json(const ObservableComplex &cx, const Chain &c);
json verdict_to_json(const ObservableComplex &cx, const Verdict &v, const StateData *st = nullptr);
json witness_to_json(const ObservableComplex &cx, const SymmetryGroup &G, const SymmetryWitness &w);
json class_report_to_json(const ObservableComplex &cx, const CocycleClassReport &r);
json run_record_to_json(const RunRecord &r);

// Built-in scenarios.
std::vector<std::string> demo_names();
json demo_document(const std::string &name);
/// "demo:NAME" or a path to a JSON file.
json load_document(const std::string &source);

}  // namespace ctx
