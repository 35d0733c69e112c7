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

#include "ctx/chain_complex.h"
#include "ctx/parity.h"

namespace ctx {

/// g(T_a) = omega^{phi(a)} T_{perm(a)}, both indexed by label position in E.
struct SymmetryElement {
    std::vector<uint32_t> perm;
    std::vector<zd> phi;
    std::string name;

    bool fixes_every_edge() const;
    bool same_action(const SymmetryElement &other) const {
        return perm == other.perm && phi == other.phi;
    }
};

struct Gate {
    std::string name;  // H, S, X, Y, Z, A, CNOT, SWAP
    std::vector<uint32_t> wires;
};

SymmetryElement identity_element(const ObservableComplex &cx);

/// Qubit Clifford circuit acting by conjugation, gates applied in list order.
SymmetryElement from_clifford(const ObservableComplex &cx, const std::vector<Gate> &gates, std::string name = "");

/// Conjugation by the Weyl operator with label p (any d).
SymmetryElement from_pauli(const ObservableComplex &cx, const PauliLabel &p, std::string name = "");

/// Raw table; labels missing from phi get 0. Validated.
SymmetryElement from_table(const ObservableComplex &cx, const std::vector<std::pair<PauliLabel, PauliLabel>> &perm,
                           const std::map<PauliLabel, zd> &phi, std::string name = "");

/// Image of a phased operator under a gate list (exact, qubits only).
PauliOperator conjugate(const PauliOperator &p, const std::vector<Gate> &gates);

/// Throws NotASymmetry unless g is a bijection of E preserving commutation,
/// sums on faces, and phi(a) + phi(b) - phi(a+b) = beta(ga,gb) - beta(a,b).
void validate(const ObservableComplex &cx, const SymmetryElement &g);

/// g after h: perm = g.perm o h.perm, phi(a) = h.phi(a) + g.phi(h a).
SymmetryElement compose(const SymmetryElement &g, const SymmetryElement &h, uint32_t d);

/// Phase function seen from the convention rephased by gamma.
SymmetryElement rephase_element(const ObservableComplex &cx, const SymmetryElement &g,
                                const std::map<PauliLabel, zd> &gamma);

/// s'(a) = s(ga) + phi_g(a).
std::vector<zd> transform_assignment(const std::vector<zd> &s, const SymmetryElement &g, uint32_t d);

/// g acting on a 1-chain.
Chain act_on_edges(const SymmetryElement &g, const Chain &c, uint32_t d);

/// phi_g paired with a 1-chain.
zd phi_on(const SymmetryElement &g, const Chain &c, uint32_t d);

/// Whether g maps E_psi onto itself and keeps s_psi.
bool preserves_state(const ObservableComplex &cx, const SymmetryElement &g, const StateData &st);

/// Finite group of validated elements with quotient Q = G / N by the edge action.
class SymmetryGroup {
   public:
    static SymmetryGroup generate(const ObservableComplex &cx, const std::vector<SymmetryElement> &generators,
                                  size_t cap = 4096);
    /// Subgroup of elements keeping E_psi and s_psi.
    SymmetryGroup stabilizer_of(const ObservableComplex &cx, const StateData &st) const;
    /// Same group with other coset representatives; reps[q] must lie in coset q.
    SymmetryGroup with_section(const std::vector<size_t> &reps) const;

    const std::vector<SymmetryElement> &elements() const {
        return elements_;
    }
    size_t size() const {
        return elements_.size();
    }
    uint32_t d() const {
        return d_;
    }
    size_t num_generators() const {
        return num_generators_;
    }
    std::optional<size_t> find(const SymmetryElement &g) const;
    size_t multiply(size_t i, size_t j) const;
    const std::vector<size_t> &normal_subgroup() const {
        return normal_;
    }
    bool in_normal_subgroup(size_t i) const;

    size_t quotient_order() const {
        return section_.size();
    }
    size_t section(size_t q) const {
        return section_[q];
    }
    size_t coset_of(size_t element) const {
        return coset_[element];
    }
    size_t q_multiply(size_t p, size_t q) const;
    const std::vector<uint32_t> &q_perm(size_t q) const {
        return elements_[section_[q]].perm;
    }

   private:
    void index_structure();

    uint32_t d_ = 2;
    size_t num_generators_ = 0;
    std::vector<SymmetryElement> elements_;
    std::map<std::vector<uint32_t>, size_t> lookup_;
    std::vector<size_t> normal_;
    std::vector<size_t> section_;
    std::vector<size_t> coset_;
    std::map<std::vector<uint32_t>, size_t> q_lookup_;
};

struct SymmetryWitness {
    size_t element = 0;
    Chain face_chain{2, {}};
    Chain boundary{1, {}};
    zd value = 0;
};

struct WitnessSearchOptions {
    size_t budget = 2000000;
    size_t max_terms = 3;
};

/// Checks g (partial f) = partial f and phi_g(partial f) != 0, or the relative
/// version with g required to keep the state data.
bool verify_symmetry_witness(const ObservableComplex &cx, const SymmetryElement &g, const Chain &f,
                             const StateData *st = nullptr);

/// Scans composite faces, then mixes in elementary faces; group elements
/// outside N in group order. Throws BudgetExceeded when the budget runs out.
std::optional<SymmetryWitness> find_symmetry_witness(const SymmetryGroup &G, const ObservableComplex &cx,
                                                     const std::vector<Chain> &composite_faces,
                                                     const StateData *st = nullptr,
                                                     const WitnessSearchOptions &options = {});

struct CocycleClassReport {
    size_t q_order = 0;
    bool relative = false;
    bool cocycle_ok = false;
    bool h1_computed = false;
    bool h1_vanishes = false;
    /// s with phi_{theta(q)}(partial f) = s(q partial f) - s(partial f), when [Phi] = 0.
    std::vector<zd> h1_witness;
    bool sigma_computed = false;
    bool sigma_vanishes = false;
    /// chi(q) realized by phase functions of N.
    bool chi_from_n = false;
    /// chi(q) per coset, indexed by label, zero on E_psi.
    std::vector<std::vector<zd>> chi;
};

CocycleClassReport h1_class(const SymmetryGroup &G, const ObservableComplex &cx, const StateData *st = nullptr,
                            size_t q_cap = 64);
CocycleClassReport sigma_class(const SymmetryGroup &G, const ObservableComplex &cx, const StateData *st = nullptr,
                               size_t q_cap = 64);

/// Homomorphic section theta_hat(q) = theta(q) n_q with phi_{n_q} = chi(q).
/// Returns element indices per coset.
std::vector<size_t> split_section(const SymmetryGroup &G, const ObservableComplex &cx,
                                  const std::vector<std::vector<zd>> &chi, const StateData *st = nullptr);

}  // namespace ctx
