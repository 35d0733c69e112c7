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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ctx/modlinalg.h"
#include "ctx/pauli.h"

namespace ctx {

/// Formal Z_d-combination of cells of one degree, keyed by cell index.
struct Chain {
    int degree = 0;
    std::map<uint32_t, zd> terms;

    bool is_zero() const {
        return terms.empty();
    }
    void add(uint32_t cell, int64_t coeff, uint32_t d);
    Chain plus(const Chain &other, uint32_t d) const;
    Chain scaled(int64_t k, uint32_t d) const;
    bool operator==(const Chain &other) const {
        return degree == other.degree && terms == other.terms;
    }
};

/// Z_d-valued function on every cell of one degree.
struct Cochain {
    int degree = 0;
    std::vector<zd> values;
};

struct Face {
    uint32_t a, b, sum;
};

struct Volume {
    uint32_t a, b, c;
    /// Faces [b|c], [a+b|c], [a|b+c], [a|b] entering the boundary with signs + - + -.
    std::array<uint32_t, 4> faces;
};

struct BuildOptions {
    bool volumes = true;
    size_t volume_cap = 20000000;
};

/// Bar-type complex: one vertex, an edge per label, a face per ordered commuting
/// pair, a volume per ordered pairwise-commuting triple. Immutable once built.
class ObservableComplex {
   public:
    static ObservableComplex build(std::vector<PauliLabel> labels, const PhaseConvention &conv = {},
                                   const BuildOptions &options = {});

    uint32_t d() const {
        return d_;
    }
    uint32_t num_qudits() const {
        return n_;
    }
    const PhaseConvention &convention() const {
        return conv_;
    }

    const std::vector<PauliLabel> &labels() const {
        return labels_;
    }
    const std::vector<Face> &faces() const {
        return faces_;
    }
    const std::vector<Volume> &volumes() const {
        return volumes_;
    }
    bool has_volumes() const {
        return with_volumes_;
    }
    /// beta per face under the active convention.
    const std::vector<zd> &beta() const {
        return beta_;
    }
    size_t num_cells(int degree) const;

    std::optional<uint32_t> index_of(const PauliLabel &a) const;
    uint32_t label_index(const PauliLabel &a) const;
    bool commute(uint32_t a, uint32_t b) const;
    std::optional<uint32_t> face_index(uint32_t a, uint32_t b) const;
    uint32_t zero_index() const {
        return 0;
    }

    /// Matrix of the boundary C_k -> C_{k-1}: rows (k-1)-cells, columns k-cells.
    ModMatrix boundary_matrix(int k) const;

    /// Same complex with beta recomputed for conv composed with gamma.
    ObservableComplex rephased(const std::map<PauliLabel, zd> &gamma) const;

   private:
    uint32_t d_ = 2;
    uint32_t n_ = 0;
    PhaseConvention conv_;
    std::vector<PauliLabel> labels_;
    std::unordered_map<PauliLabel, uint32_t, PauliLabelHash> index_;
    std::vector<uint64_t> commute_bits_;
    std::vector<uint32_t> face_start_;
    std::vector<Face> faces_;
    std::vector<zd> beta_;
    std::vector<Volume> volumes_;
    bool with_volumes_ = false;
};

Chain boundary(const ObservableComplex &cx, const Chain &c);
Cochain coboundary(const ObservableComplex &cx, const Cochain &phi);
zd evaluate(const Cochain &phi, const Chain &c, uint32_t d);
Cochain beta_cochain(const ObservableComplex &cx);
Chain face_chain(const ObservableComplex &cx, const PauliLabel &a, const PauliLabel &b, int64_t coeff = 1);
/// [o1|o2] + [o1+o2|o3] + ... : a chain whose boundary is o1 + ... + ok - (o1 + ... + ok).
Chain context_chain(const ObservableComplex &cx, const std::vector<PauliLabel> &ops);

/// Quotient C_*(E) / C_*(E_sub). Chains keep parent cell indices.
class RelativeComplex {
   public:
    RelativeComplex(const ObservableComplex &parent, const std::vector<PauliLabel> &sub);

    const ObservableComplex &parent() const {
        return *parent_;
    }
    bool edge_in_sub(uint32_t e) const {
        return in_sub_[e];
    }
    bool face_in_sub(uint32_t f) const;
    bool volume_in_sub(uint32_t v) const;
    /// Surviving cells as parent indices.
    const std::vector<uint32_t> &edges() const {
        return edges_;
    }
    const std::vector<uint32_t> &faces() const {
        return faces_;
    }
    const std::vector<uint32_t> &volumes() const {
        return volumes_;
    }
    /// Position among surviving cells, if the parent cell survives.
    std::optional<uint32_t> position(int degree, uint32_t parent_cell) const;

    Chain boundary(const Chain &c) const;
    /// Drops sub-complex cells from a parent chain.
    Chain project(const Chain &c) const;
    /// Surviving faces x surviving edges.
    ModMatrix coboundary1_matrix() const;

   private:
    const ObservableComplex *parent_;
    std::vector<bool> in_sub_;
    std::vector<uint32_t> edges_, faces_, volumes_;
    std::vector<int32_t> edge_pos_, face_pos_, volume_pos_;
};

}  // namespace ctx
