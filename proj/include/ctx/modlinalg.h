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

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ctx/zmod.h"

namespace ctx {

/// Sparse row-major matrix over Z_d.
class ModMatrix {
   public:
    using Row = std::vector<std::pair<uint32_t, zd>>;

    ModMatrix() = default;
    ModMatrix(size_t rows, size_t cols, uint32_t d);
    static ModMatrix from_dense(const std::vector<std::vector<int64_t>> &entries, size_t cols, uint32_t d);
    static ModMatrix identity(size_t n, uint32_t d);

    size_t rows() const {
        return rows_.size();
    }
    size_t cols() const {
        return cols_;
    }
    uint32_t modulus() const {
        return d_;
    }

    zd get(size_t r, size_t c) const;
    void set(size_t r, size_t c, zd v);
    void add(size_t r, size_t c, int64_t v);
    /// Entries sorted by column, zeros omitted.
    const Row &row(size_t r) const {
        return rows_[r];
    }
    void append_row(Row row);

    std::vector<zd> multiply(const std::vector<zd> &x) const;
    std::vector<zd> left_multiply(const std::vector<zd> &y) const;
    ModMatrix select_rows(const std::vector<size_t> &which) const;
    ModMatrix transpose() const;
    std::vector<zd> dense() const;

   private:
    uint32_t d_ = 2;
    size_t cols_ = 0;
    std::vector<Row> rows_;
};

/// Either x with Ax = b, or y with y^T A = 0 and y^T b != 0. Both re-verified.
struct SolveResult {
    bool feasible = false;
    std::vector<zd> solution;
    std::vector<zd> certificate;
};

struct SolveOptions {
    /// Greedily shrink the certificate support. Best effort, not guaranteed minimal.
    bool minimize_certificate = true;
};

SolveResult solve(const ModMatrix &A, const std::vector<zd> &b, const SolveOptions &options = {});

/// Generators of {x : Ax = 0}, torsion directions included.
std::vector<std::vector<zd>> kernel(const ModMatrix &A);

/// Unimodular diagonalization U A V = D over Z_d. Each pivot divides d.
struct Diagonalization {
    uint32_t d = 2;
    size_t rows = 0;
    size_t cols = 0;
    std::vector<zd> pivots;
    std::vector<zd> V;  // cols x cols, row-major

    /// Row t of U, rebuilt from the recorded row operations.
    std::vector<zd> u_row(size_t t) const;
    /// U b.
    std::vector<zd> apply_u(const std::vector<zd> &b) const;

    struct RowOp {
        enum Kind { Swap, AddMul, Mix, Scale } kind;
        uint32_t i, j;
        zd a, b, c, e;
    };
    std::vector<RowOp> ops;
};

Diagonalization diagonalize(const ModMatrix &A);

/// Integer Smith normal form U A V = D, with d_1 | d_2 | ... on the diagonal.
struct SmithForm {
    std::vector<std::vector<mpz_class>> U;
    std::vector<std::vector<mpz_class>> D;
    std::vector<std::vector<mpz_class>> V;
    std::vector<mpz_class> invariants;
};

SmithForm smith_normal_form(const std::vector<std::vector<mpz_class>> &A);

std::vector<std::vector<mpz_class>> mat_mul(const std::vector<std::vector<mpz_class>> &A,
                                            const std::vector<std::vector<mpz_class>> &B);
mpz_class determinant(std::vector<std::vector<mpz_class>> A);

/// Solve over a prime field by dense elimination on the rows of [A | b].
/// Cheap for many columns and moderate row counts; no certificate.
std::optional<std::vector<zd>> solve_prime_wide(const ModMatrix &A, const std::vector<zd> &b);

}  // namespace ctx
