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


#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ctx/modlinalg.h"

namespace ctx {
namespace {

using Vec = std::vector<zd>;

ModMatrix random_matrix(std::mt19937_64 &rng, size_t r, size_t c, uint32_t d, double density = 0.6) {
    ModMatrix A(r, c, d);
    std::uniform_int_distribution<uint32_t> u(1, d - 1);
    std::bernoulli_distribution nz(density);
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < c; ++j) {
            if (nz(rng)) {
                A.set(i, j, u(rng));
            }
        }
    }
    return A;
}

Vec column(const ModMatrix &A, size_t j) {
    Vec v(A.rows());
    for (size_t i = 0; i < A.rows(); ++i) {
        v[i] = A.get(i, j);
    }
    return v;
}

/// Subgroup of Z_d^r generated by the given vectors, by breadth-first closure.
std::set<Vec> generated(const std::vector<Vec> &gens, size_t r, uint32_t d) {
    std::set<Vec> seen{Vec(r, 0)};
    std::vector<Vec> frontier{Vec(r, 0)};
    while (!frontier.empty()) {
        Vec v = frontier.back();
        frontier.pop_back();
        for (const Vec &g : gens) {
            Vec w(r);
            for (size_t i = 0; i < r; ++i) {
                w[i] = add_mod(v[i], g[i], d);
            }
            if (seen.insert(w).second) {
                frontier.push_back(w);
            }
        }
    }
    return seen;
}

uint64_t ipow(uint64_t b, size_t e) {
    uint64_t r = 1;
    while (e--) {
        r *= b;
    }
    return r;
}

TEST(Solve, AgreesWithColumnSpanOracle) {
    std::mt19937_64 rng(2024);
    for (uint32_t d : {2u, 3u, 4u, 6u}) {
        for (int trial = 0; trial < 80; ++trial) {
            size_t r = 1 + rng() % 5, c = 1 + rng() % 12;
            ModMatrix A = random_matrix(rng, r, c, d);
            std::vector<Vec> cols;
            for (size_t j = 0; j < c; ++j) {
                cols.push_back(column(A, j));
            }
            auto span = generated(cols, r, d);
            Vec b(r);
            for (auto &x : b) {
                x = rng() % d;
            }
            SolveResult res = solve(A, b);
            ASSERT_EQ(res.feasible, span.count(b) == 1) << "d=" << d;
            if (res.feasible) {
                EXPECT_EQ(A.multiply(res.solution), b);
            } else {
                Vec yA = A.left_multiply(res.certificate);
                EXPECT_EQ(yA, Vec(c, 0));
                uint64_t yb = 0;
                for (size_t i = 0; i < r; ++i) {
                    yb += static_cast<uint64_t>(res.certificate[i]) * b[i];
                }
                EXPECT_NE(yb % d, 0u);
            }
        }
    }
}

TEST(Kernel, GeneratesFullKernel) {
    std::mt19937_64 rng(99);
    for (uint32_t d : {2u, 3u, 4u}) {
        for (int trial = 0; trial < 40; ++trial) {
            size_t r = 1 + rng() % 4, c = 1 + rng() % (d == 2 ? 10 : 6);
            ModMatrix A = random_matrix(rng, r, c, d);
            auto K = kernel(A);
            for (const Vec &k : K) {
                EXPECT_EQ(A.multiply(k), Vec(r, 0));
            }
            std::vector<Vec> cols;
            for (size_t j = 0; j < c; ++j) {
                cols.push_back(column(A, j));
            }
            // |ker A| * |im A| = d^c
            uint64_t image = generated(cols, r, d).size();
            uint64_t ker = generated(K, c, d).size();
            EXPECT_EQ(ker * image, ipow(d, c)) << "d=" << d;
        }
    }
}

TEST(Diagonalize, ReproducesMatrix) {
    std::mt19937_64 rng(5);
    for (uint32_t d : {2u, 4u, 6u, 9u}) {
        for (int trial = 0; trial < 30; ++trial) {
            size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
            ModMatrix A = random_matrix(rng, r, c, d);
            Diagonalization D = diagonalize(A);
            for (zd p : D.pivots) {
                EXPECT_EQ(d % p, 0u);
            }
            // (U A V)_{t,j} = pivot_t if t == j else 0
            for (size_t t = 0; t < r; ++t) {
                Vec u = D.u_row(t);
                Vec uA = A.left_multiply(u);
                for (size_t j = 0; j < c; ++j) {
                    uint64_t acc = 0;
                    for (size_t k = 0; k < c; ++k) {
                        acc += static_cast<uint64_t>(uA[k]) * D.V[k * c + j];
                    }
                    zd want = (t == j && t < D.pivots.size()) ? D.pivots[t] % d : 0;
                    EXPECT_EQ(acc % d, want);
                }
            }
        }
    }
}

using ZMat = std::vector<std::vector<mpz_class>>;

TEST(Smith, TwoByTwoExample) {
    ZMat A = {{2, 1}, {0, 2}};
    SmithForm S = smith_normal_form(A);
    ASSERT_EQ(S.invariants.size(), 2u);
    EXPECT_EQ(S.invariants[0], 1);
    EXPECT_EQ(S.invariants[1], 4);
    EXPECT_EQ(mat_mul(mat_mul(S.U, A), S.V), S.D);
}

TEST(Smith, InvariantUnderUnimodularChange) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> u(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        size_t r = 2 + rng() % 3, c = 2 + rng() % 3;
        ZMat A(r, std::vector<mpz_class>(c));
        for (auto &row : A) {
            for (auto &x : row) {
                x = u(rng);
            }
        }
        // Unimodular P: product of elementary row operations.
        ZMat P(r, std::vector<mpz_class>(r, 0));
        for (size_t i = 0; i < r; ++i) {
            P[i][i] = 1;
        }
        for (int k = 0; k < 6; ++k) {
            size_t i = rng() % r, j = rng() % r;
            if (i != j) {
                int m = u(rng);
                for (size_t t = 0; t < r; ++t) {
                    P[i][t] += m * P[j][t];
                }
            }
        }
        EXPECT_EQ(abs(determinant(P)), 1);
        SmithForm S1 = smith_normal_form(A), S2 = smith_normal_form(mat_mul(P, A));
        EXPECT_EQ(S1.invariants, S2.invariants);
        EXPECT_EQ(mat_mul(mat_mul(S1.U, A), S1.V), S1.D);
        for (size_t i = 0; i + 1 < S1.invariants.size(); ++i) {
            if (S1.invariants[i + 1] != 0) {
                EXPECT_EQ(S1.invariants[i + 1] % S1.invariants[i], 0);
            }
        }
    }
}

TEST(Solve, PrimeWideMatchesSolve) {
    std::mt19937_64 rng(31);
    for (uint32_t d : {2u, 3u, 5u}) {
        for (int trial = 0; trial < 40; ++trial) {
            ModMatrix A = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 20, d, 0.3);
            Vec b(A.rows());
            for (auto &x : b) {
                x = rng() % d;
            }
            auto wide = solve_prime_wide(A, b);
            EXPECT_EQ(wide.has_value(), solve(A, b).feasible);
            if (wide) {
                EXPECT_EQ(A.multiply(*wide), b);
            }
        }
    }
}

}  // namespace
}  // namespace ctx
