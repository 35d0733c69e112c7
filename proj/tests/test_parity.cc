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

#include "ctx/error.h"
#include "support.h"

namespace ctx {
namespace {

using testing::cplx;
using testing::Dense;

/// beta(a,b) read off dense matrices: T_{a+b} = omega^k T_a T_b.
zd dense_beta(const PauliLabel &a, const PauliLabel &b) {
    const uint32_t d = a.d;
    Dense ab = testing::pauli_matrix({a, 0}) * testing::pauli_matrix({b, 0});
    Dense s = testing::pauli_matrix({a + b, 0});
    for (zd k = 0; k < d; ++k) {
        if (testing::near(s, testing::scaled(ab, testing::root_of_unity(k, d)))) {
            return k;
        }
    }
    ADD_FAILURE() << "no power of omega relates the product";
    return 0;
}

/// Exhaustive search for s: E -> Z_d with s(a) + s(b) - s(a+b) = -beta(a,b) on every commuting pair.
bool brute_force_consistent(const std::vector<PauliLabel> &L) {
    const uint32_t d = L[0].d;
    struct Eq {
        size_t a, b, s;
        zd beta;
    };
    std::vector<Eq> eqs;
    for (size_t i = 0; i < L.size(); ++i) {
        for (size_t j = 0; j < L.size(); ++j) {
            if (commutes(L[i], L[j])) {
                size_t k = std::find(L.begin(), L.end(), L[i] + L[j]) - L.begin();
                eqs.push_back({i, j, k, dense_beta(L[i], L[j])});
            }
        }
    }
    std::vector<zd> s(L.size(), 0);
    uint64_t total = 1;
    for (size_t i = 1; i < L.size(); ++i) {
        total *= d;
    }
    for (uint64_t code = 0; code < total; ++code) {
        uint64_t c = code;
        for (size_t i = 1; i < L.size(); ++i) {
            s[i] = c % d;
            c /= d;
        }
        bool ok = true;
        for (const auto &e : eqs) {
            if (reduce(static_cast<int64_t>(s[e.a]) + s[e.b] - s[e.s] + e.beta, d) != 0) {
                ok = false;
                break;
            }
        }
        if (ok) {
            return true;
        }
    }
    return false;
}

TEST(Parity, MerminSquareIsContextual) {
    auto L = testing::load_demo("mermin-square");
    Verdict v = check_state_independent(L.cx);
    ASSERT_TRUE(v.contextual);
    EXPECT_EQ(v.witness.terms.size(), 6u);
    EXPECT_TRUE(boundary(L.cx, v.witness).is_zero());
    EXPECT_EQ(v.witness_value, 1u);
    EXPECT_TRUE(verify_witness(L.cx, v.witness));
    EXPECT_EQ(witness_value(L.cx, build_chain(L.sc, L.cx, "square")), 1u);
}

TEST(Parity, MerminSquareHasNoValueAssignmentByEnumeration) {
    // Each row and column multiplies to +-I; no choice of +-1 outcomes matches all six signs.
    auto L = testing::load_demo("mermin-square");
    std::vector<std::string> obs = L.sc.observables;
    std::vector<std::pair<std::vector<size_t>, int>> ctx_sign;
    for (const auto &c : L.sc.contexts) {
        Dense prod = Dense::identity(4);
        std::vector<size_t> idx;
        for (const auto &o : c) {
            prod = prod * testing::pauli_matrix(parse_pauli(o, 2));
            idx.push_back(std::find(obs.begin(), obs.end(), o) - obs.begin());
        }
        auto lam = testing::scalar_of(prod);
        ASSERT_TRUE(lam.has_value());
        ctx_sign.push_back({idx, lam->real() > 0 ? 0 : 1});
    }
    int consistent = 0;
    for (uint32_t s = 0; s < 512; ++s) {
        bool ok = true;
        for (const auto &[idx, sign] : ctx_sign) {
            int parity = 0;
            for (size_t i : idx) {
                parity ^= (s >> i) & 1;
            }
            ok &= parity == sign;
        }
        consistent += ok;
    }
    EXPECT_EQ(consistent, 0);
}

TEST(Parity, MerminStarOnlyNonlocalContextCarriesBeta) {
    auto L = testing::load_demo("mermin-star");
    Verdict v = check_state_independent(L.cx);
    EXPECT_TRUE(v.contextual);
    Chain star = build_chain(L.sc, L.cx, "star");
    EXPECT_TRUE(boundary(L.cx, star).is_zero());
    EXPECT_EQ(witness_value(L.cx, star), 1u);
    int carrying = 0;
    for (const auto &c : L.sc.contexts) {
        std::vector<PauliLabel> ops;
        Dense prod = Dense::identity(8);
        for (const auto &o : c) {
            ops.push_back(parse_pauli(o, 2).label);
            prod = prod * testing::pauli_matrix(parse_pauli(o, 2));
        }
        // Closing the context with its last member: the face sum pairs beta with the product sign.
        std::vector<PauliLabel> open(ops.begin(), ops.end() - 1);
        zd val = witness_value(L.cx, context_chain(L.cx, open));
        auto lam = testing::scalar_of(prod);
        ASSERT_TRUE(lam.has_value());
        EXPECT_EQ(val == 1, lam->real() < 0);
        carrying += val;
    }
    EXPECT_EQ(carrying, 1);
}

TEST(Parity, VerdictMatchesBruteForceOnSmallSets) {
    std::mt19937_64 rng(12);
    int checked = 0, contextual = 0;
    while (checked < 40) {
        uint32_t n = 1 + rng() % 2, d = 2 + rng() % 3;
        auto L = testing::random_label_set(rng, n, d, 16);
        double work = std::pow(static_cast<double>(d), static_cast<double>(L.size() - 1));
        if (work > 50000) {
            continue;
        }
        ++checked;
        ObservableComplex cx = ObservableComplex::build(L);
        Verdict v = check_state_independent(cx);
        EXPECT_EQ(v.contextual, !brute_force_consistent(cx.labels()));
        if (v.contextual) {
            ++contextual;
            EXPECT_TRUE(verify_witness(cx, v.witness));
        } else {
            EXPECT_TRUE(is_consistent(cx, v.assignment));
        }
    }
    // The Mermin square closure itself is too large for this loop; include it directly.
    auto sq = testing::load_demo("mermin-square");
    EXPECT_FALSE(brute_force_consistent(sq.cx.labels()));
}

TEST(Parity, VerdictInvariantUnderRephasing) {
    std::mt19937_64 rng(13);
    for (const char *name : {"mermin-square", "mermin-star"}) {
        auto L = testing::load_demo(name);
        for (int t = 0; t < 20; ++t) {
            ObservableComplex rx = L.cx.rephased(testing::random_gamma(rng, L.cx.labels(), 2));
            Verdict v = check_state_independent(rx);
            EXPECT_TRUE(v.contextual);
            EXPECT_TRUE(verify_witness(rx, v.witness));
        }
    }
}

TEST(Parity, LocalObservablesAreNoncontextual) {
    std::vector<PauliLabel> seed;
    for (const char *s : {"XI", "IX", "ZI"}) {
        seed.push_back(parse_pauli(s, 2).label);
    }
    ObservableComplex cx = ObservableComplex::build(closure(seed));
    Verdict v = check_state_independent(cx);
    EXPECT_FALSE(v.contextual);
    EXPECT_TRUE(is_consistent(cx, v.assignment));
}

Dense ghz_projector() {
    Dense psi(8);
    psi.at(0, 0) = psi.at(0, 7) = psi.at(7, 0) = psi.at(7, 7) = 0.5;
    return psi;
}

TEST(ParityStateDependent, GhzStarIsContextual) {
    auto L = testing::load_demo("ghz-sd-star");
    ASSERT_TRUE(L.st.has_value());
    Verdict v = check_state_dependent(L.cx, *L.st);
    ASSERT_TRUE(v.contextual);
    EXPECT_TRUE(verify_witness(L.cx, v.witness, &*L.st));
    Chain four = build_chain(L.sc, L.cx, "four");
    EXPECT_EQ(L.sc.chains.at("four").size(), 4u);
    EXPECT_TRUE(verify_witness(L.cx, four, &*L.st));
    EXPECT_EQ(witness_value(L.cx, four, &*L.st), 1u);
}

TEST(ParityStateDependent, StateValuesMatchGhzExpectations) {
    auto L = testing::load_demo("ghz-sd-star");
    Dense P = ghz_projector();
    for (size_t k = 0; k < L.st->labels.size(); ++k) {
        Dense M = testing::pauli_matrix({L.st->labels[k], 0});
        cplx e = 0;
        Dense MP = M * P;
        for (size_t i = 0; i < 8; ++i) {
            e += MP.at(i, i);
        }
        EXPECT_NEAR(e.real(), L.st->values[k] ? -1.0 : 1.0, 1e-9) << L.st->labels[k].str();
    }
}

TEST(ParityStateDependent, FreeLocalEdgesAdmitNoAssignment) {
    // Six local observables, four contexts each closing on a GHZ stabilizer.
    auto L = testing::load_demo("ghz-sd-star");
    const char *locals[] = {"XII", "IXI", "IIX", "YII", "IYI", "IIY"};
    Dense P = ghz_projector();
    int consistent = 0;
    for (uint32_t s = 0; s < 64; ++s) {
        bool ok = true;
        for (const auto &c : L.sc.contexts) {
            Dense prod = Dense::identity(8);
            int parity = 0;
            for (size_t k = 0; k + 1 < c.size(); ++k) {
                prod = prod * testing::pauli_matrix(parse_pauli(c[k], 2));
                size_t i = std::find(std::begin(locals), std::end(locals), c[k]) - std::begin(locals);
                parity ^= (s >> i) & 1;
            }
            Dense PP = prod * P;
            cplx e = 0;
            for (size_t i = 0; i < 8; ++i) {
                e += PP.at(i, i);
            }
            ok &= (e.real() > 0 ? 0 : 1) == parity;
        }
        consistent += ok;
    }
    EXPECT_EQ(consistent, 0);
}

TEST(ParityStateDependent, ConflictingStateDataIsRejected) {
    auto L = testing::load_demo("ghz-sd-star");
    std::vector<std::pair<PauliOperator, zd>> bad = {
        {parse_pauli("XXX", 2), 0}, {parse_pauli("XYY", 2), 1}, {parse_pauli("YXY", 2), 1}, {parse_pauli("YYX", 2), 0}};
    EXPECT_THROW(make_state_data(L.cx, bad), Error);
    // All four +1 is impossible: the product of the four operators is -I.
    std::vector<std::pair<PauliOperator, zd>> plus;
    for (const char *o : {"XXX", "XYY", "YXY", "YYX"}) {
        plus.push_back({parse_pauli(o, 2), 0});
    }
    EXPECT_THROW(make_state_data(L.cx, plus), Error);
}

TEST(ParityStateDependent, VerdictInvariantUnderRephasing) {
    std::mt19937_64 rng(21);
    auto L = testing::load_demo("ghz-sd-star");
    for (int t = 0; t < 10; ++t) {
        ObservableComplex rx = L.cx.rephased(testing::random_gamma(rng, L.cx.labels(), 2));
        auto st = build_state(L.sc, rx);
        Verdict v = check_state_dependent(rx, *st);
        EXPECT_TRUE(v.contextual);
        EXPECT_EQ(witness_value(rx, build_chain(L.sc, rx, "four"), &*st), 1u);
    }
}

}  // namespace
}  // namespace ctx
