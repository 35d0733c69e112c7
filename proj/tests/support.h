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

#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "ctx/chain_complex.h"
#include "ctx/error.h"
#include "ctx/parity.h"
#include "ctx/pauli.h"
#include "ctx/scenario.h"

namespace ctx::testing {

using cplx = std::complex<double>;

/// Dense square matrix, row-major.
struct Dense {
    size_t dim = 0;
    std::vector<cplx> a;

    explicit Dense(size_t n = 0) : dim(n), a(n * n) {}
    cplx &at(size_t r, size_t c) {
        return a[r * dim + c];
    }
    cplx at(size_t r, size_t c) const {
        return a[r * dim + c];
    }
    static Dense identity(size_t n) {
        Dense m(n);
        for (size_t i = 0; i < n; ++i) {
            m.at(i, i) = 1;
        }
        return m;
    }
};

inline Dense operator*(const Dense &x, const Dense &y) {
    Dense out(x.dim);
    for (size_t i = 0; i < x.dim; ++i) {
        for (size_t k = 0; k < x.dim; ++k) {
            cplx v = x.at(i, k);
            if (v == cplx(0)) {
                continue;
            }
            for (size_t j = 0; j < x.dim; ++j) {
                out.at(i, j) += v * y.at(k, j);
            }
        }
    }
    return out;
}

inline Dense scaled(const Dense &x, cplx s) {
    Dense out = x;
    for (auto &v : out.a) {
        v *= s;
    }
    return out;
}

inline Dense adjoint(const Dense &x) {
    Dense out(x.dim);
    for (size_t i = 0; i < x.dim; ++i) {
        for (size_t j = 0; j < x.dim; ++j) {
            out.at(j, i) = std::conj(x.at(i, j));
        }
    }
    return out;
}

inline Dense kron(const Dense &x, const Dense &y) {
    Dense out(x.dim * y.dim);
    for (size_t i = 0; i < x.dim; ++i) {
        for (size_t j = 0; j < x.dim; ++j) {
            for (size_t k = 0; k < y.dim; ++k) {
                for (size_t l = 0; l < y.dim; ++l) {
                    out.at(i * y.dim + k, j * y.dim + l) = x.at(i, j) * y.at(k, l);
                }
            }
        }
    }
    return out;
}

inline bool near(const Dense &x, const Dense &y, double tol = 1e-9) {
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (std::abs(x.a[i] - y.a[i]) > tol) {
            return false;
        }
    }
    return true;
}

/// If x = lambda * I, returns lambda.
inline std::optional<cplx> scalar_of(const Dense &x, double tol = 1e-9) {
    cplx lam = x.at(0, 0);
    return near(x, scaled(Dense::identity(x.dim), lam), tol) ? std::optional<cplx>(lam) : std::nullopt;
}

inline cplx root_of_unity(int64_t k, uint32_t m) {
    return std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / m);
}

/// zeta^phase (x) X^x Z^z (x) ... with the eta correction, qudit 0 leftmost.
inline Dense pauli_matrix(const PauliOperator &p) {
    const uint32_t d = p.label.d;
    Dense m = Dense::identity(1);
    for (size_t k = 0; k < p.label.num_qudits(); ++k) {
        Dense q(d);
        for (uint32_t j = 0; j < d; ++j) {
            // X^x Z^z |j> = omega^{z j} |j + x>
            q.at((j + p.label.x[k]) % d, j) = root_of_unity(static_cast<int64_t>(p.label.z[k]) * j, d);
        }
        m = kron(m, q);
    }
    const uint32_t D = lifted_modulus(d);
    return scaled(m, root_of_unity(static_cast<int64_t>(p.phase) + eta_phase(p.label), D));
}

inline PauliLabel random_label(std::mt19937_64 &rng, uint32_t n, uint32_t d) {
    PauliLabel a(n, d);
    std::uniform_int_distribution<uint32_t> u(0, d - 1);
    for (uint32_t k = 0; k < n; ++k) {
        a.x[k] = u(rng);
        a.z[k] = u(rng);
    }
    return a;
}

/// Closure of a few random seeds; redraws until the closure fits under cap.
inline std::vector<PauliLabel> random_label_set(std::mt19937_64 &rng, uint32_t n, uint32_t d, size_t cap = 64) {
    for (;;) {
        std::vector<PauliLabel> seeds;
        size_t k = 1 + rng() % 3;
        for (size_t i = 0; i < k; ++i) {
            seeds.push_back(random_label(rng, n, d));
        }
        try {
            return closure(seeds, cap);
        } catch (const Error &) {
        }
    }
}

inline std::map<PauliLabel, zd> random_gamma(std::mt19937_64 &rng, const std::vector<PauliLabel> &labels,
                                             uint32_t d) {
    std::map<PauliLabel, zd> g;
    for (const auto &a : labels) {
        if (!a.is_zero()) {
            g[a] = static_cast<zd>(rng() % d);
        }
    }
    return g;
}

struct Loaded {
    Scenario sc;
    ObservableComplex cx;
    std::optional<StateData> st;
};

inline Loaded load_demo(const std::string &name) {
    Scenario sc = with_bridge(Scenario::from_json(demo_document(name)));
    ObservableComplex cx = build_complex(sc);
    auto st = build_state(sc, cx);
    return {sc, cx, st};
}

}  // namespace ctx::testing
