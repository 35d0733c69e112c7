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

#include "ctx/parity.h"

#include <deque>

#include "ctx/error.h"

namespace ctx {

zd StateData::value_of(const PauliLabel &a) const {
    for (size_t k = 0; k < labels.size(); ++k) {
        if (labels[k] == a) {
            return values[k];
        }
    }
    fail(ErrorKind::InvalidInput, a.str() + " is not in the state label set");
}

StateData make_state_data(const ObservableComplex &cx,
                          const std::vector<std::pair<PauliOperator, zd>> &stabilizers) {
    const uint32_t d = cx.d();
    const uint32_t step = lifted_modulus(d) / d;
    const size_t N = cx.labels().size();
    std::vector<int64_t> value(N, -1);
    value[cx.zero_index()] = 0;
    std::deque<uint32_t> frontier{cx.zero_index()};
    auto assign = [&](uint32_t k, zd v, const std::string &why) {
        if (value[k] < 0) {
            value[k] = v;
            frontier.push_back(k);
        } else if (static_cast<zd>(value[k]) != v) {
            fail(ErrorKind::InconsistentStateData,
                 "eigenvalue data conflict at " + cx.labels()[k].str() + " (" + why + ")");
        }
    };
    for (const auto &[op, k] : stabilizers) {
        auto idx = cx.index_of(op.label);
        if (!idx) {
            fail(ErrorKind::InvalidInput, "stabilizer " + op.label.str() + " is not in E");
        }
        if (op.phase % step != 0) {
            fail(ErrorKind::InvalidInput, "stabilizer phase is not a power of omega");
        }
        // op = omega^p T_a with eigenvalue omega^k, so T_a has omega^{k - p};
        // the active convention rescales T_a by omega^{gamma(a)}.
        zd p = op.phase / step;
        zd v = reduce(static_cast<int64_t>(k) - p + cx.convention().gamma(op.label), d);
        assign(*idx, v, "stated twice");
    }
    // Commuting products of known labels inherit s(a+b) = s(a) + s(b) + beta(a,b).
    while (!frontier.empty()) {
        uint32_t a = frontier.front();
        frontier.pop_front();
        for (uint32_t b = 0; b < N; ++b) {
            if (value[b] < 0 || !cx.commute(a, b)) {
                continue;
            }
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                uint32_t f = *cx.face_index(x, y);
                const Face &fc = cx.faces()[f];
                zd v = reduce(value[x] + value[y] + cx.beta()[f], d);
                assign(fc.sum, v, "product relation");
            }
        }
    }
    StateData st;
    for (uint32_t k = 0; k < N; ++k) {
        if (value[k] >= 0) {
            st.labels.push_back(cx.labels()[k]);
            st.values.push_back(static_cast<zd>(value[k]));
        }
    }
    return st;
}

std::vector<zd> extend_by_zero(const ObservableComplex &cx, const StateData &st) {
    std::vector<zd> s(cx.labels().size(), 0);
    for (size_t k = 0; k < st.labels.size(); ++k) {
        s[cx.label_index(st.labels[k])] = st.values[k];
    }
    return s;
}

std::vector<zd> beta_psi(const ObservableComplex &cx, const StateData &st) {
    std::vector<zd> s = extend_by_zero(cx, st);
    Cochain ds = coboundary(cx, Cochain{1, s});
    std::vector<zd> out(cx.faces().size());
    for (size_t f = 0; f < out.size(); ++f) {
        out[f] = add_mod(cx.beta()[f], ds.values[f], cx.d());
    }
    return out;
}

namespace {

ModMatrix face_equations(const ObservableComplex &cx) {
    ModMatrix m(0, cx.labels().size(), cx.d());
    for (const Face &f : cx.faces()) {
        m.append_row({{f.a, 1}, {f.b, 1}, {f.sum, cx.d() - 1}});
    }
    return m;
}

}  // namespace

Verdict check_state_independent(const ObservableComplex &cx) {
    const uint32_t d = cx.d();
    ModMatrix A = face_equations(cx);
    std::vector<zd> b(cx.faces().size());
    for (size_t f = 0; f < b.size(); ++f) {
        b[f] = neg_mod(cx.beta()[f], d);
    }
    SolveResult r = solve(A, b);
    Verdict v;
    if (r.feasible) {
        v.assignment = std::move(r.solution);
        if (!is_consistent(cx, v.assignment)) {
            fail(ErrorKind::InvalidInput, "internal: assignment failed the face check");
        }
        return v;
    }
    v.contextual = true;
    v.certificate = r.certificate;
    for (uint32_t f = 0; f < r.certificate.size(); ++f) {
        if (r.certificate[f]) {
            v.witness.add(f, r.certificate[f], d);
        }
    }
    v.witness_value = witness_value(cx, v.witness);
    if (!verify_witness(cx, v.witness)) {
        fail(ErrorKind::InvalidInput, "internal: certificate did not yield a 2-cycle witness");
    }
    return v;
}

Verdict check_state_dependent(const ObservableComplex &cx, const StateData &st) {
    const uint32_t d = cx.d();
    RelativeComplex rel(cx, st.labels);
    std::vector<zd> bpsi = beta_psi(cx, st);
    for (uint32_t f = 0; f < cx.faces().size(); ++f) {
        if (rel.face_in_sub(f) && bpsi[f] != 0) {
            fail(ErrorKind::InconsistentStateData, "beta_psi does not vanish inside E_psi");
        }
    }
    ModMatrix A = rel.coboundary1_matrix();
    std::vector<zd> b;
    b.reserve(rel.faces().size());
    for (uint32_t f : rel.faces()) {
        b.push_back(neg_mod(bpsi[f], d));
    }
    SolveResult r = solve(A, b);
    Verdict v;
    v.relative = true;
    if (r.feasible) {
        v.assignment = extend_by_zero(cx, st);
        for (size_t k = 0; k < rel.edges().size(); ++k) {
            v.assignment[rel.edges()[k]] = r.solution[k];
        }
        if (!is_consistent(cx, v.assignment, &st)) {
            fail(ErrorKind::InvalidInput, "internal: relative assignment failed the face check");
        }
        return v;
    }
    v.contextual = true;
    v.certificate = r.certificate;
    for (size_t k = 0; k < r.certificate.size(); ++k) {
        if (r.certificate[k]) {
            v.witness.add(rel.faces()[k], r.certificate[k], d);
        }
    }
    v.witness_value = witness_value(cx, v.witness, &st);
    if (!verify_witness(cx, v.witness, &st)) {
        fail(ErrorKind::InvalidInput, "internal: certificate did not yield a relative 2-cycle");
    }
    return v;
}

bool is_consistent(const ObservableComplex &cx, const std::vector<zd> &s, const StateData *st) {
    const uint32_t d = cx.d();
    if (s.size() != cx.labels().size()) {
        return false;
    }
    if (s[cx.zero_index()] != 0) {
        return false;
    }
    std::vector<bool> in_sub(cx.labels().size(), false);
    if (st) {
        for (size_t k = 0; k < st->labels.size(); ++k) {
            uint32_t idx = cx.label_index(st->labels[k]);
            in_sub[idx] = true;
            if (s[idx] != st->values[k] % d) {
                return false;
            }
        }
    }
    for (size_t f = 0; f < cx.faces().size(); ++f) {
        const Face &fc = cx.faces()[f];
        if (in_sub[fc.a] && in_sub[fc.b]) {
            continue;
        }
        zd lhs = reduce(static_cast<int64_t>(s[fc.a]) + s[fc.b] - s[fc.sum], d);
        if (lhs != neg_mod(cx.beta()[f], d)) {
            return false;
        }
    }
    return true;
}

zd witness_value(const ObservableComplex &cx, const Chain &F, const StateData *st) {
    if (!st) {
        return evaluate(beta_cochain(cx), F, cx.d());
    }
    return evaluate(Cochain{2, beta_psi(cx, *st)}, F, cx.d());
}

bool verify_witness(const ObservableComplex &cx, const Chain &F, const StateData *st) {
    if (F.degree != 2) {
        return false;
    }
    for (auto [f, v] : F.terms) {
        (void)v;
        if (f >= cx.faces().size()) {
            return false;
        }
    }
    if (!st) {
        return boundary(cx, F).is_zero() && witness_value(cx, F) != 0;
    }
    RelativeComplex rel(cx, st->labels);
    if (!(rel.project(F) == F)) {
        return false;
    }
    return rel.boundary(F).is_zero() && witness_value(cx, F, st) != 0;
}

std::optional<Chain> homologous(const ObservableComplex &cx, const Chain &F1, const Chain &F2) {
    const uint32_t d = cx.d();
    for (const Chain *F : {&F1, &F2}) {
        if ((F->degree != 2 && !F->is_zero()) || !boundary(cx, Chain{2, F->terms}).is_zero()) {
            fail(ErrorKind::NotACycle, "homologous expects two 2-cycles");
        }
    }
    Chain diff = Chain{2, F1.terms}.plus(Chain{2, F2.terms}.scaled(-1, d), d);
    if (diff.is_zero()) {
        return Chain{3, {}};
    }
    ModMatrix B3 = cx.boundary_matrix(3);
    std::vector<zd> b(cx.faces().size(), 0);
    for (auto [f, v] : diff.terms) {
        b[f] = v;
    }
    std::optional<std::vector<zd>> x;
    if (is_prime(d)) {
        x = solve_prime_wide(B3, b);
    } else {
        SolveResult r = solve(B3, b, SolveOptions{false});
        if (r.feasible) {
            x = std::move(r.solution);
        }
    }
    if (!x) {
        return std::nullopt;
    }
    Chain V{3, {}};
    for (uint32_t k = 0; k < x->size(); ++k) {
        if ((*x)[k]) {
            V.add(k, (*x)[k], d);
        }
    }
    if (!(boundary(cx, V) == diff)) {
        fail(ErrorKind::InvalidInput, "internal: homology solve failed re-verification");
    }
    return V;
}

}  // namespace ctx
