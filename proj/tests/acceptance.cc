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


// Acceptance runner: one PASS/FAIL line per criterion. Exit status is zero when
// the set of failing criteria equals the set given with --expect-fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>

#include "ctx/mbqc.h"
#include "ctx/symmetry.h"
#include "support.h"

using namespace ctx;
using testing::cplx;
using testing::Dense;

namespace {

constexpr double kFastMs = 1000.0;
constexpr double kHomologyMs = 30000.0;
constexpr double kChi2Critical = 10.828;  // one degree of freedom, p = 0.001
constexpr uint64_t kRuns = 10000;
constexpr int kScenarios = 100;
constexpr int kRephasings = 100;

struct Result {
    bool pass = true;
    std::ostringstream note;
    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            note << " [failed: " << what << "]";
        }
    }
};

double ms_since(std::chrono::steady_clock::time_point t) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

/// Sign of the product of a context's operators on the GHZ state (or the identity when psi is null).
int product_sign(const std::vector<std::string> &ops, uint32_t n, const Dense *psi) {
    Dense prod = Dense::identity(size_t{1} << n);
    for (const auto &o : ops) {
        prod = prod * testing::pauli_matrix(parse_pauli(o, 2));
    }
    cplx v;
    if (psi) {
        Dense pp = prod * *psi;
        for (size_t i = 0; i < pp.dim; ++i) {
            v += pp.at(i, i);
        }
    } else {
        v = *testing::scalar_of(prod);
    }
    return v.real() > 0 ? 0 : 1;
}

/// Counts +-1 assignments to `vars` matching every context sign (contexts list their unknowns first).
int count_assignments(const std::vector<std::string> &vars, const std::vector<std::vector<std::string>> &ctxs,
                      const std::vector<int> &signs) {
    int count = 0;
    for (uint32_t s = 0; s < (1u << vars.size()); ++s) {
        bool ok = true;
        for (size_t c = 0; c < ctxs.size() && ok; ++c) {
            int parity = 0;
            for (const auto &o : ctxs[c]) {
                size_t i = std::find(vars.begin(), vars.end(), o) - vars.begin();
                if (i < vars.size()) {
                    parity ^= (s >> i) & 1;
                }
            }
            ok = parity == signs[c];
        }
        count += ok;
    }
    return count;
}

Dense ghz_projector() {
    Dense psi(8);
    psi.at(0, 0) = psi.at(0, 7) = psi.at(7, 0) = psi.at(7, 7) = 0.5;
    return psi;
}

size_t element_named(const SymmetryGroup &G, const std::string &name) {
    for (size_t i = 0; i < G.size(); ++i) {
        if (G.elements()[i].name == name) {
            return i;
        }
    }
    fail(ErrorKind::InvalidInput, "no element " + name);
}

void c1(Result &r) {
    auto t = std::chrono::steady_clock::now();
    auto L = testing::load_demo("mermin-square");
    Verdict v = check_state_independent(L.cx);
    double ms = ms_since(t);
    r.require(v.contextual, "contextual");
    r.require(v.witness.terms.size() == 6 && boundary(L.cx, v.witness).is_zero(), "six-face 2-cycle");
    r.require(v.witness_value == 1 && verify_witness(L.cx, v.witness), "beta(witness) = 1");
    std::vector<int> signs;
    for (const auto &c : L.sc.contexts) {
        signs.push_back(product_sign(c, 2, nullptr));
    }
    int consistent = count_assignments(L.sc.observables, L.sc.contexts, signs);
    r.require(consistent == 0, "enumeration of 2^9 assignments");
    r.require(ms < kFastMs, "runtime");
    r.note << " faces=" << v.witness.terms.size() << " beta=" << v.witness_value << " consistent_of_512="
           << consistent << " time_ms=" << ms;
}

void c2(Result &r) {
    auto t = std::chrono::steady_clock::now();
    auto L = testing::load_demo("mermin-star");
    Verdict v = check_state_independent(L.cx);
    Chain star = build_chain(L.sc, L.cx, "star");
    zd b = witness_value(L.cx, star);
    double ms = ms_since(t);
    r.require(v.contextual, "contextual");
    r.require(boundary(L.cx, star).is_zero() && b == 1, "beta(F_star) = 1");
    int carrying = 0;
    bool nonlocal_carries = false;
    for (const auto &c : L.sc.contexts) {
        std::vector<PauliLabel> open;
        for (size_t k = 0; k + 1 < c.size(); ++k) {
            open.push_back(parse_pauli(c[k], 2).label);
        }
        zd val = witness_value(L.cx, context_chain(L.cx, open));
        carrying += val;
        if (val == 1) {
            nonlocal_carries = c[0] == "XXX" && product_sign(c, 3, nullptr) == 1;
        }
    }
    r.require(carrying == 1 && nonlocal_carries, "unique carrying context is XXX.XYY.YXY.YYX = -I");
    r.require(ms < kFastMs, "runtime");
    r.note << " beta(F_star)=" << b << " carrying_contexts=" << carrying << " time_ms=" << ms;
}

void c3(Result &r) {
    auto t = std::chrono::steady_clock::now();
    auto L = testing::load_demo("square-star");
    Chain sq = build_chain(L.sc, L.cx, "square"), star = build_chain(L.sc, L.cx, "star");
    auto V = homologous(L.cx, sq, star);
    double ms = ms_since(t);
    zd bs = witness_value(L.cx, sq), bt = witness_value(L.cx, star);
    r.require(L.cx.labels().size() == 64, "|E| = 64");
    r.require(V.has_value(), "homologous returns V");
    if (V) {
        r.require(boundary(L.cx, *V) == sq.plus(star.scaled(-1, 2), 2), "boundary(V) = F_square - F_star");
    }
    r.require(bs == bt, "beta(F_square) = beta(F_star)");
    r.require(ms < kHomologyMs, "runtime");
    // c(a, b) = a.x_1 b.x_1 is bilinear, hence a 2-cocycle; unequal pairings rule out any V.
    Cochain c{2, std::vector<zd>(L.cx.num_cells(2))};
    for (size_t f = 0; f < c.values.size(); ++f) {
        const Face &fc = L.cx.faces()[f];
        c.values[f] = L.cx.labels()[fc.a].x[0] * L.cx.labels()[fc.b].x[0];
    }
    auto dc = coboundary(L.cx, c).values;
    bool cocycle = dc == std::vector<zd>(dc.size(), 0);
    r.note << " |E|=" << L.cx.labels().size() << " homologous=" << (V ? "yes" : "no") << " beta=" << bs << "/" << bt
           << " time_ms=" << ms << " separating_cocycle(x1*x1): is_cocycle=" << cocycle
           << " square=" << evaluate(c, sq, 2) << " star=" << evaluate(c, star, 2);
}

void c4(Result &r) {
    auto t = std::chrono::steady_clock::now();
    auto L = testing::load_demo("ghz-sd-star");
    Verdict v = check_state_dependent(L.cx, *L.st);
    Chain four = build_chain(L.sc, L.cx, "four");
    double ms = ms_since(t);
    r.require(v.contextual, "contextual");
    r.require(L.sc.chains.at("four").size() == 4 && verify_witness(L.cx, four, &*L.st), "four-face relative cycle");
    zd b = witness_value(L.cx, four, &*L.st);
    r.require(b == 1, "beta_psi(F) = 1");
    Dense psi = ghz_projector();
    std::vector<std::string> free = {"XII", "IXI", "IIX", "YII", "IYI", "IIY"};
    std::vector<std::vector<std::string>> locals;
    std::vector<int> signs;
    for (const auto &c : L.sc.contexts) {
        locals.emplace_back(c.begin(), c.end() - 1);
        signs.push_back(product_sign(locals.back(), 3, &psi));
    }
    int consistent = count_assignments(free, locals, signs);
    r.require(consistent == 0, "brute force over free edges");
    r.require(ms < kFastMs, "runtime");
    r.note << " beta_psi=" << b << " consistent_of_64=" << consistent << " time_ms=" << ms;
}

void c5(Result &r) {
    auto L = testing::load_demo("decorated-star");
    SymmetryGroup G = build_group(L.sc, L.cx);
    auto w = find_symmetry_witness(G, L.cx, build_contexts(L.sc, L.cx));
    r.require(w.has_value(), "witness found");
    if (!w) {
        return;
    }
    const SymmetryElement &g = G.elements()[w->element];
    Chain f = build_chain(L.sc, L.cx, "f");
    r.require(g.name == "A1A2", "element A1A2");
    r.require(w->face_chain == f, "chain f1 + f2 + f3");
    r.require(act_on_edges(g, w->boundary, 2) == w->boundary, "g boundary = boundary");
    r.require(w->value == 1 && phi_on(g, boundary(L.cx, f), 2) == 1, "phi(boundary f) = 1");
    zd izz = g.phi[L.cx.label_index(parse_pauli("IZZ", 2).label)];
    bool valid = true;
    try {
        validate(L.cx, g);
    } catch (const Error &) {
        valid = false;
    }
    r.require(valid && izz == 1, "validated, phi(IZZ) = 1");
    r.note << " element=" << g.name << " faces=" << w->face_chain.terms.size() << " phi(boundary)=" << w->value
           << " phi(IZZ)=" << izz;
}

void c6(Result &r) {
    auto L = testing::load_demo("decorated-star");
    SymmetryGroup G = build_group(L.sc, L.cx);
    CocycleClassReport h1 = h1_class(G, L.cx);
    CocycleClassReport sg = sigma_class(G, L.cx);
    r.require(h1.cocycle_ok && h1.h1_computed && !h1.h1_vanishes, "[Phi] != 0");
    r.require(sg.sigma_computed && sg.sigma_vanishes, "sigma([Phi]) = 0");
    bool hom = false;
    std::vector<size_t> hat;
    if (sg.sigma_vanishes) {
        hat = split_section(G, L.cx, sg.chi);
        hom = hat.size() == G.quotient_order();
        for (size_t p = 0; p < hat.size() && hom; ++p) {
            hom &= G.coset_of(hat[p]) == p;
            for (size_t q = 0; q < hat.size(); ++q) {
                hom &= G.multiply(hat[p], hat[q]) == hat[G.q_multiply(p, q)];
            }
        }
    }
    r.require(hom, "split section is a homomorphism");
    r.note << " |G|=" << G.size() << " |Q|=" << G.quotient_order() << " h1_nonzero=" << !h1.h1_vanishes
           << " sigma_zero=" << sg.sigma_vanishes << " section=";
    for (size_t i : hat) {
        r.note << G.elements()[i].name << ";";
    }
}

void c7(Result &r) {
    auto L = testing::load_demo("ghz-sd-star");
    const StateData &st = *L.st;
    SymmetryGroup G = build_group(L.sc, L.cx);
    const SymmetryElement &g = G.elements()[element_named(G, "A1A2Y3")];
    Chain f = build_chain(L.sc, L.cx, "f");
    RelativeComplex R(L.cx, st.labels);
    Chain dR = R.project(boundary(L.cx, f));
    r.require(verify_symmetry_witness(L.cx, g, f, &st), "verification");
    r.require(phi_on(g, dR, 2) == 1, "phi(boundary_R f) = 1");
    // The found witness agrees with the named one.
    SymmetryGroup H = G.stabilizer_of(L.cx, st);
    auto w = find_symmetry_witness(H, L.cx, build_contexts(L.sc, L.cx), &st);
    r.require(w && H.elements()[w->element].name == "A1A2Y3" && w->face_chain == f, "search finds (A1A2Y3, f)");

    // Line by line: a consistent s pairs to -beta_psi(f) on boundary_R f; so does g.s, since the
    // defect of g.s is the defect of s pulled back along g; but g.s pairs one higher. Checked on samples.
    const std::vector<zd> &bt = L.cx.beta();
    zd target = neg_mod(witness_value(L.cx, f, &st), 2);
    std::mt19937_64 rng(70);
    std::vector<zd> base = extend_by_zero(L.cx, st);
    bool pull = true, shift = true, state = true, line1 = true;
    for (int t = 0; t < 200; ++t) {
        std::vector<zd> s = base;
        for (uint32_t e : R.edges()) {
            s[e] = rng() % 2;
        }
        std::vector<zd> s2 = transform_assignment(s, g, 2);
        for (size_t k = 0; k < st.labels.size(); ++k) {
            state &= s2[L.cx.label_index(st.labels[k])] == st.values[k];
        }
        std::vector<zd> defect(L.cx.faces().size()), defect2(L.cx.faces().size());
        for (uint32_t fi : R.faces()) {
            const Face &fc = L.cx.faces()[fi];
            defect[fi] = reduce(static_cast<int64_t>(s[fc.a]) + s[fc.b] - s[fc.sum] + bt[fi], 2);
            defect2[fi] = reduce(static_cast<int64_t>(s2[fc.a]) + s2[fc.b] - s2[fc.sum] + bt[fi], 2);
        }
        for (uint32_t fi : R.faces()) {
            const Face &fc = L.cx.faces()[fi];
            auto gf = L.cx.face_index(g.perm[fc.a], g.perm[fc.b]);
            pull &= gf.has_value() && R.position(2, *gf).has_value() && defect2[fi] == defect[*gf];
        }
        // Sum of the defect over f is s(boundary_R f) + beta_psi(f); zero defect forces the target.
        zd sum = 0;
        for (auto [fi, c] : f.terms) {
            if (R.position(2, fi)) {
                sum = add_mod(sum, mul_mod(defect[fi], c, 2), 2);
            }
        }
        line1 &= add_mod(evaluate(Cochain{1, s}, dR, 2), neg_mod(target, 2), 2) == sum;
        shift &= evaluate(Cochain{1, s2}, dR, 2) == add_mod(evaluate(Cochain{1, s}, dR, 2), 1, 2);
    }
    r.require(line1, "s(boundary_R f) = -beta_psi(f) + defect(f)");
    r.require(state, "g.s keeps s_psi");
    r.require(pull, "defect(g.s) = g* defect(s)");
    r.require(shift, "(g.s)(boundary_R f) = s(boundary_R f) + 1");
    r.note << " element=" << g.name << " phi(boundary_R f)=" << phi_on(g, dR, 2) << " |H|=" << H.size();
}

void c8(Result &r) {
    struct Case {
        const char *name;
        bool relative;
    };
    std::mt19937_64 rng(80);
    const int per_case = 2500;
    int trials = 0, symmetric = 0, counterexamples = 0;
    for (Case c : {Case{"mermin-square", false}, Case{"mermin-star", false}, Case{"decorated-star", false},
                   Case{"ghz-sd-star", true}}) {
        auto L = testing::load_demo(c.name);
        const StateData *stp = c.relative ? &*L.st : nullptr;
        SymmetryGroup G = build_group(L.sc, L.cx);
        SymmetryGroup H = c.relative ? G.stabilizer_of(L.cx, *L.st) : G;
        // An exhausted search counts as no witness.
        std::optional<SymmetryWitness> w;
        try {
            w = find_symmetry_witness(H, L.cx, build_contexts(L.sc, L.cx), stp);
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::BudgetExceeded) {
                throw;
            }
        }
        // H1 is only computed below the quotient cap; the square's quotient is larger.
        std::optional<bool> h1_nonzero;
        if (G.quotient_order() <= 64) {
            h1_nonzero = !h1_class(G, L.cx, stp).h1_vanishes;
        }
        std::vector<std::vector<size_t>> members(G.quotient_order());
        for (size_t i = 0; i < G.size(); ++i) {
            members[G.coset_of(i)].push_back(i);
        }
        for (int t = 0; t < per_case; ++t, ++trials) {
            auto gamma = testing::random_gamma(rng, L.cx.labels(), 2);
            ObservableComplex rx = L.cx.rephased(gamma);
            std::optional<StateData> st;
            if (c.relative) {
                st = build_state(L.sc, rx);
            }
            bool sym = false;
            if (w) {
                SymmetryElement g = rephase_element(L.cx, H.elements()[w->element], gamma);
                sym = verify_symmetry_witness(rx, g, w->face_chain, st ? &*st : nullptr);
            }
            if (t % 25 == 0 && h1_nonzero) {
                std::vector<size_t> reps;
                for (const auto &m : members) {
                    reps.push_back(m[rng() % m.size()]);
                }
                bool nz = !h1_class(G.with_section(reps), L.cx, stp).h1_vanishes;
                r.require(nz == *h1_nonzero, std::string("section independence on ") + c.name);
                sym |= nz;
            }
            if (!sym) {
                continue;
            }
            ++symmetric;
            bool parity = st ? check_state_dependent(rx, *st).contextual : check_state_independent(rx).contextual;
            counterexamples += !parity;
        }
    }
    r.require(counterexamples == 0, "symmetry-contextual implies parity-contextual");
    r.require(symmetric > 0, "non-vacuous");
    r.note << " trials=" << trials << " symmetry_contextual=" << symmetric << " counterexamples=" << counterexamples;
}

void c9(Result &r) {
    auto t = std::chrono::steady_clock::now();
    MbqcSpec spec = ghz_or_spec();
    FunctionTable ft = function_table(spec, kRuns, 1);
    r.require(ft.f.str() == "0111", "table OR");
    bool det = true;
    for (double f : ft.frequency) {
        det &= f == 1.0;
    }
    r.require(det, "determinism 1.0");
    double worst = 0;
    const double N = static_cast<double>(ft.runs);
    for (uint64_t ones : ft.ones) {
        double k = static_cast<double>(ones);
        worst = std::max(worst, 2 * (k - N / 2) * (k - N / 2) / (N / 2));
    }
    r.require(worst < kChi2Critical, "chi^2 uniformity");
    r.require(nonlinearity(ft.f) == 1 && contextuality_threshold(ft.f) == mpq_class(3, 4), "nl = 1, threshold = 3/4");
    // Bent bound against the best nonlinearity over every function with m inputs.
    bool bent = true;
    for (uint32_t m : {2u, 4u}) {
        uint64_t best = 0;
        BooleanFunction f;
        f.m = m;
        f.table.assign(size_t{1} << m, 0);
        for (uint64_t code = 0; code < (uint64_t{1} << (1u << m)); ++code) {
            for (size_t x = 0; x < f.table.size(); ++x) {
                f.table[x] = (code >> x) & 1;
            }
            best = std::max(best, nonlinearity(f));
        }
        bent &= best == (uint64_t{1} << (m - 1)) - (uint64_t{1} << (m / 2 - 1));
    }
    r.require(bent, "bent bound for m in {2, 4}");
    r.note << " table=" << ft.f.str() << " runs=" << ft.runs << " max_chi2=" << worst << " time_ms=" << ms_since(t);
}

uint64_t span_size_and_member(const ModMatrix &A, const std::vector<zd> &b, bool &member) {
    const uint32_t d = A.modulus();
    std::set<std::vector<zd>> seen{std::vector<zd>(A.rows(), 0)};
    std::vector<std::vector<zd>> frontier{std::vector<zd>(A.rows(), 0)};
    while (!frontier.empty()) {
        auto v = frontier.back();
        frontier.pop_back();
        for (size_t j = 0; j < A.cols(); ++j) {
            auto w = v;
            for (size_t i = 0; i < A.rows(); ++i) {
                w[i] = add_mod(w[i], A.get(i, j), d);
            }
            if (seen.insert(w).second) {
                frontier.push_back(w);
            }
        }
    }
    member = seen.count(b) > 0;
    return seen.size();
}

void c10(Result &r) {
    std::mt19937_64 rng(100);
    int dd_fail = 0, dbeta_fail = 0, invariance_fail = 0, solver_fail = 0, systems = 0;
    for (int k = 0; k < kScenarios; ++k) {
        uint32_t n = 1 + rng() % 3, d = 2 + rng() % 3;
        ObservableComplex cx = ObservableComplex::build(testing::random_label_set(rng, n, d));
        std::vector<zd> v(cx.num_cells(3));
        for (auto &x : v) {
            x = rng() % d;
        }
        ModMatrix B2 = cx.boundary_matrix(2), B3 = cx.boundary_matrix(3);
        dd_fail += B2.multiply(B3.multiply(v)) != std::vector<zd>(B2.rows(), 0);
        Cochain phi{1, std::vector<zd>(cx.num_cells(1))};
        for (auto &x : phi.values) {
            x = rng() % d;
        }
        phi.values[0] = 0;
        auto dd = coboundary(cx, coboundary(cx, phi)).values;
        dd_fail += dd != std::vector<zd>(dd.size(), 0);
        auto db = coboundary(cx, beta_cochain(cx)).values;
        dbeta_fail += db != std::vector<zd>(db.size(), 0);
        bool verdict = check_state_independent(cx).contextual;
        for (int t = 0; t < kRephasings; ++t) {
            ObservableComplex rx = cx.rephased(testing::random_gamma(rng, cx.labels(), d));
            invariance_fail += check_state_independent(rx).contextual != verdict;
        }
    }
    for (uint32_t d : {2u, 3u, 4u}) {
        for (int t = 0; t < 200; ++t, ++systems) {
            size_t rows = 1 + rng() % 5, cols = 1 + rng() % 12;
            ModMatrix A(rows, cols, d);
            for (size_t i = 0; i < rows; ++i) {
                for (size_t j = 0; j < cols; ++j) {
                    if (rng() % 2) {
                        A.set(i, j, rng() % d);
                    }
                }
            }
            std::vector<zd> b(rows);
            for (auto &x : b) {
                x = rng() % d;
            }
            bool member = false;
            span_size_and_member(A, b, member);
            SolveResult s = solve(A, b);
            bool ok = s.feasible == member;
            if (s.feasible) {
                ok &= A.multiply(s.solution) == b;
            } else {
                ok &= A.left_multiply(s.certificate) == std::vector<zd>(cols, 0);
            }
            solver_fail += !ok;
        }
    }
    r.require(dd_fail == 0, "boundary^2 = 0 and d^2 = 0");
    r.require(dbeta_fail == 0, "d beta = 0");
    r.require(invariance_fail == 0, "verdict invariance");
    r.require(solver_fail == 0, "solver = brute force");
    r.note << " scenarios=" << kScenarios << " rephasings=" << kScenarios * kRephasings << " systems=" << systems
           << " failures=" << dd_fail + dbeta_fail + invariance_fail + solver_fail;
}

}  // namespace

int main(int argc, char **argv) {
    std::set<int> expected;
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--expect-fail") {
            expected.insert(std::stoi(argv[++i]));
        }
    }
    const std::vector<std::pair<const char *, std::function<void(Result &)>>> criteria = {
        {"Mermin square parity proof", c1},
        {"Mermin star parity proof", c2},
        {"square and star homologous in the 3-qubit complex", c3},
        {"state-dependent star", c4},
        {"decorated star symmetry witness", c5},
        {"H1 nonzero while sigma vanishes", c6},
        {"state-dependent symmetry witness", c7},
        {"symmetry implies parity contextuality", c8},
        {"GHZ OR gate", c9},
        {"structural properties", c10},
    };
    std::set<int> failed;
    for (size_t k = 0; k < criteria.size(); ++k) {
        Result r;
        try {
            criteria[k].second(r);
        } catch (const std::exception &e) {
            r.pass = false;
            r.note << " [exception: " << e.what() << "]";
        }
        if (!r.pass) {
            failed.insert(static_cast<int>(k + 1));
        }
        std::printf("%s %2zu %s:%s\n", r.pass ? "PASS" : "FAIL", k + 1, criteria[k].first, r.note.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed.size(), criteria.size());
    if (failed != expected) {
        std::printf("failing set differs from the expected set\n");
        return 1;
    }
    return 0;
}
