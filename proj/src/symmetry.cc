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

#include "ctx/symmetry.h"

#include <algorithm>
#include <functional>

#include "ctx/error.h"

namespace ctx {

bool SymmetryElement::fixes_every_edge() const {
    for (uint32_t k = 0; k < perm.size(); ++k) {
        if (perm[k] != k) {
            return false;
        }
    }
    return true;
}

SymmetryElement identity_element(const ObservableComplex &cx) {
    SymmetryElement e;
    const size_t N = cx.labels().size();
    e.perm.resize(N);
    for (uint32_t k = 0; k < N; ++k) {
        e.perm[k] = k;
    }
    e.phi.assign(N, 0);
    e.name = "e";
    return e;
}

namespace {

// Images of X_w and Z_w under one gate, for each wire the gate touches.
// Strings are over the gate's own wires, in wire order.
struct GateRule {
    std::vector<std::string> x_images;
    std::vector<std::string> z_images;
};

const GateRule &gate_rule(const std::string &name) {
    static const std::map<std::string, GateRule> rules = {
        {"I", {{"X"}, {"Z"}}},
        {"H", {{"Z"}, {"X"}}},
        {"S", {{"Y"}, {"Z"}}},
        {"X", {{"X"}, {"-Z"}}},
        {"Y", {{"-X"}, {"-Z"}}},
        {"Z", {{"-X"}, {"Z"}}},
        {"A", {{"Y"}, {"-Z"}}},
        {"CNOT", {{"XX", "IX"}, {"ZI", "ZZ"}}},
        {"SWAP", {{"IX", "XI"}, {"IZ", "ZI"}}},
    };
    auto it = rules.find(name);
    if (it == rules.end()) {
        fail(ErrorKind::InvalidInput, "unknown gate '" + name + "'");
    }
    return it->second;
}

PauliOperator embed(const std::string &local, const std::vector<uint32_t> &wires, uint32_t n) {
    PauliOperator loc = parse_pauli(local, 2, static_cast<uint32_t>(wires.size()));
    PauliOperator out = identity_operator(n, 2);
    out.phase = loc.phase;
    for (size_t k = 0; k < wires.size(); ++k) {
        out.label.x[wires[k]] = loc.label.x[k];
        out.label.z[wires[k]] = loc.label.z[k];
    }
    // Tensor products of Hermitian letters keep eta's phase: sum x z is additive.
    return out;
}

// Product of raw X^x Z^z factors, qubit by qubit, written back in the T convention.
PauliOperator raw_to_operator(const PauliOperator &p, const std::vector<PauliOperator> &x_img,
                              const std::vector<PauliOperator> &z_img) {
    const uint32_t n = static_cast<uint32_t>(p.label.num_qudits());
    const uint32_t D = 4;
    PauliOperator acc = identity_operator(n, 2);
    // p = zeta^{phase} T_a = zeta^{phase + eta(a)} prod_j X_j^{x_j} Z_j^{z_j}.
    acc.phase = (p.phase + eta_phase(p.label)) % D;
    for (uint32_t j = 0; j < n; ++j) {
        if (p.label.x[j]) {
            acc = multiply(acc, x_img[j]);
        }
        if (p.label.z[j]) {
            acc = multiply(acc, z_img[j]);
        }
    }
    return acc;
}

}  // namespace

PauliOperator conjugate(const PauliOperator &p, const std::vector<Gate> &gates) {
    if (p.label.d != 2) {
        fail(ErrorKind::InvalidInput, "Clifford gates act on qubits only");
    }
    const uint32_t n = static_cast<uint32_t>(p.label.num_qudits());
    // Raw generators X_j, Z_j as T-convention operators (eta is trivial on them).
    std::vector<PauliOperator> xs, zs;
    for (uint32_t j = 0; j < n; ++j) {
        PauliOperator x = identity_operator(n, 2), z = identity_operator(n, 2);
        x.label.x[j] = 1;
        z.label.z[j] = 1;
        xs.push_back(x);
        zs.push_back(z);
    }
    for (const Gate &g : gates) {
        const GateRule &rule = gate_rule(g.name);
        if (g.wires.size() != rule.x_images.size()) {
            fail(ErrorKind::InvalidInput, "gate " + g.name + " expects " + std::to_string(rule.x_images.size()) +
                                              " wire(s)");
        }
        for (size_t a = 0; a < g.wires.size(); ++a) {
            if (g.wires[a] >= n) {
                fail(ErrorKind::InvalidInput, "gate wire out of range");
            }
            for (size_t b = a + 1; b < g.wires.size(); ++b) {
                if (g.wires[a] == g.wires[b]) {
                    fail(ErrorKind::InvalidInput, "gate wires must be distinct");
                }
            }
        }
        std::vector<PauliOperator> gx, gz;
        for (size_t k = 0; k < g.wires.size(); ++k) {
            gx.push_back(embed(rule.x_images[k], g.wires, n));
            gz.push_back(embed(rule.z_images[k], g.wires, n));
        }
        // New image of each generator: conjugate its current image by the gate.
        std::vector<PauliOperator> single_x = [&] {
            std::vector<PauliOperator> v;
            for (uint32_t j = 0; j < n; ++j) {
                PauliOperator x = identity_operator(n, 2);
                x.label.x[j] = 1;
                v.push_back(x);
            }
            return v;
        }();
        std::vector<PauliOperator> step_x = single_x, step_z;
        for (uint32_t j = 0; j < n; ++j) {
            PauliOperator z = identity_operator(n, 2);
            z.label.z[j] = 1;
            step_z.push_back(z);
        }
        for (size_t k = 0; k < g.wires.size(); ++k) {
            step_x[g.wires[k]] = gx[k];
            step_z[g.wires[k]] = gz[k];
        }
        for (uint32_t j = 0; j < n; ++j) {
            xs[j] = raw_to_operator(xs[j], step_x, step_z);
            zs[j] = raw_to_operator(zs[j], step_x, step_z);
        }
    }
    return raw_to_operator(p, xs, zs);
}

SymmetryElement from_clifford(const ObservableComplex &cx, const std::vector<Gate> &gates, std::string name) {
    if (cx.d() != 2) {
        fail(ErrorKind::InvalidInput, "Clifford symmetries need d = 2");
    }
    const size_t N = cx.labels().size();
    SymmetryElement g;
    g.name = std::move(name);
    g.perm.resize(N);
    g.phi.resize(N);
    const uint32_t step = 2;
    for (uint32_t k = 0; k < N; ++k) {
        const PauliLabel &a = cx.labels()[k];
        PauliOperator t{a, static_cast<zd>(step * cx.convention().gamma(a) % 4)};
        PauliOperator img = conjugate(t, gates);
        auto idx = cx.index_of(img.label);
        if (!idx) {
            fail(ErrorKind::NotASymmetry, a.str() + " maps to " + img.label.str() + " outside E");
        }
        if (img.phase % step != 0) {
            fail(ErrorKind::NotASymmetry, "image of " + a.str() + " is not Hermitian");
        }
        g.perm[k] = *idx;
        g.phi[k] = reduce(static_cast<int64_t>(img.phase / step) - cx.convention().gamma(img.label), 2);
    }
    validate(cx, g);
    return g;
}

SymmetryElement from_pauli(const ObservableComplex &cx, const PauliLabel &p, std::string name) {
    const uint32_t d = cx.d();
    const size_t N = cx.labels().size();
    SymmetryElement g;
    g.name = name.empty() ? "P[" + p.str() + "]" : std::move(name);
    g.perm.resize(N);
    g.phi.resize(N);
    for (uint32_t k = 0; k < N; ++k) {
        const PauliLabel &a = cx.labels()[k];
        int64_t acc = 0;
        for (size_t j = 0; j < a.num_qudits(); ++j) {
            acc += static_cast<int64_t>(p.z[j]) * a.x[j] - static_cast<int64_t>(p.x[j]) * a.z[j];
        }
        g.perm[k] = k;
        g.phi[k] = reduce(acc, d);
    }
    validate(cx, g);
    return g;
}

SymmetryElement from_table(const ObservableComplex &cx, const std::vector<std::pair<PauliLabel, PauliLabel>> &perm,
                           const std::map<PauliLabel, zd> &phi, std::string name) {
    SymmetryElement g = identity_element(cx);
    g.name = std::move(name);
    std::vector<bool> set(cx.labels().size(), false);
    for (const auto &[from, to] : perm) {
        uint32_t a = cx.label_index(from);
        if (set[a]) {
            fail(ErrorKind::NotASymmetry, "label " + from.str() + " mapped twice");
        }
        set[a] = true;
        g.perm[a] = cx.label_index(to);
    }
    for (const auto &[label, v] : phi) {
        g.phi[cx.label_index(label)] = v % cx.d();
    }
    validate(cx, g);
    return g;
}

void validate(const ObservableComplex &cx, const SymmetryElement &g) {
    const uint32_t d = cx.d();
    const size_t N = cx.labels().size();
    if (g.perm.size() != N || g.phi.size() != N) {
        fail(ErrorKind::NotASymmetry, "element size does not match E");
    }
    std::vector<bool> hit(N, false);
    for (uint32_t k = 0; k < N; ++k) {
        if (g.perm[k] >= N || hit[g.perm[k]]) {
            fail(ErrorKind::NotASymmetry, "permutation is not a bijection of E");
        }
        hit[g.perm[k]] = true;
        if (g.phi[k] >= d) {
            fail(ErrorKind::NotASymmetry, "phase function value out of range");
        }
    }
    if (g.perm[cx.zero_index()] != cx.zero_index() || g.phi[cx.zero_index()] != 0) {
        fail(ErrorKind::NotASymmetry, "element must fix the identity");
    }
    for (uint32_t a = 0; a < N; ++a) {
        for (uint32_t b = 0; b < N; ++b) {
            if (cx.commute(a, b) != cx.commute(g.perm[a], g.perm[b])) {
                fail(ErrorKind::NotASymmetry, "commutation not preserved at " + cx.labels()[a].str() + ", " +
                                                  cx.labels()[b].str());
            }
        }
    }
    for (uint32_t f = 0; f < cx.faces().size(); ++f) {
        const Face &fc = cx.faces()[f];
        uint32_t gf = *cx.face_index(g.perm[fc.a], g.perm[fc.b]);
        if (cx.faces()[gf].sum != g.perm[fc.sum]) {
            fail(ErrorKind::NotASymmetry, "products not preserved at " + cx.labels()[fc.a].str() + ", " +
                                              cx.labels()[fc.b].str());
        }
        zd lhs = reduce(static_cast<int64_t>(g.phi[fc.a]) + g.phi[fc.b] - g.phi[fc.sum], d);
        zd rhs = reduce(static_cast<int64_t>(cx.beta()[gf]) - cx.beta()[f], d);
        if (lhs != rhs) {
            fail(ErrorKind::NotASymmetry, "phase function incompatible with beta at " + cx.labels()[fc.a].str() +
                                              ", " + cx.labels()[fc.b].str());
        }
    }
}

SymmetryElement compose(const SymmetryElement &g, const SymmetryElement &h, uint32_t d) {
    SymmetryElement out;
    const size_t N = g.perm.size();
    out.perm.resize(N);
    out.phi.resize(N);
    for (size_t a = 0; a < N; ++a) {
        out.perm[a] = g.perm[h.perm[a]];
        out.phi[a] = add_mod(h.phi[a], g.phi[h.perm[a]], d);
    }
    return out;
}

SymmetryElement rephase_element(const ObservableComplex &cx, const SymmetryElement &g,
                                const std::map<PauliLabel, zd> &gamma) {
    // T'_a = omega^{gamma(a)} T_a, so g(T'_a) = omega^{phi(a) + gamma(a) - gamma(ga)} T'_{ga}.
    SymmetryElement out = g;
    auto gam = [&](uint32_t k) {
        auto it = gamma.find(cx.labels()[k]);
        return it == gamma.end() ? zd{0} : it->second % cx.d();
    };
    for (uint32_t k = 0; k < g.perm.size(); ++k) {
        out.phi[k] = reduce(static_cast<int64_t>(g.phi[k]) + gam(k) - gam(g.perm[k]), cx.d());
    }
    return out;
}

std::vector<zd> transform_assignment(const std::vector<zd> &s, const SymmetryElement &g, uint32_t d) {
    std::vector<zd> out(s.size());
    for (size_t a = 0; a < s.size(); ++a) {
        out[a] = add_mod(s[g.perm[a]], g.phi[a], d);
    }
    return out;
}

Chain act_on_edges(const SymmetryElement &g, const Chain &c, uint32_t d) {
    Chain out{c.degree, {}};
    for (auto [e, v] : c.terms) {
        out.add(g.perm[e], v, d);
    }
    return out;
}

zd phi_on(const SymmetryElement &g, const Chain &c, uint32_t d) {
    uint64_t acc = 0;
    for (auto [e, v] : c.terms) {
        acc = (acc + static_cast<uint64_t>(g.phi[e]) * v) % d;
    }
    return static_cast<zd>(acc);
}

bool preserves_state(const ObservableComplex &cx, const SymmetryElement &g, const StateData &st) {
    const uint32_t d = cx.d();
    std::vector<int64_t> s(cx.labels().size(), -1);
    for (size_t k = 0; k < st.labels.size(); ++k) {
        s[cx.label_index(st.labels[k])] = st.values[k];
    }
    for (uint32_t a = 0; a < s.size(); ++a) {
        if (s[a] < 0) {
            continue;
        }
        int64_t image = s[g.perm[a]];
        if (image < 0) {
            return false;
        }
        if (reduce(image + g.phi[a], d) != static_cast<zd>(s[a])) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Groups.

namespace {

std::vector<uint32_t> key_of(const SymmetryElement &g) {
    std::vector<uint32_t> k = g.perm;
    k.insert(k.end(), g.phi.begin(), g.phi.end());
    return k;
}

}  // namespace

SymmetryGroup SymmetryGroup::generate(const ObservableComplex &cx, const std::vector<SymmetryElement> &generators,
                                      size_t cap) {
    SymmetryGroup G;
    G.d_ = cx.d();
    auto push = [&](SymmetryElement g) {
        auto key = key_of(g);
        if (G.lookup_.count(key)) {
            return false;
        }
        G.lookup_.emplace(std::move(key), G.elements_.size());
        G.elements_.push_back(std::move(g));
        if (G.elements_.size() > cap) {
            fail(ErrorKind::ClosureTooLarge, "symmetry group exceeds " + std::to_string(cap) + " elements");
        }
        return true;
    };
    push(identity_element(cx));
    for (const auto &g : generators) {
        validate(cx, g);
        push(g);
    }
    G.num_generators_ = G.elements_.size() - 1;
    for (size_t i = 0; i < G.elements_.size(); ++i) {
        for (const auto &g : generators) {
            SymmetryElement p = compose(g, G.elements_[i], G.d_);
            p.name = g.name + "*" + (G.elements_[i].name.empty() ? "g" + std::to_string(i) : G.elements_[i].name);
            push(std::move(p));
        }
    }
    G.index_structure();
    return G;
}

void SymmetryGroup::index_structure() {
    normal_.clear();
    section_.clear();
    q_lookup_.clear();
    coset_.assign(elements_.size(), 0);
    std::map<std::vector<uint32_t>, size_t> best;  // perm -> element with smallest phi
    for (size_t i = 0; i < elements_.size(); ++i) {
        const auto &g = elements_[i];
        if (g.fixes_every_edge()) {
            normal_.push_back(i);
        }
        auto it = best.find(g.perm);
        if (it == best.end() || g.phi < elements_[it->second].phi) {
            best[g.perm] = i;
        }
    }
    // std::map orders perms lexicographically; the identity perm comes first.
    for (const auto &[perm, i] : best) {
        q_lookup_.emplace(perm, section_.size());
        section_.push_back(i);
    }
    for (size_t i = 0; i < elements_.size(); ++i) {
        coset_[i] = q_lookup_.at(elements_[i].perm);
    }
}

SymmetryGroup SymmetryGroup::stabilizer_of(const ObservableComplex &cx, const StateData &st) const {
    SymmetryGroup H;
    H.d_ = d_;
    for (size_t i = 0; i < elements_.size(); ++i) {
        if (preserves_state(cx, elements_[i], st)) {
            H.lookup_.emplace(key_of(elements_[i]), H.elements_.size());
            H.elements_.push_back(elements_[i]);
            if (i >= 1 && i <= num_generators_) {
                ++H.num_generators_;
            }
        }
    }
    H.index_structure();
    return H;
}

SymmetryGroup SymmetryGroup::with_section(const std::vector<size_t> &reps) const {
    if (reps.size() != section_.size()) {
        fail(ErrorKind::InvalidInput, "section needs one representative per coset");
    }
    SymmetryGroup out = *this;
    for (size_t q = 0; q < reps.size(); ++q) {
        if (reps[q] >= elements_.size() || coset_[reps[q]] != q) {
            fail(ErrorKind::InvalidInput, "representative lies outside its coset");
        }
        out.section_[q] = reps[q];
    }
    return out;
}

std::optional<size_t> SymmetryGroup::find(const SymmetryElement &g) const {
    auto it = lookup_.find(key_of(g));
    if (it == lookup_.end()) {
        return std::nullopt;
    }
    return it->second;
}

size_t SymmetryGroup::multiply(size_t i, size_t j) const {
    auto k = find(compose(elements_[i], elements_[j], d_));
    if (!k) {
        fail(ErrorKind::InvalidInput, "internal: group is not closed under composition");
    }
    return *k;
}

bool SymmetryGroup::in_normal_subgroup(size_t i) const {
    return elements_[i].fixes_every_edge();
}

size_t SymmetryGroup::q_multiply(size_t p, size_t q) const {
    const auto &a = q_perm(p);
    const auto &b = q_perm(q);
    std::vector<uint32_t> c(a.size());
    for (size_t k = 0; k < a.size(); ++k) {
        c[k] = a[b[k]];
    }
    return q_lookup_.at(c);
}

// ---------------------------------------------------------------------------
// Witness search.

namespace {

Chain chain_boundary(const ObservableComplex &cx, const RelativeComplex *rel, const Chain &f) {
    return rel ? rel->boundary(f) : boundary(cx, f);
}

bool passes(const SymmetryElement &g, const Chain &bd, uint32_t d) {
    if (bd.is_zero()) {
        return false;
    }
    for (auto [e, v] : bd.terms) {
        (void)v;
        if (!bd.terms.count(g.perm[e])) {
            return false;
        }
    }
    return act_on_edges(g, bd, d) == bd && phi_on(g, bd, d) != 0;
}

}  // namespace

bool verify_symmetry_witness(const ObservableComplex &cx, const SymmetryElement &g, const Chain &f,
                             const StateData *st) {
    validate(cx, g);
    if (f.degree != 2) {
        return false;
    }
    if (!st) {
        return passes(g, boundary(cx, f), cx.d());
    }
    if (!preserves_state(cx, g, *st)) {
        return false;
    }
    RelativeComplex rel(cx, st->labels);
    if (!(rel.project(f) == f)) {
        return false;
    }
    return passes(g, rel.boundary(f), cx.d());
}

std::optional<SymmetryWitness> find_symmetry_witness(const SymmetryGroup &G, const ObservableComplex &cx,
                                                     const std::vector<Chain> &composite_faces,
                                                     const StateData *st, const WitnessSearchOptions &options) {
    const uint32_t d = cx.d();
    std::optional<RelativeComplex> rel;
    if (st) {
        rel.emplace(cx, st->labels);
    }
    std::vector<size_t> candidates;
    for (size_t i = 0; i < G.size(); ++i) {
        if (G.in_normal_subgroup(i)) {
            continue;
        }
        if (st && !preserves_state(cx, G.elements()[i], *st)) {
            continue;
        }
        candidates.push_back(i);
    }
    if (candidates.empty()) {
        return std::nullopt;
    }
    std::vector<Chain> pool;
    for (const Chain &c : composite_faces) {
        if (!rel || rel->project(c) == c) {
            pool.push_back(c);
        }
    }
    const size_t n_composite = pool.size();
    std::vector<Chain> bds;
    for (const Chain &c : pool) {
        bds.push_back(chain_boundary(cx, rel ? &*rel : nullptr, c));
    }
    size_t budget = options.budget;
    std::optional<SymmetryWitness> hit;

    // Index combinations of size k over [0, limit), requiring some index >= min_new.
    auto scan = [&](size_t limit, size_t min_new) {
        std::vector<size_t> idx;
        std::function<bool(size_t, size_t, Chain, Chain)> rec = [&](size_t start, size_t left, Chain f,
                                                                      Chain bd) -> bool {
            if (left == 0) {
                if (!idx.empty() && idx.back() < min_new) {
                    return false;
                }
                for (size_t i : candidates) {
                    if (budget == 0) {
                        fail(ErrorKind::BudgetExceeded, "symmetry witness search budget exhausted");
                    }
                    --budget;
                    if (passes(G.elements()[i], bd, d)) {
                        hit = SymmetryWitness{i, f, bd, phi_on(G.elements()[i], bd, d)};
                        return true;
                    }
                }
                return false;
            }
            for (size_t j = start; j < limit; ++j) {
                idx.push_back(j);
                bool done = rec(j + 1, left - 1, f.plus(pool[j], d), bd.plus(bds[j], d));
                idx.pop_back();
                if (done) {
                    return true;
                }
            }
            return false;
        };
        for (size_t k = 1; k <= options.max_terms; ++k) {
            if (rec(0, k, Chain{2, {}}, Chain{1, {}})) {
                return true;
            }
        }
        return false;
    };
    if (scan(n_composite, 0)) {
        return hit;
    }
    const auto &faces = rel ? rel->faces() : [&] {
        static thread_local std::vector<uint32_t> all;
        all.resize(cx.faces().size());
        for (uint32_t f = 0; f < all.size(); ++f) {
            all[f] = f;
        }
        return std::cref(all);
    }().get();
    for (uint32_t f : faces) {
        Chain c{2, {}};
        c.add(f, 1, d);
        bds.push_back(chain_boundary(cx, rel ? &*rel : nullptr, c));
        pool.push_back(std::move(c));
    }
    if (scan(pool.size(), n_composite)) {
        return hit;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cohomology classes.

namespace {

struct ActiveCells {
    std::vector<uint32_t> edges;                    // parent indices
    std::vector<int32_t> pos;                       // parent edge -> column
    std::vector<std::vector<std::pair<uint32_t, zd>>> face_bd;  // boundaries of active faces
};

ActiveCells active_cells(const ObservableComplex &cx, const StateData *st) {
    ActiveCells ac;
    const size_t N = cx.labels().size();
    ac.pos.assign(N, -1);
    if (st) {
        RelativeComplex rel(cx, st->labels);
        ac.edges = rel.edges();
        for (uint32_t f : rel.faces()) {
            Chain c{2, {}};
            c.add(f, 1, cx.d());
            Chain bd = rel.boundary(c);
            ac.face_bd.emplace_back(bd.terms.begin(), bd.terms.end());
        }
    } else {
        for (uint32_t e = 0; e < N; ++e) {
            ac.edges.push_back(e);
        }
        for (uint32_t f = 0; f < cx.faces().size(); ++f) {
            Chain c{2, {}};
            c.add(f, 1, cx.d());
            Chain bd = boundary(cx, c);
            ac.face_bd.emplace_back(bd.terms.begin(), bd.terms.end());
        }
    }
    for (uint32_t k = 0; k < ac.edges.size(); ++k) {
        ac.pos[ac.edges[k]] = static_cast<int32_t>(k);
    }
    return ac;
}

SymmetryGroup working_group(const SymmetryGroup &G, const ObservableComplex &cx, const StateData *st,
                            size_t q_cap) {
    SymmetryGroup H = st ? G.stabilizer_of(cx, *st) : G;
    if (H.quotient_order() > q_cap) {
        fail(ErrorKind::QTooLarge, "|Q| = " + std::to_string(H.quotient_order()) + " exceeds cap " +
                                       std::to_string(q_cap));
    }
    return H;
}

zd pair_bd(const std::vector<zd> &phi, const std::vector<std::pair<uint32_t, zd>> &bd, const uint32_t *perm,
           uint32_t d) {
    uint64_t acc = 0;
    for (auto [e, v] : bd) {
        acc = (acc + static_cast<uint64_t>(phi[perm ? perm[e] : e]) * v) % d;
    }
    return static_cast<zd>(acc);
}

// c(p, q)(a) = phi'_q(a) + phi'_p(q a) - phi'_{pq}(a).
std::vector<zd> sigma_cocycle(const SymmetryGroup &H, size_t p, size_t q, uint32_t d) {
    const auto &gq = H.elements()[H.section(q)];
    const auto &gp = H.elements()[H.section(p)];
    const auto &gpq = H.elements()[H.section(H.q_multiply(p, q))];
    std::vector<zd> c(gq.phi.size());
    for (size_t a = 0; a < c.size(); ++a) {
        c[a] = reduce(static_cast<int64_t>(gq.phi[a]) + gp.phi[gq.perm[a]] - gpq.phi[a], d);
    }
    return c;
}

bool cocycle_condition(const SymmetryGroup &H, const ActiveCells &ac, uint32_t d) {
    const size_t Q = H.quotient_order();
    for (size_t p = 0; p < Q; ++p) {
        for (size_t q = 0; q < Q; ++q) {
            std::vector<zd> c = sigma_cocycle(H, p, q, d);
            for (const auto &bd : ac.face_bd) {
                if (pair_bd(c, bd, nullptr, d) != 0) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

CocycleClassReport h1_class(const SymmetryGroup &G, const ObservableComplex &cx, const StateData *st,
                            size_t q_cap) {
    const uint32_t d = cx.d();
    SymmetryGroup H = working_group(G, cx, st, q_cap);
    ActiveCells ac = active_cells(cx, st);
    CocycleClassReport rep;
    rep.q_order = H.quotient_order();
    rep.relative = st != nullptr;
    rep.h1_computed = true;
    rep.cocycle_ok = cocycle_condition(H, ac, d);
    if (!rep.cocycle_ok) {
        fail(ErrorKind::InvalidInput, "internal: phase functions do not form a 1-cocycle on Q");
    }
    // phi'_q(partial f) = s(q partial f) - s(partial f), unknown s on active edges.
    ModMatrix A(0, ac.edges.size(), d);
    std::vector<zd> b;
    for (size_t q = 1; q < H.quotient_order(); ++q) {
        const auto &g = H.elements()[H.section(q)];
        for (const auto &bd : ac.face_bd) {
            ModMatrix::Row row;
            for (auto [e, v] : bd) {
                int32_t col_img = ac.pos[g.perm[e]];
                if (col_img < 0) {
                    fail(ErrorKind::NotASymmetry, "element does not preserve the relative edges");
                }
                row.push_back({static_cast<uint32_t>(col_img), v});
                row.push_back({static_cast<uint32_t>(ac.pos[e]), neg_mod(v, d)});
            }
            A.append_row(std::move(row));
            b.push_back(pair_bd(g.phi, bd, nullptr, d));
        }
    }
    SolveResult r = solve(A, b, SolveOptions{false});
    rep.h1_vanishes = r.feasible;
    if (r.feasible) {
        rep.h1_witness.assign(cx.labels().size(), 0);
        for (size_t k = 0; k < ac.edges.size(); ++k) {
            rep.h1_witness[ac.edges[k]] = r.solution[k];
        }
    }
    return rep;
}

CocycleClassReport sigma_class(const SymmetryGroup &G, const ObservableComplex &cx, const StateData *st,
                               size_t q_cap) {
    const uint32_t d = cx.d();
    SymmetryGroup H = working_group(G, cx, st, q_cap);
    ActiveCells ac = active_cells(cx, st);
    CocycleClassReport rep;
    rep.q_order = H.quotient_order();
    rep.relative = st != nullptr;
    rep.cocycle_ok = cocycle_condition(H, ac, d);
    rep.sigma_computed = true;
    if (!rep.cocycle_ok) {
        fail(ErrorKind::InvalidInput, "internal: phase functions do not form a 1-cocycle on Q");
    }
    const size_t Q = H.quotient_order();
    const size_t E = ac.edges.size();
    std::vector<std::vector<std::vector<zd>>> c(Q, std::vector<std::vector<zd>>(Q));
    for (size_t p = 0; p < Q; ++p) {
        for (size_t q = 0; q < Q; ++q) {
            c[p][q] = sigma_cocycle(H, p, q, d);
        }
    }

    // Generators of the image of N -> V, chosen greedily.
    std::vector<std::vector<zd>> basis;
    for (size_t i : H.normal_subgroup()) {
        std::vector<zd> v(E);
        for (size_t k = 0; k < E; ++k) {
            v[k] = H.elements()[i].phi[ac.edges[k]];
        }
        if (std::all_of(v.begin(), v.end(), [](zd x) { return x == 0; })) {
            continue;
        }
        bool in_span = false;
        if (!basis.empty()) {
            ModMatrix M(E, basis.size(), d);
            for (size_t k = 0; k < E; ++k) {
                for (size_t j = 0; j < basis.size(); ++j) {
                    M.set(k, j, basis[j][k]);
                }
            }
            in_span = solve(M, v, SolveOptions{false}).feasible;
        }
        if (!in_span) {
            basis.push_back(std::move(v));
        }
    }

    auto unpack = [&](const std::vector<zd> &cols, size_t per_q, auto value_at) {
        rep.chi.assign(Q, std::vector<zd>(cx.labels().size(), 0));
        for (size_t q = 0; q < Q; ++q) {
            for (size_t k = 0; k < E; ++k) {
                rep.chi[q][ac.edges[k]] = value_at(cols, q * per_q, k);
            }
        }
    };

    // chi(q) + q*chi(p) - chi(pq) = -c(p, q) on active edges.
    {
        const size_t K = basis.size();
        ModMatrix A(0, Q * K, d);
        std::vector<zd> b;
        for (size_t p = 0; p < Q; ++p) {
            for (size_t q = 0; q < Q; ++q) {
                const auto &perm = H.q_perm(q);
                size_t pq = H.q_multiply(p, q);
                for (size_t k = 0; k < E; ++k) {
                    uint32_t a = ac.edges[k];
                    int32_t qa = ac.pos[perm[a]];
                    ModMatrix::Row row;
                    for (size_t j = 0; j < K; ++j) {
                        row.push_back({static_cast<uint32_t>(q * K + j), basis[j][k]});
                        row.push_back({static_cast<uint32_t>(p * K + j), basis[j][qa]});
                        row.push_back({static_cast<uint32_t>(pq * K + j), neg_mod(basis[j][k], d)});
                    }
                    A.append_row(std::move(row));
                    b.push_back(neg_mod(c[p][q][a], d));
                }
            }
        }
        if (K > 0 || std::all_of(b.begin(), b.end(), [](zd v) { return v == 0; })) {
            SolveResult r = K > 0 ? solve(A, b, SolveOptions{false}) : SolveResult{true, {}, {}};
            if (r.feasible) {
                rep.sigma_vanishes = true;
                rep.chi_from_n = true;
                unpack(r.solution, K, [&](const std::vector<zd> &x, size_t off, size_t k) {
                    uint64_t acc = 0;
                    for (size_t j = 0; j < K; ++j) {
                        acc = (acc + static_cast<uint64_t>(x[off + j]) * basis[j][k]) % d;
                    }
                    return static_cast<zd>(acc);
                });
                return rep;
            }
        }
    }

    // General chi(q) in V: unknown cochains vanishing on boundaries.
    ModMatrix A(0, Q * E, d);
    std::vector<zd> b;
    for (size_t p = 0; p < Q; ++p) {
        for (size_t q = 0; q < Q; ++q) {
            const auto &perm = H.q_perm(q);
            size_t pq = H.q_multiply(p, q);
            for (size_t k = 0; k < E; ++k) {
                uint32_t a = ac.edges[k];
                A.append_row({{static_cast<uint32_t>(q * E + k), 1},
                              {static_cast<uint32_t>(p * E + ac.pos[perm[a]]), 1},
                              {static_cast<uint32_t>(pq * E + k), d - 1}});
                b.push_back(neg_mod(c[p][q][a], d));
            }
        }
    }
    for (size_t q = 0; q < Q; ++q) {
        for (const auto &bd : ac.face_bd) {
            ModMatrix::Row row;
            for (auto [e, v] : bd) {
                row.push_back({static_cast<uint32_t>(q * E + ac.pos[e]), v});
            }
            A.append_row(std::move(row));
            b.push_back(0);
        }
    }
    SolveResult r = solve(A, b, SolveOptions{false});
    rep.sigma_vanishes = r.feasible;
    if (r.feasible) {
        unpack(r.solution, E, [](const std::vector<zd> &x, size_t off, size_t k) { return x[off + k]; });
    }
    return rep;
}

std::vector<size_t> split_section(const SymmetryGroup &G, const ObservableComplex &cx,
                                  const std::vector<std::vector<zd>> &chi, const StateData *st) {
    const uint32_t d = cx.d();
    SymmetryGroup H = st ? G.stabilizer_of(cx, *st) : G;
    const size_t Q = H.quotient_order();
    ActiveCells ac = active_cells(cx, st);
    if (chi.size() != Q) {
        fail(ErrorKind::NotACochainSolution, "chi needs one cochain per coset");
    }
    for (const auto &v : chi) {
        if (v.size() != cx.labels().size()) {
            fail(ErrorKind::NotACochainSolution, "chi cochain has the wrong length");
        }
    }
    for (size_t p = 0; p < Q; ++p) {
        for (size_t q = 0; q < Q; ++q) {
            std::vector<zd> c = sigma_cocycle(H, p, q, d);
            const auto &perm = H.q_perm(q);
            size_t pq = H.q_multiply(p, q);
            for (uint32_t a : ac.edges) {
                zd v = reduce(static_cast<int64_t>(c[a]) + chi[q][a] + chi[p][perm[a]] - chi[pq][a], d);
                if (v != 0) {
                    fail(ErrorKind::NotACochainSolution, "chi does not cancel the sigma cocycle");
                }
            }
        }
    }
    std::vector<size_t> hat(Q);
    for (size_t q = 0; q < Q; ++q) {
        std::optional<size_t> n_q;
        for (size_t i : H.normal_subgroup()) {
            if (H.elements()[i].phi == chi[q]) {
                n_q = i;
                break;
            }
        }
        if (!n_q) {
            fail(ErrorKind::NoSuchN, "no element of N realizes chi for coset " + std::to_string(q));
        }
        hat[q] = H.multiply(H.section(q), *n_q);
    }
    for (size_t p = 0; p < Q; ++p) {
        for (size_t q = 0; q < Q; ++q) {
            if (H.multiply(hat[p], hat[q]) != hat[H.q_multiply(p, q)]) {
                fail(ErrorKind::NotACochainSolution, "lifted section is not a homomorphism");
            }
        }
    }
    // Report indices in G's own numbering.
    std::vector<size_t> out(Q);
    for (size_t q = 0; q < Q; ++q) {
        out[q] = *G.find(H.elements()[hat[q]]);
    }
    return out;
}

}  // namespace ctx
