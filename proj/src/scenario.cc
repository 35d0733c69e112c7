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

#include "ctx/scenario.h"

#include <fstream>
#include <sstream>

#include "ctx/error.h"

namespace ctx {

namespace {

template <typename T>
T get_or(const json &j, const char *key, T fallback) {
    return j.contains(key) ? j.at(key).get<T>() : fallback;
}

std::vector<std::vector<uint8_t>> bit_matrix(const json &j) {
    std::vector<std::vector<uint8_t>> out;
    for (const auto &row : j) {
        std::vector<uint8_t> r;
        for (const auto &v : row) {
            int x = v.get<int>();
            if (x != 0 && x != 1) {
                fail(ErrorKind::InvalidInput, "binary matrices take entries 0 and 1");
            }
            r.push_back(static_cast<uint8_t>(x));
        }
        out.push_back(std::move(r));
    }
    return out;
}

Angle angle_from_json(const json &v) {
    if (v.is_number()) {
        return Angle::from_radians(v.get<double>());
    }
    if (v.is_string()) {
        return Angle::parse(v.get<std::string>());
    }
    fail(ErrorKind::InvalidInput, "angles are numbers (radians) or strings such as \"pi/2\"");
}

json angle_to_json(const Angle &a) {
    if (a.quarter_turns) {
        return *a.quarter_turns == 0 ? json(0) : json(a.str());
    }
    return json(a.radians);
}

void check_schema(const json &j) {
    if (j.contains("schema") && j.at("schema").get<std::string>() != kSchema) {
        fail(ErrorKind::InvalidInput, "unsupported schema '" + j.at("schema").get<std::string>() + "'");
    }
}

PauliLabel parse_label(const std::string &s, uint32_t d, uint32_t n) {
    return parse_pauli(s, d, n).label;
}

}  // namespace

// ---------------------------------------------------------------------------
// MBQC specs.

MbqcSpec mbqc_from_json(const json &j) {
    try {
        check_schema(j);
        MbqcSpec spec;
        spec.n = j.at("n").get<uint32_t>();
        const json &res = j.contains("resource") ? j.at("resource") : json("GHZ");
        if (res.is_string()) {
            std::string r = res.get<std::string>();
            for (auto &c : r) {
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            }
            if (r == "ghz") {
                spec.resource.kind = ResourceKind::GHZ;
            } else if (r == "plus") {
                spec.resource.kind = ResourceKind::Plus;
            } else {
                fail(ErrorKind::InvalidInput, "unknown resource '" + res.get<std::string>() + "'");
            }
        } else if (res.contains("stabilizers")) {
            spec.resource.kind = ResourceKind::Stabilizers;
            for (const auto &s : res.at("stabilizers")) {
                spec.resource.stabilizers.push_back(parse_pauli(s.get<std::string>(), 2, spec.n));
            }
        } else if (res.contains("amplitudes")) {
            spec.resource.kind = ResourceKind::Amplitudes;
            for (const auto &a : res.at("amplitudes")) {
                if (a.is_array()) {
                    spec.resource.amplitudes.emplace_back(a.at(0).get<double>(), a.at(1).get<double>());
                } else {
                    spec.resource.amplitudes.emplace_back(a.get<double>(), 0.0);
                }
            }
        } else {
            fail(ErrorKind::InvalidInput, "resource must be \"GHZ\", \"plus\", {stabilizers} or {amplitudes}");
        }
        for (const auto &a : j.at("angles")) {
            if (a.is_array()) {
                if (a.size() != 2) {
                    fail(ErrorKind::InvalidInput, "an angle pair lists the directions for q = 0 and q = 1");
                }
                spec.angles.push_back({angle_from_json(a.at(0)), angle_from_json(a.at(1))});
            } else {
                // cos(phi) X + (-1)^q sin(phi) Y.
                Angle phi = angle_from_json(a);
                Angle neg = phi.quarter_turns ? Angle::quarter(-*phi.quarter_turns) : Angle{-phi.radians, {}};
                spec.angles.push_back({phi, neg});
            }
        }
        spec.Z = bit_matrix(j.at("Z"));
        spec.S = j.contains("S") ? bit_matrix(j.at("S")) : std::vector<std::vector<uint8_t>>(spec.n);
        spec.T = j.contains("T") ? bit_matrix(j.at("T"))
                                 : std::vector<std::vector<uint8_t>>(spec.n, std::vector<uint8_t>(spec.n, 0));
        if (j.contains("flip_prob")) {
            spec.flip_prob = j.at("flip_prob").get<std::vector<double>>();
        }
        spec.check();
        return spec;
    } catch (const json::exception &e) {
        fail(ErrorKind::InvalidInput, std::string("bad MBQC spec: ") + e.what());
    }
}

json mbqc_to_json(const MbqcSpec &spec) {
    json j;
    j["schema"] = kSchema;
    j["n"] = spec.n;
    switch (spec.resource.kind) {
        case ResourceKind::GHZ:
            j["resource"] = "GHZ";
            break;
        case ResourceKind::Plus:
            j["resource"] = "plus";
            break;
        case ResourceKind::Stabilizers: {
            json s = json::array();
            for (const auto &g : spec.resource.stabilizers) {
                s.push_back(g.str());
            }
            j["resource"] = {{"stabilizers", s}};
            break;
        }
        case ResourceKind::Amplitudes: {
            json a = json::array();
            for (const auto &c : spec.resource.amplitudes) {
                a.push_back({c.real(), c.imag()});
            }
            j["resource"] = {{"amplitudes", a}};
            break;
        }
    }
    json angles = json::array();
    for (const auto &p : spec.angles) {
        angles.push_back({angle_to_json(p[0]), angle_to_json(p[1])});
    }
    j["angles"] = angles;
    j["Z"] = spec.Z;
    j["T"] = spec.T;
    j["S"] = spec.S;
    if (!spec.flip_prob.empty()) {
        j["flip_prob"] = spec.flip_prob;
    }
    return j;
}

// ---------------------------------------------------------------------------
// Scenario files.

Scenario Scenario::from_json(const json &j) {
    try {
        check_schema(j);
        Scenario sc;
        if (j.contains("resource") && !j.contains("observables")) {
            sc.mbqc = mbqc_from_json(j);
            sc.name = get_or<std::string>(j, "name", "mbqc");
            return sc;
        }
        sc.name = get_or<std::string>(j, "name", "scenario");
        sc.d = get_or<uint32_t>(j, "d", 2);
        sc.n = get_or<uint32_t>(j, "n", 0);
        if (j.contains("observables")) {
            sc.observables = j.at("observables").get<std::vector<std::string>>();
        }
        sc.complete = get_or<bool>(j, "complete", false);
        if (j.contains("state")) {
            for (const auto &e : j.at("state")) {
                if (e.is_array()) {
                    sc.state.emplace_back(e.at(0).get<std::string>(), e.at(1).get<zd>());
                } else {
                    sc.state.emplace_back(e.at("op").get<std::string>(), get_or<zd>(e, "value", 0));
                }
            }
        }
        if (j.contains("symmetries")) {
            for (const auto &e : j.at("symmetries")) {
                SymmetrySpec s;
                s.name = get_or<std::string>(e, "name", "");
                if (e.contains("gates")) {
                    s.kind = SymmetrySpec::Kind::Gates;
                    for (const auto &g : e.at("gates")) {
                        s.gates.push_back({g.at("gate").get<std::string>(), g.at("wires").get<std::vector<uint32_t>>()});
                    }
                } else if (e.contains("pauli")) {
                    s.kind = SymmetrySpec::Kind::Pauli;
                    s.pauli = e.at("pauli").get<std::string>();
                } else if (e.contains("perm")) {
                    s.kind = SymmetrySpec::Kind::Table;
                    for (const auto &[k, v] : e.at("perm").items()) {
                        s.perm.emplace_back(k, v.get<std::string>());
                    }
                    if (e.contains("phi")) {
                        for (const auto &[k, v] : e.at("phi").items()) {
                            s.phi[k] = v.get<zd>();
                        }
                    }
                } else {
                    fail(ErrorKind::InvalidInput, "a symmetry needs \"gates\", \"pauli\" or \"perm\"");
                }
                sc.symmetries.push_back(std::move(s));
            }
        }
        sc.pauli_symmetries = get_or<bool>(j, "pauli_symmetries", false);
        if (j.contains("contexts")) {
            sc.contexts = j.at("contexts").get<std::vector<std::vector<std::string>>>();
        }
        if (j.contains("chains")) {
            for (const auto &[name, terms] : j.at("chains").items()) {
                std::vector<ChainTerm> out;
                for (const auto &t : terms) {
                    ChainTerm ct;
                    ct.coeff = get_or<int64_t>(t, "coeff", 1);
                    if (t.contains("face")) {
                        ct.is_face = true;
                        ct.ops = t.at("face").get<std::vector<std::string>>();
                        if (ct.ops.size() != 2) {
                            fail(ErrorKind::InvalidInput, "a face lists exactly two operators");
                        }
                    } else {
                        ct.ops = t.at("context").get<std::vector<std::string>>();
                    }
                    out.push_back(std::move(ct));
                }
                sc.chains[name] = std::move(out);
            }
        }
        if (j.contains("rephase")) {
            for (const auto &[k, v] : j.at("rephase").items()) {
                sc.rephase[k] = v.get<zd>();
            }
        }
        if (j.contains("options")) {
            const json &o = j.at("options");
            sc.options.closure_cap = get_or<size_t>(o, "closure_cap", sc.options.closure_cap);
            sc.options.volumes = get_or<bool>(o, "volumes", sc.options.volumes);
            sc.options.group_cap = get_or<size_t>(o, "group_cap", sc.options.group_cap);
            sc.options.budget = get_or<size_t>(o, "budget", sc.options.budget);
            sc.options.max_terms = get_or<size_t>(o, "max_terms", sc.options.max_terms);
            sc.options.q_cap = get_or<size_t>(o, "q_cap", sc.options.q_cap);
        }
        if (j.contains("mbqc")) {
            sc.mbqc = mbqc_from_json(j.at("mbqc"));
        }
        if (sc.d < 2) {
            fail(ErrorKind::InvalidInput, "d must be at least 2");
        }
        if (sc.n == 0 && !sc.observables.empty()) {
            sc.n = static_cast<uint32_t>(parse_pauli(sc.observables.front(), sc.d).label.num_qudits());
        }
        return sc;
    } catch (const json::exception &e) {
        fail(ErrorKind::InvalidInput, std::string("bad scenario: ") + e.what());
    }
}

json Scenario::to_json() const {
    json j;
    j["schema"] = kSchema;
    j["name"] = name;
    j["d"] = d;
    j["n"] = n;
    j["observables"] = observables;
    if (complete) {
        j["complete"] = true;
    }
    if (!state.empty()) {
        json s = json::array();
        for (const auto &[op, v] : state) {
            s.push_back({{"op", op}, {"value", v}});
        }
        j["state"] = s;
    }
    if (!symmetries.empty()) {
        json s = json::array();
        for (const auto &sym : symmetries) {
            json e;
            e["name"] = sym.name;
            switch (sym.kind) {
                case SymmetrySpec::Kind::Gates: {
                    json gs = json::array();
                    for (const auto &g : sym.gates) {
                        gs.push_back({{"gate", g.name}, {"wires", g.wires}});
                    }
                    e["gates"] = gs;
                    break;
                }
                case SymmetrySpec::Kind::Pauli:
                    e["pauli"] = sym.pauli;
                    break;
                case SymmetrySpec::Kind::Table: {
                    json perm = json::object(), phi = json::object();
                    for (const auto &[a, b] : sym.perm) {
                        perm[a] = b;
                    }
                    for (const auto &[a, v] : sym.phi) {
                        phi[a] = v;
                    }
                    e["perm"] = perm;
                    e["phi"] = phi;
                    break;
                }
            }
            s.push_back(e);
        }
        j["symmetries"] = s;
    }
    if (pauli_symmetries) {
        j["pauli_symmetries"] = true;
    }
    if (!contexts.empty()) {
        j["contexts"] = contexts;
    }
    if (!chains.empty()) {
        json c = json::object();
        for (const auto &[name, terms] : chains) {
            json ts = json::array();
            for (const auto &t : terms) {
                ts.push_back({{t.is_face ? "face" : "context", t.ops}, {"coeff", t.coeff}});
            }
            c[name] = ts;
        }
        j["chains"] = c;
    }
    if (!rephase.empty()) {
        j["rephase"] = rephase;
    }
    j["options"] = {{"closure_cap", options.closure_cap}, {"volumes", options.volumes},
                    {"group_cap", options.group_cap},     {"budget", options.budget},
                    {"max_terms", options.max_terms},     {"q_cap", options.q_cap}};
    if (mbqc) {
        j["mbqc"] = mbqc_to_json(*mbqc);
    }
    return j;
}

Scenario with_bridge(Scenario sc) {
    if (!sc.mbqc || !sc.observables.empty()) {
        return sc;
    }
    BridgeScenario b = ghz_parity_bridge(*sc.mbqc);
    sc.d = 2;
    sc.n = sc.mbqc->n;
    for (const auto &o : b.observables) {
        sc.observables.push_back(o.str());
    }
    for (const auto &[op, v] : b.state) {
        sc.state.emplace_back(op.str(), v);
    }
    for (const auto &c : b.contexts) {
        std::vector<std::string> ops;
        for (const auto &o : c) {
            ops.push_back(o.label.str());
        }
        if (ops.size() >= 2) {
            sc.contexts.push_back(std::move(ops));
        }
    }
    return sc;
}

std::vector<PauliLabel> scenario_labels(const Scenario &sc) {
    if (sc.n == 0) {
        fail(ErrorKind::InvalidInput, "scenario has no qudits");
    }
    if (sc.complete) {
        auto labels = all_labels(sc.n, sc.d);
        if (labels.size() > sc.options.closure_cap) {
            fail(ErrorKind::ClosureTooLarge, "complete label set exceeds the closure cap");
        }
        return labels;
    }
    if (sc.observables.empty()) {
        fail(ErrorKind::InvalidInput, "scenario lists no observables");
    }
    std::vector<PauliLabel> seed;
    for (const auto &o : sc.observables) {
        seed.push_back(parse_label(o, sc.d, sc.n));
    }
    return closure(seed, sc.options.closure_cap);
}

ObservableComplex build_complex(const Scenario &sc) {
    std::map<PauliLabel, zd> gamma;
    for (const auto &[k, v] : sc.rephase) {
        gamma[parse_label(k, sc.d, sc.n)] = v % sc.d;
    }
    PhaseConvention conv = rephase(PhaseConvention{}, gamma);
    BuildOptions opts;
    opts.volumes = sc.options.volumes;
    return ObservableComplex::build(scenario_labels(sc), conv, opts);
}

std::optional<StateData> build_state(const Scenario &sc, const ObservableComplex &cx) {
    if (sc.state.empty()) {
        return std::nullopt;
    }
    std::vector<std::pair<PauliOperator, zd>> st;
    for (const auto &[op, v] : sc.state) {
        st.emplace_back(parse_pauli(op, sc.d, sc.n), v % sc.d);
    }
    return make_state_data(cx, st);
}

std::vector<SymmetryElement> build_symmetries(const Scenario &sc, const ObservableComplex &cx) {
    std::vector<SymmetryElement> out;
    for (const auto &s : sc.symmetries) {
        switch (s.kind) {
            case SymmetrySpec::Kind::Gates:
                out.push_back(from_clifford(cx, s.gates, s.name));
                break;
            case SymmetrySpec::Kind::Pauli:
                out.push_back(from_pauli(cx, parse_label(s.pauli, sc.d, sc.n), s.name));
                break;
            case SymmetrySpec::Kind::Table: {
                std::vector<std::pair<PauliLabel, PauliLabel>> perm;
                for (const auto &[a, b] : s.perm) {
                    perm.emplace_back(parse_label(a, sc.d, sc.n), parse_label(b, sc.d, sc.n));
                }
                std::map<PauliLabel, zd> phi;
                for (const auto &[a, v] : s.phi) {
                    phi[parse_label(a, sc.d, sc.n)] = v;
                }
                out.push_back(from_table(cx, perm, phi, s.name));
                break;
            }
        }
    }
    if (sc.pauli_symmetries) {
        for (uint32_t j = 0; j < sc.n; ++j) {
            for (int which = 0; which < 2; ++which) {
                PauliLabel p(sc.n, sc.d);
                (which == 0 ? p.x : p.z)[j] = 1;
                out.push_back(from_pauli(cx, p, std::string(which == 0 ? "X" : "Z") + std::to_string(j + 1)));
            }
        }
    }
    return out;
}

SymmetryGroup build_group(const Scenario &sc, const ObservableComplex &cx) {
    return SymmetryGroup::generate(cx, build_symmetries(sc, cx), sc.options.group_cap);
}

std::vector<Chain> build_contexts(const Scenario &sc, const ObservableComplex &cx) {
    std::vector<Chain> out;
    for (const auto &c : sc.contexts) {
        std::vector<PauliLabel> ops;
        for (const auto &o : c) {
            ops.push_back(parse_label(o, sc.d, sc.n));
        }
        out.push_back(context_chain(cx, ops));
    }
    return out;
}

Chain build_chain(const Scenario &sc, const ObservableComplex &cx, const std::string &name) {
    auto it = sc.chains.find(name);
    if (it == sc.chains.end()) {
        fail(ErrorKind::InvalidInput, "scenario has no chain named '" + name + "'");
    }
    Chain out{2, {}};
    for (const auto &t : it->second) {
        std::vector<PauliLabel> ops;
        for (const auto &o : t.ops) {
            ops.push_back(parse_label(o, sc.d, sc.n));
        }
        Chain c = t.is_face ? face_chain(cx, ops[0], ops[1], t.coeff) : context_chain(cx, ops).scaled(t.coeff, cx.d());
        out = out.plus(c, cx.d());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Reports.

json complex_to_json(const ObservableComplex &cx) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "complex";
    j["d"] = cx.d();
    j["n"] = cx.num_qudits();
    json gamma = json::object();
    for (const auto &[a, v] : cx.convention().table()) {
        gamma[a.str()] = v;
    }
    j["gamma"] = gamma;
    json labels = json::array();
    for (const auto &a : cx.labels()) {
        labels.push_back(a.str());
    }
    j["labels"] = labels;
    json faces = json::array();
    for (size_t f = 0; f < cx.faces().size(); ++f) {
        const Face &fc = cx.faces()[f];
        faces.push_back({fc.a, fc.b, fc.sum, cx.beta()[f]});
    }
    j["faces"] = faces;
    j["counts"] = {{"edges", cx.labels().size()}, {"faces", cx.faces().size()}};
    if (cx.has_volumes()) {
        json vols = json::array();
        for (const Volume &v : cx.volumes()) {
            vols.push_back({v.a, v.b, v.c});
        }
        j["volumes"] = vols;
        j["counts"]["volumes"] = cx.volumes().size();
    }
    json bd = json::array();
    ModMatrix B = cx.boundary_matrix(2);
    for (size_t r = 0; r < B.rows(); ++r) {
        for (auto [c, v] : B.row(r)) {
            bd.push_back({r, c, v});
        }
    }
    j["boundary2"] = bd;
    return j;
}

ObservableComplex complex_from_json(const json &j) {
    try {
        check_schema(j);
        const uint32_t d = j.at("d").get<uint32_t>();
        const uint32_t n = j.at("n").get<uint32_t>();
        std::vector<PauliLabel> labels;
        for (const auto &s : j.at("labels")) {
            labels.push_back(parse_label(s.get<std::string>(), d, n));
        }
        std::map<PauliLabel, zd> gamma;
        if (j.contains("gamma")) {
            for (const auto &[k, v] : j.at("gamma").items()) {
                gamma[parse_label(k, d, n)] = v.get<zd>();
            }
        }
        BuildOptions opts;
        opts.volumes = j.contains("volumes");
        ObservableComplex cx = ObservableComplex::build(labels, rephase(PhaseConvention{}, gamma), opts);
        if (cx.labels() != labels) {
            fail(ErrorKind::InvalidInput, "stored labels are not in canonical order");
        }
        const json &faces = j.at("faces");
        if (faces.size() != cx.faces().size()) {
            fail(ErrorKind::InvalidInput, "stored face count disagrees with the rebuilt complex");
        }
        for (size_t f = 0; f < faces.size(); ++f) {
            const Face &fc = cx.faces()[f];
            if (faces[f].at(0).get<uint32_t>() != fc.a || faces[f].at(1).get<uint32_t>() != fc.b ||
                faces[f].at(2).get<uint32_t>() != fc.sum || faces[f].at(3).get<zd>() != cx.beta()[f]) {
                fail(ErrorKind::InvalidInput, "stored face " + std::to_string(f) + " disagrees with the rebuilt complex");
            }
        }
        if (opts.volumes && j.at("volumes").size() != cx.volumes().size()) {
            fail(ErrorKind::InvalidInput, "stored volume count disagrees with the rebuilt complex");
        }
        return cx;
    } catch (const json::exception &e) {
        fail(ErrorKind::InvalidInput, std::string("bad complex document: ") + e.what());
    }
}

json chain_to_json(const ObservableComplex &cx, const Chain &c) {
    json out = json::array();
    for (auto [cell, v] : c.terms) {
        switch (c.degree) {
            case 1:
                out.push_back({{"label", cx.labels()[cell].str()}, {"coeff", v}});
                break;
            case 2: {
                const Face &f = cx.faces()[cell];
                out.push_back({{"a", cx.labels()[f.a].str()}, {"b", cx.labels()[f.b].str()}, {"coeff", v}});
                break;
            }
            case 3: {
                const Volume &vol = cx.volumes()[cell];
                out.push_back({{"a", cx.labels()[vol.a].str()},
                               {"b", cx.labels()[vol.b].str()},
                               {"c", cx.labels()[vol.c].str()},
                               {"coeff", v}});
                break;
            }
            default:
                out.push_back({{"cell", cell}, {"coeff", v}});
        }
    }
    return out;
}

json verdict_to_json(const ObservableComplex &cx, const Verdict &v, const StateData *st) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "parity-verdict";
    j["relative"] = v.relative;
    j["verdict"] = v.contextual ? "contextual" : "noncontextual";
    if (v.contextual) {
        j["witness_faces"] = v.witness.terms.size();
        j["beta_of_witness"] = v.witness_value;
        j["witness"] = chain_to_json(cx, v.witness);
        json cert = json::array();
        for (size_t k = 0; k < v.certificate.size(); ++k) {
            if (v.certificate[k]) {
                cert.push_back({{"row", k}, {"coeff", v.certificate[k]}});
            }
        }
        j["certificate"] = cert;
        j["verified"] = verify_witness(cx, v.witness, st);
    } else {
        json a = json::object();
        for (size_t k = 0; k < v.assignment.size(); ++k) {
            a[cx.labels()[k].str()] = v.assignment[k];
        }
        j["assignment"] = a;
        j["verified"] = is_consistent(cx, v.assignment, st);
    }
    return j;
}

json witness_to_json(const ObservableComplex &cx, const SymmetryGroup &G, const SymmetryWitness &w) {
    const SymmetryElement &g = G.elements()[w.element];
    return {{"element", g.name},
            {"element_index", w.element},
            {"faces", chain_to_json(cx, w.face_chain)},
            {"face_count", w.face_chain.terms.size()},
            {"boundary", chain_to_json(cx, w.boundary)},
            {"phi_of_boundary", w.value}};
}

json class_report_to_json(const ObservableComplex &cx, const CocycleClassReport &r) {
    json j;
    j["quotient_order"] = r.q_order;
    j["relative"] = r.relative;
    j["cocycle_ok"] = r.cocycle_ok;
    if (r.h1_computed) {
        j["h1_class"] = r.h1_vanishes ? "zero" : "nonzero";
        if (r.h1_vanishes) {
            json s = json::object();
            for (size_t k = 0; k < r.h1_witness.size(); ++k) {
                if (r.h1_witness[k]) {
                    s[cx.labels()[k].str()] = r.h1_witness[k];
                }
            }
            j["h1_coboundary_of"] = s;
        }
    }
    if (r.sigma_computed) {
        j["sigma_class"] = r.sigma_vanishes ? "zero" : "nonzero";
        if (r.sigma_vanishes) {
            j["chi_from_n"] = r.chi_from_n;
            json chi = json::array();
            for (const auto &c : r.chi) {
                json m = json::object();
                for (size_t k = 0; k < c.size(); ++k) {
                    if (c[k]) {
                        m[cx.labels()[k].str()] = c[k];
                    }
                }
                chi.push_back(m);
            }
            j["chi"] = chi;
        }
    }
    return j;
}

json run_record_to_json(const RunRecord &r) {
    return {{"schema", kSchema}, {"kind", "run-record"}, {"input", r.input}, {"q", r.q},
            {"s", r.s},          {"o", r.o},             {"backend", backend_name(r.backend)},
            {"seed", r.seed}};
}

json load_document(const std::string &source) {
    if (source.rfind("demo:", 0) == 0) {
        return demo_document(source.substr(5));
    }
    std::ifstream in(source);
    if (!in) {
        fail(ErrorKind::InvalidInput, "cannot open '" + source + "'");
    }
    try {
        return json::parse(in);
    } catch (const json::exception &e) {
        fail(ErrorKind::InvalidInput, "'" + source + "' is not valid JSON: " + e.what());
    }
}

}  // namespace ctx
