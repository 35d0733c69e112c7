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

#include <CLI11.hpp>

#include <chrono>
#include <iostream>

#include "ctx/error.h"
#include "ctx/mbqc.h"
#include "ctx/parallel.h"
#include "ctx/parity.h"
#include "ctx/scenario.h"
#include "ctx/symmetry.h"

using namespace ctx;

namespace {

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
};

Scenario load_scenario(const std::string &source) {
    return with_bridge(Scenario::from_json(load_document(source)));
}

MbqcSpec load_mbqc(const std::string &source) {
    json doc = load_document(source);
    if (doc.contains("mbqc")) {
        return mbqc_from_json(doc.at("mbqc"));
    }
    return mbqc_from_json(doc);
}

Backend parse_backend(const std::string &name) {
    if (name == "auto") {
        return Backend::Auto;
    }
    if (name == "statevector") {
        return Backend::Statevector;
    }
    if (name == "stabilizer") {
        return Backend::Stabilizer;
    }
    fail(ErrorKind::InvalidInput, "unknown backend '" + name + "'");
}

std::vector<uint8_t> parse_bits(const std::string &s) {
    std::vector<uint8_t> out;
    for (char c : s) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::InvalidInput, "input must be a string of 0 and 1");
        }
        out.push_back(static_cast<uint8_t>(c - '0'));
    }
    return out;
}

json parity(const Scenario &sc, bool relative) {
    Timer t;
    ObservableComplex cx = build_complex(sc);
    json j;
    if (relative) {
        auto st = build_state(sc, cx);
        if (!st) {
            fail(ErrorKind::InvalidInput, "scenario has no state block");
        }
        j = verdict_to_json(cx, check_state_dependent(cx, *st), &*st);
    } else {
        j = verdict_to_json(cx, check_state_independent(cx));
    }
    j["scenario"] = sc.name;
    j["edges"] = cx.labels().size();
    j["elapsed_ms"] = t.ms();
    return j;
}

json symmetry(const Scenario &sc, bool relative, size_t budget, size_t max_terms) {
    Timer t;
    ObservableComplex cx = build_complex(sc);
    std::optional<StateData> st;
    if (relative) {
        st = build_state(sc, cx);
        if (!st) {
            fail(ErrorKind::InvalidInput, "scenario has no state block");
        }
    }
    const StateData *stp = st ? &*st : nullptr;
    SymmetryGroup G = build_group(sc, cx);
    json j;
    j["schema"] = kSchema;
    j["kind"] = "symmetry-verdict";
    j["scenario"] = sc.name;
    j["relative"] = relative;
    j["group_order"] = G.size();
    WitnessSearchOptions opts{budget, max_terms};
    auto w = find_symmetry_witness(G, cx, build_contexts(sc, cx), stp, opts);
    j["witness"] = w ? witness_to_json(cx, G, *w) : json(nullptr);
    bool h1_nonzero = false;
    try {
        CocycleClassReport r = h1_class(G, cx, stp, sc.options.q_cap);
        h1_nonzero = !r.h1_vanishes;
        j["h1"] = class_report_to_json(cx, r);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::QTooLarge) {
            throw;
        }
        j["h1"] = {{"skipped", e.what()}};
    }
    j["verdict"] = (w || h1_nonzero) ? "contextual" : "inconclusive";
    j["elapsed_ms"] = t.ms();
    return j;
}

json sigma(const Scenario &sc, bool relative) {
    Timer t;
    ObservableComplex cx = build_complex(sc);
    std::optional<StateData> st;
    if (relative) {
        st = build_state(sc, cx);
        if (!st) {
            fail(ErrorKind::InvalidInput, "scenario has no state block");
        }
    }
    const StateData *stp = st ? &*st : nullptr;
    SymmetryGroup G = build_group(sc, cx);
    CocycleClassReport h1 = h1_class(G, cx, stp, sc.options.q_cap);
    CocycleClassReport sg = sigma_class(G, cx, stp, sc.options.q_cap);
    h1.sigma_computed = true;
    h1.sigma_vanishes = sg.sigma_vanishes;
    h1.chi_from_n = sg.chi_from_n;
    h1.chi = sg.chi;
    json j = class_report_to_json(cx, h1);
    j["schema"] = kSchema;
    j["kind"] = "class-report";
    j["scenario"] = sc.name;
    j["group_order"] = G.size();
    if (sg.sigma_vanishes) {
        try {
            std::vector<size_t> hat = split_section(G, cx, sg.chi, stp);
            json names = json::array();
            for (size_t i : hat) {
                names.push_back(G.elements()[i].name);
            }
            j["split_section"] = names;
        } catch (const Error &e) {
            j["split_section"] = {{"error", error_kind_name(e.kind())}, {"message", e.what()}};
        }
    }
    j["elapsed_ms"] = t.ms();
    return j;
}

json homologous_cmd(const Scenario &sc, const std::string &from, const std::string &to) {
    Timer t;
    ObservableComplex cx = build_complex(sc);
    Chain f1 = build_chain(sc, cx, from);
    Chain f2 = build_chain(sc, cx, to);
    auto v = homologous(cx, f1, f2);
    json j;
    j["schema"] = kSchema;
    j["kind"] = "homology";
    j["scenario"] = sc.name;
    j["homologous"] = v.has_value();
    j["beta_from"] = witness_value(cx, f1);
    j["beta_to"] = witness_value(cx, f2);
    if (v) {
        j["volume_cells"] = v->terms.size();
        j["volume"] = chain_to_json(cx, *v);
    }
    j["elapsed_ms"] = t.ms();
    return j;
}

json table_cmd(const MbqcSpec &spec, uint64_t trials, uint64_t seed, Backend backend) {
    Timer t;
    FunctionTable ft = function_table(spec, trials, seed, backend);
    mpq_class thr = contextuality_threshold(ft.f);
    double success = 0;
    for (double f : ft.frequency) {
        success += f;
    }
    success /= static_cast<double>(ft.frequency.size());
    json j;
    j["schema"] = kSchema;
    j["kind"] = "function-table";
    j["table"] = ft.f.str();
    j["frequency"] = ft.frequency;
    j["trials"] = trials;
    j["seed"] = seed;
    j["nonlinearity"] = nonlinearity(ft.f);
    j["threshold"] = thr.get_d();
    j["threshold_exact"] = thr.get_str();
    j["mean_success"] = success;
    j["exceeds_threshold"] = success > thr.get_d();
    j["elapsed_ms"] = t.ms();
    return j;
}

json demo(const std::string &name) {
    json j;
    j["schema"] = kSchema;
    j["kind"] = "demo";
    j["demo"] = name;
    Scenario sc = load_scenario("demo:" + name);
    if (name == "mermin-square" || name == "mermin-star") {
        j["parity"] = parity(sc, false);
    } else if (name == "decorated-star") {
        j["parity"] = parity(sc, false);
        j["symmetry"] = symmetry(sc, false, sc.options.budget, sc.options.max_terms);
        j["sigma"] = sigma(sc, false);
    } else if (name == "ghz-sd-star") {
        j["parity"] = parity(sc, true);
        j["symmetry"] = symmetry(sc, true, sc.options.budget, sc.options.max_terms);
    } else if (name == "square-star") {
        j["homologous"] = homologous_cmd(sc, "square", "star");
    } else if (name == "ghz-mbqc") {
        j["table"] = table_cmd(*sc.mbqc, 10000, 1, Backend::Auto);
        j["parity"] = parity(sc, true);
    }
    return j;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"ctx: cohomological contextuality checks for Pauli observables"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
    bool compact = false;
    app.add_flag("--compact", compact, "single-line JSON");

    std::string source, from = "square", to = "star", input, backend = "auto", bits;
    uint64_t seed = 1, trials = 10000;
    size_t budget = 0, max_terms = 0;
    bool no_volumes = false, relative = false;

    auto *build = app.add_subcommand("build", "build the observable complex and print it");
    build->add_option("source", source, "scenario file or demo:NAME")->required();
    build->add_flag("--no-volumes", no_volumes, "skip 3-cells");
    auto *pp = app.add_subcommand("prove-parity", "state-independent parity test");
    pp->add_option("source", source)->required();
    auto *ppsd = app.add_subcommand("prove-parity-sd", "state-dependent parity test");
    ppsd->add_option("source", source)->required();
    auto *ps = app.add_subcommand("prove-symmetry", "symmetry witness search and H1 class");
    auto *pssd = app.add_subcommand("prove-symmetry-sd", "state-dependent symmetry test");
    for (auto *c : {ps, pssd}) {
        c->add_option("source", source)->required();
        c->add_option("--budget", budget, "element-chain checks before giving up");
        c->add_option("--max-terms", max_terms, "largest face combination tried");
    }
    auto *sg = app.add_subcommand("sigma", "H1 class, sigma class and split section");
    sg->add_option("source", source)->required();
    sg->add_flag("--relative", relative, "use the state block");
    auto *hom = app.add_subcommand("homologous", "find V with F1 - F2 = boundary of V");
    hom->add_option("source", source)->required();
    hom->add_option("--from", from, "chain name");
    hom->add_option("--to", to, "chain name");
    auto *mr = app.add_subcommand("mbqc-run", "one MBQC run");
    mr->add_option("source", source)->required();
    mr->add_option("--input", input, "input bits, first input first")->required();
    mr->add_option("--seed", seed);
    mr->add_option("--backend", backend, "auto | statevector | stabilizer");
    auto *mt = app.add_subcommand("mbqc-table", "function table over all inputs");
    mt->add_option("source", source)->required();
    mt->add_option("--trials", trials);
    mt->add_option("--seed", seed);
    mt->add_option("--backend", backend);
    auto *nl = app.add_subcommand("nonlinearity", "distance to affine functions");
    nl->add_option("table", bits, "truth table bits")->required();
    auto *dm = app.add_subcommand("demo", "run a built-in scenario");
    dm->add_option("name", source, "demo name or 'list'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        set_num_threads(threads);
        json out;
        if (*build) {
            Scenario sc = load_scenario(source);
            if (no_volumes) {
                sc.options.volumes = false;
            }
            out = complex_to_json(build_complex(sc));
        } else if (*pp || *ppsd) {
            out = parity(load_scenario(source), static_cast<bool>(*ppsd));
        } else if (*ps || *pssd) {
            Scenario sc = load_scenario(source);
            out = symmetry(sc, static_cast<bool>(*pssd), budget ? budget : sc.options.budget,
                           max_terms ? max_terms : sc.options.max_terms);
        } else if (*sg) {
            out = sigma(load_scenario(source), relative);
        } else if (*hom) {
            out = homologous_cmd(load_scenario(source), from, to);
        } else if (*mr) {
            MbqcSpec spec = load_mbqc(source);
            RunRecord rec = run(spec, parse_bits(input), seed, parse_backend(backend));
            out = run_record_to_json(rec);
            out["consistent"] = check_record(spec, rec);
        } else if (*mt) {
            out = table_cmd(load_mbqc(source), trials, seed, parse_backend(backend));
        } else if (*nl) {
            BooleanFunction f = BooleanFunction::from_string(bits);
            mpq_class thr = contextuality_threshold(f);
            out = {{"schema", kSchema}, {"kind", "nonlinearity"}, {"table", f.str()}, {"m", f.m},
                   {"nonlinearity", nonlinearity(f)}, {"threshold", thr.get_d()},
                   {"threshold_exact", thr.get_str()}};
        } else if (*dm) {
            if (source == "list") {
                out = {{"schema", kSchema}, {"demos", demo_names()}};
            } else {
                out = demo(source);
            }
        }
        std::cout << out.dump(compact ? -1 : 2) << "\n";
        return 0;
    } catch (const Error &e) {
        std::cerr << "ctx: " << e.what() << "\n";
        return e.kind() == ErrorKind::BudgetExceeded ? 3 : 2;
    }
}
