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

#include "ctx/mbqc.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <regex>
#include <sstream>

#include "ctx/error.h"
#include "ctx/parallel.h"

namespace ctx {

namespace {

constexpr double kTol = 1e-9;
constexpr uint32_t kMaxStatevectorQubits = 12;

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

Angle Angle::quarter(int k) {
    k = ((k % 4) + 4) % 4;
    return Angle{k * std::numbers::pi / 2, k};
}

Angle Angle::from_radians(double t) {
    double q = t / (std::numbers::pi / 2);
    double r = std::round(q);
    if (std::abs(q - r) < 1e-12) {
        return quarter(static_cast<int>(r));
    }
    return Angle{t, std::nullopt};
}

Angle Angle::parse(const std::string &text) {
    // [-]<num>, [-][num]pi[/den], [-][num]*pi[/den]
    static const std::regex re(R"(^\s*([+-]?)\s*([0-9]*\.?[0-9]*)\s*\*?\s*(pi)?\s*(?:/\s*([0-9]+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(text, m, re) || (m[2].length() == 0 && !m[3].matched)) {
        fail(ErrorKind::InvalidInput, "cannot parse angle '" + text + "'");
    }
    double num = m[2].length() ? std::stod(m[2].str()) : 1.0;
    long den = m[4].matched ? std::stol(m[4].str()) : 1;
    if (den == 0) {
        fail(ErrorKind::InvalidInput, "zero denominator in angle '" + text + "'");
    }
    int sign = m[1].str() == "-" ? -1 : 1;
    if (m[3].matched) {
        // Exact quarter turns when num * 2 / den is an integer.
        double q = sign * num * 2.0 / den;
        if (std::abs(q - std::round(q)) < 1e-12 && m[2].str().find('.') == std::string::npos) {
            return quarter(static_cast<int>(std::round(q)));
        }
        return Angle{sign * num * std::numbers::pi / den, std::nullopt};
    }
    return from_radians(sign * num / den);
}

std::string Angle::str() const {
    if (quarter_turns) {
        static const char *names[] = {"0", "pi/2", "pi", "3pi/2"};
        return names[*quarter_turns];
    }
    std::ostringstream os;
    os.precision(17);
    os << radians;
    return os.str();
}

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::Auto:
            return "auto";
        case Backend::Statevector:
            return "statevector";
        case Backend::Stabilizer:
            return "stabilizer";
    }
    return "?";
}

void MbqcSpec::check() const {
    if (n == 0) {
        fail(ErrorKind::InvalidInput, "MBQC spec needs at least one qubit");
    }
    if (angles.size() != n) {
        fail(ErrorKind::InvalidInput, "need one angle entry per qubit");
    }
    if (T.size() != n) {
        fail(ErrorKind::InvalidInput, "T must be n x n");
    }
    for (uint32_t i = 0; i < n; ++i) {
        if (T[i].size() != n) {
            fail(ErrorKind::InvalidInput, "T must be n x n");
        }
        for (uint32_t j = i; j < n; ++j) {
            if (T[i][j] & 1) {
                fail(ErrorKind::InvalidInput, "T must be strictly lower triangular");
            }
        }
    }
    if (S.size() != n) {
        fail(ErrorKind::InvalidInput, "S must have n rows");
    }
    for (const auto &row : S) {
        if (row.size() != inputs()) {
            fail(ErrorKind::InvalidInput, "S rows must have equal length");
        }
    }
    for (const auto &row : Z) {
        if (row.size() != n) {
            fail(ErrorKind::InvalidInput, "Z rows must have length n");
        }
    }
    if (!flip_prob.empty()) {
        if (flip_prob.size() != n) {
            fail(ErrorKind::InvalidInput, "flip_prob needs one entry per qubit");
        }
        for (double p : flip_prob) {
            if (!(p >= 0.0 && p <= 1.0)) {
                fail(ErrorKind::InvalidInput, "flip probability outside [0, 1]");
            }
        }
    }
    switch (resource.kind) {
        case ResourceKind::Amplitudes:
            if (n > kMaxStatevectorQubits || resource.amplitudes.size() != (size_t{1} << n)) {
                fail(ErrorKind::InvalidInput, "amplitude vector must have length 2^n");
            }
            break;
        case ResourceKind::Stabilizers:
            if (resource.stabilizers.size() != n) {
                fail(ErrorKind::InvalidInput, "stabilizer resource needs n generators");
            }
            for (const auto &g : resource.stabilizers) {
                if (g.label.d != 2 || g.label.num_qudits() != n || g.phase % 2 != 0) {
                    fail(ErrorKind::InvalidInput, "stabilizer generators must be Hermitian n-qubit Paulis");
                }
            }
            for (size_t a = 0; a < n; ++a) {
                for (size_t b = a + 1; b < n; ++b) {
                    if (!commutes(resource.stabilizers[a].label, resource.stabilizers[b].label)) {
                        fail(ErrorKind::InvalidInput, "stabilizer generators must commute");
                    }
                }
            }
            break;
        default:
            break;
    }
}

bool MbqcSpec::pauli_angles() const {
    return std::all_of(angles.begin(), angles.end(), [](const std::array<Angle, 2> &a) {
        return a[0].quarter_turns.has_value() && a[1].quarter_turns.has_value();
    });
}

MbqcSpec ghz_or_spec() {
    MbqcSpec spec;
    spec.n = 3;
    spec.resource.kind = ResourceKind::GHZ;
    spec.angles.assign(3, {Angle::quarter(0), Angle::quarter(1)});
    spec.Z = {{1, 1, 1}};
    spec.T.assign(3, std::vector<uint8_t>(3, 0));
    spec.S = {{1, 0}, {0, 1}, {1, 1}};
    return spec;
}

// ---------------------------------------------------------------------------
// Resource stabilizers.

namespace {

PauliOperator single_qubit(uint32_t n, uint32_t j, zd x, zd z, zd phase = 0) {
    PauliOperator p = identity_operator(n, 2);
    p.label.x[j] = x;
    p.label.z[j] = z;
    p.phase = phase;
    return p;
}

std::vector<PauliOperator> resource_generators(const MbqcSpec &spec) {
    const uint32_t n = spec.n;
    std::vector<PauliOperator> gens;
    switch (spec.resource.kind) {
        case ResourceKind::GHZ: {
            PauliOperator all_x = identity_operator(n, 2);
            std::fill(all_x.label.x.begin(), all_x.label.x.end(), 1);
            gens.push_back(all_x);
            for (uint32_t j = 0; j + 1 < n; ++j) {
                PauliOperator zz = identity_operator(n, 2);
                zz.label.z[j] = zz.label.z[j + 1] = 1;
                gens.push_back(zz);
            }
            break;
        }
        case ResourceKind::Plus:
            for (uint32_t j = 0; j < n; ++j) {
                gens.push_back(single_qubit(n, j, 1, 0));
            }
            break;
        case ResourceKind::Stabilizers:
            gens = spec.resource.stabilizers;
            break;
        case ResourceKind::Amplitudes:
            fail(ErrorKind::BackendMismatch, "an amplitude resource has no stabilizer description");
    }
    return gens;
}

/// Operator measured on qubit j for a Pauli direction: X, Y, -X, -Y.
PauliOperator pauli_direction(uint32_t n, uint32_t j, int quarter) {
    PauliOperator p = quarter % 2 == 0 ? single_qubit(n, j, 1, 0) : single_qubit(n, j, 1, 1);
    p.phase = quarter >= 2 ? 2 : 0;
    return p;
}

/// Sign of P in the group generated by gens: 0 for +P, 1 for -P, none if +-P is not in the group.
std::optional<uint8_t> stabilizer_value(const std::vector<PauliOperator> &gens, const PauliOperator &P) {
    const uint32_t n = static_cast<uint32_t>(P.label.num_qudits());
    ModMatrix A(2 * n, gens.size(), 2);
    std::vector<zd> b(2 * n);
    for (size_t g = 0; g < gens.size(); ++g) {
        for (uint32_t j = 0; j < n; ++j) {
            A.set(j, g, gens[g].label.x[j]);
            A.set(n + j, g, gens[g].label.z[j]);
        }
    }
    for (uint32_t j = 0; j < n; ++j) {
        b[j] = P.label.x[j];
        b[n + j] = P.label.z[j];
    }
    SolveResult r = solve(A, b, SolveOptions{false});
    if (!r.feasible) {
        return std::nullopt;
    }
    PauliOperator acc = identity_operator(n, 2);
    for (size_t g = 0; g < gens.size(); ++g) {
        if (r.solution[g]) {
            acc = multiply(acc, gens[g]);
        }
    }
    zd rel = reduce(static_cast<int64_t>(acc.phase) - P.phase, 4);
    if (rel % 2 != 0) {
        fail(ErrorKind::InvalidInput, "non-Hermitian stabilizer product");
    }
    return static_cast<uint8_t>(rel / 2);
}

// ---------------------------------------------------------------------------
// Backends.

class Simulator {
   public:
    virtual ~Simulator() = default;
    /// Measures cos(t) X_j + sin(t) Y_j; u uniform in [0, 1) picks the branch.
    virtual uint8_t measure(uint32_t j, const Angle &t, double u) = 0;
};

class StatevectorSim : public Simulator {
   public:
    explicit StatevectorSim(const MbqcSpec &spec) : n_(spec.n) {
        if (n_ > kMaxStatevectorQubits) {
            fail(ErrorKind::InvalidInput, "statevector backend supports at most 12 qubits");
        }
        const size_t N = size_t{1} << n_;
        amp_.assign(N, 0.0);
        switch (spec.resource.kind) {
            case ResourceKind::GHZ:
                amp_[0] = amp_[N - 1] = 1.0 / std::sqrt(2.0);
                break;
            case ResourceKind::Plus:
                std::fill(amp_.begin(), amp_.end(), 1.0 / std::sqrt(static_cast<double>(N)));
                break;
            case ResourceKind::Amplitudes:
                amp_ = spec.resource.amplitudes;
                break;
            case ResourceKind::Stabilizers: {
                bool found = false;
                for (size_t k = 0; k < N && !found; ++k) {
                    std::vector<std::complex<double>> v(N, 0.0);
                    v[k] = 1.0;
                    for (const auto &g : spec.resource.stabilizers) {
                        std::vector<std::complex<double>> gv = apply(g, v);
                        for (size_t t = 0; t < N; ++t) {
                            v[t] = 0.5 * (v[t] + gv[t]);
                        }
                    }
                    found = norm2(v) > kTol;
                    if (found) {
                        amp_ = v;
                    }
                }
                if (!found) {
                    fail(ErrorKind::InvalidInput, "stabilizer generators have no common +1 eigenstate");
                }
                break;
            }
        }
        double nn = norm2(amp_);
        if (nn < kTol) {
            fail(ErrorKind::InvalidInput, "resource state has zero norm");
        }
        scale(1.0 / std::sqrt(nn));
    }

    uint8_t measure(uint32_t j, const Angle &t, double u) override {
        const size_t bit = size_t{1} << j;
        const std::complex<double> e = std::polar(1.0, t.radians);
        // O|0> = e^{it}|1>, O|1> = e^{-it}|0>; projector (1 + (-1)^s O)/2.
        auto project = [&](int sign) {
            std::vector<std::complex<double>> out(amp_.size());
            for (size_t k = 0; k < amp_.size(); ++k) {
                std::complex<double> o = (k & bit) ? e * amp_[k ^ bit] : std::conj(e) * amp_[k ^ bit];
                out[k] = 0.5 * (amp_[k] + static_cast<double>(sign) * o);
            }
            return out;
        };
        std::vector<std::complex<double>> plus = project(+1);
        double p0 = norm2(plus);
        uint8_t s;
        if (p0 >= 1.0 - kTol) {
            s = 0;
        } else if (p0 <= kTol) {
            s = 1;
        } else {
            s = u < p0 ? 0 : 1;
        }
        amp_ = s == 0 ? std::move(plus) : project(-1);
        scale(1.0 / std::sqrt(norm2(amp_)));
        return s;
    }

   private:
    std::vector<std::complex<double>> apply(const PauliOperator &p, const std::vector<std::complex<double>> &v) const {
        size_t xmask = 0, zmask = 0;
        for (uint32_t j = 0; j < n_; ++j) {
            xmask |= static_cast<size_t>(p.label.x[j] & 1) << j;
            zmask |= static_cast<size_t>(p.label.z[j] & 1) << j;
        }
        static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        std::complex<double> c = ipow[(p.phase + eta_phase(p.label)) % 4];
        std::vector<std::complex<double>> out(v.size());
        for (size_t k = 0; k < v.size(); ++k) {
            double sgn = __builtin_popcountll(k & zmask) % 2 ? -1.0 : 1.0;
            out[k ^ xmask] = c * sgn * v[k];
        }
        return out;
    }
    static double norm2(const std::vector<std::complex<double>> &v) {
        double acc = 0;
        for (const auto &a : v) {
            acc += std::norm(a);
        }
        return acc;
    }
    void scale(double f) {
        for (auto &a : amp_) {
            a *= f;
        }
    }

    uint32_t n_;
    std::vector<std::complex<double>> amp_;
};

class StabilizerSim : public Simulator {
   public:
    explicit StabilizerSim(const MbqcSpec &spec) : n_(spec.n), gens_(resource_generators(spec)) {
        if (gens_.size() != n_) {
            fail(ErrorKind::InvalidInput, "stabilizer state needs n generators");
        }
        // Independence: the only product equal to +-I is the empty one.
        ModMatrix A(2 * n_, n_, 2);
        for (uint32_t g = 0; g < n_; ++g) {
            for (uint32_t j = 0; j < n_; ++j) {
                A.set(j, g, gens_[g].label.x[j]);
                A.set(n_ + j, g, gens_[g].label.z[j]);
            }
        }
        if (!kernel(A).empty()) {
            fail(ErrorKind::InvalidInput, "stabilizer generators are not independent");
        }
        if (stabilizer_value(gens_, identity_operator(n_, 2)) != uint8_t{0}) {
            fail(ErrorKind::InvalidInput, "stabilizer generators contain -I");
        }
    }

    uint8_t measure(uint32_t j, const Angle &t, double u) override {
        if (!t.quarter_turns) {
            fail(ErrorKind::BackendMismatch, "stabilizer backend measures X or Y directions only");
        }
        PauliOperator P = pauli_direction(n_, j, *t.quarter_turns);
        std::vector<size_t> anti;
        for (size_t g = 0; g < gens_.size(); ++g) {
            if (!commutes(gens_[g].label, P.label)) {
                anti.push_back(g);
            }
        }
        if (anti.empty()) {
            return *stabilizer_value(gens_, P);
        }
        uint8_t s = u < 0.5 ? 0 : 1;
        const size_t k = anti.front();
        for (size_t i = 1; i < anti.size(); ++i) {
            gens_[anti[i]] = multiply(gens_[anti[i]], gens_[k]);
        }
        P.phase = (P.phase + 2 * s) % 4;
        gens_[k] = P;
        return s;
    }

   private:
    uint32_t n_;
    std::vector<PauliOperator> gens_;
};

Backend resolve_backend(const MbqcSpec &spec, Backend b) {
    if (b == Backend::Auto) {
        return spec.pauli_angles() && spec.resource.kind != ResourceKind::Amplitudes ? Backend::Stabilizer
                                                                                      : Backend::Statevector;
    }
    if (b == Backend::Stabilizer && !spec.pauli_angles()) {
        fail(ErrorKind::BackendMismatch, "stabilizer backend needs every angle to be a multiple of pi/2");
    }
    return b;
}

}  // namespace

RunRecord run(const MbqcSpec &spec, const std::vector<uint8_t> &input, uint64_t seed, Backend backend) {
    spec.check();
    if (input.size() != spec.inputs()) {
        fail(ErrorKind::InvalidInput, "input has " + std::to_string(input.size()) + " bits, spec expects " +
                                          std::to_string(spec.inputs()));
    }
    backend = resolve_backend(spec, backend);
    std::unique_ptr<Simulator> sim;
    if (backend == Backend::Stabilizer) {
        sim = std::make_unique<StabilizerSim>(spec);
    } else {
        sim = std::make_unique<StatevectorSim>(spec);
    }
    RunRecord rec;
    rec.input = input;
    rec.backend = backend;
    rec.seed = seed;
    rec.q.assign(spec.n, 0);
    rec.s.assign(spec.n, 0);
    for (uint32_t i = 0; i < spec.n; ++i) {
        uint32_t q = 0;
        for (uint32_t j = 0; j < i; ++j) {
            q ^= spec.T[i][j] & rec.s[j];
        }
        for (uint32_t k = 0; k < spec.inputs(); ++k) {
            q ^= spec.S[i][k] & input[k] & 1;
        }
        rec.q[i] = static_cast<uint8_t>(q);
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(i + 1)));
        std::uniform_real_distribution<double> uni(0.0, 1.0);
        double u = uni(rng);
        uint8_t s = sim->measure(i, spec.angles[i][q], u);
        if (!spec.flip_prob.empty() && uni(rng) < spec.flip_prob[i]) {
            s ^= 1;
        }
        rec.s[i] = s;
    }
    for (const auto &row : spec.Z) {
        uint8_t o = 0;
        for (uint32_t j = 0; j < spec.n; ++j) {
            o ^= row[j] & rec.s[j];
        }
        rec.o.push_back(o);
    }
    return rec;
}

bool check_record(const MbqcSpec &spec, const RunRecord &rec) {
    if (rec.s.size() != spec.n || rec.q.size() != spec.n || rec.o.size() != spec.outputs() ||
        rec.input.size() != spec.inputs()) {
        return false;
    }
    for (uint32_t i = 0; i < spec.n; ++i) {
        uint8_t q = 0;
        for (uint32_t j = 0; j < spec.n; ++j) {
            q ^= spec.T[i][j] & rec.s[j];
        }
        for (uint32_t k = 0; k < spec.inputs(); ++k) {
            q ^= spec.S[i][k] & rec.input[k];
        }
        if ((q & 1) != rec.q[i]) {
            return false;
        }
    }
    for (size_t r = 0; r < spec.Z.size(); ++r) {
        uint8_t o = 0;
        for (uint32_t j = 0; j < spec.n; ++j) {
            o ^= spec.Z[r][j] & rec.s[j];
        }
        if ((o & 1) != rec.o[r]) {
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Boolean functions.

BooleanFunction BooleanFunction::from_string(const std::string &bits) {
    BooleanFunction f;
    size_t len = bits.size();
    if (len == 0 || (len & (len - 1)) != 0) {
        fail(ErrorKind::InvalidInput, "truth table length must be a power of two");
    }
    while ((size_t{1} << f.m) < len) {
        ++f.m;
    }
    for (char c : bits) {
        if (c != '0' && c != '1') {
            fail(ErrorKind::InvalidInput, "truth table must consist of 0 and 1");
        }
        f.table.push_back(static_cast<uint8_t>(c - '0'));
    }
    return f;
}

std::string BooleanFunction::str() const {
    std::string out;
    for (uint8_t b : table) {
        out.push_back(static_cast<char>('0' + b));
    }
    return out;
}

FunctionTable function_table(const MbqcSpec &spec, uint64_t trials, uint64_t seed, Backend backend) {
    spec.check();
    if (spec.outputs() != 1) {
        fail(ErrorKind::InvalidInput, "function tables need exactly one output row in Z");
    }
    if (trials == 0) {
        fail(ErrorKind::InvalidInput, "trials must be positive");
    }
    const uint32_t m = spec.inputs();
    if (m > 20) {
        fail(ErrorKind::InvalidInput, "at most 20 inputs");
    }
    backend = resolve_backend(spec, backend);
    FunctionTable out;
    out.f.m = m;
    out.ones.assign(spec.n, 0);
    const size_t rows = size_t{1} << m;
    for (size_t x = 0; x < rows; ++x) {
        std::vector<uint8_t> input(m);
        for (uint32_t j = 0; j < m; ++j) {
            input[j] = (x >> (m - 1 - j)) & 1;
        }
        const unsigned W = std::max(1u, num_threads());
        std::vector<uint64_t> ones_out(W, 0);
        std::vector<std::vector<uint64_t>> ones_s(W, std::vector<uint64_t>(spec.n, 0));
        parallel_chunks(trials, [&](size_t begin, size_t end, size_t chunk) {
            for (size_t t = begin; t < end; ++t) {
                uint64_t run_seed = splitmix64(seed ^ splitmix64((static_cast<uint64_t>(x) << 40) ^ t));
                RunRecord rec = run(spec, input, run_seed, backend);
                ones_out[chunk] += rec.o[0];
                for (uint32_t i = 0; i < spec.n; ++i) {
                    ones_s[chunk][i] += rec.s[i];
                }
            }
        });
        uint64_t ones = 0;
        for (size_t c = 0; c < ones_out.size(); ++c) {
            ones += ones_out[c];
            for (uint32_t i = 0; i < spec.n; ++i) {
                out.ones[i] += ones_s[c][i];
            }
        }
        uint8_t major = 2 * ones > trials ? 1 : 0;
        out.f.table.push_back(major);
        out.frequency.push_back(static_cast<double>(major ? ones : trials - ones) / static_cast<double>(trials));
        out.runs += trials;
    }
    return out;
}

uint64_t nonlinearity(const BooleanFunction &f) {
    if (f.m > 20 || f.table.size() != (size_t{1} << f.m)) {
        fail(ErrorKind::InvalidInput, "truth table must have 2^m entries, m <= 20");
    }
    std::vector<int64_t> w(f.table.size());
    for (size_t x = 0; x < w.size(); ++x) {
        w[x] = f.table[x] ? -1 : 1;
    }
    for (size_t h = 1; h < w.size(); h <<= 1) {
        for (size_t i = 0; i < w.size(); i += 2 * h) {
            for (size_t j = i; j < i + h; ++j) {
                int64_t a = w[j], b = w[j + h];
                w[j] = a + b;
                w[j + h] = a - b;
            }
        }
    }
    int64_t best = 0;
    for (int64_t v : w) {
        best = std::max(best, v < 0 ? -v : v);
    }
    return static_cast<uint64_t>((static_cast<int64_t>(w.size()) - best) / 2);
}

mpq_class contextuality_threshold(const BooleanFunction &f) {
    mpq_class t(static_cast<unsigned long>(nonlinearity(f)), static_cast<unsigned long>(f.table.size()));
    t.canonicalize();
    return 1 - t;
}

// ---------------------------------------------------------------------------
// Bridge to the parity prover.

namespace {

struct Context {
    std::vector<PauliOperator> ops;
    PauliOperator product;
};

std::vector<Context> measured_contexts(const MbqcSpec &spec) {
    spec.check();
    if (!spec.pauli_angles()) {
        fail(ErrorKind::BackendMismatch, "the parity bridge needs X/Y measurement directions");
    }
    for (const auto &row : spec.T) {
        if (std::any_of(row.begin(), row.end(), [](uint8_t v) { return v & 1; })) {
            fail(ErrorKind::InvalidInput, "the parity bridge needs a flat temporal order (T = 0)");
        }
    }
    if (spec.outputs() != 1) {
        fail(ErrorKind::InvalidInput, "the parity bridge needs exactly one output");
    }
    const uint32_t m = spec.inputs();
    std::vector<Context> out;
    for (size_t x = 0; x < (size_t{1} << m); ++x) {
        Context c{{}, identity_operator(spec.n, 2)};
        for (uint32_t i = 0; i < spec.n; ++i) {
            if (!(spec.Z[0][i] & 1)) {
                continue;
            }
            uint32_t q = 0;
            for (uint32_t j = 0; j < m; ++j) {
                q ^= spec.S[i][j] & ((x >> (m - 1 - j)) & 1);
            }
            PauliOperator op = pauli_direction(spec.n, i, *spec.angles[i][q & 1].quarter_turns);
            c.ops.push_back(op);
            c.product = multiply(c.product, op);
        }
        out.push_back(std::move(c));
    }
    return out;
}

}  // namespace

BridgeScenario ghz_parity_bridge(const MbqcSpec &spec) {
    std::vector<Context> contexts = measured_contexts(spec);
    std::vector<PauliOperator> gens = resource_generators(spec);
    BridgeScenario sc;
    auto add_obs = [&](const PauliOperator &p) {
        for (const auto &o : sc.observables) {
            if (o.label == p.label) {
                return;
            }
        }
        sc.observables.push_back(p);
    };
    for (const auto &c : contexts) {
        for (const auto &op : c.ops) {
            add_obs(op);
        }
    }
    for (const auto &c : contexts) {
        add_obs(c.product);
        sc.contexts.push_back(c.ops);
        if (c.product.label.is_zero()) {
            continue;
        }
        if (auto v = stabilizer_value(gens, c.product)) {
            bool dup = false;
            for (const auto &[p, val] : sc.state) {
                dup = dup || p.label == c.product.label;
            }
            if (!dup) {
                sc.state.push_back({c.product, *v});
            }
        }
    }
    return sc;
}

HiddenVariableSystem hidden_variable_system(const MbqcSpec &spec, const BooleanFunction &o) {
    std::vector<Context> contexts = measured_contexts(spec);
    if (o.table.size() != contexts.size()) {
        fail(ErrorKind::InvalidInput, "truth table size does not match the number of inputs");
    }
    HiddenVariableSystem sys;
    for (const auto &c : contexts) {
        for (const auto &op : c.ops) {
            if (std::find(sys.unknowns.begin(), sys.unknowns.end(), op.label) == sys.unknowns.end()) {
                sys.unknowns.push_back(op.label);
            }
        }
    }
    std::sort(sys.unknowns.begin(), sys.unknowns.end());
    sys.A = ModMatrix(0, sys.unknowns.size(), 2);
    for (size_t x = 0; x < contexts.size(); ++x) {
        ModMatrix::Row row;
        uint32_t rhs = o.table[x];
        for (const auto &op : contexts[x].ops) {
            size_t col = std::find(sys.unknowns.begin(), sys.unknowns.end(), op.label) - sys.unknowns.begin();
            row.push_back({static_cast<uint32_t>(col), 1});
            // s(-O) = s(O) + 1.
            rhs += op.phase / 2;
        }
        sys.A.append_row(std::move(row));
        sys.b.push_back(rhs % 2);
    }
    return sys;
}

}  // namespace ctx
