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

#include "ctx/pauli.h"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <unordered_set>

#include "ctx/error.h"

namespace ctx {

namespace {

void require_compatible(const PauliLabel &a, const PauliLabel &b) {
    if (a.d != b.d || a.x.size() != b.x.size()) {
        fail(ErrorKind::InvalidInput, "Pauli labels differ in qudit count or dimension");
    }
}

}  // namespace

PauliLabel::PauliLabel(uint32_t n, uint32_t d) : d(d), x(n, 0), z(n, 0) {
    if (d < 2) {
        fail(ErrorKind::InvalidInput, "qudit dimension must be at least 2");
    }
}

PauliLabel::PauliLabel(uint32_t d, std::vector<zd> x_in, std::vector<zd> z_in)
    : d(d), x(std::move(x_in)), z(std::move(z_in)) {
    if (d < 2) {
        fail(ErrorKind::InvalidInput, "qudit dimension must be at least 2");
    }
    if (x.size() != z.size()) {
        fail(ErrorKind::InvalidInput, "x and z parts differ in length");
    }
    for (auto &v : x) {
        v %= d;
    }
    for (auto &v : z) {
        v %= d;
    }
}

bool PauliLabel::is_zero() const {
    return std::all_of(x.begin(), x.end(), [](zd v) { return v == 0; }) &&
           std::all_of(z.begin(), z.end(), [](zd v) { return v == 0; });
}

PauliLabel PauliLabel::operator+(const PauliLabel &other) const {
    require_compatible(*this, other);
    PauliLabel r = *this;
    for (size_t k = 0; k < x.size(); ++k) {
        r.x[k] = add_mod(x[k], other.x[k], d);
        r.z[k] = add_mod(z[k], other.z[k], d);
    }
    return r;
}

PauliLabel PauliLabel::operator-() const {
    PauliLabel r = *this;
    for (auto &v : r.x) {
        v = neg_mod(v, d);
    }
    for (auto &v : r.z) {
        v = neg_mod(v, d);
    }
    return r;
}

PauliLabel PauliLabel::scaled(zd k) const {
    PauliLabel r = *this;
    for (auto &v : r.x) {
        v = mul_mod(v, k, d);
    }
    for (auto &v : r.z) {
        v = mul_mod(v, k, d);
    }
    return r;
}

bool PauliLabel::operator==(const PauliLabel &other) const {
    return d == other.d && x == other.x && z == other.z;
}

bool PauliLabel::operator<(const PauliLabel &other) const {
    if (x != other.x) {
        return x < other.x;
    }
    return z < other.z;
}

std::string PauliLabel::str() const {
    bool binary = true;
    for (size_t k = 0; k < x.size(); ++k) {
        binary &= x[k] <= 1 && z[k] <= 1;
    }
    std::string out;
    if (binary) {
        for (size_t k = 0; k < x.size(); ++k) {
            out += "IZXY"[x[k] * 2 + z[k]];
        }
        return out;
    }
    for (size_t k = 0; k < x.size(); ++k) {
        if (k) {
            out += '.';
        }
        if (x[k] == 0 && z[k] == 0) {
            out += 'I';
            continue;
        }
        if (x[k]) {
            out += "X^" + std::to_string(x[k]);
        }
        if (z[k]) {
            out += "Z^" + std::to_string(z[k]);
        }
    }
    return out;
}

size_t PauliLabelHash::operator()(const PauliLabel &a) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL ^ a.d;
    for (size_t k = 0; k < a.x.size(); ++k) {
        h = (h ^ (a.x[k] * 1315423911ULL + a.z[k])) * 0x100000001b3ULL;
    }
    return static_cast<size_t>(h);
}

uint32_t lifted_modulus(uint32_t d) {
    return d % 2 == 0 ? 2 * d : d;
}

zd eta_phase(const PauliLabel &a) {
    uint32_t D = lifted_modulus(a.d);
    // tau = zeta for even d, omega^{(d+1)/2} = zeta^{(d+1)/2} for odd d.
    uint64_t t = a.d % 2 == 0 ? 1 : (a.d + 1) / 2;
    uint64_t acc = 0;
    for (size_t k = 0; k < a.x.size(); ++k) {
        acc += static_cast<uint64_t>(a.x[k]) * a.z[k];
    }
    return static_cast<zd>((acc % D) * t % D);
}

std::string PauliOperator::str() const {
    std::string body = label.str();
    uint32_t D = lifted_modulus(label.d);
    if (phase == 0) {
        return body;
    }
    if (label.d == 2) {
        static const char *prefixes[] = {"", "i", "-", "-i"};
        return std::string(prefixes[phase % 4]) + body;
    }
    uint32_t step = D / label.d;
    if (phase % step == 0) {
        return "w^" + std::to_string(phase / step) + " " + body;
    }
    return "z^" + std::to_string(phase) + " " + body;
}

PauliOperator identity_operator(uint32_t n, uint32_t d) {
    return PauliOperator{PauliLabel(n, d), 0};
}

zd symplectic_form(const PauliLabel &a, const PauliLabel &b) {
    require_compatible(a, b);
    int64_t acc = 0;
    for (size_t k = 0; k < a.x.size(); ++k) {
        acc += static_cast<int64_t>(a.x[k]) * b.z[k] - static_cast<int64_t>(a.z[k]) * b.x[k];
    }
    return reduce(acc, a.d);
}

bool commutes(const PauliLabel &a, const PauliLabel &b) {
    return symplectic_form(a, b) == 0;
}

PauliOperator multiply(const PauliOperator &p, const PauliOperator &q) {
    require_compatible(p.label, q.label);
    uint32_t d = p.label.d;
    uint32_t D = lifted_modulus(d);
    uint64_t step = D / d;
    // W(a) W(b) = omega^{a.z . b.x} W(a + b), reduction of exponents mod d is free.
    uint64_t cross = 0;
    for (size_t k = 0; k < p.label.x.size(); ++k) {
        cross += static_cast<uint64_t>(p.label.z[k]) * q.label.x[k] % d;
    }
    PauliOperator r;
    r.label = p.label + q.label;
    int64_t e = static_cast<int64_t>(p.phase) + q.phase + eta_phase(p.label) + eta_phase(q.label) +
                static_cast<int64_t>((cross % d) * step) - eta_phase(r.label);
    r.phase = reduce(e, D);
    return r;
}

zd PhaseConvention::gamma(const PauliLabel &a) const {
    auto it = gamma_.find(a);
    return it == gamma_.end() ? 0 : it->second;
}

PhaseConvention rephase(const PhaseConvention &conv, const std::map<PauliLabel, zd> &gamma) {
    PhaseConvention out = conv;
    for (const auto &[label, value] : gamma) {
        if (label.is_zero() && value % label.d != 0) {
            fail(ErrorKind::InvalidInput, "rephasing must fix the identity label");
        }
        zd v = add_mod(out.gamma(label), value % label.d, label.d);
        if (v == 0) {
            out.gamma_.erase(label);
        } else {
            out.gamma_[label] = v;
        }
    }
    return out;
}

zd beta(const PauliLabel &a, const PauliLabel &b, const PhaseConvention &conv) {
    if (!commutes(a, b)) {
        fail(ErrorKind::NonCommuting, a.str() + " and " + b.str() + " do not commute");
    }
    uint32_t d = a.d;
    uint32_t step = lifted_modulus(d) / d;
    PauliOperator prod = multiply(PauliOperator{a, 0}, PauliOperator{b, 0});
    if (prod.phase % step != 0) {
        fail(ErrorKind::InvalidInput, "lifted phase of a commuting product is not a power of omega");
    }
    // T_a T_b = omega^{e} T_{a+b}, so T_{a+b} = omega^{-e} T_a T_b.
    zd base = neg_mod(prod.phase / step, d);
    if (conv.is_trivial()) {
        return base;
    }
    int64_t g = static_cast<int64_t>(conv.gamma(a + b)) - conv.gamma(a) - conv.gamma(b);
    return reduce(static_cast<int64_t>(base) + g, d);
}

std::vector<PauliLabel> closure(const std::vector<PauliLabel> &seed, size_t cap) {
    if (seed.empty()) {
        fail(ErrorKind::InvalidInput, "closure needs a nonempty seed");
    }
    uint32_t d = seed[0].d;
    size_t n = seed[0].num_qudits();
    std::vector<PauliLabel> members;
    std::unordered_set<PauliLabel, PauliLabelHash> seen;
    auto push = [&](const PauliLabel &a) {
        if (a.d != d || a.num_qudits() != n) {
            fail(ErrorKind::InvalidInput, "seed operators differ in qudit count or dimension");
        }
        if (seen.insert(a).second) {
            members.push_back(a);
            if (members.size() > cap) {
                fail(ErrorKind::ClosureTooLarge,
                     "closure exceeds " + std::to_string(cap) + " labels");
            }
        }
    };
    push(PauliLabel(static_cast<uint32_t>(n), d));
    for (const auto &a : seed) {
        push(a);
    }
    // Every new label is paired with all earlier ones exactly once.
    for (size_t j = 0; j < members.size(); ++j) {
        for (size_t i = 0; i <= j; ++i) {
            if (commutes(members[i], members[j])) {
                PauliLabel s = members[i] + members[j];
                push(s);
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

std::vector<PauliLabel> closure(const std::vector<PauliOperator> &seed, size_t cap) {
    std::vector<PauliLabel> labels;
    labels.reserve(seed.size());
    for (const auto &p : seed) {
        labels.push_back(p.label);
    }
    return closure(labels, cap);
}

namespace {

std::string strip(const std::string &s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) {
        return "";
    }
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

uint32_t parse_uint(const std::string &s, size_t &pos) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
    if (start == pos) {
        fail(ErrorKind::InvalidInput, "expected an exponent in '" + s + "'");
    }
    return static_cast<uint32_t>(std::stoul(s.substr(start, pos - start)));
}

// One qudit in token form: I, X, Z, Y, X^a, Z^b, X^aZ^b.
std::pair<zd, zd> parse_token(const std::string &tok, uint32_t d) {
    if (tok == "I") {
        return {0, 0};
    }
    if (tok == "Y") {
        return {1, 1};
    }
    zd x = 0, z = 0;
    size_t pos = 0;
    bool any = false;
    while (pos < tok.size()) {
        char c = tok[pos++];
        uint32_t e = 1;
        if (pos < tok.size() && tok[pos] == '^') {
            ++pos;
            e = parse_uint(tok, pos);
        }
        if (c == 'X' && !any && z == 0) {
            x = e % d;
        } else if (c == 'Z') {
            z = e % d;
        } else {
            fail(ErrorKind::InvalidInput, "bad qudit token '" + tok + "'");
        }
        any = true;
    }
    if (!any) {
        fail(ErrorKind::InvalidInput, "empty qudit token");
    }
    return {x, z};
}

}  // namespace

PauliOperator parse_pauli(const std::string &text, uint32_t d, uint32_t n) {
    if (d < 2) {
        fail(ErrorKind::InvalidInput, "qudit dimension must be at least 2");
    }
    uint32_t D = lifted_modulus(d);
    std::string s = strip(text);
    zd phase = 0;
    if (s.rfind("w^", 0) == 0) {
        size_t pos = 2;
        uint32_t k = parse_uint(s, pos);
        phase = static_cast<zd>((static_cast<uint64_t>(k) % d) * (D / d) % D);
        s = strip(s.substr(pos));
        if (!s.empty() && s[0] == '*') {
            s = strip(s.substr(1));
        }
    } else if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        bool minus = s[0] == '-';
        s = strip(s.substr(1));
        bool imag = !s.empty() && s[0] == 'i';
        if (imag) {
            s = strip(s.substr(1));
        }
        if ((minus || imag) && d % 2 != 0) {
            fail(ErrorKind::InvalidInput, "sign prefixes need even d; use w^k");
        }
        if (imag && d != 2) {
            fail(ErrorKind::InvalidInput, "the 'i' prefix is only defined for qubits");
        }
        phase = (minus ? d : 0) + (imag ? 1 : 0);
        phase %= D;
    }
    if (s.empty()) {
        fail(ErrorKind::InvalidInput, "empty Pauli string");
    }
    std::vector<zd> xs, zs;
    if (s.find('.') != std::string::npos || s.find('^') != std::string::npos) {
        size_t start = 0;
        while (true) {
            size_t dot = s.find('.', start);
            std::string tok = strip(s.substr(start, dot == std::string::npos ? std::string::npos : dot - start));
            auto [x, z] = parse_token(tok, d);
            xs.push_back(x);
            zs.push_back(z);
            if (dot == std::string::npos) {
                break;
            }
            start = dot + 1;
        }
    } else {
        for (char c : s) {
            if (c == ' ') {
                continue;
            }
            switch (c) {
                case 'I':
                    xs.push_back(0), zs.push_back(0);
                    break;
                case 'X':
                    xs.push_back(1), zs.push_back(0);
                    break;
                case 'Z':
                    xs.push_back(0), zs.push_back(1);
                    break;
                case 'Y':
                    xs.push_back(1), zs.push_back(1);
                    break;
                default:
                    fail(ErrorKind::InvalidInput, std::string("bad Pauli letter '") + c + "' in '" + text + "'");
            }
        }
    }
    if (n != 0 && xs.size() != n) {
        fail(ErrorKind::InvalidInput,
             "'" + text + "' has " + std::to_string(xs.size()) + " qudits, expected " + std::to_string(n));
    }
    return PauliOperator{PauliLabel(d, xs, zs), phase};
}

std::vector<PauliLabel> all_labels(uint32_t n, uint32_t d) {
    uint64_t total = 1;
    for (uint32_t k = 0; k < 2 * n; ++k) {
        total *= d;
        if (total > (1u << 24)) {
            fail(ErrorKind::ClosureTooLarge, "label space too large to enumerate");
        }
    }
    std::vector<PauliLabel> out;
    out.reserve(total);
    for (uint64_t code = 0; code < total; ++code) {
        PauliLabel a(n, d);
        uint64_t c = code;
        // Most significant digit first so codes follow lexicographic order.
        for (int k = static_cast<int>(2 * n) - 1; k >= 0; --k) {
            zd digit = static_cast<zd>(c % d);
            c /= d;
            if (static_cast<uint32_t>(k) < n) {
                a.x[k] = digit;
            } else {
                a.z[k - n] = digit;
            }
        }
        out.push_back(a);
    }
    return out;
}

}  // namespace ctx
