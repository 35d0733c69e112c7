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

#include "ctx/chain_complex.h"

#include <algorithm>

#include "ctx/error.h"
#include "ctx/parallel.h"

namespace ctx {

void Chain::add(uint32_t cell, int64_t coeff, uint32_t d) {
    zd v = reduce(static_cast<int64_t>(terms.count(cell) ? terms[cell] : 0) + reduce(coeff, d), d);
    if (v == 0) {
        terms.erase(cell);
    } else {
        terms[cell] = v;
    }
}

Chain Chain::plus(const Chain &other, uint32_t d) const {
    if (!other.terms.empty() && !terms.empty() && other.degree != degree) {
        fail(ErrorKind::DegreeError, "adding chains of different degree");
    }
    Chain out = *this;
    if (terms.empty()) {
        out.degree = other.degree;
    }
    for (auto [cell, v] : other.terms) {
        out.add(cell, v, d);
    }
    return out;
}

Chain Chain::scaled(int64_t k, uint32_t d) const {
    Chain out{degree, {}};
    for (auto [cell, v] : terms) {
        out.add(cell, static_cast<int64_t>(v) * reduce(k, d), d);
    }
    return out;
}

ObservableComplex ObservableComplex::build(std::vector<PauliLabel> labels, const PhaseConvention &conv,
                                           const BuildOptions &options) {
    if (labels.empty()) {
        fail(ErrorKind::InvalidInput, "empty label set");
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    ObservableComplex cx;
    cx.d_ = labels[0].d;
    cx.n_ = static_cast<uint32_t>(labels[0].num_qudits());
    cx.conv_ = conv;
    for (const auto &a : labels) {
        if (a.d != cx.d_ || a.num_qudits() != cx.n_) {
            fail(ErrorKind::InvalidInput, "labels differ in qudit count or dimension");
        }
    }
    if (!labels[0].is_zero()) {
        fail(ErrorKind::ClosureViolation, "label set does not contain the identity");
    }
    cx.labels_ = std::move(labels);
    const size_t N = cx.labels_.size();
    for (uint32_t k = 0; k < N; ++k) {
        cx.index_.emplace(cx.labels_[k], k);
    }
    const size_t words = (N + 63) / 64;
    cx.commute_bits_.assign(N * words, 0);
    for (size_t a = 0; a < N; ++a) {
        for (size_t b = a; b < N; ++b) {
            if (commutes(cx.labels_[a], cx.labels_[b])) {
                cx.commute_bits_[a * words + b / 64] |= 1ULL << (b % 64);
                cx.commute_bits_[b * words + a / 64] |= 1ULL << (a % 64);
            }
        }
    }
    cx.face_start_.assign(N + 1, 0);
    for (uint32_t a = 0; a < N; ++a) {
        cx.face_start_[a] = static_cast<uint32_t>(cx.faces_.size());
        for (uint32_t b = 0; b < N; ++b) {
            if (!cx.commute(a, b)) {
                continue;
            }
            auto s = cx.index_of(cx.labels_[a] + cx.labels_[b]);
            if (!s) {
                fail(ErrorKind::ClosureViolation, "commuting pair " + cx.labels_[a].str() + ", " +
                                                      cx.labels_[b].str() + " has product outside E");
            }
            cx.faces_.push_back({a, b, *s});
            cx.beta_.push_back(ctx::beta(cx.labels_[a], cx.labels_[b], conv));
        }
    }
    cx.face_start_[N] = static_cast<uint32_t>(cx.faces_.size());

    cx.with_volumes_ = options.volumes;
    if (options.volumes) {
        const size_t F = cx.faces_.size();
        size_t workers = num_threads();
        std::vector<std::vector<Volume>> parts(std::max<size_t>(workers, 1));
        parallel_chunks(F, [&](size_t begin, size_t end, size_t chunk) {
            auto &out = parts[chunk];
            for (size_t f = begin; f < end; ++f) {
                const Face &ab = cx.faces_[f];
                for (uint32_t c = 0; c < N; ++c) {
                    if (!cx.commute(ab.a, c) || !cx.commute(ab.b, c)) {
                        continue;
                    }
                    uint32_t bc_sum = *cx.face_index(ab.b, c);
                    uint32_t b_plus_c = cx.faces_[bc_sum].sum;
                    out.push_back(Volume{ab.a,
                                         ab.b,
                                         c,
                                         {bc_sum, *cx.face_index(ab.sum, c), *cx.face_index(ab.a, b_plus_c),
                                          static_cast<uint32_t>(f)}});
                    if (out.size() > options.volume_cap) {
                        fail(ErrorKind::ClosureTooLarge, "volume count exceeds cap");
                    }
                }
            }
        });
        for (auto &p : parts) {
            cx.volumes_.insert(cx.volumes_.end(), p.begin(), p.end());
        }
        if (cx.volumes_.size() > options.volume_cap) {
            fail(ErrorKind::ClosureTooLarge, "volume count exceeds cap");
        }
    }
    return cx;
}

size_t ObservableComplex::num_cells(int degree) const {
    switch (degree) {
        case 0:
            return 1;
        case 1:
            return labels_.size();
        case 2:
            return faces_.size();
        case 3:
            return volumes_.size();
        default:
            fail(ErrorKind::DegreeError, "complex stops at degree 3");
    }
}

std::optional<uint32_t> ObservableComplex::index_of(const PauliLabel &a) const {
    auto it = index_.find(a);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

uint32_t ObservableComplex::label_index(const PauliLabel &a) const {
    auto k = index_of(a);
    if (!k) {
        fail(ErrorKind::InvalidInput, "label " + a.str() + " is not in E");
    }
    return *k;
}

bool ObservableComplex::commute(uint32_t a, uint32_t b) const {
    const size_t words = (labels_.size() + 63) / 64;
    return (commute_bits_[a * words + b / 64] >> (b % 64)) & 1;
}

std::optional<uint32_t> ObservableComplex::face_index(uint32_t a, uint32_t b) const {
    if (a >= labels_.size() || b >= labels_.size()) {
        return std::nullopt;
    }
    auto first = faces_.begin() + face_start_[a];
    auto last = faces_.begin() + face_start_[a + 1];
    auto it = std::lower_bound(first, last, b, [](const Face &f, uint32_t v) { return f.b < v; });
    if (it == last || it->b != b) {
        return std::nullopt;
    }
    return static_cast<uint32_t>(it - faces_.begin());
}

ModMatrix ObservableComplex::boundary_matrix(int k) const {
    switch (k) {
        case 1:
            return ModMatrix(1, labels_.size(), d_);
        case 2: {
            ModMatrix m(labels_.size(), faces_.size(), d_);
            for (uint32_t f = 0; f < faces_.size(); ++f) {
                m.add(faces_[f].a, f, 1);
                m.add(faces_[f].b, f, 1);
                m.add(faces_[f].sum, f, -1);
            }
            return m;
        }
        case 3: {
            if (!with_volumes_) {
                fail(ErrorKind::InvalidInput, "complex was built without volumes");
            }
            // Built transposed: one short row per volume.
            ModMatrix t(0, faces_.size(), d_);
            static const int signs[4] = {1, -1, 1, -1};
            for (const Volume &v : volumes_) {
                ModMatrix::Row row;
                for (int k2 = 0; k2 < 4; ++k2) {
                    row.push_back({v.faces[k2], reduce(signs[k2], d_)});
                }
                t.append_row(std::move(row));
            }
            return t.transpose();
        }
        default:
            fail(ErrorKind::DegreeError, "boundary matrices exist for degrees 1..3");
    }
}

ObservableComplex ObservableComplex::rephased(const std::map<PauliLabel, zd> &gamma) const {
    ObservableComplex out = *this;
    out.conv_ = rephase(conv_, gamma);
    for (size_t f = 0; f < faces_.size(); ++f) {
        const Face &fc = faces_[f];
        int64_t g = static_cast<int64_t>(out.conv_.gamma(labels_[fc.sum])) - out.conv_.gamma(labels_[fc.a]) -
                    out.conv_.gamma(labels_[fc.b]);
        int64_t g0 = static_cast<int64_t>(conv_.gamma(labels_[fc.sum])) - conv_.gamma(labels_[fc.a]) -
                     conv_.gamma(labels_[fc.b]);
        out.beta_[f] = reduce(static_cast<int64_t>(beta_[f]) + g - g0, d_);
    }
    return out;
}

Chain boundary(const ObservableComplex &cx, const Chain &c) {
    const uint32_t d = cx.d();
    Chain out{c.degree - 1, {}};
    switch (c.degree) {
        case 1:
            return out;
        case 2:
            for (auto [f, v] : c.terms) {
                const Face &fc = cx.faces().at(f);
                out.add(fc.a, v, d);
                out.add(fc.b, v, d);
                out.add(fc.sum, -static_cast<int64_t>(v), d);
            }
            return out;
        case 3:
            for (auto [vol, v] : c.terms) {
                const Volume &vv = cx.volumes().at(vol);
                out.add(vv.faces[0], v, d);
                out.add(vv.faces[1], -static_cast<int64_t>(v), d);
                out.add(vv.faces[2], v, d);
                out.add(vv.faces[3], -static_cast<int64_t>(v), d);
            }
            return out;
        default:
            fail(ErrorKind::DegreeError, "boundary is defined on degrees 1..3");
    }
}

Cochain coboundary(const ObservableComplex &cx, const Cochain &phi) {
    const uint32_t d = cx.d();
    if (phi.degree < 0 || phi.degree > 2) {
        fail(ErrorKind::DegreeError, "coboundary is defined on degrees 0..2");
    }
    if (phi.values.size() != cx.num_cells(phi.degree)) {
        fail(ErrorKind::InvalidInput, "cochain size does not match the complex");
    }
    Cochain out{phi.degree + 1, std::vector<zd>(cx.num_cells(phi.degree + 1), 0)};
    const auto &p = phi.values;
    if (phi.degree == 1) {
        for (size_t f = 0; f < cx.faces().size(); ++f) {
            const Face &fc = cx.faces()[f];
            out.values[f] = reduce(static_cast<int64_t>(p[fc.a]) + p[fc.b] - p[fc.sum], d);
        }
    } else if (phi.degree == 2) {
        for (size_t k = 0; k < cx.volumes().size(); ++k) {
            const auto &fs = cx.volumes()[k].faces;
            out.values[k] = reduce(static_cast<int64_t>(p[fs[0]]) - p[fs[1]] + p[fs[2]] - p[fs[3]], d);
        }
    }
    return out;
}

zd evaluate(const Cochain &phi, const Chain &c, uint32_t d) {
    if (!c.terms.empty() && phi.degree != c.degree) {
        fail(ErrorKind::DegreeError, "pairing a cochain with a chain of another degree");
    }
    uint64_t acc = 0;
    for (auto [cell, v] : c.terms) {
        acc = (acc + static_cast<uint64_t>(phi.values.at(cell)) * v) % d;
    }
    return static_cast<zd>(acc);
}

Cochain beta_cochain(const ObservableComplex &cx) {
    return Cochain{2, cx.beta()};
}

Chain face_chain(const ObservableComplex &cx, const PauliLabel &a, const PauliLabel &b, int64_t coeff) {
    auto f = cx.face_index(cx.label_index(a), cx.label_index(b));
    if (!f) {
        fail(ErrorKind::NonCommuting, a.str() + " and " + b.str() + " do not form a face");
    }
    Chain c{2, {}};
    c.add(*f, coeff, cx.d());
    return c;
}

Chain context_chain(const ObservableComplex &cx, const std::vector<PauliLabel> &ops) {
    if (ops.size() < 2) {
        fail(ErrorKind::InvalidInput, "a context chain needs at least two observables");
    }
    // A trailing operator equal to the running product (up to inverse) closes the context; it adds no face.
    size_t end = ops.size();
    if (end > 2) {
        PauliLabel prod = ops[0];
        for (size_t k = 1; k + 1 < end; ++k) {
            prod = prod + ops[k];
        }
        if (ops[end - 1] == prod || ops[end - 1] == -prod) {
            --end;
        }
    }
    Chain c{2, {}};
    PauliLabel acc = ops[0];
    for (size_t k = 1; k < end; ++k) {
        c = c.plus(face_chain(cx, acc, ops[k]), cx.d());
        acc = acc + ops[k];
    }
    return c;
}

RelativeComplex::RelativeComplex(const ObservableComplex &parent, const std::vector<PauliLabel> &sub)
    : parent_(&parent), in_sub_(parent.labels().size(), false) {
    in_sub_[parent.zero_index()] = true;
    for (const auto &a : sub) {
        auto k = parent.index_of(a);
        if (!k) {
            fail(ErrorKind::InvalidInput, "sub-label " + a.str() + " is not in E");
        }
        in_sub_[*k] = true;
    }
    for (const Face &f : parent.faces()) {
        if (in_sub_[f.a] && in_sub_[f.b] && !in_sub_[f.sum]) {
            fail(ErrorKind::NotClosed, "sub-label set is not closed: " + parent.labels()[f.a].str() + " + " +
                                           parent.labels()[f.b].str());
        }
    }
    auto fill = [](size_t count, auto keep, std::vector<uint32_t> &cells, std::vector<int32_t> &pos) {
        pos.assign(count, -1);
        for (uint32_t k = 0; k < count; ++k) {
            if (keep(k)) {
                pos[k] = static_cast<int32_t>(cells.size());
                cells.push_back(k);
            }
        }
    };
    fill(parent.labels().size(), [&](uint32_t e) { return !in_sub_[e]; }, edges_, edge_pos_);
    fill(parent.faces().size(), [&](uint32_t f) { return !face_in_sub(f); }, faces_, face_pos_);
    if (parent.has_volumes()) {
        fill(parent.volumes().size(), [&](uint32_t v) { return !volume_in_sub(v); }, volumes_, volume_pos_);
    }
}

bool RelativeComplex::face_in_sub(uint32_t f) const {
    const Face &fc = parent_->faces()[f];
    return in_sub_[fc.a] && in_sub_[fc.b];
}

bool RelativeComplex::volume_in_sub(uint32_t v) const {
    const Volume &vv = parent_->volumes()[v];
    return in_sub_[vv.a] && in_sub_[vv.b] && in_sub_[vv.c];
}

std::optional<uint32_t> RelativeComplex::position(int degree, uint32_t cell) const {
    const std::vector<int32_t> *pos = nullptr;
    switch (degree) {
        case 1:
            pos = &edge_pos_;
            break;
        case 2:
            pos = &face_pos_;
            break;
        case 3:
            pos = &volume_pos_;
            break;
        default:
            fail(ErrorKind::DegreeError, "relative cells exist in degrees 1..3");
    }
    if (cell >= pos->size() || (*pos)[cell] < 0) {
        return std::nullopt;
    }
    return static_cast<uint32_t>((*pos)[cell]);
}

Chain RelativeComplex::project(const Chain &c) const {
    Chain out{c.degree, {}};
    for (auto [cell, v] : c.terms) {
        if (c.degree == 0 || position(c.degree, cell)) {
            out.terms[cell] = v;
        }
    }
    return out;
}

Chain RelativeComplex::boundary(const Chain &c) const {
    return project(ctx::boundary(*parent_, project(c)));
}

ModMatrix RelativeComplex::coboundary1_matrix() const {
    const uint32_t d = parent_->d();
    ModMatrix m(0, edges_.size(), d);
    for (uint32_t f : faces_) {
        const Face &fc = parent_->faces()[f];
        ModMatrix::Row row;
        if (!in_sub_[fc.a]) {
            row.push_back({static_cast<uint32_t>(edge_pos_[fc.a]), 1});
        }
        if (!in_sub_[fc.b]) {
            row.push_back({static_cast<uint32_t>(edge_pos_[fc.b]), 1});
        }
        if (!in_sub_[fc.sum]) {
            row.push_back({static_cast<uint32_t>(edge_pos_[fc.sum]), d - 1});
        }
        m.append_row(std::move(row));
    }
    return m;
}

}  // namespace ctx
