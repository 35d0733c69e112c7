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

#include "ctx/modlinalg.h"

#include <algorithm>
#include <cassert>

#include "ctx/error.h"

namespace ctx {

ModMatrix::ModMatrix(size_t rows, size_t cols, uint32_t d) : d_(d), cols_(cols), rows_(rows) {
    if (d < 2) {
        fail(ErrorKind::InvalidInput, "modulus must be at least 2");
    }
}

ModMatrix ModMatrix::from_dense(const std::vector<std::vector<int64_t>> &entries, size_t cols, uint32_t d) {
    ModMatrix m(entries.size(), cols, d);
    for (size_t r = 0; r < entries.size(); ++r) {
        if (entries[r].size() != cols) {
            fail(ErrorKind::InvalidInput, "ragged dense matrix");
        }
        for (size_t c = 0; c < cols; ++c) {
            m.add(r, c, entries[r][c]);
        }
    }
    return m;
}

ModMatrix ModMatrix::identity(size_t n, uint32_t d) {
    ModMatrix m(n, n, d);
    for (size_t k = 0; k < n; ++k) {
        m.set(k, k, 1 % d);
    }
    return m;
}

zd ModMatrix::get(size_t r, size_t c) const {
    const Row &row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(static_cast<uint32_t>(c), zd{0}));
    return it != row.end() && it->first == c ? it->second : 0;
}

void ModMatrix::set(size_t r, size_t c, zd v) {
    if (r >= rows_.size() || c >= cols_) {
        fail(ErrorKind::InvalidInput, "matrix index out of range");
    }
    v %= d_;
    Row &row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), std::make_pair(static_cast<uint32_t>(c), zd{0}));
    if (it != row.end() && it->first == c) {
        if (v == 0) {
            row.erase(it);
        } else {
            it->second = v;
        }
    } else if (v != 0) {
        row.insert(it, {static_cast<uint32_t>(c), v});
    }
}

void ModMatrix::add(size_t r, size_t c, int64_t v) {
    set(r, c, reduce(static_cast<int64_t>(get(r, c)) + reduce(v, d_), d_));
}

void ModMatrix::append_row(Row row) {
    std::sort(row.begin(), row.end());
    Row clean;
    for (auto [c, v] : row) {
        if (c >= cols_) {
            fail(ErrorKind::InvalidInput, "row entry out of range");
        }
        v %= d_;
        if (!clean.empty() && clean.back().first == c) {
            clean.back().second = add_mod(clean.back().second, v, d_);
            if (clean.back().second == 0) {
                clean.pop_back();
            }
        } else if (v != 0) {
            clean.push_back({c, v});
        }
    }
    rows_.push_back(std::move(clean));
}

std::vector<zd> ModMatrix::multiply(const std::vector<zd> &x) const {
    if (x.size() != cols_) {
        fail(ErrorKind::InvalidInput, "vector length does not match column count");
    }
    std::vector<zd> out(rows_.size(), 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint64_t acc = 0;
        for (auto [c, v] : rows_[r]) {
            acc = (acc + static_cast<uint64_t>(v) * x[c]) % d_;
        }
        out[r] = static_cast<zd>(acc);
    }
    return out;
}

std::vector<zd> ModMatrix::left_multiply(const std::vector<zd> &y) const {
    if (y.size() != rows_.size()) {
        fail(ErrorKind::InvalidInput, "vector length does not match row count");
    }
    std::vector<uint64_t> acc(cols_, 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (y[r] == 0) {
            continue;
        }
        for (auto [c, v] : rows_[r]) {
            acc[c] = (acc[c] + static_cast<uint64_t>(v) * y[r]) % d_;
        }
    }
    return std::vector<zd>(acc.begin(), acc.end());
}

ModMatrix ModMatrix::select_rows(const std::vector<size_t> &which) const {
    ModMatrix out(0, cols_, d_);
    for (size_t r : which) {
        out.rows_.push_back(rows_.at(r));
    }
    return out;
}

ModMatrix ModMatrix::transpose() const {
    ModMatrix out(cols_, rows_.size(), d_);
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (auto [c, v] : rows_[r]) {
            out.rows_[c].push_back({static_cast<uint32_t>(r), v});
        }
    }
    return out;
}

std::vector<zd> ModMatrix::dense() const {
    std::vector<zd> out(rows_.size() * cols_, 0);
    for (size_t r = 0; r < rows_.size(); ++r) {
        for (auto [c, v] : rows_[r]) {
            out[r * cols_ + c] = v;
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Diagonalization over Z_d.

namespace {

struct DenseWork {
    uint32_t d;
    size_t m, n;
    std::vector<zd> a;  // m x n
    zd &at(size_t r, size_t c) {
        return a[r * n + c];
    }
};

void apply_row_op(std::vector<zd> &v, const Diagonalization::RowOp &op, uint32_t d, size_t stride) {
    // v holds `stride` entries per row.
    auto row = [&](uint32_t r) { return v.data() + static_cast<size_t>(r) * stride; };
    switch (op.kind) {
        case Diagonalization::RowOp::Swap:
            std::swap_ranges(row(op.i), row(op.i) + stride, row(op.j));
            break;
        case Diagonalization::RowOp::AddMul: {
            zd *dst = row(op.i);
            const zd *src = row(op.j);
            for (size_t k = 0; k < stride; ++k) {
                dst[k] = static_cast<zd>((dst[k] + static_cast<uint64_t>(op.a) * src[k]) % d);
            }
            break;
        }
        case Diagonalization::RowOp::Mix: {
            zd *ri = row(op.i);
            zd *rj = row(op.j);
            for (size_t k = 0; k < stride; ++k) {
                uint64_t vi = ri[k], vj = rj[k];
                ri[k] = static_cast<zd>((op.a * vi + op.b * vj) % d);
                rj[k] = static_cast<zd>((op.c * vi + op.e * vj) % d);
            }
            break;
        }
        case Diagonalization::RowOp::Scale: {
            zd *ri = row(op.i);
            for (size_t k = 0; k < stride; ++k) {
                ri[k] = mul_mod(ri[k], op.a, d);
            }
            break;
        }
    }
}

// Column op on an (rows x n) row-major buffer: [c_i c_j] <- [c_i c_j] [[a c] [b e]].
void mix_cols(std::vector<zd> &buf, size_t rows, size_t n, size_t i, size_t j, zd a, zd b, zd c, zd e,
              uint32_t d) {
    for (size_t r = 0; r < rows; ++r) {
        uint64_t vi = buf[r * n + i], vj = buf[r * n + j];
        buf[r * n + i] = static_cast<zd>((a * vi + b * vj) % d);
        buf[r * n + j] = static_cast<zd>((c * vi + e * vj) % d);
    }
}

}  // namespace

std::vector<zd> Diagonalization::u_row(size_t t) const {
    std::vector<zd> v(rows, 0);
    v[t] = 1 % d;
    // Row vector times E_k ... E_1, innermost last.
    for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
        const RowOp &op = *it;
        switch (op.kind) {
            case RowOp::Swap:
                std::swap(v[op.i], v[op.j]);
                break;
            case RowOp::AddMul:
                // E = I + a e_i e_j^T, so (vE)_j += a v_i.
                v[op.j] = static_cast<zd>((v[op.j] + static_cast<uint64_t>(op.a) * v[op.i]) % d);
                break;
            case RowOp::Mix: {
                uint64_t vi = v[op.i], vj = v[op.j];
                v[op.i] = static_cast<zd>((vi * op.a + vj * op.c) % d);
                v[op.j] = static_cast<zd>((vi * op.b + vj * op.e) % d);
                break;
            }
            case RowOp::Scale:
                v[op.i] = mul_mod(v[op.i], op.a, d);
                break;
        }
    }
    return v;
}

std::vector<zd> Diagonalization::apply_u(const std::vector<zd> &b) const {
    std::vector<zd> v = b;
    for (const RowOp &op : ops) {
        apply_row_op(v, op, d, 1);
    }
    return v;
}

Diagonalization diagonalize(const ModMatrix &A) {
    const uint32_t d = A.modulus();
    Diagonalization out;
    out.d = d;
    out.rows = A.rows();
    out.cols = A.cols();
    const size_t m = A.rows(), n = A.cols();
    DenseWork w{d, m, n, A.dense()};
    out.V.assign(n * n, 0);
    for (size_t k = 0; k < n; ++k) {
        out.V[k * n + k] = 1 % d;
    }
    auto row_op = [&](Diagonalization::RowOp op) {
        apply_row_op(w.a, op, d, n);
        out.ops.push_back(op);
    };
    auto col_op = [&](size_t i, size_t j, zd a, zd b, zd c, zd e) {
        mix_cols(w.a, m, n, i, j, a, b, c, e, d);
        mix_cols(out.V, n, n, i, j, a, b, c, e, d);
    };

    size_t t = 0;
    while (t < std::min(m, n)) {
        // First nonzero in row-major order within the trailing block.
        size_t pr = m, pc = n;
        for (size_t r = t; r < m && pr == m; ++r) {
            for (size_t c = t; c < n; ++c) {
                if (w.at(r, c) != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr == m) {
            break;
        }
        if (pr != t) {
            row_op({Diagonalization::RowOp::Swap, static_cast<uint32_t>(t), static_cast<uint32_t>(pr), 0, 0, 0, 0});
        }
        if (pc != t) {
            col_op(t, pc, 0, 1, 1, 0);
        }
        bool dirty = true;
        while (dirty) {
            dirty = false;
            auto normalize = [&]() {
                auto [g, uinv] = unit_normalize(w.at(t, t), d);
                (void)g;
                if (uinv != 1) {
                    row_op({Diagonalization::RowOp::Scale, static_cast<uint32_t>(t), 0, uinv, 0, 0, 0});
                }
            };
            normalize();
            for (size_t r = t + 1; r < m; ++r) {
                zd a = w.at(r, t);
                if (a == 0) {
                    continue;
                }
                zd p = w.at(t, t);
                if (a % p == 0) {
                    row_op({Diagonalization::RowOp::AddMul, static_cast<uint32_t>(r), static_cast<uint32_t>(t),
                            neg_mod(a / p, d), 0, 0, 0});
                } else {
                    auto [g, s, u] = ext_gcd(p, a);
                    row_op({Diagonalization::RowOp::Mix, static_cast<uint32_t>(t), static_cast<uint32_t>(r),
                            reduce(s, d), reduce(u, d), reduce(-static_cast<int64_t>(a) / g, d),
                            reduce(static_cast<int64_t>(p) / g, d)});
                    normalize();
                }
            }
            for (size_t c = t + 1; c < n; ++c) {
                zd a = w.at(t, c);
                if (a == 0) {
                    continue;
                }
                zd p = w.at(t, t);
                if (a % p == 0) {
                    col_op(t, c, 1, 0, neg_mod(a / p, d), 1);
                } else {
                    auto [g, s, u] = ext_gcd(p, a);
                    col_op(t, c, reduce(s, d), reduce(u, d), reduce(-static_cast<int64_t>(a) / g, d),
                           reduce(static_cast<int64_t>(p) / g, d));
                    normalize();
                    dirty = true;
                }
            }
            if (!dirty) {
                for (size_t r = t + 1; r < m; ++r) {
                    if (w.at(r, t) != 0) {
                        dirty = true;
                        break;
                    }
                }
            }
        }
        out.pivots.push_back(w.at(t, t));
        ++t;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Solvers.

namespace {

bool verify_solution(const ModMatrix &A, const std::vector<zd> &b, const std::vector<zd> &x) {
    return A.multiply(x) == b;
}

bool verify_certificate(const ModMatrix &A, const std::vector<zd> &b, const std::vector<zd> &y) {
    auto yA = A.left_multiply(y);
    if (std::any_of(yA.begin(), yA.end(), [](zd v) { return v != 0; })) {
        return false;
    }
    uint64_t acc = 0;
    for (size_t r = 0; r < b.size(); ++r) {
        acc = (acc + static_cast<uint64_t>(y[r]) * b[r]) % A.modulus();
    }
    return acc != 0;
}

SolveResult solve_general(const ModMatrix &A, const std::vector<zd> &b) {
    const uint32_t d = A.modulus();
    Diagonalization dg = diagonalize(A);
    std::vector<zd> bp = dg.apply_u(b);
    const size_t r = dg.pivots.size();
    SolveResult res;
    for (size_t t = 0; t < A.rows(); ++t) {
        if (t < r) {
            zd g = dg.pivots[t];
            if (bp[t] % g != 0) {
                res.certificate = dg.u_row(t);
                zd k = d / g;
                for (auto &v : res.certificate) {
                    v = mul_mod(v, k, d);
                }
                return res;
            }
        } else if (bp[t] != 0) {
            res.certificate = dg.u_row(t);
            return res;
        }
    }
    std::vector<zd> xp(A.cols(), 0);
    for (size_t t = 0; t < r; ++t) {
        xp[t] = bp[t] / dg.pivots[t];
    }
    const size_t n = A.cols();
    res.solution.assign(n, 0);
    for (size_t i = 0; i < n; ++i) {
        uint64_t acc = 0;
        for (size_t t = 0; t < r; ++t) {
            acc = (acc + static_cast<uint64_t>(dg.V[i * n + t]) * xp[t]) % d;
        }
        res.solution[i] = static_cast<zd>(acc);
    }
    res.feasible = true;
    return res;
}

// Bit-packed Gauss-Jordan over GF(2), tracking row combinations for the certificate.
SolveResult solve_gf2(const ModMatrix &A, const std::vector<zd> &b) {
    const size_t m = A.rows(), n = A.cols();
    const size_t wa = (n + 1 + 63) / 64;  // A part plus b bit
    const size_t wc = (m + 63) / 64;
    const size_t stride = wa + wc;
    std::vector<uint64_t> bits(m * stride, 0);
    auto rowp = [&](size_t r) { return bits.data() + r * stride; };
    for (size_t r = 0; r < m; ++r) {
        uint64_t *p = rowp(r);
        for (auto [c, v] : A.row(r)) {
            if (v & 1) {
                p[c / 64] |= 1ULL << (c % 64);
            }
        }
        if (b[r] & 1) {
            p[n / 64] |= 1ULL << (n % 64);
        }
        p[wa + r / 64] |= 1ULL << (r % 64);
    }
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < n && rank < m; ++c) {
        size_t w = c / 64;
        uint64_t mask = 1ULL << (c % 64);
        size_t found = m;
        for (size_t r = rank; r < m; ++r) {
            if (rowp(r)[w] & mask) {
                found = r;
                break;
            }
        }
        if (found == m) {
            continue;
        }
        if (found != rank) {
            std::swap_ranges(rowp(found), rowp(found) + stride, rowp(rank));
        }
        const uint64_t *piv = rowp(rank);
        for (size_t r = 0; r < m; ++r) {
            if (r != rank && (rowp(r)[w] & mask)) {
                uint64_t *p = rowp(r);
                for (size_t k = w; k < stride; ++k) {
                    p[k] ^= piv[k];
                }
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    SolveResult res;
    for (size_t r = rank; r < m; ++r) {
        const uint64_t *p = rowp(r);
        if (p[n / 64] & (1ULL << (n % 64))) {
            res.certificate.assign(m, 0);
            for (size_t k = 0; k < m; ++k) {
                res.certificate[k] = (p[wa + k / 64] >> (k % 64)) & 1;
            }
            return res;
        }
    }
    res.feasible = true;
    res.solution.assign(n, 0);
    for (size_t r = 0; r < rank; ++r) {
        res.solution[pivot_col[r]] = (rowp(r)[n / 64] >> (n % 64)) & 1;
    }
    return res;
}

SolveResult solve_raw(const ModMatrix &A, const std::vector<zd> &b) {
    const size_t m = A.rows();
    // The combination bits cost m^2/8 bytes; past that, fall back to logged row ops.
    if (A.modulus() == 2 && m <= 40000) {
        return solve_gf2(A, b);
    }
    return solve_general(A, b);
}

bool infeasible_subset(const ModMatrix &A, const std::vector<zd> &b, const std::vector<size_t> &rows,
                       std::vector<zd> *cert) {
    ModMatrix sub = A.select_rows(rows);
    std::vector<zd> sb;
    sb.reserve(rows.size());
    for (size_t r : rows) {
        sb.push_back(b[r]);
    }
    SolveResult s = solve_raw(sub, sb);
    if (s.feasible) {
        return false;
    }
    if (cert) {
        *cert = std::move(s.certificate);
    }
    return true;
}

std::vector<zd> minimize(const ModMatrix &A, const std::vector<zd> &b, const std::vector<zd> &y) {
    std::vector<size_t> support;
    for (size_t r = 0; r < y.size(); ++r) {
        if (y[r] != 0) {
            support.push_back(r);
        }
    }
    if (support.size() > 48) {
        // Smallest infeasible prefix of the support.
        size_t lo = 1, hi = support.size();
        while (lo < hi) {
            size_t mid = (lo + hi) / 2;
            std::vector<size_t> prefix(support.begin(), support.begin() + mid);
            if (infeasible_subset(A, b, prefix, nullptr)) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        support.resize(lo);
    }
    for (size_t k = support.size(); k-- > 0;) {
        std::vector<size_t> trial = support;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (!trial.empty() && infeasible_subset(A, b, trial, nullptr)) {
            support = std::move(trial);
        }
    }
    std::vector<zd> sub_cert;
    if (!infeasible_subset(A, b, support, &sub_cert)) {
        return y;
    }
    std::vector<zd> out(y.size(), 0);
    for (size_t k = 0; k < support.size(); ++k) {
        out[support[k]] = sub_cert[k];
    }
    return out;
}

}  // namespace

SolveResult solve(const ModMatrix &A, const std::vector<zd> &b, const SolveOptions &options) {
    if (b.size() != A.rows()) {
        fail(ErrorKind::InvalidInput, "right-hand side length does not match row count");
    }
    std::vector<zd> bb(b.size());
    for (size_t k = 0; k < b.size(); ++k) {
        bb[k] = b[k] % A.modulus();
    }
    SolveResult res = solve_raw(A, bb);
    if (!res.feasible && options.minimize_certificate) {
        std::vector<zd> small = minimize(A, bb, res.certificate);
        if (verify_certificate(A, bb, small)) {
            res.certificate = std::move(small);
        }
    }
    if (res.feasible ? !verify_solution(A, bb, res.solution) : !verify_certificate(A, bb, res.certificate)) {
        fail(ErrorKind::InvalidInput, "internal: solver output failed re-verification");
    }
    return res;
}

std::vector<std::vector<zd>> kernel(const ModMatrix &A) {
    const uint32_t d = A.modulus();
    const size_t n = A.cols();
    Diagonalization dg = diagonalize(A);
    std::vector<std::vector<zd>> gens;
    auto column = [&](size_t t, zd scale) {
        std::vector<zd> v(n);
        for (size_t i = 0; i < n; ++i) {
            v[i] = mul_mod(dg.V[i * n + t], scale, d);
        }
        return v;
    };
    for (size_t t = 0; t < dg.pivots.size(); ++t) {
        zd g = dg.pivots[t];
        if (g != 1) {
            gens.push_back(column(t, d / g));
        }
    }
    for (size_t t = dg.pivots.size(); t < n; ++t) {
        gens.push_back(column(t, 1));
    }
    return gens;
}

// ---------------------------------------------------------------------------
// Prime-field solve with many columns.

std::optional<std::vector<zd>> solve_prime_wide(const ModMatrix &A, const std::vector<zd> &b) {
    const uint32_t p = A.modulus();
    if (!is_prime(p)) {
        fail(ErrorKind::InvalidInput, "solve_prime_wide needs a prime modulus");
    }
    const size_t m = A.rows(), n = A.cols();
    std::vector<size_t> pivot_col;
    std::vector<zd> x(n, 0);
    if (p == 2) {
        const size_t w = (n + 1 + 63) / 64;
        std::vector<uint64_t> bits(m * w, 0);
        auto rowp = [&](size_t r) { return bits.data() + r * w; };
        for (size_t r = 0; r < m; ++r) {
            for (auto [c, v] : A.row(r)) {
                if (v & 1) {
                    rowp(r)[c / 64] |= 1ULL << (c % 64);
                }
            }
            if (b[r] & 1) {
                rowp(r)[n / 64] |= 1ULL << (n % 64);
            }
        }
        size_t rank = 0;
        for (size_t c = 0; c < n && rank < m; ++c) {
            size_t wc = c / 64;
            uint64_t mask = 1ULL << (c % 64);
            size_t found = m;
            for (size_t r = rank; r < m; ++r) {
                if (rowp(r)[wc] & mask) {
                    found = r;
                    break;
                }
            }
            if (found == m) {
                continue;
            }
            if (found != rank) {
                std::swap_ranges(rowp(found), rowp(found) + w, rowp(rank));
            }
            const uint64_t *piv = rowp(rank);
            for (size_t r = 0; r < m; ++r) {
                if (r != rank && (rowp(r)[wc] & mask)) {
                    uint64_t *q = rowp(r);
                    for (size_t k = wc; k < w; ++k) {
                        q[k] ^= piv[k];
                    }
                }
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (size_t r = rank; r < m; ++r) {
            if (rowp(r)[n / 64] & (1ULL << (n % 64))) {
                return std::nullopt;
            }
        }
        for (size_t r = 0; r < rank; ++r) {
            x[pivot_col[r]] = (rowp(r)[n / 64] >> (n % 64)) & 1;
        }
    } else {
        const size_t w = n + 1;
        std::vector<zd> rows(m * w, 0);
        auto rowp = [&](size_t r) { return rows.data() + r * w; };
        for (size_t r = 0; r < m; ++r) {
            for (auto [c, v] : A.row(r)) {
                rowp(r)[c] = v;
            }
            rowp(r)[n] = b[r] % p;
        }
        size_t rank = 0;
        for (size_t c = 0; c < n && rank < m; ++c) {
            size_t found = m;
            for (size_t r = rank; r < m; ++r) {
                if (rowp(r)[c] != 0) {
                    found = r;
                    break;
                }
            }
            if (found == m) {
                continue;
            }
            if (found != rank) {
                std::swap_ranges(rowp(found), rowp(found) + w, rowp(rank));
            }
            zd inv = *inverse_mod(rowp(rank)[c], p);
            zd *piv = rowp(rank);
            for (size_t k = c; k < w; ++k) {
                piv[k] = mul_mod(piv[k], inv, p);
            }
            for (size_t r = 0; r < m; ++r) {
                zd f = rowp(r)[c];
                if (r != rank && f != 0) {
                    zd *q = rowp(r);
                    zd nf = p - f;
                    for (size_t k = c; k < w; ++k) {
                        if (piv[k]) {
                            q[k] = static_cast<zd>((q[k] + static_cast<uint64_t>(nf) * piv[k]) % p);
                        }
                    }
                }
            }
            pivot_col.push_back(c);
            ++rank;
        }
        for (size_t r = rank; r < m; ++r) {
            if (rowp(r)[n] != 0) {
                return std::nullopt;
            }
        }
        for (size_t r = 0; r < rank; ++r) {
            x[pivot_col[r]] = rowp(r)[n];
        }
    }
    if (A.multiply(x) != b) {
        fail(ErrorKind::InvalidInput, "internal: wide solve failed re-verification");
    }
    return x;
}

// ---------------------------------------------------------------------------
// Integer Smith normal form.

namespace {

using Mat = std::vector<std::vector<mpz_class>>;

Mat identity_mat(size_t n) {
    Mat I(n, std::vector<mpz_class>(n, 0));
    for (size_t k = 0; k < n; ++k) {
        I[k][k] = 1;
    }
    return I;
}

}  // namespace

Mat mat_mul(const Mat &A, const Mat &B) {
    size_t m = A.size();
    size_t k = B.size();
    size_t n = k ? B[0].size() : 0;
    Mat C(m, std::vector<mpz_class>(n, 0));
    for (size_t i = 0; i < m; ++i) {
        for (size_t t = 0; t < k; ++t) {
            if (A[i][t] == 0) {
                continue;
            }
            for (size_t j = 0; j < n; ++j) {
                C[i][j] += A[i][t] * B[t][j];
            }
        }
    }
    return C;
}

mpz_class determinant(Mat A) {
    // Bareiss fraction-free elimination.
    size_t n = A.size();
    if (n == 0) {
        return 1;
    }
    mpz_class sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (A[k][k] == 0) {
            size_t s = k + 1;
            while (s < n && A[s][k] == 0) {
                ++s;
            }
            if (s == n) {
                return 0;
            }
            std::swap(A[k], A[s]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) / prev;
            }
        }
        prev = A[k][k];
    }
    return sign * A[n - 1][n - 1];
}

SmithForm smith_normal_form(const Mat &A_in) {
    const size_t m = A_in.size();
    const size_t n = m ? A_in[0].size() : 0;
    SmithForm out;
    Mat A = A_in;
    Mat U = identity_mat(m);
    Mat V = identity_mat(n);
    auto swap_rows = [&](size_t i, size_t j) {
        std::swap(A[i], A[j]);
        std::swap(U[i], U[j]);
    };
    auto swap_cols = [&](size_t i, size_t j) {
        for (auto &r : A) {
            std::swap(r[i], r[j]);
        }
        for (auto &r : V) {
            std::swap(r[i], r[j]);
        }
    };
    auto add_row = [&](size_t dst, size_t src, const mpz_class &k) {
        for (size_t c = 0; c < n; ++c) {
            A[dst][c] += k * A[src][c];
        }
        for (size_t c = 0; c < m; ++c) {
            U[dst][c] += k * U[src][c];
        }
    };
    auto add_col = [&](size_t dst, size_t src, const mpz_class &k) {
        for (size_t r = 0; r < m; ++r) {
            A[r][dst] += k * A[r][src];
        }
        for (size_t r = 0; r < n; ++r) {
            V[r][dst] += k * V[r][src];
        }
    };
    for (size_t t = 0; t < std::min(m, n); ++t) {
        while (true) {
            // Smallest nonzero magnitude in the trailing block.
            size_t pr = m, pc = n;
            for (size_t r = t; r < m; ++r) {
                for (size_t c = t; c < n; ++c) {
                    if (A[r][c] != 0 && (pr == m || abs(A[r][c]) < abs(A[pr][pc]))) {
                        pr = r;
                        pc = c;
                    }
                }
            }
            if (pr == m) {
                break;
            }
            if (pr != t) {
                swap_rows(t, pr);
            }
            if (pc != t) {
                swap_cols(t, pc);
            }
            bool clean = true;
            for (size_t r = t + 1; r < m; ++r) {
                if (A[r][t] != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), A[r][t].get_mpz_t(), A[t][t].get_mpz_t());
                    add_row(r, t, -q);
                    clean &= A[r][t] == 0;
                }
            }
            for (size_t c = t + 1; c < n; ++c) {
                if (A[t][c] != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), A[t][c].get_mpz_t(), A[t][t].get_mpz_t());
                    add_col(c, t, -q);
                    clean &= A[t][c] == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Divisibility of the remaining block by the pivot.
            bool divides = true;
            for (size_t r = t + 1; r < m && divides; ++r) {
                for (size_t c = t + 1; c < n; ++c) {
                    if (A[r][c] % A[t][t] != 0) {
                        add_row(t, r, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (A[t][t] < 0) {
            for (size_t c = 0; c < n; ++c) {
                A[t][c] = -A[t][c];
            }
            for (size_t c = 0; c < m; ++c) {
                U[t][c] = -U[t][c];
            }
        }
    }
    for (size_t t = 0; t < std::min(m, n); ++t) {
        out.invariants.push_back(A[t][t]);
    }
    out.U = std::move(U);
    out.D = std::move(A);
    out.V = std::move(V);
    return out;
}

}  // namespace ctx
