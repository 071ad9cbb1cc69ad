// Copyright 2026 The isc Authors
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

#include "isc/decomp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <optional>

namespace isc {

IncompletePermutation::IncompletePermutation(
    std::size_t rows, std::size_t cols, std::vector<std::size_t> support, std::vector<std::size_t> placement)
    : rows_(rows), cols_(cols), support_(std::move(support)), placement_(std::move(placement)) {
    if (support_.size() != placement_.size()) {
        throw DimensionError("IncompletePermutation: support and placement sizes differ");
    }
    if (!std::is_sorted(support_.begin(), support_.end()) ||
        std::adjacent_find(support_.begin(), support_.end()) != support_.end()) {
        throw std::invalid_argument("IncompletePermutation: support must be strictly increasing");
    }
    std::vector<bool> used(rows_, false);
    for (std::size_t i = 0; i < support_.size(); i++) {
        if (support_[i] >= cols_ || placement_[i] >= rows_) {
            throw std::out_of_range("IncompletePermutation: entry outside the matrix");
        }
        if (used[placement_[i]]) {
            throw std::invalid_argument("IncompletePermutation: placement is not injective");
        }
        used[placement_[i]] = true;
    }
}

IncompletePermutation IncompletePermutation::leading_diagonal(std::size_t rows, std::size_t cols, std::size_t count) {
    std::vector<std::size_t> idx(count);
    std::iota(idx.begin(), idx.end(), 0);
    return IncompletePermutation(rows, cols, idx, idx);
}

IncompletePermutation IncompletePermutation::trailing_diagonal(std::size_t rows, std::size_t cols, std::size_t count) {
    std::vector<std::size_t> support(count);
    std::vector<std::size_t> placement(count);
    for (std::size_t i = 0; i < count; i++) {
        support[i] = cols - count + i;
        placement[i] = rows - count + i;
    }
    return IncompletePermutation(rows, cols, std::move(support), std::move(placement));
}

BitMatrix IncompletePermutation::materialize() const {
    BitMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < support_.size(); i++) {
        out.set(placement_[i], support_[i], true);
    }
    return out;
}

BitMatrix materialize_gp(const IncompletePermutation &p) {
    return p.materialize();
}

IncompletePermutation kron(const IncompletePermutation &a, const IncompletePermutation &b) {
    std::vector<std::size_t> support;
    std::vector<std::size_t> placement;
    for (std::size_t i = 0; i < a.support().size(); i++) {
        for (std::size_t j = 0; j < b.support().size(); j++) {
            support.push_back(a.support()[i] * b.cols() + b.support()[j]);
            placement.push_back(a.placement()[i] * b.rows() + b.placement()[j]);
        }
    }
    return IncompletePermutation(a.rows() * b.rows(), a.cols() * b.cols(), std::move(support), std::move(placement));
}

namespace {

std::size_t common_cols(const std::vector<IncompletePermutation> &parts) {
    if (parts.empty()) {
        return 0;
    }
    std::size_t n = parts.front().cols();
    for (auto &p : parts) {
        if (p.cols() != n) {
            throw DimensionError("incomplete permutations have different column counts");
        }
    }
    return n;
}

}  // namespace

IncompletePermutation merge_stacked(const std::vector<IncompletePermutation> &parts) {
    std::size_t n = common_cols(parts);
    std::vector<std::optional<std::size_t>> first_row(n);
    std::size_t offset = 0;
    for (auto &p : parts) {
        for (std::size_t i = 0; i < p.support().size(); i++) {
            auto &slot = first_row[p.support()[i]];
            if (!slot) {
                slot = offset + p.placement()[i];
            }
        }
        offset += p.rows();
    }
    std::vector<std::size_t> support;
    std::vector<std::size_t> placement;
    for (std::size_t c = 0; c < n; c++) {
        if (first_row[c]) {
            support.push_back(c);
            placement.push_back(*first_row[c]);
        }
    }
    return IncompletePermutation(offset, n, std::move(support), std::move(placement));
}

LambdaFactor lambda_factor_parts(const std::vector<IncompletePermutation> &parts, const IncompletePermutation &merged) {
    std::size_t n = common_cols(parts);
    if (!parts.empty() && merged.cols() != n) {
        throw DimensionError("lambda_factor: merged matrix has a different column count");
    }
    std::size_t l = 0;
    for (auto &p : parts) {
        l += p.rows();
    }
    if (merged.rows() != l) {
        throw DimensionError("lambda_factor: merged row count must equal the stacked row count");
    }

    const auto &support = merged.support();
    std::vector<std::size_t> position(merged.cols(), SIZE_MAX);
    for (std::size_t j = 0; j < support.size(); j++) {
        position[support[j]] = j;
    }

    // Stacked rows holding column a_j, in stack order.
    std::vector<std::vector<std::size_t>> occurrences(support.size());
    std::vector<bool> stack_row_used(l, false);
    std::size_t offset = 0;
    for (auto &p : parts) {
        for (std::size_t i = 0; i < p.support().size(); i++) {
            std::size_t j = position[p.support()[i]];
            if (j == SIZE_MAX) {
                throw std::invalid_argument("lambda_factor: part support not contained in merged support");
            }
            occurrences[j].push_back(offset + p.placement()[i]);
            stack_row_used[offset + p.placement()[i]] = true;
        }
        offset += p.rows();
    }
    for (std::size_t j = 0; j < support.size(); j++) {
        if (occurrences[j].empty()) {
            throw std::invalid_argument("lambda_factor: merged support larger than the union of part supports");
        }
        std::sort(occurrences[j].begin(), occurrences[j].end());
    }

    LambdaFactor out{BitMatrix(l, l), BitMatrix::identity(l), BitMatrix(l, l), BitMatrix()};

    // Step 1: nonzero rows of GP(merged) to the top, zero rows after them.
    std::vector<bool> merged_row_used(l, false);
    for (std::size_t j = 0; j < support.size(); j++) {
        out.gather.set(j, merged.placement()[j], true);
        merged_row_used[merged.placement()[j]] = true;
    }
    std::size_t next = support.size();
    for (std::size_t r = 0; r < l; r++) {
        if (!merged_row_used[r]) {
            out.gather.set(next++, r, true);
        }
    }

    // Step 2: copy row j into (b_j - 1) of the zero rows below it.
    // Step 3: route first occurrences, copies and zero rows to their stacked positions.
    next = support.size();
    for (std::size_t j = 0; j < support.size(); j++) {
        out.scatter.set(occurrences[j][0], j, true);
        for (std::size_t c = 1; c < occurrences[j].size(); c++) {
            out.copy.set(next, j, true);
            out.scatter.set(occurrences[j][c], next, true);
            next++;
        }
    }
    for (std::size_t r = 0; r < l; r++) {
        if (!stack_row_used[r]) {
            out.scatter.set(r, next++, true);
        }
    }
    assert(next == l);

    out.lambda = mat_mul(out.scatter, mat_mul(out.copy, out.gather));
    return out;
}

BitMatrix lambda_factor(const std::vector<IncompletePermutation> &parts, const IncompletePermutation &merged) {
    return lambda_factor_parts(parts, merged).lambda;
}

namespace {

/// Row-order permutation matrix: (P X)[new] = X[order[new]].
BitMatrix row_permutation(const std::vector<std::size_t> &order) {
    BitMatrix p(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); i++) {
        p.set(i, order[i], true);
    }
    return p;
}

/// Column-order permutation matrix: (X Q)[:, new] = X[:, order[new]].
BitMatrix col_permutation(const std::vector<std::size_t> &order) {
    return row_permutation(order).transpose();
}

BitMatrix embed(std::size_t before, const BitMatrix &x, std::size_t after) {
    return block_diag({BitMatrix::identity(before), x, BitMatrix::identity(after)});
}

JointDecomposition decompose_recursive(const BitMatrix &a, const BitMatrix &b) {
    const std::size_t ma = a.rows();
    const std::size_t mb = b.rows();
    const std::size_t n = a.cols();

    std::optional<std::pair<std::size_t, std::size_t>> pa;
    for (std::size_t i = 0; i < ma && !pa; i++) {
        for (std::size_t j = 0; j < n; j++) {
            if (a.get(i, j)) {
                pa = {i, j};
                break;
            }
        }
    }
    std::optional<std::pair<std::size_t, std::size_t>> pb;
    for (std::size_t c = n; c-- > 0 && !pb;) {
        if (pa && c == pa->second) {
            continue;
        }
        for (std::size_t r = mb; r-- > 0;) {
            if (b.get(r, c)) {
                pb = {r, c};
                break;
            }
        }
    }

    if (!pa && !pb) {
        if (!b.is_zero()) {
            throw NotOrthogonalError("joint_decompose: inputs are not orthogonal");
        }
        JointDecomposition z;
        z.p_a = BitMatrix::identity(ma);
        z.p_b = BitMatrix::identity(mb);
        z.q = BitMatrix::identity(n);
        z.l_a = BitMatrix::identity(ma);
        z.l_b = BitMatrix::identity(mb);
        z.r = BitMatrix::identity(n);
        z.r_inv_t = BitMatrix::identity(n);
        z.d_a = IncompletePermutation::leading_diagonal(ma, n, 0);
        z.d_b = IncompletePermutation::trailing_diagonal(mb, n, 0);
        return z;
    }
    if (pa && !pb && !b.is_zero()) {
        throw NotOrthogonalError("joint_decompose: inputs are not orthogonal");
    }

    const std::size_t ka = pa ? 1 : 0;
    const std::size_t kb = pb ? 1 : 0;
    const std::size_t mid = n - ka - kb;

    std::vector<std::size_t> row_a;
    if (pa) {
        row_a.push_back(pa->first);
    }
    for (std::size_t r = 0; r < ma; r++) {
        if (!pa || r != pa->first) {
            row_a.push_back(r);
        }
    }
    std::vector<std::size_t> row_b;
    for (std::size_t r = 0; r < mb; r++) {
        if (!pb || r != pb->first) {
            row_b.push_back(r);
        }
    }
    if (pb) {
        row_b.push_back(pb->first);
    }
    std::vector<std::size_t> cols;
    if (pa) {
        cols.push_back(pa->second);
    }
    for (std::size_t c = 0; c < n; c++) {
        if ((!pa || c != pa->second) && (!pb || c != pb->second)) {
            cols.push_back(c);
        }
    }
    if (pb) {
        cols.push_back(pb->second);
    }

    BitMatrix pa0 = row_permutation(row_a);
    BitMatrix pb0 = row_permutation(row_b);
    BitMatrix q0 = col_permutation(cols);
    BitMatrix ap = mat_mul(mat_mul(pa0, a), q0);
    BitMatrix bp = mat_mul(mat_mul(pb0, b), q0);

    // U = [[1, A12, B21], [0, I, B22ᵀ], [0, 0, 1]]; the one-sided cases drop a border.
    BitMatrix u = BitMatrix::identity(n);
    if (pa) {
        for (std::size_t c = ka; c < ka + mid; c++) {
            u.set(0, c, ap.get(0, c));
        }
    }
    if (pb) {
        for (std::size_t t = 0; t + 1 < n; t++) {
            u.set(t, n - 1, bp.get(mb - 1, t));
        }
    }
    BitMatrix u_inv = invert(u);
    BitMatrix au = mat_mul(ap, u);
    BitMatrix bu = mat_mul(bp, u_inv.transpose());

    BitMatrix la0 = BitMatrix::identity(ma);
    if (pa) {
        for (std::size_t r = 1; r < ma; r++) {
            la0.set(r, 0, au.get(r, 0));
        }
    }
    BitMatrix lb0 = BitMatrix::identity(mb);
    if (pb) {
        for (std::size_t r = 0; r + 1 < mb; r++) {
            lb0.set(r, mb - 1, bu.get(r, n - 1));
        }
    }
    // Both L factors are involutions over GF(2).
    BitMatrix ma_reduced = mat_mul(la0, au);
    BitMatrix mb_reduced = mat_mul(lb0, bu);

    BitMatrix sub_a = ma_reduced.submatrix(ka, ma, ka, ka + mid);
    BitMatrix sub_b = mb_reduced.submatrix(0, mb - kb, ka, ka + mid);
    JointDecomposition sub = decompose_recursive(sub_a, sub_b);

    BitMatrix ea_p = embed(ka, sub.p_a, 0);
    BitMatrix eb_p = embed(0, sub.p_b, kb);
    BitMatrix ec_q = embed(ka, sub.q, kb);

    JointDecomposition out;
    out.p_a = mat_mul(ea_p, pa0);
    out.p_b = mat_mul(eb_p, pb0);
    out.q = mat_mul(q0, ec_q);
    out.l_a = mat_mul(mat_mul(mat_mul(ea_p, la0), ea_p.transpose()), embed(ka, sub.l_a, 0));
    out.l_b = mat_mul(mat_mul(mat_mul(eb_p, lb0), eb_p.transpose()), embed(0, sub.l_b, kb));
    out.r = mat_mul(mat_mul(embed(ka, sub.r, kb), ec_q.transpose()), mat_mul(u_inv, ec_q));
    out.r_inv_t = invert(out.r).transpose();
    out.rank_a = ka + sub.rank_a;
    out.rank_b = kb + sub.rank_b;
    out.d_a = IncompletePermutation::leading_diagonal(ma, n, out.rank_a);
    out.d_b = IncompletePermutation::trailing_diagonal(mb, n, out.rank_b);
    return out;
}

}  // namespace

JointDecomposition joint_decompose(const BitMatrix &a, const BitMatrix &b) {
    if (a.cols() != b.cols()) {
        throw DimensionError("joint_decompose: column counts differ");
    }
    if (!mat_mul(a, b.transpose()).is_zero()) {
        throw NotOrthogonalError("joint_decompose: A·Bᵀ != 0");
    }
    return decompose_recursive(a, b);
}

BitMatrix layered_tensor(const std::vector<BitMatrix> &h, std::uint64_t subset) {
    if (h.size() < 64 && (subset >> h.size())) {
        throw std::out_of_range("layered_tensor: subset refers to a missing component");
    }
    BitMatrix out = BitMatrix::identity(1);
    for (std::size_t i = 0; i < h.size(); i++) {
        bool member = (subset >> i) & 1;
        out = kron(out, member ? h[i] : BitMatrix::identity(h[i].cols()));
    }
    return out;
}

BitMatrix layered_matrix(const std::vector<BitMatrix> &h, const SubsetTuple &x) {
    if (x.m() != h.size()) {
        throw DimensionError("layered_matrix: subset ground set differs from component count");
    }
    std::size_t n = 1;
    for (auto &hi : h) {
        n *= hi.cols();
    }
    if (x.size() == 0) {
        return BitMatrix(0, n);
    }
    std::vector<BitMatrix> layers;
    for (auto mask : x.masks()) {
        layers.push_back(layered_tensor(h, mask));
    }
    return vstack(layers);
}

ComponentFactors x_side_factors(const JointDecomposition &jd) {
    return {jd.p_a, jd.q, jd.l_a, jd.d_a, jd.r, invert(jd.r)};
}

ComponentFactors z_side_factors(const JointDecomposition &jd) {
    return {jd.p_b, jd.q, jd.l_b, jd.d_b, jd.r_inv_t, jd.r.transpose()};
}

LayeredDecomposition layered_decompose(const std::vector<ComponentFactors> &components, const SubsetTuple &x) {
    if (x.m() != components.size()) {
        throw DimensionError("layered_decompose: subset ground set differs from component count");
    }
    LayeredDecomposition out;
    out.q = BitMatrix::identity(1);
    out.r = BitMatrix::identity(1);
    for (auto &c : components) {
        out.q = kron(out.q, c.q);
        out.r = kron(out.r, c.r);
    }
    std::size_t n = out.q.rows();

    std::vector<BitMatrix> layer_p;
    std::vector<BitMatrix> layer_l;
    for (auto mask : x.masks()) {
        BitMatrix p = BitMatrix::identity(1);
        BitMatrix l = BitMatrix::identity(1);
        IncompletePermutation d = IncompletePermutation::leading_diagonal(1, 1, 1);
        for (std::size_t i = 0; i < components.size(); i++) {
            const auto &c = components[i];
            if ((mask >> i) & 1) {
                p = kron(p, c.p);
                l = kron(l, c.l);
                d = kron(d, c.d);
            } else {
                std::size_t ni = c.q.rows();
                p = kron(p, c.q.transpose());
                l = kron(l, c.r_inv);
                d = kron(d, IncompletePermutation::leading_diagonal(ni, ni, ni));
            }
        }
        layer_p.push_back(std::move(p));
        layer_l.push_back(std::move(l));
        out.layer_d.push_back(std::move(d));
    }
    out.p = block_diag(layer_p);
    out.layer_l = block_diag(layer_l);
    if (out.layer_d.empty()) {
        out.d = IncompletePermutation(0, n, {}, {});
    } else {
        out.d = merge_stacked(out.layer_d);
    }
    out.lambda = lambda_factor(out.layer_d, out.d);
    out.l = mat_mul(out.layer_l, out.lambda);
    return out;
}

}  // namespace isc
