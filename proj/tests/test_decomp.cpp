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
#include <numeric>

#include "gtest/gtest.h"
#include "naive.hpp"

using namespace isc;

namespace {

/// B has rows drawn from the kernel of A, so A·Bᵀ = 0.
std::pair<BitMatrix, BitMatrix> random_orthogonal_pair(std::mt19937_64 &rng, std::size_t max_rows, std::size_t max_cols) {
    std::size_t n = 1 + rng() % max_cols;
    auto a = naive::random_matrix(rng, rng() % (max_rows + 1), n, 0.4);
    auto k = kernel_basis(a);
    auto mix = naive::random_matrix(rng, rng() % (max_rows + 1), k.rows());
    BitMatrix b = k.rows() ? mat_mul(mix, k) : BitMatrix(mix.rows(), n);
    return {a, b};
}

void expect_valid(const BitMatrix &a, const BitMatrix &b, const JointDecomposition &jd) {
    ASSERT_EQ(mat_mul(mat_mul(jd.p_a, a), jd.q), mat_mul(mat_mul(jd.l_a, jd.d_a.materialize()), jd.r));
    ASSERT_EQ(mat_mul(mat_mul(jd.p_b, b), jd.q), mat_mul(mat_mul(jd.l_b, jd.d_b.materialize()), jd.r_inv_t));
    ASSERT_TRUE(is_permutation(jd.p_a));
    ASSERT_TRUE(is_permutation(jd.p_b));
    ASSERT_TRUE(is_permutation(jd.q));
    ASSERT_TRUE(is_unit_lower_triangular(jd.l_a));
    ASSERT_TRUE(is_unit_upper_triangular(jd.l_b));
    ASSERT_TRUE(is_unit_upper_triangular(jd.r));
    ASSERT_EQ(mat_mul(jd.r, jd.r_inv_t.transpose()), BitMatrix::identity(a.cols()));
    ASSERT_EQ(jd.rank_a, rank(a));
    ASSERT_EQ(jd.rank_b, rank(b));
    ASSERT_EQ(jd.d_a, IncompletePermutation::leading_diagonal(a.rows(), a.cols(), jd.rank_a));
    ASSERT_EQ(jd.d_b, IncompletePermutation::trailing_diagonal(b.rows(), b.cols(), jd.rank_b));
}

}  // namespace

TEST(incomplete_permutation, validation) {
    ASSERT_THROW(IncompletePermutation(2, 2, {1, 0}, {0, 1}), std::invalid_argument);
    ASSERT_THROW(IncompletePermutation(2, 2, {0, 1}, {1, 1}), std::invalid_argument);
    ASSERT_THROW(IncompletePermutation(2, 2, {0, 2}, {0, 1}), std::out_of_range);
    auto p = IncompletePermutation(3, 2, {0, 1}, {2, 0});
    ASSERT_EQ(p.materialize(), BitMatrix::from_strings({"01", "00", "10"}));
}

TEST(incomplete_permutation, kron_matches_dense_kron) {
    auto a = IncompletePermutation(2, 3, {0, 2}, {1, 0});
    auto b = IncompletePermutation(2, 2, {1}, {0});
    ASSERT_EQ(kron(a, b).materialize(), kron(a.materialize(), b.materialize()));
}

TEST(lambda_factor, reproduces_stack) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 8;
        std::vector<IncompletePermutation> parts;
        std::size_t count = 1 + rng() % 4;
        for (std::size_t p = 0; p < count; p++) {
            std::size_t rows = rng() % 6;
            std::vector<std::size_t> cols;
            for (std::size_t c = 0; c < n; c++) {
                if (rng() % 2 && cols.size() < rows) {
                    cols.push_back(c);
                }
            }
            std::vector<std::size_t> place(rows);
            std::iota(place.begin(), place.end(), 0);
            std::shuffle(place.begin(), place.end(), rng);
            place.resize(cols.size());
            parts.emplace_back(rows, n, cols, place);
        }
        auto merged = merge_stacked(parts);
        auto f = lambda_factor_parts(parts, merged);
        std::vector<BitMatrix> dense;
        for (auto &p : parts) {
            dense.push_back(p.materialize());
        }
        BitMatrix stacked = vstack(dense);
        ASSERT_EQ(mat_mul(f.lambda, merged.materialize()), stacked);
        ASSERT_EQ(f.lambda, mat_mul(mat_mul(f.scatter, f.copy), f.gather));
        ASSERT_TRUE(is_permutation(f.gather));
        ASSERT_TRUE(is_permutation(f.scatter));
        ASSERT_TRUE(is_unit_lower_triangular(f.copy));
        ASSERT_EQ(rank(f.lambda), f.lambda.rows());
    }
}

TEST(joint_decompose, repetition_pair) {
    auto a = BitMatrix::from_rows({{1, 1}});
    auto jd = joint_decompose(a, a);
    expect_valid(a, a, jd);
    ASSERT_EQ(jd.r, BitMatrix::from_rows({{1, 1}, {0, 1}}));
    ASSERT_EQ(jd.d_a.materialize(), BitMatrix::from_rows({{1, 0}}));
    ASSERT_EQ(jd.d_b.materialize(), BitMatrix::from_rows({{0, 1}}));
}

TEST(joint_decompose, hamming_pair) {
    auto h = BitMatrix::from_strings({"0001111", "0110011", "1010101"});
    expect_valid(h, h, joint_decompose(h, h));
}

TEST(joint_decompose, degenerate_inputs) {
    BitMatrix zero(2, 3);
    auto full = BitMatrix::identity(3);
    expect_valid(zero, full, joint_decompose(zero, full));
    expect_valid(full, zero, joint_decompose(full, zero));
    expect_valid(zero, zero, joint_decompose(zero, zero));
    expect_valid(BitMatrix(0, 4), BitMatrix(0, 4), joint_decompose(BitMatrix(0, 4), BitMatrix(0, 4)));
    ASSERT_THROW(joint_decompose(full, full), NotOrthogonalError);
}

TEST(joint_decompose, random_pairs) {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 300; trial++) {
        auto [a, b] = random_orthogonal_pair(rng, 6, 10);
        expect_valid(a, b, joint_decompose(a, b));
    }
}

TEST(layered, tensor_places_components) {
    auto h = BitMatrix::from_rows({{1, 1}});
    std::vector<BitMatrix> hs{h, h, h};
    auto i2 = BitMatrix::identity(2);
    ASSERT_EQ(layered_tensor(hs, 0b101), kron(kron(h, i2), h));
    auto x = SubsetTuple::from_digits(3, {"0", "12"});
    ASSERT_EQ(layered_matrix(hs, x), vstack({kron(kron(h, i2), i2), kron(kron(i2, h), h)}));
}

TEST(layered, decomposition_reassembles) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; trial++) {
        std::size_t m = 1 + rng() % 3;
        std::vector<BitMatrix> ha;
        std::vector<BitMatrix> hb;
        std::vector<ComponentFactors> xf;
        std::vector<ComponentFactors> zf;
        for (std::size_t i = 0; i < m; i++) {
            auto [a, b] = random_orthogonal_pair(rng, 3, 4);
            auto jd = joint_decompose(a, b);
            ha.push_back(a);
            hb.push_back(b);
            xf.push_back(x_side_factors(jd));
            zf.push_back(z_side_factors(jd));
        }
        std::vector<std::uint64_t> masks;
        std::size_t u = 1 + rng() % 3;
        for (std::size_t k = 0; k < u; k++) {
            masks.push_back(rng() % (std::uint64_t{1} << m));
        }
        SubsetTuple x(m, masks);
        for (int side = 0; side < 2; side++) {
            auto &h = side ? hb : ha;
            auto ld = layered_decompose(side ? zf : xf, x);
            auto mm = layered_matrix(h, x);
            ASSERT_EQ(mat_mul(mat_mul(ld.p, mm), ld.q), mat_mul(mat_mul(ld.l, ld.d.materialize()), ld.r));
            ASSERT_TRUE(is_permutation(ld.p));
            ASSERT_TRUE(is_permutation(ld.q));
            ASSERT_EQ(ld.l, mat_mul(ld.layer_l, ld.lambda));
            ASSERT_EQ(rank(ld.lambda), ld.lambda.rows());
            ASSERT_EQ(ld.d.support().size(), rank(mm));
        }
    }
}
