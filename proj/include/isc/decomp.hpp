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

#ifndef ISC_DECOMP_HPP
#define ISC_DECOMP_HPP

#include <cstddef>
#include <vector>

#include "isc/gf2.hpp"
#include "isc/posets.hpp"

namespace isc {

/// An l x n 0/1 matrix with a single one at (placement[i], support[i]) for
/// each i and zeros elsewhere. `support` is sorted and `placement` injective.
class IncompletePermutation {
   public:
    IncompletePermutation() = default;
    IncompletePermutation(
        std::size_t rows, std::size_t cols, std::vector<std::size_t> support, std::vector<std::size_t> placement);

    /// Ones at (i, i) for i < count.
    static IncompletePermutation leading_diagonal(std::size_t rows, std::size_t cols, std::size_t count);
    /// Ones at (rows - count + i, cols - count + i) for i < count.
    static IncompletePermutation trailing_diagonal(std::size_t rows, std::size_t cols, std::size_t count);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<std::size_t> &support() const { return support_; }
    const std::vector<std::size_t> &placement() const { return placement_; }

    BitMatrix materialize() const;

    bool operator==(const IncompletePermutation &other) const = default;

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::size_t> support_;
    std::vector<std::size_t> placement_;
};

BitMatrix materialize_gp(const IncompletePermutation &p);

/// Tensor product; the support is the product of supports in lexicographic order.
IncompletePermutation kron(const IncompletePermutation &a, const IncompletePermutation &b);

/// The incomplete permutation with support equal to the union of the parts'
/// supports, each column placed at the stacked row of its first occurrence.
IncompletePermutation merge_stacked(const std::vector<IncompletePermutation> &parts);

/// The three factors of an invertible Λ with stack(parts) == Λ · GP(merged).
struct LambdaFactor {
    /// Moves the nonzero rows of GP(merged) to the top, in column order.
    BitMatrix gather;
    /// Unit lower triangular; duplicates row j into (occurrences_j - 1) zero rows.
    BitMatrix copy;
    /// Sends each row to its final stacked position.
    BitMatrix scatter;
    /// scatter · copy · gather
    BitMatrix lambda;
};

LambdaFactor lambda_factor_parts(const std::vector<IncompletePermutation> &parts, const IncompletePermutation &merged);
BitMatrix lambda_factor(const std::vector<IncompletePermutation> &parts, const IncompletePermutation &merged);

struct NotOrthogonalError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Joint decomposition of an orthogonal pair (A, B):
///     P_a A Q = L_a D_a R
///     P_b B Q = L_b D_b R^{-T}
/// with L_a unit lower triangular, L_b and R unit upper triangular, D_a the
/// leading diagonal of length rank(A) and D_b the trailing diagonal of
/// length rank(B).
struct JointDecomposition {
    BitMatrix p_a;
    BitMatrix p_b;
    BitMatrix q;
    BitMatrix l_a;
    BitMatrix l_b;
    IncompletePermutation d_a;
    IncompletePermutation d_b;
    BitMatrix r;
    /// (R^{-1})ᵀ
    BitMatrix r_inv_t;
    std::size_t rank_a = 0;
    std::size_t rank_b = 0;
};

/// Pivots: the first one of A in row-major order, then the last one of B in
/// column-major order that avoids the A pivot column.
JointDecomposition joint_decompose(const BitMatrix &a, const BitMatrix &b);

/// M(H, X) for a single subset X of [m] given as a bit mask.
BitMatrix layered_tensor(const std::vector<BitMatrix> &h, std::uint64_t subset);
/// Row-stack of M(H, X_k) over the tuple.
BitMatrix layered_matrix(const std::vector<BitMatrix> &h, const SubsetTuple &x);

/// One side of a component decomposition, P H Q = L D R, where R is the
/// joint R for the X side and R^{-T} for the Z side.
struct ComponentFactors {
    BitMatrix p;
    BitMatrix q;
    BitMatrix l;
    IncompletePermutation d;
    BitMatrix r;
    BitMatrix r_inv;
};

ComponentFactors x_side_factors(const JointDecomposition &jd);
ComponentFactors z_side_factors(const JointDecomposition &jd);

/// P M Q = L · GP(T) · R for a layered matrix M = M(H, X).
struct LayeredDecomposition {
    BitMatrix p;
    BitMatrix q;
    /// block_diag of the per-layer L factors
    BitMatrix layer_l;
    BitMatrix lambda;
    /// layer_l · lambda
    BitMatrix l;
    IncompletePermutation d;
    BitMatrix r;
    std::vector<IncompletePermutation> layer_d;
};

LayeredDecomposition layered_decompose(const std::vector<ComponentFactors> &components, const SubsetTuple &x);

}  // namespace isc

#endif
