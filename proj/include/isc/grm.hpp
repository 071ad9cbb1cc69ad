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

#ifndef ISC_GRM_HPP
#define ISC_GRM_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "isc/gf2.hpp"
#include "isc/posets.hpp"

namespace isc {

/// [[1,1],[0,1]]^{⊗m}. It is its own inverse, so R_m^{-T} = R_mᵀ.
BitMatrix r_matrix(std::size_t m);

/// Decreasing sets index rows of R_m, increasing sets index rows of R_m^{-T}.
enum class Parametrization { Decreasing, Increasing };

struct GrmSpace {
    std::size_t m = 0;
    MonotoneSet set;
    Parametrization parametrization = Parametrization::Decreasing;
    /// GP(set) · R_m or GP(set) · R_m^{-T}, with the zero rows dropped.
    BitMatrix generator;
};

/// Throws std::invalid_argument when the set's direction does not match the
/// parametrization or the set is not over {0,1}^m.
GrmSpace grm_generator(const MonotoneSet &s, Parametrization p);

/// Generator matrix of the space parametrized by `s` in its natural way.
GrmSpace grm_space(const MonotoneSet &s);

/// The bit-flip map t -> 1 - t applied to every member; swaps the direction.
MonotoneSet flip_set(const MonotoneSet &s);

/// For decreasing S, the decreasing set (↑(1 - S))^c whose space is GRM(S)^⊥.
MonotoneSet dual_set(const MonotoneSet &s);

/// S ⊆ T over {0,1}^m with a common direction.
struct NestedPair {
    MonotoneSet s;
    MonotoneSet t;

    std::size_t m() const { return t.shape().size(); }
};

/// Throws std::invalid_argument unless both sets are binary, share a shape
/// and direction, and S ⊆ T.
void check_nested(const NestedPair &p);

/// max{|t| : t ∈ T∖S} for decreasing pairs, max{m - |t| : t ∈ T∖S} for
/// increasing pairs; empty when T∖S is empty.
std::optional<std::size_t> nested_exponent(const NestedPair &p);

/// 2^{m - r}: the minimum weight of GRM(T) outside GRM(S). Increasing pairs
/// are mapped through flip_set first. Empty when T∖S is empty.
std::optional<std::size_t> nested_distance(const NestedPair &p);

/// The same distance through the recursion d = min(2 d(T_0,S_0), d(T_1,S_1))
/// on the coordinate-0 split, bottoming out at d = 1 for m = 0.
std::optional<std::size_t> nested_distance_recursive(const NestedPair &p);

/// T_0 = {t' : (0,t') ∈ T}, T_1 = {t' : (1,t') ∈ T} over {0,1}^{m-1}.
/// Throws std::invalid_argument for m = 0.
std::pair<MonotoneSet, MonotoneSet> uuv_split(const MonotoneSet &t);

/// The middle layer K of CSS(X, Z) with all components [1 1], as indicator
/// tuples in lexicographic order. Throws InvalidCodeError when some X_i and
/// Z_j are disjoint.
std::vector<IndexTuple> repetition_middle_layer(const SubsetTuple &x, const SubsetTuple &z);

struct XzDistances {
    std::size_t d_x = 0;
    std::size_t d_z = 0;

    bool operator==(const XzDistances &other) const = default;
};

/// d_x = 2^{min(m - |v|)} and d_z = 2^{min |v|} over v ∈ K. Empty when k = 0.
std::optional<XzDistances> css_xz_distances(const SubsetTuple &x, const SubsetTuple &z);

}  // namespace isc

#endif
