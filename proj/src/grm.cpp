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

#include "isc/grm.hpp"

#include <algorithm>
#include <stdexcept>

#include "isc/css_code.hpp"

namespace isc {

BitMatrix r_matrix(std::size_t m) {
    BitMatrix base = BitMatrix::from_rows({{1, 1}, {0, 1}});
    BitMatrix out = BitMatrix::identity(1);
    for (std::size_t i = 0; i < m; i++) {
        out = kron(out, base);
    }
    return out;
}

namespace {

bool is_binary(const Shape &shape) {
    return std::all_of(shape.begin(), shape.end(), [](std::size_t n) { return n == 2; });
}

Direction opposite(Direction d) {
    return d == Direction::Decreasing ? Direction::Increasing : Direction::Decreasing;
}

}  // namespace

GrmSpace grm_generator(const MonotoneSet &s, Parametrization p) {
    if (!is_binary(s.shape())) {
        throw std::invalid_argument("grm_generator: set is not over {0,1}^m");
    }
    Direction want = p == Parametrization::Decreasing ? Direction::Decreasing : Direction::Increasing;
    if (s.direction() != want) {
        throw std::invalid_argument(
            std::string("grm_generator: parametrization needs a ") + direction_name(want) + " set");
    }
    std::size_t m = s.shape().size();
    BitMatrix r = r_matrix(m);
    if (p == Parametrization::Increasing) {
        r = r.transpose();
    }
    return GrmSpace{m, s, p, r.select_rows(s.members())};
}

GrmSpace grm_space(const MonotoneSet &s) {
    return grm_generator(
        s, s.direction() == Direction::Decreasing ? Parametrization::Decreasing : Parametrization::Increasing);
}

MonotoneSet flip_set(const MonotoneSet &s) {
    if (!is_binary(s.shape())) {
        throw std::invalid_argument("flip_set: set is not over {0,1}^m");
    }
    std::size_t top = shape_volume(s.shape()) - 1;
    std::vector<std::size_t> flipped;
    for (auto i : s.members()) {
        // Flipping every bit of a binary tuple is top - index in lexicographic order.
        flipped.push_back(top - i);
    }
    return MonotoneSet(s.shape(), opposite(s.direction()), std::move(flipped));
}

MonotoneSet dual_set(const MonotoneSet &s) {
    if (s.direction() != Direction::Decreasing) {
        throw std::invalid_argument("dual_set: expected a decreasing set");
    }
    return flip_set(s).complement();
}

void check_nested(const NestedPair &p) {
    if (p.s.shape() != p.t.shape() || !is_binary(p.t.shape())) {
        throw std::invalid_argument("nested pair: S and T must live in the same {0,1}^m");
    }
    if (p.s.direction() != p.t.direction()) {
        throw std::invalid_argument("nested pair: S and T have different directions");
    }
    for (auto i : p.s.members()) {
        if (!p.t.contains(i)) {
            throw std::invalid_argument("nested pair: S is not contained in T");
        }
    }
}

std::optional<std::size_t> nested_exponent(const NestedPair &p) {
    check_nested(p);
    std::size_t m = p.m();
    std::optional<std::size_t> best;
    for (auto i : p.t.members()) {
        if (p.s.contains(i)) {
            continue;
        }
        std::size_t w = tuple_weight(delinearize(i, p.t.shape()));
        std::size_t r = p.t.direction() == Direction::Decreasing ? w : m - w;
        best = std::max(best.value_or(0), r);
    }
    return best;
}

std::optional<std::size_t> nested_distance(const NestedPair &p) {
    NestedPair dec = p;
    if (p.t.direction() == Direction::Increasing) {
        dec = {flip_set(p.s), flip_set(p.t)};
    }
    auto r = nested_exponent(dec);
    if (!r) {
        return std::nullopt;
    }
    return std::size_t{1} << (dec.m() - *r);
}

std::pair<MonotoneSet, MonotoneSet> uuv_split(const MonotoneSet &t) {
    const Shape &shape = t.shape();
    if (shape.empty()) {
        throw std::invalid_argument("uuv_split: nothing to split at m = 0");
    }
    if (!is_binary(shape)) {
        throw std::invalid_argument("uuv_split: set is not over {0,1}^m");
    }
    Shape rest(shape.begin() + 1, shape.end());
    std::size_t half = shape_volume(rest);
    std::vector<std::size_t> t0;
    std::vector<std::size_t> t1;
    for (auto i : t.members()) {
        (i < half ? t0 : t1).push_back(i % half);
    }
    return {MonotoneSet(rest, t.direction(), std::move(t0)), MonotoneSet(rest, t.direction(), std::move(t1))};
}

namespace {

std::optional<std::size_t> recurse(const MonotoneSet &t, const MonotoneSet &s) {
    if (t.shape().empty()) {
        return t.size() > s.size() ? std::optional<std::size_t>(1) : std::nullopt;
    }
    auto [t0, t1] = uuv_split(t);
    auto [s0, s1] = uuv_split(s);
    auto d0 = recurse(t0, s0);
    auto d1 = recurse(t1, s1);
    std::optional<std::size_t> out;
    if (d0) {
        out = 2 * *d0;
    }
    if (d1) {
        out = std::min(out.value_or(*d1), *d1);
    }
    return out;
}

}  // namespace

std::optional<std::size_t> nested_distance_recursive(const NestedPair &p) {
    check_nested(p);
    if (p.t.direction() == Direction::Increasing) {
        return recurse(flip_set(p.t), flip_set(p.s));
    }
    return recurse(p.t, p.s);
}

std::vector<IndexTuple> repetition_middle_layer(const SubsetTuple &x, const SubsetTuple &z) {
    if (x.m() != z.m()) {
        throw InvalidCodeError("X and Z are subsets of different ground sets");
    }
    std::size_t m = x.m();
    for (auto a : x.masks()) {
        for (auto b : z.masks()) {
            if ((a & b) == 0) {
                throw InvalidCodeError("X and Z contain a disjoint pair of subsets");
            }
        }
    }
    std::uint64_t all = m == 0 ? 0 : (~std::uint64_t{0} >> (64 - m));
    std::vector<IndexTuple> lower;
    for (auto a : x.masks()) {
        lower.push_back(mask_tuple(all & ~a, m));
    }
    std::vector<IndexTuple> upper;
    for (auto b : z.masks()) {
        upper.push_back(mask_tuple(b, m));
    }
    Shape shape = binary_shape(m);
    ColumnPartition part;
    try {
        part = complement_partition(lower, upper, shape);
    } catch (const ClosureOverlapError &e) {
        throw InvalidCodeError(e.what());
    }
    std::vector<IndexTuple> out;
    for (auto i : part.middle) {
        out.push_back(delinearize(i, shape));
    }
    return out;
}

std::optional<XzDistances> css_xz_distances(const SubsetTuple &x, const SubsetTuple &z) {
    auto k = repetition_middle_layer(x, z);
    if (k.empty()) {
        return std::nullopt;
    }
    std::size_t m = x.m();
    std::size_t min_w = m;
    std::size_t max_w = 0;
    for (auto &v : k) {
        std::size_t w = tuple_weight(v);
        min_w = std::min(min_w, w);
        max_w = std::max(max_w, w);
    }
    return XzDistances{std::size_t{1} << (m - max_w), std::size_t{1} << min_w};
}

}  // namespace isc
