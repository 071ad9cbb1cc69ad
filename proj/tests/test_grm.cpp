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

#include "gtest/gtest.h"
#include "isc/css_code.hpp"
#include "naive.hpp"

using namespace isc;

namespace {

MonotoneSet down(std::size_t m, std::initializer_list<const char *> gens) {
    std::vector<IndexTuple> ts;
    for (auto g : gens) {
        ts.push_back(tuple_from_str(g));
    }
    return closure(ts, binary_shape(m), Direction::Decreasing);
}

/// Every decreasing subset of {0,1}^m, by brute force over member masks.
std::vector<MonotoneSet> all_decreasing(std::size_t m) {
    std::size_t n = std::size_t{1} << m;
    Shape shape = binary_shape(m);
    std::vector<MonotoneSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); mask++) {
        std::vector<std::size_t> members;
        bool closed = true;
        for (std::size_t i = 0; i < n && closed; i++) {
            if (!((mask >> i) & 1)) {
                continue;
            }
            members.push_back(i);
            for (std::size_t b = 0; b < m; b++) {
                std::size_t j = i & ~(std::size_t{1} << b);
                closed = closed && ((mask >> j) & 1);
            }
        }
        if (closed) {
            out.emplace_back(shape, Direction::Decreasing, members);
        }
    }
    return out;
}

bool contained(const MonotoneSet &s, const MonotoneSet &t) {
    for (auto i : s.members()) {
        if (!t.contains(i)) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(grm, r_matrix_is_self_inverse) {
    ASSERT_EQ(r_matrix(1), BitMatrix::from_strings({"11", "01"}));
    for (std::size_t m = 0; m <= 5; m++) {
        auto r = r_matrix(m);
        ASSERT_EQ(mat_mul(r, r), BitMatrix::identity(std::size_t{1} << m));
    }
}

TEST(grm, first_order_reed_muller) {
    auto s = down(3, {"100", "010", "001"});
    auto g = grm_space(s);
    ASSERT_EQ(g.generator.rows(), 4);
    ASSERT_EQ(rank(g.generator), 4);
    // Minimum nonzero weight of RM(1,3) is 4.
    int best = 99;
    for (auto v : naive::span_masks(g.generator)) {
        if (v) {
            best = std::min(best, __builtin_popcountll(v));
        }
    }
    ASSERT_EQ(best, 4);
}

TEST(grm, direction_mismatch_throws) {
    auto s = down(2, {"10"});
    ASSERT_THROW(grm_generator(s, Parametrization::Increasing), std::invalid_argument);
    ASSERT_THROW(grm_generator(MonotoneSet(Shape{3, 2}, Direction::Decreasing, {0}), Parametrization::Decreasing),
                 std::invalid_argument);
}

TEST(grm, duality_for_every_decreasing_set) {
    for (std::size_t m = 1; m <= 4; m++) {
        for (auto &s : all_decreasing(m)) {
            auto g = grm_space(s).generator;
            auto d = grm_space(dual_set(s)).generator;
            ASSERT_TRUE(mat_mul(g, d.transpose()).is_zero());
            ASSERT_EQ(g.rows() + d.rows(), std::size_t{1} << m);
            // The increasing parametrization of the complement spans the same dual.
            auto t = grm_generator(s.complement(), Parametrization::Increasing).generator;
            ASSERT_TRUE(same_row_space(t, d));
        }
    }
}

TEST(grm, nested_distance_matches_bruteforce) {
    for (std::size_t m = 1; m <= 3; m++) {
        auto sets = all_decreasing(m);
        for (auto &t : sets) {
            for (auto &s : sets) {
                if (!contained(s, t)) {
                    continue;
                }
                NestedPair p{s, t};
                int want = naive::coset_min_weight(grm_space(t).generator, grm_space(s).generator);
                auto got = nested_distance(p);
                if (want < 0) {
                    ASSERT_FALSE(got.has_value());
                } else {
                    ASSERT_EQ(got, std::size_t(want));
                }
                ASSERT_EQ(nested_distance_recursive(p), got);
            }
        }
    }
}

TEST(grm, uuv_split_example) {
    auto [t0, t1] = uuv_split(down(3, {"011", "100"}));
    ASSERT_EQ(t0, down(2, {"11"}));
    ASSERT_EQ(t1.members(), (std::vector<std::size_t>{0}));
    ASSERT_THROW(uuv_split(down(0, {""})), std::invalid_argument);
}

TEST(grm, not_nested_is_rejected) {
    NestedPair p{down(2, {"11"}), down(2, {"10"})};
    ASSERT_THROW(check_nested(p), std::invalid_argument);
}

TEST(grm, middle_layer_and_xz_distances) {
    auto x = SubsetTuple::from_digits(4, {"01", "23"});
    auto z = SubsetTuple::from_digits(4, {"02", "13"});
    ASSERT_EQ(repetition_middle_layer(x, z), (std::vector<IndexTuple>{tuple_from_str("0110"), tuple_from_str("1001")}));
    ASSERT_EQ(css_xz_distances(x, z), (XzDistances{4, 4}));
    auto none = css_xz_distances(SubsetTuple::from_digits(1, {"0"}), SubsetTuple::from_digits(1, {"0"}));
    ASSERT_FALSE(none.has_value());
}
