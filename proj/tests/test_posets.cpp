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

#include "isc/posets.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "gtest/gtest.h"

using namespace isc;

namespace {

/// Closure by repeatedly adding neighbours until nothing changes.
std::set<std::size_t> flood_closure(const std::vector<IndexTuple> &gens, const Shape &shape, Direction dir) {
    std::set<std::size_t> out;
    std::vector<IndexTuple> stack = gens;
    while (!stack.empty()) {
        IndexTuple t = stack.back();
        stack.pop_back();
        if (!out.insert(linearize(t, shape)).second) {
            continue;
        }
        for (std::size_t i = 0; i < t.size(); i++) {
            IndexTuple n = t;
            if (dir == Direction::Decreasing && t[i] > 0) {
                n[i]--;
                stack.push_back(n);
            } else if (dir == Direction::Increasing && t[i] + 1 < shape[i]) {
                n[i]++;
                stack.push_back(n);
            }
        }
    }
    return out;
}

std::vector<std::string> strs(const std::vector<IndexTuple> &ts) {
    std::vector<std::string> out;
    for (auto &t : ts) {
        out.push_back(tuple_str(t));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST(tuples, linearize_round_trip) {
    Shape shape{2, 3, 4};
    ASSERT_EQ(shape_volume(shape), 24);
    for (std::size_t i = 0; i < 24; i++) {
        ASSERT_EQ(linearize(delinearize(i, shape), shape), i);
    }
    ASSERT_EQ(linearize({1, 0, 0}, shape), 12);
    ASSERT_EQ(linearize({0, 0, 3}, shape), 3);
    ASSERT_THROW(linearize({0, 3, 0}, shape), std::out_of_range);
}

TEST(tuples, order_and_notation) {
    ASSERT_TRUE(tuple_le({0, 1}, {1, 1}));
    ASSERT_FALSE(tuple_le({0, 2}, {1, 1}));
    ASSERT_TRUE(tuple_lt({0, 1}, {1, 1}));
    ASSERT_FALSE(tuple_lt({1, 1}, {1, 1}));
    ASSERT_EQ(tuple_weight({1, 0, 1, 1}), 3);
    ASSERT_EQ(tuple_str({0, 1, 1, 0}), "0110");
    ASSERT_EQ(tuple_from_str("0110"), (IndexTuple{0, 1, 1, 0}));
    ASSERT_EQ(tuple_str({10, 2}), "(10,2)");
}

TEST(monotone_set, rejects_non_closed) {
    Shape shape = binary_shape(2);
    ASSERT_THROW(MonotoneSet(shape, Direction::Decreasing, {linearize({1, 1}, shape)}), std::invalid_argument);
    ASSERT_NO_THROW(MonotoneSet(shape, Direction::Increasing, {linearize({1, 1}, shape)}));
}

TEST(monotone_set, closure_matches_flood_fill) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        Shape shape;
        std::size_t dims = 1 + rng() % 4;
        for (std::size_t i = 0; i < dims; i++) {
            shape.push_back(1 + rng() % 4);
        }
        std::vector<IndexTuple> gens;
        std::size_t count = rng() % 4;
        for (std::size_t g = 0; g < count; g++) {
            gens.push_back(delinearize(rng() % shape_volume(shape), shape));
        }
        for (Direction dir : {Direction::Decreasing, Direction::Increasing}) {
            auto s = closure(gens, shape, dir);
            auto want = flood_closure(gens, shape, dir);
            ASSERT_EQ(std::vector<std::size_t>(want.begin(), want.end()), s.members());
            // The extremal elements regenerate the set.
            auto ext = extremal(s, dir == Direction::Decreasing ? Extreme::Max : Extreme::Min);
            ASSERT_EQ(closure(ext, shape, dir), s);
            ASSERT_LE(ext.size(), gens.size());
            auto comp = s.complement();
            ASSERT_EQ(comp.size() + s.size(), shape_volume(shape));
            ASSERT_NE(comp.direction(), s.direction());
        }
    }
}

TEST(subset_tuple, conversions) {
    auto x = SubsetTuple::from_digits(4, {"01", "23"});
    ASSERT_EQ(x.size(), 2);
    ASSERT_EQ(x.elements(1), (std::vector<std::size_t>{2, 3}));
    ASSERT_EQ(x.indicator(), BitMatrix::from_strings({"1100", "0011"}));
    auto unsorted = SubsetTuple::from_digits(5, {"13", "02", "13", "04"});
    ASSERT_TRUE(unsorted.has_duplicates());
    ASSERT_EQ(unsorted.sorted_lexicographic().lists(),
              (std::vector<std::vector<std::size_t>>{{0, 2}, {0, 4}, {1, 3}, {1, 3}}));
    ASSERT_THROW(SubsetTuple::from_lists(3, {{3}}), std::out_of_range);
    ASSERT_EQ(mask_tuple(subset_mask({0, 1, 1, 0}), 4), (IndexTuple{0, 1, 1, 0}));
}

TEST(complement_partition, product_code_lists) {
    Shape shape = binary_shape(4);
    auto part = complement_partition(
        {tuple_from_str("0011"), tuple_from_str("1100")}, {tuple_from_str("1010"), tuple_from_str("0101")}, shape);
    ASSERT_EQ(strs(part.lower.member_tuples()),
              (std::vector<std::string>{"0000", "0001", "0010", "0011", "0100", "1000", "1100"}));
    ASSERT_EQ(strs(part.upper.member_tuples()),
              (std::vector<std::string>{"0101", "0111", "1010", "1011", "1101", "1110", "1111"}));
    std::vector<IndexTuple> k;
    for (auto i : part.middle) {
        k.push_back(delinearize(i, shape));
    }
    ASSERT_EQ(strs(k), (std::vector<std::string>{"0110", "1001"}));
}

TEST(complement_partition, overlap_is_an_error) {
    ASSERT_THROW(complement_partition({tuple_from_str("11")}, {tuple_from_str("01")}, binary_shape(2)),
                 ClosureOverlapError);
}
