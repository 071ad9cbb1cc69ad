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

#include "isc/oracle.hpp"

#include "gtest/gtest.h"
#include "isc/css_code.hpp"
#include "naive.hpp"

using namespace isc;

namespace {

CosetProblem problem(const BitMatrix &c, const BitMatrix &e) { return {c.cols(), c, e}; }

}  // namespace

TEST(oracle, repetition_pair) {
    auto c = BitMatrix::identity(2);
    auto e = BitMatrix::from_strings({"11"});
    auto r = coset_min_weight(problem(c, e));
    ASSERT_EQ(r.status, OracleResult::Status::Exact);
    ASSERT_EQ(r.weight, 1);
    ASSERT_EQ(r.dimension, 2);
    ASSERT_EQ(r.visited, 3);
    auto both = coset_min_weight(problem(e, BitMatrix(0, 2)));
    ASSERT_EQ(both.weight, 2);
}

TEST(oracle, empty_coset) {
    auto c = BitMatrix::from_strings({"11"});
    auto r = coset_min_weight(problem(c, c));
    ASSERT_EQ(r.status, OracleResult::Status::Empty);
    ASSERT_FALSE(r.weight.has_value());
}

TEST(oracle, product_code_distances) {
    auto code = build_css(
        repetition_spec(SubsetTuple::from_digits(4, {"01", "23"}), SubsetTuple::from_digits(4, {"02", "13"})));
    auto [hx, hz] = check_matrices(code);
    auto d = css_distances_bruteforce(hx, hz);
    ASSERT_EQ(d.x.weight, 4);
    ASSERT_EQ(d.z.weight, 4);
    ASSERT_EQ(d.x.visited, (std::uint64_t{1} << d.x.dimension) - 1);
}

TEST(oracle, matches_naive_on_random_problems) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 200; trial++) {
        std::size_t n = 1 + rng() % 10;
        auto e = naive::random_matrix(rng, rng() % 4, n, 0.4);
        auto extra = naive::random_matrix(rng, rng() % 4, n, 0.4);
        auto c = vstack({e, extra});
        int want = naive::coset_min_weight(c, e);
        for (auto strategy : {OracleStrategy::GrayCode, OracleStrategy::WeightOrdered, OracleStrategy::Auto}) {
            for (std::size_t threads : {1, 3}) {
                OracleOptions opts;
                opts.strategy = strategy;
                opts.threads = threads;
                auto r = coset_min_weight(problem(c, e), opts);
                if (want < 0) {
                    ASSERT_EQ(r.status, OracleResult::Status::Empty);
                } else {
                    ASSERT_EQ(r.status, OracleResult::Status::Exact);
                    ASSERT_EQ(r.weight, std::size_t(want));
                }
            }
        }
    }
}

TEST(oracle, thread_count_does_not_change_counter) {
    std::mt19937_64 rng(32);
    auto c = naive::random_matrix(rng, 12, 20, 0.5);
    auto e = BitMatrix(0, 20);
    OracleOptions one;
    OracleOptions four;
    four.threads = 4;
    auto a = coset_min_weight(problem(c, e), one);
    auto b = coset_min_weight(problem(c, e), four);
    ASSERT_EQ(a.weight, b.weight);
    ASSERT_EQ(a.visited, b.visited);
    ASSERT_EQ(a.visited, (std::uint64_t{1} << a.dimension) - 1);
}

TEST(oracle, refuses_above_cap) {
    OracleOptions opts;
    opts.dim_cap = 3;
    auto r = coset_min_weight(problem(BitMatrix::identity(5), BitMatrix(0, 5)), opts);
    ASSERT_TRUE(r.refused());
    ASSERT_FALSE(r.weight.has_value());
    ASSERT_FALSE(r.reason.empty());
    ASSERT_EQ(std::string(status_name(r.status)), "refused");
}

TEST(oracle, weight_budget_refuses) {
    OracleOptions opts;
    opts.strategy = OracleStrategy::WeightOrdered;
    opts.weight_budget = 4;
    auto c = BitMatrix::from_strings({"111111"});
    auto r = coset_min_weight(problem(c, BitMatrix(0, 6)), opts);
    ASSERT_TRUE(r.refused());
}

TEST(oracle, inconsistent_spaces) {
    auto c = BitMatrix::from_strings({"110"});
    auto e = BitMatrix::from_strings({"011"});
    ASSERT_THROW(coset_min_weight(problem(c, e)), InconsistentSpacesError);
    ASSERT_THROW(css_distances_bruteforce(BitMatrix::from_strings({"10"}), BitMatrix::from_strings({"10"})),
                 std::invalid_argument);
}
