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

#include "isc/catalog.hpp"

#include <algorithm>

#include "gtest/gtest.h"

using namespace isc;

TEST(catalog, names_are_sorted_and_unique) {
    auto &c = catalog();
    ASSERT_GE(c.size(), 30);
    for (std::size_t i = 1; i < c.size(); i++) {
        ASSERT_LT(c[i - 1].name, c[i].name);
    }
    for (auto name : {"spc2d", "spc3d", "cyc32", "cyc64", "cyc128", "b128", "d256", "d512", "asym32", "asym128",
                      "rm_r1_m3", "asym_m9"}) {
        ASSERT_NE(find_entry(name), nullptr) << name;
    }
    ASSERT_EQ(find_entry("nope"), nullptr);
}

TEST(catalog, standard_reed_muller_parameters) {
    auto e = standard_rm_entry(2, 4);
    ASSERT_EQ(e.claimed.n, 16);
    ASSERT_EQ(e.claimed.k, 6);
    ASSERT_EQ(e.claimed.d_x, 4);
    ASSERT_EQ(e.claimed.d_z, 4);
    ASSERT_THROW(standard_rm_entry(0, 4), std::invalid_argument);
}

TEST(catalog, small_entries_verify_with_oracle) {
    for (auto name : {"spc2d", "rm_r2_m4", "rm_r2_m3", "asym_m4", "cyc32", "asym32"}) {
        auto rep = verify_entry(*find_entry(name));
        ASSERT_TRUE(rep.all_passed()) << name;
        ASSERT_EQ(rep.oracle_status, OracleStatus::Verified) << name;
        for (auto &c : rep.claims) {
            ASSERT_TRUE(c.passed) << name << " " << c.claim << " " << c.expected << " vs " << c.computed;
        }
    }
}

TEST(catalog, large_entry_is_refused_not_faked) {
    VerifyOptions opts;
    opts.structural = false;
    auto rep = verify_entry(*find_entry("cyc64"), opts);
    ASSERT_EQ(rep.oracle_status, OracleStatus::Refused);
    ASSERT_TRUE(rep.claims_passed());
    ASSERT_TRUE(rep.all_passed());
}

TEST(catalog, parameter_string) {
    ASSERT_EQ(parameter_string(find_entry("spc2d")->claimed), "[[16,2,4]]");
    ASSERT_EQ(parameter_string(find_entry("asym32")->claimed), "[[32,2,(8,4)]]");
}

TEST(catalog, duplicate_subset_is_noted) {
    auto *e = find_entry("asym32");
    ASSERT_TRUE(e->z.has_duplicates());
    ASSERT_FALSE(e->notes.empty());
}
