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

#include "isc/isc.h"

#include <filesystem>
#include <string>

#include "gtest/gtest.h"

namespace {

std::string take(char *s) {
    std::string out = s ? s : "";
    isc_string_free(s);
    return out;
}

}  // namespace

TEST(capi, build_and_query) {
    isc_code *code = nullptr;
    ASSERT_EQ(isc_code_from_json(R"({"m": 4, "x": [[0,1],[2,3]], "z": [[0,2],[1,3]]})", &code), ISC_OK);
    size_t n = 0;
    size_t k = 0;
    size_t m = 0;
    ASSERT_EQ(isc_code_dimensions(code, &n, &k, &m), ISC_OK);
    ASSERT_EQ(n, 16u);
    ASSERT_EQ(k, 2u);
    ASSERT_EQ(m, 4u);
    char *params = nullptr;
    ASSERT_EQ(isc_code_params_json(code, &params), ISC_OK);
    ASSERT_NE(take(params).find("\"k\": 2"), std::string::npos);
    std::filesystem::path dir = std::filesystem::current_path() / "capi_out";
    ASSERT_EQ(isc_code_write(code, dir.string().c_str()), ISC_OK);
    ASSERT_TRUE(std::filesystem::exists(dir / "hx.alist"));
    ASSERT_TRUE(std::filesystem::exists(dir / "circuit.txt"));
    isc_code_free(code);
}

TEST(capi, errors_carry_messages) {
    isc_code *code = nullptr;
    ASSERT_EQ(isc_code_from_json("{", &code), ISC_ERR_PARSE);
    ASSERT_EQ(code, nullptr);
    ASSERT_NE(std::string(isc_last_error()), "");
    ASSERT_EQ(isc_code_from_json(R"({"m": 3, "x": [[0]], "z": [[1,2]]})", &code), ISC_ERR_INVALID_CODE);
    ASSERT_EQ(isc_code_from_json(nullptr, &code), ISC_ERR_NULL_ARGUMENT);
    ASSERT_EQ(isc_code_from_file("/nonexistent/spec.json", &code), ISC_ERR_IO);
    char *out = nullptr;
    ASSERT_EQ(isc_catalog_show_json("nope", &out), ISC_ERR_NOT_FOUND);
    ASSERT_STREQ(isc_status_name(ISC_ERR_NOT_FOUND), "not found");
}

TEST(capi, catalog_and_grm) {
    char *out = nullptr;
    ASSERT_EQ(isc_catalog_list_json(&out), ISC_OK);
    ASSERT_NE(take(out).find("spc3d"), std::string::npos);
    auto opts = isc_default_oracle_options();
    ASSERT_EQ(opts.dim_cap, 26u);
    int passed = 0;
    ASSERT_EQ(isc_catalog_verify_json("spc2d", &opts, &out, &passed), ISC_OK);
    ASSERT_EQ(passed, 1);
    ASSERT_NE(take(out).find("verified"), std::string::npos);
    ASSERT_EQ(isc_grm_json(3, R"(["100","010","001"])", ISC_DECREASING, R"(["000"])", &opts, &out), ISC_OK);
    ASSERT_NE(take(out).find("\"distance\": 4"), std::string::npos);
}
