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

#ifndef ISC_CATALOG_HPP
#define ISC_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "isc/css_code.hpp"
#include "isc/grm.hpp"
#include "isc/oracle.hpp"

namespace isc {

/// Published parameters of a catalog code. Absent fields are not claimed.
struct CatalogClaims {
    std::size_t n = 0;
    std::size_t k = 0;
    std::optional<std::size_t> d_x;
    std::optional<std::size_t> d_z;
    /// Over both sides together.
    std::optional<MeasurementProfile> profile;
    std::optional<MeasurementProfile> x_profile;
    std::optional<MeasurementProfile> z_profile;
    /// Binary indicator tuples.
    std::optional<std::vector<IndexTuple>> k_set;

    bool operator==(const CatalogClaims &other) const = default;
};

/// A code with repetition components, given by its two subset tuples.
struct CatalogEntry {
    std::string name;
    std::string title;
    SubsetTuple x;
    SubsetTuple z;
    CatalogClaims claimed;
    std::vector<std::string> notes;

    std::size_t m() const { return x.m(); }
    CodeSpec spec() const { return repetition_spec(x, z); }

    bool operator==(const CatalogEntry &other) const = default;
};

/// Every entry, sorted by name.
const std::vector<CatalogEntry> &catalog();
const CatalogEntry *find_entry(const std::string &name);

/// The parametric families.
CatalogEntry standard_rm_entry(std::size_t r, std::size_t m);
CatalogEntry asymmetric_entry(std::size_t m);

struct ClaimCheck {
    std::string claim;
    std::string expected;
    std::string computed;
    bool passed = false;
};

enum class OracleStatus { Verified, FormulaOnly, Refused, Mismatch };

const char *oracle_status_name(OracleStatus s);

struct VerifyOptions {
    OracleOptions oracle;
    bool run_oracle = true;
    bool structural = true;
};

struct VerificationReport {
    std::string name;
    CodeParameters computed;
    std::vector<IndexTuple> k_set;
    std::optional<XzDistances> formula;
    /// One line per claim of the entry.
    std::vector<ClaimCheck> claims;
    OracleStatus oracle_status = OracleStatus::FormulaOnly;
    std::optional<OracleDistances> oracle;
    CheckReport structure;
    std::vector<std::string> notes;

    bool claims_passed() const;
    /// Claims, structure, and no oracle mismatch.
    bool all_passed() const;
};

VerificationReport verify_entry(const CatalogEntry &e, const VerifyOptions &options = {});

/// Checks of an arbitrary spec: structure, formula distances when every
/// component is [1 1], and the oracle.
struct SpecReport {
    CheckReport checks;
    std::optional<CodeParameters> computed;
    std::vector<IndexTuple> k_set;
    std::optional<XzDistances> formula;
    OracleStatus oracle_status = OracleStatus::FormulaOnly;
    std::optional<OracleDistances> oracle;

    bool all_passed() const { return checks.all_passed() && oracle_status != OracleStatus::Mismatch; }
};

SpecReport verify_spec_report(const CodeSpec &spec, const VerifyOptions &options = {});

/// "[[n,k]]" or "[[n,k,d]]" when both distances are claimed and equal.
std::string parameter_string(const CatalogClaims &c);

}  // namespace isc

#endif
