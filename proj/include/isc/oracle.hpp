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

#ifndef ISC_ORACLE_HPP
#define ISC_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "isc/gf2.hpp"

namespace isc {

/// Find min{|v| : v ∈ RowSpan(containing), v ∉ RowSpan(excluded)}.
struct CosetProblem {
    std::size_t n = 0;
    BitMatrix containing;
    BitMatrix excluded;
};

struct InconsistentSpacesError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class OracleStrategy {
    /// Walk every combination of a basis of the containing space.
    GrayCode,
    /// Walk vectors of the ambient space by increasing weight and stop at the
    /// first hit. Exact, and cheap when the answer is small.
    WeightOrdered,
    /// WeightOrdered with a budget of 2^dim candidates, then GrayCode.
    Auto,
};

struct OracleOptions {
    std::size_t dim_cap = 26;
    std::size_t threads = 1;
    OracleStrategy strategy = OracleStrategy::GrayCode;
    /// Hard limit on candidates examined by the weight-ordered walk.
    std::uint64_t weight_budget = std::uint64_t{1} << 26;
};

struct OracleResult {
    enum class Status { Exact, Refused, Empty };

    Status status = Status::Refused;
    /// Set only when status == Exact.
    std::optional<std::size_t> weight;
    /// Dimension of the containing space.
    std::size_t dimension = 0;
    /// Candidates examined; 2^dimension - 1 for a complete Gray-code walk.
    std::uint64_t visited = 0;
    std::string reason;

    bool refused() const { return status == Status::Refused; }
};

const char *status_name(OracleResult::Status s);

/// Throws InconsistentSpacesError if the excluded space is not inside the
/// containing space. Returns status Empty when the two spaces coincide and
/// Refused (never a number) when the dimension exceeds the cap.
OracleResult coset_min_weight(const CosetProblem &p, const OracleOptions &options = {});

struct OracleDistances {
    OracleResult x;
    OracleResult z;
};

/// d_x from Ker(hz) against RowSpan(hx), d_z from Ker(hx) against RowSpan(hz).
/// Throws std::invalid_argument when hx · hzᵀ != 0.
OracleDistances css_distances_bruteforce(const BitMatrix &hx, const BitMatrix &hz, const OracleOptions &options = {});

}  // namespace isc

#endif
