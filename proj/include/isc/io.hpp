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

#ifndef ISC_IO_HPP
#define ISC_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "isc/catalog.hpp"
#include "isc/css_code.hpp"
#include "isc/grm.hpp"
#include "isc/oracle.hpp"

namespace isc {

using nlohmann::json;

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// {"components": [{"hx": [[..]], "hz": [[..]]}], "m": int, "x": [[..]], "z": [[..]]}.
/// "components" may be omitted (all [1 1]) or hold a single pair, which is
/// used for every coordinate.
CodeSpec spec_from_json(const json &j);
CodeSpec spec_from_string(std::string_view text);
CodeSpec spec_from_file(const std::filesystem::path &path);
json spec_to_json(const CodeSpec &spec);

json subsets_to_json(const SubsetTuple &s);
SubsetTuple subsets_from_json(std::size_t m, const json &j);

json matrix_to_json(const BitMatrix &m);
BitMatrix matrix_from_json(const json &j);

/// MacKay's alist format, one-based indices, zero padded.
std::string to_alist(const BitMatrix &m);
BitMatrix from_alist(std::string_view text);

json schedule_to_json(const SyndromeSchedule &s);

/// PREP+ / PREP0 lines, then a LAYER header and CNOT lines per coordinate.
std::string circuit_to_text(const CircuitSpec &c);
CircuitSpec circuit_from_text(std::string_view text);

json profile_to_json(const MeasurementProfile &p);
MeasurementProfile profile_from_json(const json &j);
json tuples_to_json(const std::vector<IndexTuple> &ts);

json params_to_json(const CssCode &code);

/// Writes hx.alist, hz.alist, hx.txt, hz.txt, schedule.json, circuit.txt and
/// params.json into `dir`, creating it if needed.
void write_construction(const CssCode &code, const std::filesystem::path &dir);

json entry_to_json(const CatalogEntry &e);
CatalogEntry entry_from_json(const json &j);

json oracle_result_to_json(const OracleResult &r);
json check_report_to_json(const CheckReport &r);
json verification_to_json(const VerificationReport &r);
json spec_report_to_json(const SpecReport &r);

enum class DistanceMethod { Formula, Oracle, Both };

/// Distances of a spec. The formula applies only when every component is [1 1].
json distance_report(const CodeSpec &spec, DistanceMethod method, const OracleOptions &options);

/// Tuples given either as digit strings ("0110") or 0/1 arrays.
std::vector<IndexTuple> binary_tuples_from_json(std::size_t m, const json &j);

/// Spans, duality partner and (when `nested` is given) the nested distance
/// for the set generated by `gens`.
json grm_report(std::size_t m, const json &gens, Direction direction, const json *nested, const OracleOptions &options);

}  // namespace isc

#endif
