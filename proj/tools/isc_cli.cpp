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

// Command line front end. Talks to the library only through isc.h.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "isc/isc.h"

namespace {

constexpr int EXIT_CHECK_FAILED = 1;
constexpr int EXIT_ERROR = 2;

int report_error(isc_status s) {
    std::cerr << "isc: " << isc_status_name(s);
    const char *msg = isc_last_error();
    if (msg && *msg) {
        std::cerr << ": " << msg;
    }
    std::cerr << "\n";
    return EXIT_ERROR;
}

/// Prints and frees a library-owned string.
void emit(char *s) {
    std::fputs(s, stdout);
    std::fputc('\n', stdout);
    isc_string_free(s);
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Intersecting subset CSS codes: construction, verification and distances"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(isc_version()));

    isc_oracle_options oracle = isc_default_oracle_options();
    app.add_option("--threads", oracle.threads, "Oracle worker threads")->check(CLI::PositiveNumber);

    std::string spec_path;
    std::string out_dir;
    auto *construct = app.add_subcommand("construct", "Build a code and write its artifacts");
    construct->add_option("--spec", spec_path, "Code spec JSON")->required()->check(CLI::ExistingFile);
    construct->add_option("--out", out_dir, "Output directory")->required();

    auto *verify = app.add_subcommand("verify", "Check every structural property of a code");
    verify->add_option("--spec", spec_path, "Code spec JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--dim-cap", oracle.dim_cap, "Largest kernel dimension the oracle enumerates");

    std::string method = "both";
    auto *distance = app.add_subcommand("distance", "Distances by formula, oracle, or both");
    distance->add_option("--spec", spec_path, "Code spec JSON")->required()->check(CLI::ExistingFile);
    distance->add_option("--method", method, "formula|oracle|both")
        ->check(CLI::IsMember({"formula", "oracle", "both"}));
    distance->add_option("--dim-cap", oracle.dim_cap, "Largest kernel dimension the oracle enumerates");

    auto *catalog = app.add_subcommand("catalog", "Published example codes");
    catalog->require_subcommand(1);
    catalog->add_subcommand("list", "List entries");
    std::string entry_name;
    auto *show = catalog->add_subcommand("show", "Print one entry");
    show->add_option("name", entry_name, "Entry name")->required();
    bool all = false;
    auto *cverify = catalog->add_subcommand("verify", "Verify entries against their published claims");
    auto *name_opt = cverify->add_option("name", entry_name, "Entry name");
    cverify->add_flag("--all", all, "Verify every entry")->excludes(name_opt);
    cverify->add_option("--dim-cap", oracle.dim_cap, "Largest kernel dimension the oracle enumerates");

    std::size_t m = 0;
    std::string gens;
    std::string direction = "dec";
    std::string nested;
    auto *grm = app.add_subcommand("grm", "Generalized Reed-Muller spaces");
    grm->add_option("--m", m, "Number of binary coordinates")->required();
    grm->add_option("--gens", gens, "Generators as a JSON array of tuples")->required();
    grm->add_option("--direction", direction, "inc|dec")->check(CLI::IsMember({"inc", "dec"}));
    auto *nested_opt = grm->add_option("--nested", nested, "Generators of the inner set S");
    grm->add_option("--dim-cap", oracle.dim_cap, "Largest dimension the oracle enumerates");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    char *out = nullptr;
    isc_status s = ISC_OK;

    if (*construct) {
        isc_code *code = nullptr;
        if ((s = isc_code_from_file(spec_path.c_str(), &code)) != ISC_OK) {
            return report_error(s);
        }
        s = isc_code_write(code, out_dir.c_str());
        if (s == ISC_OK) {
            std::size_t n = 0;
            std::size_t k = 0;
            isc_code_dimensions(code, &n, &k, nullptr);
            std::cout << "wrote [[" << n << "," << k << "]] code to " << out_dir << "\n";
        }
        isc_code_free(code);
        return s == ISC_OK ? 0 : report_error(s);
    }

    if (*verify) {
        int ok = 0;
        if ((s = isc_verify_spec_file(spec_path.c_str(), &oracle, &out, &ok)) != ISC_OK) {
            return report_error(s);
        }
        emit(out);
        return ok ? 0 : EXIT_CHECK_FAILED;
    }

    if (*distance) {
        isc_method mm = method == "formula" ? ISC_METHOD_FORMULA
                        : method == "oracle" ? ISC_METHOD_ORACLE
                                             : ISC_METHOD_BOTH;
        if ((s = isc_distance_spec_file(spec_path.c_str(), mm, &oracle, &out)) != ISC_OK) {
            return report_error(s);
        }
        auto j = nlohmann::json::parse(out);
        emit(out);
        return j.value("status", std::string()) == "mismatch" ? EXIT_CHECK_FAILED : 0;
    }

    if (*catalog) {
        if (catalog->got_subcommand("list")) {
            if ((s = isc_catalog_list_json(&out)) != ISC_OK) {
                return report_error(s);
            }
            auto entries = nlohmann::json::parse(out);
            isc_string_free(out);
            for (auto &e : entries) {
                std::printf(
                    "%-10s %-17s %s\n",
                    e["name"].get<std::string>().c_str(),
                    e["parameters"].get<std::string>().c_str(),
                    e["title"].get<std::string>().c_str());
            }
            return 0;
        }
        if (*show) {
            if ((s = isc_catalog_show_json(entry_name.c_str(), &out)) != ISC_OK) {
                return report_error(s);
            }
            emit(out);
            return 0;
        }
        int ok = 0;
        const char *name = (all || entry_name.empty()) ? nullptr : entry_name.c_str();
        if ((s = isc_catalog_verify_json(name, &oracle, &out, &ok)) != ISC_OK) {
            return report_error(s);
        }
        emit(out);
        return ok ? 0 : EXIT_CHECK_FAILED;
    }

    if (*grm) {
        isc_direction d = direction == "inc" ? ISC_INCREASING : ISC_DECREASING;
        const char *n = *nested_opt ? nested.c_str() : nullptr;
        if ((s = isc_grm_json(m, gens.c_str(), d, n, &oracle, &out)) != ISC_OK) {
            return report_error(s);
        }
        emit(out);
        return 0;
    }
    return 0;
}
