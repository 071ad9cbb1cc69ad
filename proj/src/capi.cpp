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

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <string>

#include "isc/catalog.hpp"
#include "isc/io.hpp"

struct isc_code {
    isc::CssCode code;
};

namespace {

thread_local std::string last_error;

isc_status fail(isc_status s, const std::string &msg) {
    last_error = msg;
    return s;
}

template <typename F>
isc_status guarded(F &&f) {
    last_error.clear();
    try {
        return f();
    } catch (const isc::ParseError &e) {
        return fail(ISC_ERR_PARSE, e.what());
    } catch (const isc::InvalidCodeError &e) {
        return fail(ISC_ERR_INVALID_CODE, e.what());
    } catch (const std::filesystem::filesystem_error &e) {
        return fail(ISC_ERR_IO, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(ISC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::out_of_range &e) {
        return fail(ISC_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::runtime_error &e) {
        return fail(ISC_ERR_IO, e.what());
    } catch (const std::exception &e) {
        return fail(ISC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(ISC_ERR_INTERNAL, "unknown exception");
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (!out) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

isc::OracleOptions oracle_options(const isc_oracle_options *o) {
    isc::OracleOptions out;
    if (o) {
        out.dim_cap = o->dim_cap;
        out.threads = o->threads == 0 ? 1 : o->threads;
    }
    return out;
}

isc::json parse_json(const char *text) {
    try {
        return isc::json::parse(text);
    } catch (const isc::json::parse_error &e) {
        throw isc::ParseError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace

extern "C" {

const char *isc_version(void) {
    return "1.0.0";
}

const char *isc_status_name(isc_status status) {
    switch (status) {
        case ISC_OK:
            return "ok";
        case ISC_ERR_NULL_ARGUMENT:
            return "null argument";
        case ISC_ERR_PARSE:
            return "parse error";
        case ISC_ERR_INVALID_CODE:
            return "invalid code";
        case ISC_ERR_IO:
            return "i/o error";
        case ISC_ERR_NOT_FOUND:
            return "not found";
        case ISC_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case ISC_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *isc_last_error(void) {
    return last_error.c_str();
}

void isc_string_free(char *s) {
    std::free(s);
}

isc_oracle_options isc_default_oracle_options(void) {
    isc::OracleOptions d;
    return {d.dim_cap, d.threads};
}

isc_status isc_code_from_json(const char *spec_json, isc_code **out) {
    if (!spec_json || !out) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_code_from_json: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new isc_code{isc::build_css(isc::spec_from_string(spec_json))};
        return ISC_OK;
    });
}

isc_status isc_code_from_file(const char *path, isc_code **out) {
    if (!path || !out) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_code_from_file: null argument");
    }
    *out = nullptr;
    return guarded([&] {
        *out = new isc_code{isc::build_css(isc::spec_from_file(path))};
        return ISC_OK;
    });
}

void isc_code_free(isc_code *code) {
    delete code;
}

isc_status isc_code_dimensions(const isc_code *code, size_t *n, size_t *k, size_t *m) {
    if (!code) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_code_dimensions: null code");
    }
    if (n) {
        *n = code->code.n();
    }
    if (k) {
        *k = code->code.k();
    }
    if (m) {
        *m = code->code.m();
    }
    return ISC_OK;
}

isc_status isc_code_params_json(const isc_code *code, char **out_json) {
    if (!code || !out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_code_params_json: null argument");
    }
    return guarded([&] {
        *out_json = dup_string(isc::params_to_json(code->code).dump(2));
        return ISC_OK;
    });
}

isc_status isc_code_write(const isc_code *code, const char *dir) {
    if (!code || !dir) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_code_write: null argument");
    }
    return guarded([&] {
        isc::write_construction(code->code, dir);
        return ISC_OK;
    });
}

isc_status isc_verify_spec_file(const char *path, const isc_oracle_options *options, char **out_json, int *all_passed) {
    if (!path || !out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_verify_spec_file: null argument");
    }
    return guarded([&] {
        isc::VerifyOptions vo;
        vo.oracle = oracle_options(options);
        auto rep = isc::verify_spec_report(isc::spec_from_file(path), vo);
        *out_json = dup_string(isc::spec_report_to_json(rep).dump(2));
        if (all_passed) {
            *all_passed = rep.all_passed() ? 1 : 0;
        }
        return ISC_OK;
    });
}

isc_status isc_distance_spec_file(
    const char *path, isc_method method, const isc_oracle_options *options, char **out_json) {
    if (!path || !out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_distance_spec_file: null argument");
    }
    return guarded([&] {
        isc::DistanceMethod m = method == ISC_METHOD_FORMULA  ? isc::DistanceMethod::Formula
                                : method == ISC_METHOD_ORACLE ? isc::DistanceMethod::Oracle
                                                              : isc::DistanceMethod::Both;
        auto j = isc::distance_report(isc::spec_from_file(path), m, oracle_options(options));
        *out_json = dup_string(j.dump(2));
        return ISC_OK;
    });
}

isc_status isc_catalog_list_json(char **out_json) {
    if (!out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_catalog_list_json: null argument");
    }
    return guarded([&] {
        isc::json list = isc::json::array();
        for (auto &e : isc::catalog()) {
            list.push_back({
                {"name", e.name},
                {"title", e.title},
                {"parameters", isc::parameter_string(e.claimed)},
                {"d_x", e.claimed.d_x ? isc::json(*e.claimed.d_x) : isc::json(nullptr)},
                {"d_z", e.claimed.d_z ? isc::json(*e.claimed.d_z) : isc::json(nullptr)},
            });
        }
        *out_json = dup_string(list.dump(2));
        return ISC_OK;
    });
}

isc_status isc_catalog_show_json(const char *name, char **out_json) {
    if (!name || !out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_catalog_show_json: null argument");
    }
    return guarded([&] {
        const isc::CatalogEntry *e = isc::find_entry(name);
        if (!e) {
            return fail(ISC_ERR_NOT_FOUND, std::string("no catalog entry named '") + name + "'");
        }
        *out_json = dup_string(isc::entry_to_json(*e).dump(2));
        return ISC_OK;
    });
}

isc_status isc_catalog_verify_json(
    const char *name, const isc_oracle_options *options, char **out_json, int *all_passed) {
    if (!out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_catalog_verify_json: null argument");
    }
    return guarded([&] {
        isc::VerifyOptions vo;
        vo.oracle = oracle_options(options);
        bool ok = true;
        isc::json out;
        if (name) {
            const isc::CatalogEntry *e = isc::find_entry(name);
            if (!e) {
                return fail(ISC_ERR_NOT_FOUND, std::string("no catalog entry named '") + name + "'");
            }
            auto rep = isc::verify_entry(*e, vo);
            ok = rep.all_passed();
            out = isc::verification_to_json(rep);
        } else {
            out = isc::json::array();
            for (auto &e : isc::catalog()) {
                auto rep = isc::verify_entry(e, vo);
                ok = ok && rep.all_passed();
                out.push_back(isc::verification_to_json(rep));
            }
        }
        *out_json = dup_string(out.dump(2));
        if (all_passed) {
            *all_passed = ok ? 1 : 0;
        }
        return ISC_OK;
    });
}

isc_status isc_grm_json(
    size_t m,
    const char *gens_json,
    isc_direction direction,
    const char *nested_json,
    const isc_oracle_options *options,
    char **out_json) {
    if (!gens_json || !out_json) {
        return fail(ISC_ERR_NULL_ARGUMENT, "isc_grm_json: null argument");
    }
    return guarded([&] {
        isc::json gens = parse_json(gens_json);
        isc::json nested;
        if (nested_json) {
            nested = parse_json(nested_json);
        }
        auto dir = direction == ISC_INCREASING ? isc::Direction::Increasing : isc::Direction::Decreasing;
        auto j = isc::grm_report(m, gens, dir, nested_json ? &nested : nullptr, oracle_options(options));
        *out_json = dup_string(j.dump(2));
        return ISC_OK;
    });
}

}  // extern "C"
