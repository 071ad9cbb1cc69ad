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

#include "isc/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace isc {

namespace {

const json &require(const json &j, const char *key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::size_t as_count(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw ParseError(std::string(what) + " must be a non-negative integer");
    }
    return j.get<std::size_t>();
}

std::string read_file(const std::filesystem::path &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open " + path.string());
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write " + path.string());
    }
    out << text;
}

json opt_json(const std::optional<std::size_t> &v) {
    return v ? json(*v) : json(nullptr);
}

json distances_json(const std::optional<XzDistances> &d) {
    if (!d) {
        return nullptr;
    }
    return {{"d_x", d->d_x}, {"d_z", d->d_z}};
}

json oracle_pair_json(const std::optional<OracleDistances> &o) {
    if (!o) {
        return nullptr;
    }
    return {{"x", oracle_result_to_json(o->x)}, {"z", oracle_result_to_json(o->z)}};
}

}  // namespace

json matrix_to_json(const BitMatrix &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); c++) {
            row.push_back(m.get(r, c) ? 1 : 0);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

BitMatrix matrix_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("matrix must be an array of rows");
    }
    std::vector<std::vector<int>> rows;
    for (auto &row : j) {
        if (!row.is_array()) {
            throw ParseError("matrix row must be an array");
        }
        std::vector<int> r;
        for (auto &v : row) {
            if (!v.is_number_integer() || (v.get<int>() != 0 && v.get<int>() != 1)) {
                throw ParseError("matrix entries must be 0 or 1");
            }
            r.push_back(v.get<int>());
        }
        rows.push_back(std::move(r));
    }
    try {
        return BitMatrix::from_rows(rows);
    } catch (const std::invalid_argument &e) {
        throw ParseError(e.what());
    }
}

json subsets_to_json(const SubsetTuple &s) {
    return s.lists();
}

SubsetTuple subsets_from_json(std::size_t m, const json &j) {
    if (!j.is_array()) {
        throw ParseError("subset tuple must be an array of element lists");
    }
    std::vector<std::vector<std::size_t>> lists;
    for (auto &s : j) {
        if (!s.is_array()) {
            throw ParseError("subset must be an array of elements");
        }
        std::vector<std::size_t> l;
        for (auto &e : s) {
            l.push_back(as_count(e, "subset element"));
        }
        lists.push_back(std::move(l));
    }
    try {
        return SubsetTuple::from_lists(m, lists);
    } catch (const std::exception &e) {
        throw ParseError(e.what());
    }
}

CodeSpec spec_from_json(const json &j) {
    std::size_t m = as_count(require(j, "m"), "m");
    if (m == 0 || m > 24) {
        throw ParseError("m must be between 1 and 24");
    }
    CodeSpec spec;
    spec.x = subsets_from_json(m, require(j, "x"));
    spec.z = subsets_from_json(m, require(j, "z"));
    if (j.contains("components") && !j.at("components").is_null()) {
        const json &cs = j.at("components");
        if (!cs.is_array() || (cs.size() != 1 && cs.size() != m)) {
            throw ParseError("components must hold 1 or m pairs");
        }
        for (auto &c : cs) {
            spec.components.push_back({matrix_from_json(require(c, "hx")), matrix_from_json(require(c, "hz"))});
        }
        if (spec.components.size() == 1 && m > 1) {
            spec.components.assign(m, spec.components[0]);
        }
    } else {
        spec.components.assign(m, repetition_pair());
    }
    return spec;
}

CodeSpec spec_from_string(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

CodeSpec spec_from_file(const std::filesystem::path &path) {
    return spec_from_string(read_file(path));
}

json spec_to_json(const CodeSpec &spec) {
    json j;
    j["m"] = spec.m();
    j["x"] = subsets_to_json(spec.x);
    j["z"] = subsets_to_json(spec.z);
    if (!spec.all_repetition()) {
        json cs = json::array();
        for (auto &c : spec.components) {
            cs.push_back({{"hx", matrix_to_json(c.hx)}, {"hz", matrix_to_json(c.hz)}});
        }
        j["components"] = std::move(cs);
    }
    return j;
}

std::string to_alist(const BitMatrix &m) {
    std::vector<std::vector<std::size_t>> by_col(m.cols());
    std::vector<std::vector<std::size_t>> by_row(m.rows());
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            if (m.get(r, c)) {
                by_row[r].push_back(c + 1);
                by_col[c].push_back(r + 1);
            }
        }
    }
    std::size_t max_col = 0;
    std::size_t max_row = 0;
    for (auto &c : by_col) {
        max_col = std::max(max_col, c.size());
    }
    for (auto &r : by_row) {
        max_row = std::max(max_row, r.size());
    }
    std::ostringstream out;
    out << m.cols() << " " << m.rows() << "\n" << max_col << " " << max_row << "\n";
    auto weights = [&](const std::vector<std::vector<std::size_t>> &lists) {
        for (std::size_t i = 0; i < lists.size(); i++) {
            out << (i ? " " : "") << lists[i].size();
        }
        out << "\n";
    };
    auto padded = [&](const std::vector<std::vector<std::size_t>> &lists, std::size_t width) {
        for (auto &l : lists) {
            for (std::size_t i = 0; i < width; i++) {
                out << (i ? " " : "") << (i < l.size() ? l[i] : 0);
            }
            out << "\n";
        }
    };
    weights(by_col);
    weights(by_row);
    padded(by_col, max_col);
    padded(by_row, max_row);
    return out.str();
}

BitMatrix from_alist(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t cols = 0;
    std::size_t rows = 0;
    std::size_t max_col = 0;
    std::size_t max_row = 0;
    if (!(in >> cols >> rows >> max_col >> max_row)) {
        throw ParseError("alist: truncated header");
    }
    std::vector<std::size_t> col_w(cols);
    std::vector<std::size_t> row_w(rows);
    for (auto &w : col_w) {
        in >> w;
    }
    for (auto &w : row_w) {
        in >> w;
    }
    BitMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; c++) {
        for (std::size_t i = 0; i < max_col; i++) {
            std::size_t r = 0;
            if (!(in >> r)) {
                throw ParseError("alist: truncated column lists");
            }
            if (r > rows) {
                throw ParseError("alist: row index out of range");
            }
            if (r > 0) {
                if (i >= col_w[c]) {
                    throw ParseError("alist: column list longer than its weight");
                }
                m.set(r - 1, c, true);
            }
        }
    }
    for (std::size_t r = 0; r < rows; r++) {
        std::size_t seen = 0;
        for (std::size_t i = 0; i < max_row; i++) {
            std::size_t c = 0;
            if (!(in >> c)) {
                throw ParseError("alist: truncated row lists");
            }
            if (c > cols || (c > 0 && !m.get(r, c - 1))) {
                throw ParseError("alist: row and column lists disagree");
            }
            seen += c > 0;
        }
        if (seen != row_w[r] || m.row_weight(r) != row_w[r]) {
            throw ParseError("alist: row weight mismatch");
        }
    }
    return m;
}

json schedule_to_json(const SyndromeSchedule &s) {
    json layers = json::array();
    for (auto &l : s.layers) {
        layers.push_back({
            {"kind", side_name(l.kind)},
            {"subset_index", l.subset_index},
            {"subset", l.subset},
            {"component_row", l.component_row},
            {"measurements", l.measurements},
        });
    }
    return {{"layers", std::move(layers)}};
}

std::string circuit_to_text(const CircuitSpec &c) {
    std::ostringstream out;
    for (auto q : c.prep_plus) {
        out << "PREP+ " << q << "\n";
    }
    for (auto q : c.prep_zero) {
        out << "PREP0 " << q << "\n";
    }
    for (std::size_t i = 0; i < c.layers.size(); i++) {
        out << "LAYER " << i << "\n";
        for (auto g : c.layers[i]) {
            out << "CNOT " << g.control << " " << g.target << "\n";
        }
    }
    return out.str();
}

CircuitSpec circuit_from_text(std::string_view text) {
    CircuitSpec c;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        std::istringstream ls(line);
        std::string op;
        if (!(ls >> op)) {
            continue;
        }
        auto bad = [&]() { return ParseError("circuit line " + std::to_string(line_no) + ": '" + line + "'"); };
        std::size_t a = 0;
        std::size_t b = 0;
        if (op == "PREP+" && ls >> a) {
            c.prep_plus.push_back(a);
        } else if (op == "PREP0" && ls >> a) {
            c.prep_zero.push_back(a);
        } else if (op == "LAYER" && ls >> a) {
            if (a != c.layers.size()) {
                throw bad();
            }
            c.layers.emplace_back();
        } else if (op == "CNOT" && ls >> a >> b) {
            if (c.layers.empty()) {
                throw bad();
            }
            c.layers.back().push_back({a, b});
        } else {
            throw bad();
        }
    }
    return c;
}

json profile_to_json(const MeasurementProfile &p) {
    json out = json::array();
    for (auto [w, c] : p) {
        out.push_back({{"weight", w}, {"count", c}});
    }
    return out;
}

MeasurementProfile profile_from_json(const json &j) {
    if (!j.is_array()) {
        throw ParseError("profile must be an array");
    }
    MeasurementProfile p;
    for (auto &e : j) {
        p[as_count(require(e, "weight"), "weight")] += as_count(require(e, "count"), "count");
    }
    return p;
}

json tuples_to_json(const std::vector<IndexTuple> &ts) {
    json out = json::array();
    for (auto &t : ts) {
        out.push_back(tuple_str(t));
    }
    return out;
}

std::vector<IndexTuple> binary_tuples_from_json(std::size_t m, const json &j) {
    if (!j.is_array()) {
        throw ParseError("expected an array of tuples");
    }
    std::vector<IndexTuple> out;
    for (auto &e : j) {
        IndexTuple t;
        if (e.is_string()) {
            try {
                t = tuple_from_str(e.get<std::string>());
            } catch (const std::exception &ex) {
                throw ParseError(ex.what());
            }
        } else if (e.is_array()) {
            for (auto &v : e) {
                t.push_back(as_count(v, "tuple entry"));
            }
        } else {
            throw ParseError("tuple must be a digit string or an array");
        }
        if (t.size() != m || std::any_of(t.begin(), t.end(), [](std::size_t v) { return v > 1; })) {
            throw ParseError("tuple must have " + std::to_string(m) + " binary entries");
        }
        out.push_back(std::move(t));
    }
    return out;
}

json params_to_json(const CssCode &code) {
    auto p = parameters(code);
    json j;
    j["n"] = p.n;
    j["k"] = p.k;
    j["m"] = code.m();
    j["shape"] = code.shape();
    j["x"] = subsets_to_json(code.spec().x);
    j["z"] = subsets_to_json(code.spec().z);
    std::vector<IndexTuple> k;
    for (auto i : code.partition().middle) {
        k.push_back(delinearize(i, code.shape()));
    }
    j["K"] = tuples_to_json(k);
    j["logical_qubit_columns"] = code.partition().middle;
    j["x_profile"] = profile_to_json(p.x_profile);
    j["z_profile"] = profile_to_json(p.z_profile);
    j["rank_x"] = code.factors(Side::X).d.support().size();
    j["rank_z"] = code.factors(Side::Z).d.support().size();
    std::optional<XzDistances> d;
    if (code.spec().all_repetition()) {
        d = css_xz_distances(code.spec().x, code.spec().z);
    }
    j["distances"] = distances_json(d);
    return j;
}

void write_construction(const CssCode &code, const std::filesystem::path &dir) {
    std::filesystem::create_directories(dir);
    const BitMatrix &hx = code.check_matrix(Side::X);
    const BitMatrix &hz = code.check_matrix(Side::Z);
    write_file(dir / "hx.alist", to_alist(hx));
    write_file(dir / "hz.alist", to_alist(hz));
    write_file(dir / "hx.txt", hx.to_text());
    write_file(dir / "hz.txt", hz.to_text());
    write_file(dir / "schedule.json", schedule_to_json(syndrome_schedule(code)).dump(1) + "\n");
    write_file(dir / "circuit.txt", circuit_to_text(encoding_circuit(code)));
    write_file(dir / "params.json", params_to_json(code).dump(2) + "\n");
}

json entry_to_json(const CatalogEntry &e) {
    json c;
    c["n"] = e.claimed.n;
    c["k"] = e.claimed.k;
    c["d_x"] = opt_json(e.claimed.d_x);
    c["d_z"] = opt_json(e.claimed.d_z);
    c["profile"] = e.claimed.profile ? profile_to_json(*e.claimed.profile) : json(nullptr);
    c["x_profile"] = e.claimed.x_profile ? profile_to_json(*e.claimed.x_profile) : json(nullptr);
    c["z_profile"] = e.claimed.z_profile ? profile_to_json(*e.claimed.z_profile) : json(nullptr);
    c["K"] = e.claimed.k_set ? tuples_to_json(*e.claimed.k_set) : json(nullptr);
    return {
        {"name", e.name},
        {"title", e.title},
        {"m", e.m()},
        {"x", subsets_to_json(e.x)},
        {"z", subsets_to_json(e.z)},
        {"claimed", std::move(c)},
        {"notes", e.notes},
    };
}

CatalogEntry entry_from_json(const json &j) {
    CatalogEntry e;
    e.name = require(j, "name").get<std::string>();
    e.title = j.value("title", std::string());
    std::size_t m = as_count(require(j, "m"), "m");
    e.x = subsets_from_json(m, require(j, "x"));
    e.z = subsets_from_json(m, require(j, "z"));
    const json &c = require(j, "claimed");
    e.claimed.n = as_count(require(c, "n"), "n");
    e.claimed.k = as_count(require(c, "k"), "k");
    auto opt_count = [&](const char *key) -> std::optional<std::size_t> {
        if (!c.contains(key) || c.at(key).is_null()) {
            return std::nullopt;
        }
        return as_count(c.at(key), key);
    };
    auto opt_profile = [&](const char *key) -> std::optional<MeasurementProfile> {
        if (!c.contains(key) || c.at(key).is_null()) {
            return std::nullopt;
        }
        return profile_from_json(c.at(key));
    };
    e.claimed.d_x = opt_count("d_x");
    e.claimed.d_z = opt_count("d_z");
    e.claimed.profile = opt_profile("profile");
    e.claimed.x_profile = opt_profile("x_profile");
    e.claimed.z_profile = opt_profile("z_profile");
    if (c.contains("K") && !c.at("K").is_null()) {
        e.claimed.k_set = binary_tuples_from_json(m, c.at("K"));
    }
    if (j.contains("notes")) {
        e.notes = j.at("notes").get<std::vector<std::string>>();
    }
    return e;
}

json oracle_result_to_json(const OracleResult &r) {
    json j = {
        {"status", status_name(r.status)},
        {"weight", opt_json(r.weight)},
        {"dimension", r.dimension},
        {"visited", r.visited},
    };
    if (!r.reason.empty()) {
        j["reason"] = r.reason;
    }
    return j;
}

json check_report_to_json(const CheckReport &r) {
    json checks = json::array();
    for (auto &c : r.checks) {
        json e = {{"name", c.name}, {"passed", c.passed}};
        if (!c.detail.empty()) {
            e["detail"] = c.detail;
        }
        checks.push_back(std::move(e));
    }
    return checks;
}

json verification_to_json(const VerificationReport &r) {
    json claims = json::array();
    for (auto &c : r.claims) {
        claims.push_back(
            {{"claim", c.claim}, {"expected", c.expected}, {"computed", c.computed}, {"passed", c.passed}});
    }
    return {
        {"name", r.name},
        {"n", r.computed.n},
        {"k", r.computed.k},
        {"K", tuples_to_json(r.k_set)},
        {"x_profile", profile_to_json(r.computed.x_profile)},
        {"z_profile", profile_to_json(r.computed.z_profile)},
        {"formula_distances", distances_json(r.formula)},
        {"claims", std::move(claims)},
        {"oracle_status", oracle_status_name(r.oracle_status)},
        {"oracle", oracle_pair_json(r.oracle)},
        {"structure", check_report_to_json(r.structure)},
        {"notes", r.notes},
        {"all_passed", r.all_passed()},
    };
}

json spec_report_to_json(const SpecReport &r) {
    json j;
    if (r.computed) {
        j["n"] = r.computed->n;
        j["k"] = r.computed->k;
        j["K"] = tuples_to_json(r.k_set);
        j["x_profile"] = profile_to_json(r.computed->x_profile);
        j["z_profile"] = profile_to_json(r.computed->z_profile);
    }
    j["formula_distances"] = distances_json(r.formula);
    j["oracle_status"] = oracle_status_name(r.oracle_status);
    j["oracle"] = oracle_pair_json(r.oracle);
    j["checks"] = check_report_to_json(r.checks);
    j["all_passed"] = r.all_passed();
    return j;
}

json distance_report(const CodeSpec &spec, DistanceMethod method, const OracleOptions &options) {
    json j;
    std::optional<XzDistances> formula;
    if (method != DistanceMethod::Oracle) {
        if (!spec.all_repetition()) {
            throw std::invalid_argument("the distance formula applies only when every component is [1 1]");
        }
        formula = css_xz_distances(spec.x, spec.z);
        j["formula"] = formula ? distances_json(formula) : json("undefined");
    }
    if (method != DistanceMethod::Formula) {
        CssCode code = build_css(spec);
        auto [hx, hz] = check_matrices(code);
        auto o = css_distances_bruteforce(hx, hz, options);
        j["oracle"] = oracle_pair_json(o);
        if (method == DistanceMethod::Both) {
            j["status"] = oracle_status_name([&] {
                if (o.x.refused() || o.z.refused()) {
                    return OracleStatus::Refused;
                }
                bool same = formula ? (o.x.weight == std::optional<std::size_t>(formula->d_x) &&
                                       o.z.weight == std::optional<std::size_t>(formula->d_z))
                                    : (!o.x.weight && !o.z.weight);
                return same ? OracleStatus::Verified : OracleStatus::Mismatch;
            }());
        }
    }
    return j;
}

namespace {

json set_json(const MonotoneSet &s) {
    return {
        {"direction", direction_name(s.direction())},
        {"members", tuples_to_json(s.member_tuples())},
        {"minimal", tuples_to_json(extremal(s, Extreme::Min))},
        {"maximal", tuples_to_json(extremal(s, Extreme::Max))},
        {"size", s.size()},
    };
}

}  // namespace

json grm_report(std::size_t m, const json &gens, Direction direction, const json *nested, const OracleOptions &options) {
    if (m > 16) {
        throw std::invalid_argument("grm: m must be at most 16");
    }
    Shape shape = binary_shape(m);
    MonotoneSet t = closure(binary_tuples_from_json(m, gens), shape, direction);
    GrmSpace space = grm_space(t);
    // The same space written over a decreasing set.
    MonotoneSet dec = direction == Direction::Decreasing ? t : flip_set(t);
    MonotoneSet dual = dual_set(dec);
    GrmSpace dual_space = grm_space(dual);
    bool orthogonal = mat_mul(space.generator, dual_space.generator.transpose()).is_zero();
    bool dims = space.generator.rows() + dual_space.generator.rows() == (std::size_t{1} << m);

    json j;
    j["m"] = m;
    j["set"] = set_json(t);
    j["dimension"] = rank(space.generator);
    j["generator"] = space.generator.row_strings();
    j["decreasing_form"] = set_json(dec);
    j["dual"] = set_json(dual);
    j["dual_dimension"] = rank(dual_space.generator);
    j["duality_holds"] = orthogonal && dims;
    if (nested) {
        MonotoneSet s = closure(binary_tuples_from_json(m, *nested), shape, direction);
        NestedPair pair{s, t};
        check_nested(pair);
        json n;
        n["subset"] = set_json(s);
        auto d = nested_distance(pair);
        auto rec = nested_distance_recursive(pair);
        n["distance"] = d ? json(*d) : json("undefined");
        n["recursive"] = rec ? json(*rec) : json("undefined");
        auto r = nested_exponent(pair);
        n["exponent"] = opt_json(r);
        CosetProblem p{std::size_t{1} << m, space.generator, grm_space(s).generator};
        n["oracle"] = oracle_result_to_json(coset_min_weight(p, options));
        j["nested"] = std::move(n);
    }
    return j;
}

}  // namespace isc
