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
#include <bit>

namespace isc {

namespace {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0;
    }
    std::size_t out = 1;
    for (std::size_t i = 1; i <= k; i++) {
        out = out * (n - k + i) / i;
    }
    return out;
}

std::size_t pow2(std::size_t e) {
    return std::size_t{1} << e;
}

/// A set of subsets turned into a tuple by lexicographic order.
SubsetTuple from_set(std::size_t m, const std::vector<std::string> &digits) {
    return SubsetTuple::from_digits(m, digits).sorted_lexicographic();
}

std::vector<IndexTuple> k_tuples(std::size_t m, const std::vector<std::string> &digits) {
    std::vector<IndexTuple> out;
    for (auto &d : digits) {
        out.push_back(mask_tuple(SubsetTuple::from_digits(m, {d}).mask(0), m));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<IndexTuple> weight_layer(std::size_t m, std::size_t w) {
    std::vector<IndexTuple> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask++) {
        if (static_cast<std::size_t>(std::popcount(mask)) == w) {
            out.push_back(mask_tuple(mask, m));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SubsetTuple weight_subsets(std::size_t m, std::size_t w) {
    std::vector<std::uint64_t> masks;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); mask++) {
        if (static_cast<std::size_t>(std::popcount(mask)) == w) {
            masks.push_back(mask);
        }
    }
    return SubsetTuple(m, std::move(masks)).sorted_lexicographic();
}

CatalogEntry symmetric(
    std::string name,
    std::string title,
    std::size_t m,
    SubsetTuple x,
    SubsetTuple z,
    std::size_t k,
    std::size_t d,
    MeasurementProfile profile) {
    CatalogEntry e;
    e.name = std::move(name);
    e.title = std::move(title);
    e.x = std::move(x);
    e.z = std::move(z);
    e.claimed.n = pow2(m);
    e.claimed.k = k;
    e.claimed.d_x = d;
    e.claimed.d_z = d;
    e.claimed.profile = std::move(profile);
    return e;
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;
    for (std::size_t m = 3; m <= 6; m++) {
        for (std::size_t r = 1; r < m; r++) {
            out.push_back(standard_rm_entry(r, m));
        }
    }
    for (std::size_t m = 3; m <= 9; m++) {
        out.push_back(asymmetric_entry(m));
    }

    auto spc2d = symmetric(
        "spc2d",
        "2D product of [4,3] single parity check codes",
        4,
        SubsetTuple::from_digits(4, {"01", "23"}),
        SubsetTuple::from_digits(4, {"02", "13"}),
        2,
        4,
        {{4, 16}});
    spc2d.claimed.k_set = k_tuples(4, {"12", "03"});
    out.push_back(spc2d);

    out.push_back(symmetric(
        "spc3d",
        "3D product of [8,7] single parity check codes",
        9,
        SubsetTuple::from_digits(9, {"012", "345", "678"}),
        SubsetTuple::from_digits(9, {"036", "147", "258"}),
        174,
        8,
        {{8, 384}}));

    // Given as an ordered tuple, so the printed order is kept.
    auto cyc32_sets = SubsetTuple::from_digits(5, {"013", "124", "230"});
    out.push_back(symmetric("cyc32", "cyclic pattern, m = 5", 5, cyc32_sets, cyc32_sets, 14, 4, {{8, 24}}));

    auto cyc64_sets = from_set(6, {"013", "124", "235", "340", "451", "502"});
    auto cyc64 = symmetric("cyc64", "cyclic pattern, m = 6", 6, cyc64_sets, cyc64_sets, 8, 8, {{8, 96}});
    cyc64.claimed.k_set = k_tuples(6, {"012", "123", "234", "345", "450", "501", "024", "135"});
    out.push_back(cyc64);

    auto cyc128_sets = from_set(7, {"013", "124", "235", "346", "450", "561"});
    auto cyc128 = symmetric("cyc128", "cyclic pattern, m = 7", 7, cyc128_sets, cyc128_sets, 10, 8, {{8, 192}});
    cyc128.claimed.k_set =
        k_tuples(7, {"345", "145", "135", "134", "1345", "026", "0256", "0246", "0236", "0126"});
    out.push_back(cyc128);

    out.push_back(symmetric(
        "b128",
        "block size 128 with 24 logical qubits",
        7,
        from_set(7, {"012", "013", "234", "356", "456"}),
        from_set(7, {"143", "146", "360", "325", "025"}),
        24,
        8,
        {{8, 160}}));

    auto d256 = symmetric(
        "d256",
        "distance 16 from weight 8 measurements, m = 8",
        8,
        from_set(8, {"012", "123", "234", "345", "456", "567", "670", "701"}),
        from_set(8, {"136", "247", "350", "461", "572", "603", "714", "025"}),
        6,
        16,
        {{8, 512}});
    d256.claimed.k_set = k_tuples(8, {"2367", "1357", "1256", "0347", "0246", "0145"});
    out.push_back(d256);

    out.push_back(symmetric(
        "d512",
        "distance 16 from weight 8 measurements, m = 9",
        9,
        from_set(9, {"012", "345", "678", "048", "156", "237"}),
        from_set(9, {"036", "147", "258", "246", "138", "057"}),
        18,
        16,
        {{8, 768}}));

    CatalogEntry asym32;
    asym32.name = "asym32";
    asym32.title = "asymmetric, block size 32";
    asym32.x = SubsetTuple::from_digits(5, {"01", "234"});
    // Stored exactly as published, including the repeated {1,3}.
    asym32.z = SubsetTuple::from_digits(5, {"02", "13", "04", "14", "13"});
    asym32.claimed.n = 32;
    asym32.claimed.k = 2;
    asym32.claimed.d_x = 8;
    asym32.claimed.d_z = 4;
    asym32.claimed.profile = MeasurementProfile{{4, 48}, {8, 4}};
    asym32.claimed.k_set = k_tuples(5, {"03", "12"});
    asym32.notes.push_back("Z lists {1,3} twice; the tuple is verified as published");
    out.push_back(asym32);

    CatalogEntry asym128;
    asym128.name = "asym128";
    asym128.title = "asymmetric, block size 128";
    asym128.x = from_set(7, {"013", "124", "235", "346", "450", "561", "602", "134"});
    asym128.z = from_set(7, {"013", "124", "235", "346", "450", "561"});
    asym128.claimed.n = 128;
    asym128.claimed.k = 3;
    asym128.claimed.d_x = 8;
    asym128.claimed.d_z = 16;
    asym128.claimed.profile = MeasurementProfile{{8, 224}};
    asym128.claimed.k_set = k_tuples(7, {"0246", "0236", "0126"});
    out.push_back(asym128);

    std::sort(out.begin(), out.end(), [](const CatalogEntry &a, const CatalogEntry &b) { return a.name < b.name; });
    return out;
}

std::string profile_str(const MeasurementProfile &p) {
    if (p.empty()) {
        return "none";
    }
    std::string out;
    for (auto [w, c] : p) {
        out += (out.empty() ? "" : "+") + std::to_string(c) + "xw" + std::to_string(w);
    }
    return out;
}

std::string tuples_str(const std::vector<IndexTuple> &ts) {
    std::string out = "{";
    for (std::size_t i = 0; i < ts.size(); i++) {
        out += (i ? "," : "") + tuple_str(ts[i]);
    }
    return out + "}";
}

std::string opt_str(const std::optional<std::size_t> &v) {
    return v ? std::to_string(*v) : "undefined";
}

}  // namespace

CatalogEntry standard_rm_entry(std::size_t r, std::size_t m) {
    if (r < 1 || r >= m) {
        throw std::invalid_argument("standard_rm_entry: need 1 <= r < m");
    }
    CatalogEntry e;
    e.name = "rm_r" + std::to_string(r) + "_m" + std::to_string(m);
    e.title = "standard Reed-Muller, r = " + std::to_string(r) + ", m = " + std::to_string(m);
    e.x = weight_subsets(m, m - r + 1);
    e.z = weight_subsets(m, r + 1);
    e.claimed.n = pow2(m);
    e.claimed.k = binomial(m, r);
    e.claimed.d_x = pow2(m - r);
    e.claimed.d_z = pow2(r);
    e.claimed.x_profile = MeasurementProfile{{pow2(m - r + 1), binomial(m, r - 1) * pow2(r - 1)}};
    e.claimed.z_profile = MeasurementProfile{{pow2(r + 1), binomial(m, r + 1) * pow2(m - r - 1)}};
    e.claimed.k_set = weight_layer(m, r);
    return e;
}

CatalogEntry asymmetric_entry(std::size_t m) {
    if (m < 2) {
        throw std::invalid_argument("asymmetric_entry: need m >= 2");
    }
    CatalogEntry e;
    e.name = "asym_m" + std::to_string(m);
    e.title = "highly asymmetric, m = " + std::to_string(m);
    std::vector<std::vector<std::size_t>> z;
    for (std::size_t i = 1; i < m; i++) {
        z.push_back({0, i});
    }
    e.x = SubsetTuple::from_lists(m, {{0}});
    e.z = SubsetTuple::from_lists(m, z);
    e.claimed.n = pow2(m);
    e.claimed.k = 1;
    e.claimed.d_x = pow2(m - 1);
    e.claimed.d_z = 2;
    e.claimed.x_profile = MeasurementProfile{{2, pow2(m - 1)}};
    e.claimed.z_profile = MeasurementProfile{{4, (m - 1) * pow2(m - 2)}};
    IndexTuple only(m, 0);
    only[0] = 1;
    e.claimed.k_set = std::vector<IndexTuple>{only};
    return e;
}

const std::vector<CatalogEntry> &catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry *find_entry(const std::string &name) {
    for (auto &e : catalog()) {
        if (e.name == name) {
            return &e;
        }
    }
    return nullptr;
}

const char *oracle_status_name(OracleStatus s) {
    switch (s) {
        case OracleStatus::Verified:
            return "verified";
        case OracleStatus::FormulaOnly:
            return "formula-only";
        case OracleStatus::Refused:
            return "refused";
        case OracleStatus::Mismatch:
            return "mismatch";
    }
    return "?";
}

std::string parameter_string(const CatalogClaims &c) {
    std::string out = "[[" + std::to_string(c.n) + "," + std::to_string(c.k);
    if (c.d_x && c.d_z && *c.d_x == *c.d_z) {
        out += "," + std::to_string(*c.d_x);
    } else if (c.d_x && c.d_z) {
        out += ",(" + std::to_string(*c.d_x) + "," + std::to_string(*c.d_z) + ")";
    }
    return out + "]]";
}

bool VerificationReport::claims_passed() const {
    return std::all_of(claims.begin(), claims.end(), [](const ClaimCheck &c) { return c.passed; });
}

bool VerificationReport::all_passed() const {
    return claims_passed() && structure.all_passed() && oracle_status != OracleStatus::Mismatch;
}

namespace {

OracleStatus compare_oracle(const OracleDistances &o, const std::optional<XzDistances> &formula) {
    if (o.x.refused() || o.z.refused()) {
        return OracleStatus::Refused;
    }
    if (!formula) {
        return OracleStatus::Verified;
    }
    bool same = o.x.weight == std::optional<std::size_t>(formula->d_x) &&
                o.z.weight == std::optional<std::size_t>(formula->d_z);
    return same ? OracleStatus::Verified : OracleStatus::Mismatch;
}

}  // namespace

SpecReport verify_spec_report(const CodeSpec &spec, const VerifyOptions &options) {
    SpecReport rep;
    std::optional<CssCode> code;
    try {
        code = build_css(spec);
    } catch (const std::invalid_argument &) {
        rep.checks = verify_spec(spec);
        if (rep.checks.all_passed()) {
            rep.checks.add("construction", false, "construction rejected the input");
        }
        return rep;
    }
    rep.checks = verify_code(*code);
    rep.computed = parameters(*code);
    for (auto i : code->partition().middle) {
        rep.k_set.push_back(delinearize(i, code->shape()));
    }
    if (spec.all_repetition()) {
        rep.formula = css_xz_distances(spec.x, spec.z);
    }
    if (options.run_oracle) {
        auto [hx, hz] = check_matrices(*code);
        rep.oracle = css_distances_bruteforce(hx, hz, options.oracle);
        rep.oracle_status = compare_oracle(*rep.oracle, rep.formula);
    }
    return rep;
}

VerificationReport verify_entry(const CatalogEntry &e, const VerifyOptions &options) {
    VerificationReport rep;
    rep.name = e.name;
    rep.notes = e.notes;
    const CatalogClaims &c = e.claimed;

    std::optional<CssCode> code;
    try {
        code = build_css(e.spec());
    } catch (const InvalidCodeError &err) {
        rep.structure.add("construction", false, err.what());
        return rep;
    }
    rep.computed = parameters(*code);
    for (auto i : code->partition().middle) {
        rep.k_set.push_back(delinearize(i, code->shape()));
    }
    std::sort(rep.k_set.begin(), rep.k_set.end());
    rep.formula = css_xz_distances(e.x, e.z);

    auto add = [&](std::string claim, std::string expected, std::string computed) {
        bool ok = expected == computed;
        rep.claims.push_back({std::move(claim), std::move(expected), std::move(computed), ok});
    };
    add("n", std::to_string(c.n), std::to_string(rep.computed.n));
    add("k", std::to_string(c.k), std::to_string(rep.computed.k));
    std::optional<std::size_t> dx;
    std::optional<std::size_t> dz;
    if (rep.formula) {
        dx = rep.formula->d_x;
        dz = rep.formula->d_z;
    }
    if (c.d_x) {
        add("d_x", std::to_string(*c.d_x), opt_str(dx));
    }
    if (c.d_z) {
        add("d_z", std::to_string(*c.d_z), opt_str(dz));
    }
    if (c.k_set) {
        auto expected = *c.k_set;
        std::sort(expected.begin(), expected.end());
        add("K", tuples_str(expected), tuples_str(rep.k_set));
    }
    if (c.profile) {
        add("profile", profile_str(*c.profile), profile_str(rep.computed.total_profile()));
    }
    if (c.x_profile) {
        add("x_profile", profile_str(*c.x_profile), profile_str(rep.computed.x_profile));
    }
    if (c.z_profile) {
        add("z_profile", profile_str(*c.z_profile), profile_str(rep.computed.z_profile));
    }

    if (options.structural) {
        rep.structure = verify_code(*code);
    }

    if (options.run_oracle) {
        auto [hx, hz] = check_matrices(*code);
        rep.oracle = css_distances_bruteforce(hx, hz, options.oracle);
        rep.oracle_status = compare_oracle(*rep.oracle, rep.formula);
    }
    if (e.x.has_duplicates() || e.z.has_duplicates()) {
        rep.notes.push_back(
            "duplicate subset present; computed k=" + std::to_string(rep.computed.k) + ", d_x=" + opt_str(dx) +
            ", d_z=" + opt_str(dz) + ", K=" + tuples_str(rep.k_set));
    }
    return rep;
}

}  // namespace isc
