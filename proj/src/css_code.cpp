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

#include "isc/css_code.hpp"

#include <algorithm>
#include <sstream>

namespace isc {

ComponentPair repetition_pair() {
    return {BitMatrix::from_rows({{1, 1}}), BitMatrix::from_rows({{1, 1}})};
}

bool CodeSpec::all_repetition() const {
    auto rep = repetition_pair();
    return std::all_of(components.begin(), components.end(), [&](const ComponentPair &c) { return c == rep; });
}

CodeSpec repetition_spec(const SubsetTuple &x, const SubsetTuple &z) {
    return CodeSpec{std::vector<ComponentPair>(x.m(), repetition_pair()), x, z};
}

const char *side_name(Side s) {
    return s == Side::X ? "X" : "Z";
}

MeasurementProfile row_profile(const BitMatrix &m) {
    MeasurementProfile out;
    for (std::size_t r = 0; r < m.rows(); r++) {
        std::size_t w = m.row_weight(r);
        if (w) {
            out[w]++;
        }
    }
    return out;
}

MeasurementProfile merge_profiles(const MeasurementProfile &a, const MeasurementProfile &b) {
    MeasurementProfile out = a;
    for (auto [w, c] : b) {
        out[w] += c;
    }
    return out;
}

namespace {

void check_shapes(const CodeSpec &spec) {
    if (spec.x.m() != spec.z.m()) {
        throw InvalidCodeError("X and Z are subsets of different ground sets");
    }
    if (spec.components.size() != spec.m()) {
        throw InvalidCodeError(
            "expected " + std::to_string(spec.m()) + " component pairs, got " + std::to_string(spec.components.size()));
    }
    for (std::size_t i = 0; i < spec.components.size(); i++) {
        const auto &c = spec.components[i];
        if (c.hx.cols() != c.hz.cols()) {
            throw InvalidCodeError("component " + std::to_string(i) + ": hx and hz have different column counts");
        }
        if (c.hx.cols() == 0) {
            throw InvalidCodeError("component " + std::to_string(i) + " has no columns");
        }
    }
}

std::string subset_str(const std::vector<std::size_t> &s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); i++) {
        out += (i ? "," : "") + std::to_string(s[i]);
    }
    return out + "}";
}

/// Empty string when every component is orthogonal, otherwise a description of the first failure.
std::string orthogonality_failure(const CodeSpec &spec) {
    for (std::size_t i = 0; i < spec.components.size(); i++) {
        const auto &c = spec.components[i];
        if (!mat_mul(c.hx, c.hz.transpose()).is_zero()) {
            return "component " + std::to_string(i) + ": hx·hzᵀ != 0";
        }
    }
    return {};
}

std::string intersection_failure(const CodeSpec &spec) {
    for (std::size_t i = 0; i < spec.x.size(); i++) {
        for (std::size_t j = 0; j < spec.z.size(); j++) {
            if ((spec.x.mask(i) & spec.z.mask(j)) == 0) {
                return "X_" + std::to_string(i) + "=" + subset_str(spec.x.elements(i)) + " and Z_" + std::to_string(j) +
                       "=" + subset_str(spec.z.elements(j)) + " are disjoint";
            }
        }
    }
    return {};
}

Shape spec_shape(const CodeSpec &spec) {
    Shape shape;
    for (auto &c : spec.components) {
        shape.push_back(c.hx.cols());
    }
    return shape;
}

std::vector<BitMatrix> side_components(const CodeSpec &spec, Side side) {
    std::vector<BitMatrix> out;
    for (auto &c : spec.components) {
        out.push_back(side == Side::X ? c.hx : c.hz);
    }
    return out;
}

}  // namespace

std::vector<IndexTuple> lower_closure_generators(const CodeSpec &spec) {
    Shape shape = spec_shape(spec);
    std::vector<std::size_t> ranks;
    for (auto &c : spec.components) {
        ranks.push_back(rank(c.hx));
    }
    std::vector<IndexTuple> out;
    for (auto mask : spec.x.masks()) {
        IndexTuple g(shape.size());
        bool empty_layer = false;
        for (std::size_t i = 0; i < shape.size(); i++) {
            if ((mask >> i) & 1) {
                if (ranks[i] == 0) {
                    empty_layer = true;
                    break;
                }
                g[i] = ranks[i] - 1;
            } else {
                g[i] = shape[i] - 1;
            }
        }
        if (!empty_layer) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

std::vector<IndexTuple> upper_closure_generators(const CodeSpec &spec) {
    Shape shape = spec_shape(spec);
    std::vector<std::size_t> ranks;
    for (auto &c : spec.components) {
        ranks.push_back(rank(c.hz));
    }
    std::vector<IndexTuple> out;
    for (auto mask : spec.z.masks()) {
        IndexTuple g(shape.size(), 0);
        bool empty_layer = false;
        for (std::size_t i = 0; i < shape.size(); i++) {
            if ((mask >> i) & 1) {
                if (ranks[i] == 0) {
                    empty_layer = true;
                    break;
                }
                g[i] = shape[i] - ranks[i];
            }
        }
        if (!empty_layer) {
            out.push_back(std::move(g));
        }
    }
    return out;
}

BitMatrix CssCode::to_physical(const BitMatrix &relabeled) const {
    BitMatrix out(relabeled.rows(), relabeled.cols());
    for (std::size_t r = 0; r < relabeled.rows(); r++) {
        for (std::size_t c = 0; c < relabeled.cols(); c++) {
            if (relabeled.get(r, c)) {
                out.set(r, qubit_of_[c], true);
            }
        }
    }
    return out;
}

CssCode build_css(CodeSpec spec) {
    check_shapes(spec);
    if (auto why = orthogonality_failure(spec); !why.empty()) {
        throw InvalidCodeError(why);
    }
    if (auto why = intersection_failure(spec); !why.empty()) {
        throw InvalidCodeError(why);
    }

    CssCode code;
    code.shape_ = spec_shape(spec);
    code.lower_generators_ = lower_closure_generators(spec);
    code.upper_generators_ = upper_closure_generators(spec);
    try {
        code.partition_ = complement_partition(code.lower_generators_, code.upper_generators_, code.shape_);
    } catch (const ClosureOverlapError &e) {
        throw InvalidCodeError(e.what());
    }

    std::vector<ComponentFactors> xf;
    std::vector<ComponentFactors> zf;
    for (auto &c : spec.components) {
        code.components_.push_back(joint_decompose(c.hx, c.hz));
        xf.push_back(x_side_factors(code.components_.back()));
        zf.push_back(z_side_factors(code.components_.back()));
    }
    code.x_factors_ = layered_decompose(xf, spec.x);
    code.z_factors_ = layered_decompose(zf, spec.z);
    if (code.x_factors_.d.support() != code.partition_.lower.members() ||
        code.z_factors_.d.support() != code.partition_.upper.members()) {
        throw std::logic_error("layered decomposition support disagrees with the column partition");
    }

    code.hx_ = layered_matrix(side_components(spec, Side::X), spec.x);
    code.hz_ = layered_matrix(side_components(spec, Side::Z), spec.z);

    const BitMatrix &q = code.x_factors_.q;
    code.qubit_of_.assign(q.cols(), 0);
    for (std::size_t r = 0; r < q.rows(); r++) {
        for (std::size_t c = 0; c < q.cols(); c++) {
            if (q.get(r, c)) {
                code.qubit_of_[c] = r;
            }
        }
    }
    code.spec_ = std::move(spec);
    return code;
}

CssCode build_css(std::vector<ComponentPair> components, SubsetTuple x, SubsetTuple z) {
    return build_css(CodeSpec{std::move(components), std::move(x), std::move(z)});
}

std::pair<BitMatrix, BitMatrix> check_matrices(const CssCode &code) {
    return {code.check_matrix(Side::X), code.check_matrix(Side::Z)};
}

GeneratorSet canonical_generators(const CssCode &code, GeneratorKind kind) {
    const auto &part = code.partition();
    std::vector<std::size_t> x_rows;
    std::vector<std::size_t> z_rows;
    switch (kind) {
        case GeneratorKind::Stabilizer:
            x_rows = part.lower.members();
            z_rows = part.upper.members();
            break;
        case GeneratorKind::Normalizer:
            x_rows = part.upper.complement().members();
            z_rows = part.lower.complement().members();
            break;
        case GeneratorKind::Logical:
            x_rows = part.middle;
            z_rows = part.middle;
            break;
    }
    // Nonzero rows of GP(T)·R are exactly the rows of R indexed by T.
    return {
        code.to_physical(code.factors(Side::X).r.select_rows(x_rows)),
        code.to_physical(code.factors(Side::Z).r.select_rows(z_rows)),
    };
}

CodeParameters parameters(const CssCode &code) {
    CodeParameters p;
    p.n = code.n();
    p.k = code.k();
    p.x_profile = row_profile(code.check_matrix(Side::X));
    p.z_profile = row_profile(code.check_matrix(Side::Z));
    std::vector<BitMatrix> hx;
    std::vector<BitMatrix> hz;
    for (auto &c : code.spec().components) {
        hx.push_back(c.hx);
        hz.push_back(c.hz);
    }
    for (auto mask : code.spec().x.masks()) {
        p.x_layer_profiles.push_back(row_profile(layered_tensor(hx, mask)));
    }
    for (auto mask : code.spec().z.masks()) {
        p.z_layer_profiles.push_back(row_profile(layered_tensor(hz, mask)));
    }
    return p;
}

namespace {

void schedule_side(const CssCode &code, Side side, SyndromeSchedule &out) {
    const auto &spec = code.spec();
    const auto &shape = code.shape();
    const SubsetTuple &subsets = side == Side::X ? spec.x : spec.z;
    for (std::size_t k = 0; k < subsets.size(); k++) {
        std::vector<std::size_t> inside = subsets.elements(k);
        std::vector<std::size_t> outside;
        for (std::size_t i = 0; i < shape.size(); i++) {
            if (!subsets.contains(k, i)) {
                outside.push_back(i);
            }
        }
        BitMatrix small = BitMatrix::identity(1);
        Shape inside_shape;
        for (auto i : inside) {
            const auto &c = spec.components[i];
            small = kron(small, side == Side::X ? c.hx : c.hz);
            inside_shape.push_back(shape[i]);
        }
        Shape outside_shape;
        for (auto i : outside) {
            outside_shape.push_back(shape[i]);
        }
        std::size_t groups = shape_volume(outside_shape);

        for (std::size_t row = 0; row < small.rows(); row++) {
            if (small.row_is_zero(row)) {
                continue;
            }
            ScheduleLayer layer;
            layer.kind = side;
            layer.subset_index = k;
            layer.subset = inside;
            layer.component_row = row;
            std::vector<std::size_t> cols = small.row_vector(row).support();
            for (std::size_t g = 0; g < groups; g++) {
                IndexTuple y = delinearize(g, outside_shape);
                IndexTuple full(shape.size());
                for (std::size_t j = 0; j < outside.size(); j++) {
                    full[outside[j]] = y[j];
                }
                std::vector<std::size_t> qubits;
                for (auto c : cols) {
                    IndexTuple gamma = delinearize(c, inside_shape);
                    for (std::size_t j = 0; j < inside.size(); j++) {
                        full[inside[j]] = gamma[j];
                    }
                    qubits.push_back(linearize(full, shape));
                }
                std::sort(qubits.begin(), qubits.end());
                layer.measurements.push_back(std::move(qubits));
            }
            out.layers.push_back(std::move(layer));
        }
    }
}

}  // namespace

SyndromeSchedule syndrome_schedule(const CssCode &code) {
    SyndromeSchedule out;
    schedule_side(code, Side::X, out);
    schedule_side(code, Side::Z, out);
    return out;
}

std::vector<Cnot> cnots_for_upper_triangular(const BitMatrix &r) {
    if (!is_unit_upper_triangular(r)) {
        throw std::invalid_argument("cnots_for_upper_triangular: matrix is not unit upper triangular");
    }
    std::vector<Cnot> out;
    for (std::size_t t = r.cols(); t-- > 1;) {
        for (std::size_t c = 0; c < t; c++) {
            if (r.get(c, t)) {
                out.push_back({c, t});
            }
        }
    }
    return out;
}

CircuitSpec encoding_circuit(const CssCode &code) {
    CircuitSpec out;
    const auto &part = code.partition();
    for (auto t : part.lower.members()) {
        out.prep_plus.push_back(code.qubit_of(t));
    }
    for (auto t : part.upper.members()) {
        out.prep_zero.push_back(code.qubit_of(t));
    }
    for (auto t : part.middle) {
        out.data.push_back(code.qubit_of(t));
    }
    std::sort(out.prep_plus.begin(), out.prep_plus.end());
    std::sort(out.prep_zero.begin(), out.prep_zero.end());
    std::sort(out.data.begin(), out.data.end());

    const Shape &shape = code.shape();
    for (std::size_t i = 0; i < shape.size(); i++) {
        std::vector<Cnot> local = cnots_for_upper_triangular(code.component_decompositions()[i].r);
        Shape rest = shape;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        std::size_t groups = shape_volume(rest);
        std::vector<Cnot> layer;
        for (std::size_t g = 0; g < groups; g++) {
            IndexTuple y = delinearize(g, rest);
            IndexTuple full = y;
            full.insert(full.begin() + static_cast<std::ptrdiff_t>(i), 0);
            for (auto cnot : local) {
                full[i] = cnot.control;
                std::size_t c = code.qubit_of(linearize(full, shape));
                full[i] = cnot.target;
                std::size_t t = code.qubit_of(linearize(full, shape));
                layer.push_back({c, t});
            }
        }
        out.layers.push_back(std::move(layer));
    }
    return out;
}

GeneratorSet pushforward_initial_stabilizer(const CssCode &code, const CircuitSpec &circuit) {
    const auto &part = code.partition();
    std::size_t n = code.n();
    GeneratorSet g{BitMatrix(part.lower.size(), n), BitMatrix(part.upper.size(), n)};
    for (std::size_t r = 0; r < part.lower.size(); r++) {
        g.x_part.set(r, code.qubit_of(part.lower.members()[r]), true);
    }
    for (std::size_t r = 0; r < part.upper.size(); r++) {
        g.z_part.set(r, code.qubit_of(part.upper.members()[r]), true);
    }
    for (auto &layer : circuit.layers) {
        for (auto cnot : layer) {
            g.x_part.xor_col_into(cnot.control, cnot.target);
            g.z_part.xor_col_into(cnot.target, cnot.control);
        }
    }
    return g;
}

BitMatrix layer_matrix(std::size_t n, const std::vector<Cnot> &layer) {
    BitMatrix m = BitMatrix::identity(n);
    for (auto cnot : layer) {
        m.xor_col_into(cnot.control, cnot.target);
    }
    return m;
}

BitVector pad_syndrome(const CssCode &code, Side side, const BitVector &raw) {
    const auto &f = code.factors(side);
    if (raw.size() != f.d.support().size()) {
        throw DimensionError(
            std::string("syndrome_encode: ") + side_name(side) + " raw syndrome needs " +
            std::to_string(f.d.support().size()) + " bits, got " + std::to_string(raw.size()));
    }
    BitVector padded(f.d.rows());
    for (std::size_t j = 0; j < raw.size(); j++) {
        padded.set(f.d.placement()[j], raw.get(j));
    }
    return padded;
}

BitVector syndrome_encode(const CssCode &code, Side side, const BitVector &raw) {
    const auto &f = code.factors(side);
    BitVector lp = mat_vec(f.l, pad_syndrome(code, side, raw));
    return mat_vec(f.p.transpose(), lp);
}

BitMatrix symplectic_product(const GeneratorSet &a, const GeneratorSet &b) {
    std::size_t ra = a.x_part.rows() + a.z_part.rows();
    std::size_t rb = b.x_part.rows() + b.z_part.rows();
    BitMatrix out(ra, rb);
    BitMatrix xz = mat_mul(a.x_part, b.z_part.transpose());
    BitMatrix zx = mat_mul(a.z_part, b.x_part.transpose());
    for (std::size_t i = 0; i < xz.rows(); i++) {
        for (std::size_t j = 0; j < xz.cols(); j++) {
            out.set(i, b.x_part.rows() + j, xz.get(i, j));
        }
    }
    for (std::size_t i = 0; i < zx.rows(); i++) {
        for (std::size_t j = 0; j < zx.cols(); j++) {
            out.set(a.x_part.rows() + i, j, zx.get(i, j));
        }
    }
    return out;
}

bool CheckReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult &c) { return c.passed; });
}

void CheckReport::add(std::string name, bool passed, std::string detail) {
    checks.push_back({std::move(name), passed, std::move(detail)});
}

const CheckResult *CheckReport::find(const std::string &name) const {
    for (auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

std::string first_mismatch_row(const BitMatrix &a, const BitMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return "shape " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " vs " +
               std::to_string(b.rows()) + "x" + std::to_string(b.cols());
    }
    for (std::size_t r = 0; r < a.rows(); r++) {
        if (a.row_vector(r) != b.row_vector(r)) {
            return "row " + std::to_string(r) + " differs";
        }
    }
    return {};
}

void check_component_decompositions(const CssCode &code, CheckReport &report) {
    std::string detail;
    for (std::size_t i = 0; i < code.component_decompositions().size() && detail.empty(); i++) {
        const auto &jd = code.component_decompositions()[i];
        const auto &c = code.spec().components[i];
        auto lhs_a = mat_mul(mat_mul(jd.p_a, c.hx), jd.q);
        auto rhs_a = mat_mul(mat_mul(jd.l_a, jd.d_a.materialize()), jd.r);
        auto lhs_b = mat_mul(mat_mul(jd.p_b, c.hz), jd.q);
        auto rhs_b = mat_mul(mat_mul(jd.l_b, jd.d_b.materialize()), jd.r_inv_t);
        if (lhs_a != rhs_a || lhs_b != rhs_b) {
            detail = "component " + std::to_string(i) + ": reassembly failed";
        } else if (!is_unit_lower_triangular(jd.l_a) || !is_unit_upper_triangular(jd.l_b) ||
                   !is_unit_upper_triangular(jd.r)) {
            detail = "component " + std::to_string(i) + ": triangular factor has the wrong shape";
        } else if (!is_permutation(jd.p_a) || !is_permutation(jd.p_b) || !is_permutation(jd.q)) {
            detail = "component " + std::to_string(i) + ": permutation factor is not a permutation";
        }
    }
    report.add("component_decompositions", detail.empty(), detail);
}

void check_layered(const CssCode &code, Side side, CheckReport &report) {
    const auto &f = code.factors(side);
    const BitMatrix &m = code.check_matrix(side);
    std::string name = std::string("layered_decomposition_") + side_name(side);
    auto lhs = mat_mul(mat_mul(f.p, m), f.q);
    auto rhs = mat_mul(mat_mul(f.l, f.d.materialize()), f.r);
    std::string detail = first_mismatch_row(lhs, rhs);
    if (detail.empty()) {
        try {
            (void)invert(f.lambda);
        } catch (const SingularMatrixError &) {
            detail = "lambda factor is singular";
        }
    }
    report.add(name, detail.empty(), detail);

    const auto &expected = side == Side::X ? code.partition().lower.members() : code.partition().upper.members();
    report.add(
        std::string("column_support_") + side_name(side),
        f.d.support() == expected,
        f.d.support() == expected ? "" : "D support differs from the monotone closure");
}

}  // namespace

CheckReport verify_code(const CssCode &code) {
    CheckReport report;
    const auto &spec = code.spec();
    std::size_t n = code.n();

    auto ortho = orthogonality_failure(spec);
    report.add("component_orthogonality", ortho.empty(), ortho);
    auto inter = intersection_failure(spec);
    report.add("intersecting_subsets", inter.empty(), inter);

    const BitMatrix &hx = code.check_matrix(Side::X);
    const BitMatrix &hz = code.check_matrix(Side::Z);
    report.add("cross_commutation", mat_mul(hx, hz.transpose()).is_zero());

    check_component_decompositions(code, report);
    check_layered(code, Side::X, report);
    check_layered(code, Side::Z, report);

    auto stab = canonical_generators(code, GeneratorKind::Stabilizer);
    report.add("span_equality_X", same_row_space(hx, stab.x_part));
    report.add("span_equality_Z", same_row_space(hz, stab.z_part));

    std::size_t rx = rank(hx);
    std::size_t rz = rank(hz);
    bool counts = code.k() == n - rx - rz && stab.x_part.rows() == rx && stab.z_part.rows() == rz;
    report.add(
        "dimension_count",
        counts,
        counts ? "" : "k=" + std::to_string(code.k()) + " rank(Mx)=" + std::to_string(rx) +
                          " rank(Mz)=" + std::to_string(rz) + " n=" + std::to_string(n));

    report.add("symplectic_validity", symplectic_product(stab, stab).is_zero());

    auto norm = canonical_generators(code, GeneratorKind::Normalizer);
    bool norm_ok = symplectic_product(norm, stab).is_zero() &&
                   stab.x_part.rows() + stab.z_part.rows() + norm.x_part.rows() + norm.z_part.rows() == 2 * n &&
                   rank(norm.x_part) == norm.x_part.rows() && rank(norm.z_part) == norm.z_part.rows();
    report.add("normalizer", norm_ok);

    auto logical = canonical_generators(code, GeneratorKind::Logical);
    report.add(
        "logical_pairing", mat_mul(logical.x_part, logical.z_part.transpose()) == BitMatrix::identity(code.k()));

    auto circuit = encoding_circuit(code);
    auto pushed = pushforward_initial_stabilizer(code, circuit);
    bool push_ok = pushed.x_part == stab.x_part && pushed.z_part == stab.z_part;
    report.add("encoding_pushforward", push_ok);

    std::vector<BitMatrix> layers;
    for (auto &l : circuit.layers) {
        layers.push_back(layer_matrix(n, l));
    }
    bool commute = true;
    for (std::size_t i = 0; i < layers.size() && commute; i++) {
        for (std::size_t j = i + 1; j < layers.size() && commute; j++) {
            commute = mat_mul(layers[i], layers[j]) == mat_mul(layers[j], layers[i]);
        }
    }
    report.add("encoding_layers_commute", commute);

    auto schedule = syndrome_schedule(code);
    bool disjoint = true;
    std::vector<std::vector<std::size_t>> sched_x;
    std::vector<std::vector<std::size_t>> sched_z;
    for (auto &layer : schedule.layers) {
        std::vector<bool> seen(n, false);
        for (auto &meas : layer.measurements) {
            for (auto q : meas) {
                if (seen[q]) {
                    disjoint = false;
                }
                seen[q] = true;
            }
            (layer.kind == Side::X ? sched_x : sched_z).push_back(meas);
        }
    }
    report.add("schedule_disjoint_layers", disjoint);
    auto rows_of = [](const BitMatrix &m) {
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t r = 0; r < m.rows(); r++) {
            if (!m.row_is_zero(r)) {
                out.push_back(m.row_vector(r).support());
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::sort(sched_x.begin(), sched_x.end());
    std::sort(sched_z.begin(), sched_z.end());
    report.add("schedule_matches_check_rows", sched_x == rows_of(hx) && sched_z == rows_of(hz));

    bool syndrome_ok = true;
    for (Side side : {Side::X, Side::Z}) {
        const BitMatrix &m = side == Side::X ? hx : hz;
        const BitMatrix &g = side == Side::X ? stab.x_part : stab.z_part;
        for (std::size_t q = 0; q < n && syndrome_ok; q++) {
            BitVector e(n);
            e.set(q, true);
            syndrome_ok = mat_vec(m, e) == syndrome_encode(code, side, mat_vec(g, e));
        }
    }
    report.add("syndrome_redundancy_identity", syndrome_ok);
    return report;
}

CheckReport verify_spec(const CodeSpec &spec) {
    CheckReport report;
    try {
        check_shapes(spec);
    } catch (const InvalidCodeError &e) {
        report.add("shapes", false, e.what());
        return report;
    }
    auto ortho = orthogonality_failure(spec);
    auto inter = intersection_failure(spec);
    if (!ortho.empty() || !inter.empty()) {
        report.add("component_orthogonality", ortho.empty(), ortho);
        report.add("intersecting_subsets", inter.empty(), inter);
        return report;
    }
    try {
        return verify_code(build_css(spec));
    } catch (const InvalidCodeError &e) {
        report.add("construction", false, e.what());
        return report;
    }
}

}  // namespace isc
