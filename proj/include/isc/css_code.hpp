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

#ifndef ISC_CSS_CODE_HPP
#define ISC_CSS_CODE_HPP

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "isc/decomp.hpp"
#include "isc/gf2.hpp"
#include "isc/posets.hpp"

namespace isc {

/// A component CSS code: hx · hzᵀ must vanish.
struct ComponentPair {
    BitMatrix hx;
    BitMatrix hz;

    bool operator==(const ComponentPair &other) const = default;
};

/// The pair ([1 1], [1 1]).
ComponentPair repetition_pair();

/// Everything needed to build an intersecting subset code.
struct CodeSpec {
    std::vector<ComponentPair> components;
    SubsetTuple x;
    SubsetTuple z;

    std::size_t m() const { return x.m(); }
    bool all_repetition() const;

    bool operator==(const CodeSpec &other) const = default;
};

/// Spec with `m` copies of the repetition pair.
CodeSpec repetition_spec(const SubsetTuple &x, const SubsetTuple &z);

struct InvalidCodeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class Side { X, Z };

const char *side_name(Side s);

/// Row weight -> number of rows with that weight (zero rows omitted).
using MeasurementProfile = std::map<std::size_t, std::size_t>;

MeasurementProfile row_profile(const BitMatrix &m);
MeasurementProfile merge_profiles(const MeasurementProfile &a, const MeasurementProfile &b);

struct ScheduleLayer {
    Side kind = Side::X;
    /// Position of the generating subset in X (or Z).
    std::size_t subset_index = 0;
    std::vector<std::size_t> subset;
    /// Row of the tensor product of the member components measured in this layer.
    std::size_t component_row = 0;
    /// Qubit lists, pairwise disjoint.
    std::vector<std::vector<std::size_t>> measurements;
};

struct SyndromeSchedule {
    std::vector<ScheduleLayer> layers;
};

struct Cnot {
    std::size_t control;
    std::size_t target;

    bool operator==(const Cnot &other) const = default;
};

struct CircuitSpec {
    std::vector<std::size_t> prep_plus;
    std::vector<std::size_t> prep_zero;
    std::vector<std::size_t> data;
    /// One entry per tensor coordinate.
    std::vector<std::vector<Cnot>> layers;
};

struct CodeParameters {
    std::size_t n = 0;
    std::size_t k = 0;
    MeasurementProfile x_profile;
    MeasurementProfile z_profile;
    /// Per subset of X, then per subset of Z.
    std::vector<MeasurementProfile> x_layer_profiles;
    std::vector<MeasurementProfile> z_layer_profiles;

    MeasurementProfile total_profile() const { return merge_profiles(x_profile, z_profile); }
};

enum class GeneratorKind { Stabilizer, Normalizer, Logical };

/// X-type and Z-type generator rows, in physical qubit labels.
struct GeneratorSet {
    BitMatrix x_part;
    BitMatrix z_part;
};

/// The code CSS(Hx, Hz, X, Z) with its column partition and the layered
/// decompositions of both check matrices. Immutable once built.
///
/// Column indices of the partition and of the decomposition factors are in
/// relabeled coordinates (after Q = ⊗Q_i); `qubit_of` maps them to physical
/// qubits. Everything returned by the free functions below is physical.
class CssCode {
   public:
    const CodeSpec &spec() const { return spec_; }
    std::size_t m() const { return spec_.m(); }
    const Shape &shape() const { return shape_; }
    std::size_t n() const { return shape_volume(shape_); }
    std::size_t k() const { return partition_.middle.size(); }

    const std::vector<JointDecomposition> &component_decompositions() const { return components_; }
    const ColumnPartition &partition() const { return partition_; }
    const std::vector<IndexTuple> &lower_generators() const { return lower_generators_; }
    const std::vector<IndexTuple> &upper_generators() const { return upper_generators_; }
    const LayeredDecomposition &factors(Side s) const { return s == Side::X ? x_factors_ : z_factors_; }
    const BitMatrix &check_matrix(Side s) const { return s == Side::X ? hx_ : hz_; }

    std::size_t qubit_of(std::size_t relabeled) const { return qubit_of_[relabeled]; }
    /// Moves the columns of a relabeled-coordinate matrix to physical positions (G · Qᵀ).
    BitMatrix to_physical(const BitMatrix &relabeled) const;

    friend CssCode build_css(CodeSpec spec);

   private:
    CodeSpec spec_;
    Shape shape_;
    std::vector<JointDecomposition> components_;
    std::vector<IndexTuple> lower_generators_;
    std::vector<IndexTuple> upper_generators_;
    ColumnPartition partition_;
    LayeredDecomposition x_factors_;
    LayeredDecomposition z_factors_;
    BitMatrix hx_;
    BitMatrix hz_;
    std::vector<std::size_t> qubit_of_;
};

/// Throws InvalidCodeError for non-orthogonal components, a disjoint pair
/// X_i, Z_j, or overlapping closures.
CssCode build_css(CodeSpec spec);
CssCode build_css(std::vector<ComponentPair> components, SubsetTuple x, SubsetTuple z);

/// Generators of the down closure (from X and the X ranks) and of the up
/// closure (from Z and the Z ranks). Layers whose component has rank zero
/// contribute no generator.
std::vector<IndexTuple> lower_closure_generators(const CodeSpec &spec);
std::vector<IndexTuple> upper_closure_generators(const CodeSpec &spec);

std::pair<BitMatrix, BitMatrix> check_matrices(const CssCode &code);
GeneratorSet canonical_generators(const CssCode &code, GeneratorKind kind);
CodeParameters parameters(const CssCode &code);
SyndromeSchedule syndrome_schedule(const CssCode &code);
CircuitSpec encoding_circuit(const CssCode &code);

/// The CNOT sequence realizing u -> u·R for a unit upper triangular R,
/// targets processed from last to first.
std::vector<Cnot> cnots_for_upper_triangular(const BitMatrix &r);

/// Pushes the initialization stabilizer (X on prep_plus, Z on prep_zero)
/// through the CNOT layers, one row per prepared qubit in relabeled order.
GeneratorSet pushforward_initial_stabilizer(const CssCode &code, const CircuitSpec &circuit);
/// X-part symplectic action of one CNOT layer as an n x n matrix.
BitMatrix layer_matrix(std::size_t n, const std::vector<Cnot> &layer);

/// Encodes a raw syndrome (one bit per independent stabilizer generator of
/// that side) as Pᵀ · L · pad(raw), where pad places bit j at the stacked row
/// the D factor assigns to its j-th support column.
BitVector syndrome_encode(const CssCode &code, Side side, const BitVector &raw);
BitVector pad_syndrome(const CssCode &code, Side side, const BitVector &raw);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    void add(std::string name, bool passed, std::string detail = {});
    const CheckResult *find(const std::string &name) const;
};

/// Structural invariants of a built code.
CheckReport verify_code(const CssCode &code);
/// Validates the construction preconditions first and only builds (and runs
/// verify_code) when they hold.
CheckReport verify_spec(const CodeSpec &spec);

/// A·Ω·Bᵀ for stacked [x | z] rows given as separate halves.
BitMatrix symplectic_product(const GeneratorSet &a, const GeneratorSet &b);

}  // namespace isc

#endif
