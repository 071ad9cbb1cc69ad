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

#ifndef ISC_POSETS_HPP
#define ISC_POSETS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "isc/gf2.hpp"

namespace isc {

/// Bounding box (n_0, ..., n_{m-1}) of a product of chains.
using Shape = std::vector<std::size_t>;

/// A point of [n_0] x ... x [n_{m-1}].
using IndexTuple = std::vector<std::size_t>;

std::size_t shape_volume(const Shape &shape);
Shape binary_shape(std::size_t m);

/// Lexicographic linearization, coordinate 0 most significant. This is the
/// same order `kron` uses for rows and columns, and every qubit index in the
/// library is produced by it.
std::size_t linearize(const IndexTuple &t, const Shape &shape);
IndexTuple delinearize(std::size_t index, const Shape &shape);
void check_tuple(const IndexTuple &t, const Shape &shape);

/// Strict componentwise order: x <= y everywhere and x < y somewhere.
bool tuple_lt(const IndexTuple &x, const IndexTuple &y);
bool tuple_le(const IndexTuple &x, const IndexTuple &y);
std::size_t tuple_weight(const IndexTuple &t);

/// Compact digit notation, e.g. {0,1,1,0} <-> "0110". Tuples with an entry
/// above 9 print as "(a,b,...)".
std::string tuple_str(const IndexTuple &t);
IndexTuple tuple_from_str(std::string_view s);

enum class Direction { Increasing, Decreasing };

const char *direction_name(Direction d);

/// A monotone subset of a product of chains, stored as the sorted list of
/// linearized members plus a membership mask.
class MonotoneSet {
   public:
    MonotoneSet() = default;
    /// Members given as linear indices; closedness is checked.
    MonotoneSet(Shape shape, Direction direction, std::vector<std::size_t> members);

    const Shape &shape() const { return shape_; }
    Direction direction() const { return direction_; }
    const std::vector<std::size_t> &members() const { return members_; }
    std::vector<IndexTuple> member_tuples() const;
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(std::size_t index) const { return mask_[index]; }
    bool contains(const IndexTuple &t) const { return mask_[linearize(t, shape_)]; }

    /// Complement in the bounding box; it is monotone in the opposite direction.
    MonotoneSet complement() const;

    bool operator==(const MonotoneSet &other) const {
        return shape_ == other.shape_ && direction_ == other.direction_ && members_ == other.members_;
    }

   private:
    Shape shape_;
    Direction direction_ = Direction::Decreasing;
    std::vector<std::size_t> members_;
    std::vector<bool> mask_;
};

MonotoneSet closure(const std::vector<IndexTuple> &generators, const Shape &shape, Direction direction);

enum class Extreme { Min, Max };

/// Minimal or maximal elements of `s`, in lexicographic order.
std::vector<IndexTuple> extremal(const MonotoneSet &s, Extreme kind);

/// Ordered tuple of subsets of [m], each stored as a bit mask.
class SubsetTuple {
   public:
    SubsetTuple() = default;
    SubsetTuple(std::size_t m, std::vector<std::uint64_t> masks);

    static SubsetTuple from_lists(std::size_t m, const std::vector<std::vector<std::size_t>> &subsets);
    /// Digit-string shorthand for m <= 10, e.g. {"013", "124"}.
    static SubsetTuple from_digits(std::size_t m, const std::vector<std::string> &subsets);

    std::size_t m() const { return m_; }
    std::size_t size() const { return masks_.size(); }
    std::uint64_t mask(std::size_t i) const { return masks_[i]; }
    const std::vector<std::uint64_t> &masks() const { return masks_; }
    bool contains(std::size_t i, std::size_t element) const { return (masks_[i] >> element) & 1; }
    std::vector<std::size_t> elements(std::size_t i) const;
    std::vector<std::vector<std::size_t>> lists() const;

    /// The u x m indicator matrix.
    BitMatrix indicator() const;

    /// Sorts the subsets lexicographically by their sorted element lists.
    SubsetTuple sorted_lexicographic() const;
    bool has_duplicates() const;

    bool operator==(const SubsetTuple &other) const = default;

   private:
    std::size_t m_ = 0;
    std::vector<std::uint64_t> masks_;
};

std::uint64_t subset_mask(const IndexTuple &binary_tuple);
IndexTuple mask_tuple(std::uint64_t mask, std::size_t m);

/// The three-way split (down closure, middle layer, up closure) of a box.
struct ColumnPartition {
    MonotoneSet lower;
    std::vector<std::size_t> middle;
    MonotoneSet upper;
};

/// Thrown when the two closures overlap.
struct ClosureOverlapError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

ColumnPartition complement_partition(
    const std::vector<IndexTuple> &lower_generators,
    const std::vector<IndexTuple> &upper_generators,
    const Shape &shape);

}  // namespace isc

#endif
