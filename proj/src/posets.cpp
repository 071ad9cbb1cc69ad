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

#include "isc/posets.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace isc {

std::size_t shape_volume(const Shape &shape) {
    std::size_t v = 1;
    for (auto n : shape) {
        v *= n;
    }
    return v;
}

Shape binary_shape(std::size_t m) {
    return Shape(m, 2);
}

void check_tuple(const IndexTuple &t, const Shape &shape) {
    if (t.size() != shape.size()) {
        throw DimensionError("index tuple has " + std::to_string(t.size()) + " entries, shape has " +
                             std::to_string(shape.size()));
    }
    for (std::size_t i = 0; i < t.size(); i++) {
        if (t[i] >= shape[i]) {
            throw std::out_of_range("index tuple entry " + std::to_string(i) + " out of range");
        }
    }
}

std::size_t linearize(const IndexTuple &t, const Shape &shape) {
    check_tuple(t, shape);
    std::size_t index = 0;
    for (std::size_t i = 0; i < t.size(); i++) {
        index = index * shape[i] + t[i];
    }
    return index;
}

IndexTuple delinearize(std::size_t index, const Shape &shape) {
    IndexTuple t(shape.size());
    for (std::size_t i = shape.size(); i-- > 0;) {
        t[i] = index % shape[i];
        index /= shape[i];
    }
    return t;
}

bool tuple_le(const IndexTuple &x, const IndexTuple &y) {
    if (x.size() != y.size()) {
        throw DimensionError("tuple comparison: length mismatch");
    }
    for (std::size_t i = 0; i < x.size(); i++) {
        if (x[i] > y[i]) {
            return false;
        }
    }
    return true;
}

bool tuple_lt(const IndexTuple &x, const IndexTuple &y) {
    return tuple_le(x, y) && x != y;
}

std::size_t tuple_weight(const IndexTuple &t) {
    std::size_t w = 0;
    for (auto e : t) {
        w += e;
    }
    return w;
}

std::string tuple_str(const IndexTuple &t) {
    bool compact = std::all_of(t.begin(), t.end(), [](std::size_t e) { return e <= 9; });
    std::string out;
    if (compact) {
        for (auto e : t) {
            out += static_cast<char>('0' + e);
        }
        return out;
    }
    out = "(";
    for (std::size_t i = 0; i < t.size(); i++) {
        out += (i ? "," : "") + std::to_string(t[i]);
    }
    return out + ")";
}

IndexTuple tuple_from_str(std::string_view s) {
    IndexTuple t;
    for (char c : s) {
        if (c < '0' || c > '9') {
            throw std::invalid_argument("tuple_from_str: bad digit");
        }
        t.push_back(static_cast<std::size_t>(c - '0'));
    }
    return t;
}

const char *direction_name(Direction d) {
    return d == Direction::Increasing ? "increasing" : "decreasing";
}

MonotoneSet::MonotoneSet(Shape shape, Direction direction, std::vector<std::size_t> members)
    : shape_(std::move(shape)), direction_(direction), members_(std::move(members)) {
    std::size_t volume = shape_volume(shape_);
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    mask_.assign(volume, false);
    for (auto m : members_) {
        if (m >= volume) {
            throw std::out_of_range("MonotoneSet: member outside the box");
        }
        mask_[m] = true;
    }
    // Closedness only needs checking against immediate neighbours.
    for (auto m : members_) {
        IndexTuple t = delinearize(m, shape_);
        for (std::size_t i = 0; i < t.size(); i++) {
            IndexTuple n = t;
            if (direction_ == Direction::Decreasing) {
                if (t[i] == 0) {
                    continue;
                }
                n[i]--;
            } else {
                if (t[i] + 1 == shape_[i]) {
                    continue;
                }
                n[i]++;
            }
            if (!mask_[linearize(n, shape_)]) {
                throw std::invalid_argument(std::string("MonotoneSet: member set is not ") + direction_name(direction_));
            }
        }
    }
}

std::vector<IndexTuple> MonotoneSet::member_tuples() const {
    std::vector<IndexTuple> out;
    out.reserve(members_.size());
    for (auto m : members_) {
        out.push_back(delinearize(m, shape_));
    }
    return out;
}

MonotoneSet MonotoneSet::complement() const {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < mask_.size(); i++) {
        if (!mask_[i]) {
            rest.push_back(i);
        }
    }
    Direction flipped = direction_ == Direction::Decreasing ? Direction::Increasing : Direction::Decreasing;
    return MonotoneSet(shape_, flipped, std::move(rest));
}

MonotoneSet closure(const std::vector<IndexTuple> &generators, const Shape &shape, Direction direction) {
    for (auto &g : generators) {
        check_tuple(g, shape);
    }
    std::vector<std::size_t> members;
    std::size_t volume = shape_volume(shape);
    for (std::size_t i = 0; i < volume; i++) {
        IndexTuple x = delinearize(i, shape);
        for (auto &g : generators) {
            bool hit = direction == Direction::Decreasing ? tuple_le(x, g) : tuple_le(g, x);
            if (hit) {
                members.push_back(i);
                break;
            }
        }
    }
    return MonotoneSet(shape, direction, std::move(members));
}

std::vector<IndexTuple> extremal(const MonotoneSet &s, Extreme kind) {
    auto tuples = s.member_tuples();
    std::vector<IndexTuple> out;
    for (auto &x : tuples) {
        bool dominated = false;
        for (auto &y : tuples) {
            if (kind == Extreme::Min ? tuple_lt(y, x) : tuple_lt(x, y)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) {
            out.push_back(x);
        }
    }
    return out;
}

SubsetTuple::SubsetTuple(std::size_t m, std::vector<std::uint64_t> masks) : m_(m), masks_(std::move(masks)) {
    if (m_ > 63) {
        throw std::invalid_argument("SubsetTuple: ground set larger than 63");
    }
    for (auto mask : masks_) {
        if (mask >> m_) {
            throw std::out_of_range("SubsetTuple: element outside [m]");
        }
    }
}

SubsetTuple SubsetTuple::from_lists(std::size_t m, const std::vector<std::vector<std::size_t>> &subsets) {
    std::vector<std::uint64_t> masks;
    for (auto &s : subsets) {
        std::uint64_t mask = 0;
        for (auto e : s) {
            if (e >= m) {
                throw std::out_of_range("SubsetTuple: element " + std::to_string(e) + " outside [" +
                                        std::to_string(m) + "]");
            }
            mask |= std::uint64_t{1} << e;
        }
        masks.push_back(mask);
    }
    return SubsetTuple(m, std::move(masks));
}

SubsetTuple SubsetTuple::from_digits(std::size_t m, const std::vector<std::string> &subsets) {
    std::vector<std::vector<std::size_t>> lists;
    for (auto &s : subsets) {
        std::vector<std::size_t> l;
        for (char c : s) {
            if (c < '0' || c > '9') {
                throw std::invalid_argument("SubsetTuple: bad digit in '" + s + "'");
            }
            l.push_back(static_cast<std::size_t>(c - '0'));
        }
        lists.push_back(std::move(l));
    }
    return from_lists(m, lists);
}

std::vector<std::size_t> SubsetTuple::elements(std::size_t i) const {
    std::vector<std::size_t> out;
    for (std::size_t e = 0; e < m_; e++) {
        if (contains(i, e)) {
            out.push_back(e);
        }
    }
    return out;
}

std::vector<std::vector<std::size_t>> SubsetTuple::lists() const {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < masks_.size(); i++) {
        out.push_back(elements(i));
    }
    return out;
}

BitMatrix SubsetTuple::indicator() const {
    BitMatrix out(masks_.size(), m_);
    for (std::size_t i = 0; i < masks_.size(); i++) {
        for (std::size_t e = 0; e < m_; e++) {
            out.set(i, e, contains(i, e));
        }
    }
    return out;
}

SubsetTuple SubsetTuple::sorted_lexicographic() const {
    auto ls = lists();
    std::stable_sort(ls.begin(), ls.end());
    return from_lists(m_, ls);
}

bool SubsetTuple::has_duplicates() const {
    auto copy = masks_;
    std::sort(copy.begin(), copy.end());
    return std::adjacent_find(copy.begin(), copy.end()) != copy.end();
}

std::uint64_t subset_mask(const IndexTuple &binary_tuple) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < binary_tuple.size(); i++) {
        if (binary_tuple[i] > 1) {
            throw std::invalid_argument("subset_mask: tuple is not binary");
        }
        if (binary_tuple[i]) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

IndexTuple mask_tuple(std::uint64_t mask, std::size_t m) {
    IndexTuple t(m);
    for (std::size_t i = 0; i < m; i++) {
        t[i] = (mask >> i) & 1;
    }
    return t;
}

ColumnPartition complement_partition(
    const std::vector<IndexTuple> &lower_generators,
    const std::vector<IndexTuple> &upper_generators,
    const Shape &shape) {
    ColumnPartition out;
    out.lower = closure(lower_generators, shape, Direction::Decreasing);
    out.upper = closure(upper_generators, shape, Direction::Increasing);
    std::size_t volume = shape_volume(shape);
    for (std::size_t i = 0; i < volume; i++) {
        bool lo = out.lower.contains(i);
        bool hi = out.upper.contains(i);
        if (lo && hi) {
            throw ClosureOverlapError("closures overlap at " + tuple_str(delinearize(i, shape)));
        }
        if (!lo && !hi) {
            out.middle.push_back(i);
        }
    }
    return out;
}

}  // namespace isc
