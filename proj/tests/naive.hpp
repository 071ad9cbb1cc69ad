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

// Slow reference implementations on unpacked 0/1 matrices, written without
// any of the library's algorithms so tests can compare against them.

#ifndef ISC_TESTS_NAIVE_HPP
#define ISC_TESTS_NAIVE_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "isc/gf2.hpp"

namespace naive {

using Dense = std::vector<std::vector<int>>;

inline Dense from(const isc::BitMatrix &m) {
    Dense d(m.rows(), std::vector<int>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); r++) {
        for (std::size_t c = 0; c < m.cols(); c++) {
            d[r][c] = m.get(r, c);
        }
    }
    return d;
}

inline Dense mul(const Dense &a, const Dense &b, std::size_t inner, std::size_t cols) {
    Dense out(a.size(), std::vector<int>(cols, 0));
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < cols; j++) {
            int s = 0;
            for (std::size_t k = 0; k < inner; k++) {
                s ^= a[i][k] & b[k][j];
            }
            out[i][j] = s;
        }
    }
    return out;
}

/// Rank by counting distinct elements of the row span.
inline std::size_t span_rank(const Dense &a) {
    std::vector<std::uint64_t> rows;
    for (auto &r : a) {
        std::uint64_t v = 0;
        for (std::size_t c = 0; c < r.size(); c++) {
            v |= std::uint64_t(r[c]) << c;
        }
        rows.push_back(v);
    }
    std::vector<std::uint64_t> span{0};
    for (auto v : rows) {
        bool present = false;
        for (auto s : span) {
            present = present || s == v;
        }
        if (!present) {
            std::size_t size = span.size();
            for (std::size_t i = 0; i < size; i++) {
                span.push_back(span[i] ^ v);
            }
        }
    }
    std::size_t r = 0;
    while ((std::size_t{1} << r) < span.size()) {
        r++;
    }
    return r;
}

/// All vectors of the row span as bit masks (columns < 64).
inline std::vector<std::uint64_t> span_masks(const isc::BitMatrix &a) {
    std::vector<std::uint64_t> span{0};
    for (std::size_t r = 0; r < a.rows(); r++) {
        std::uint64_t v = 0;
        for (std::size_t c = 0; c < a.cols(); c++) {
            v |= std::uint64_t(a.get(r, c)) << c;
        }
        bool present = false;
        for (auto s : span) {
            present = present || s == v;
        }
        if (!present) {
            std::size_t size = span.size();
            for (std::size_t i = 0; i < size; i++) {
                span.push_back(span[i] ^ v);
            }
        }
    }
    return span;
}

/// min weight over span(containing) minus span(excluded), or -1 if empty.
inline int coset_min_weight(const isc::BitMatrix &containing, const isc::BitMatrix &excluded) {
    auto c = span_masks(containing);
    auto e = span_masks(excluded);
    std::vector<bool> in_e;
    int best = -1;
    for (auto v : c) {
        bool excluded_v = false;
        for (auto x : e) {
            excluded_v = excluded_v || x == v;
        }
        if (!excluded_v) {
            int w = __builtin_popcountll(v);
            if (best < 0 || w < best) {
                best = w;
            }
        }
    }
    return best;
}

inline isc::BitMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows, std::size_t cols, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    isc::BitMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; r++) {
        for (std::size_t c = 0; c < cols; c++) {
            m.set(r, c, bit(rng));
        }
    }
    return m;
}

}  // namespace naive

#endif
