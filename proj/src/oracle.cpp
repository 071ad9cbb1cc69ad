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

#include "isc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <thread>
#include <vector>

namespace isc {

const char *status_name(OracleResult::Status s) {
    switch (s) {
        case OracleResult::Status::Exact:
            return "exact";
        case OracleResult::Status::Refused:
            return "refused";
        case OracleResult::Status::Empty:
            return "empty";
    }
    return "?";
}

namespace {

/// Reduced echelon rows that can be extended one vector at a time.
class Incremental {
   public:
    explicit Incremental(std::size_t cols) : cols_(cols), stride_(words_for_bits(cols)) {}

    /// Adds `v` if it is independent of the rows so far; returns whether it did.
    bool insert(std::span<const Word> v) {
        std::vector<Word> w(v.begin(), v.end());
        for (std::size_t i = 0; i < pivots_.size(); i++) {
            std::size_t p = pivots_[i];
            if ((w[p / WORD_BITS] >> (p % WORD_BITS)) & 1) {
                for (std::size_t k = 0; k < stride_; k++) {
                    w[k] ^= rows_[i * stride_ + k];
                }
            }
        }
        for (std::size_t k = 0; k < stride_; k++) {
            if (w[k]) {
                pivots_.push_back(k * WORD_BITS + static_cast<std::size_t>(std::countr_zero(w[k])));
                rows_.insert(rows_.end(), w.begin(), w.end());
                return true;
            }
        }
        return false;
    }

    std::size_t size() const { return pivots_.size(); }

   private:
    std::size_t cols_;
    std::size_t stride_;
    std::vector<std::size_t> pivots_;
    std::vector<Word> rows_;
};

struct WalkResult {
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::uint64_t visited = 0;
};

/// Walks every mask whose top `prefix_bits` bits equal `prefix`, skipping the
/// all-zero mask. Basis rows below `excluded_dim` span the excluded space.
WalkResult gray_walk(
    const std::vector<Word> &basis,
    std::size_t stride,
    std::size_t dim,
    std::size_t excluded_dim,
    std::size_t prefix_bits,
    std::uint64_t prefix) {
    WalkResult out;
    std::size_t low = dim - prefix_bits;
    std::vector<Word> cur(stride, 0);
    std::uint64_t mask = prefix << low;
    for (std::size_t j = 0; j < prefix_bits; j++) {
        if ((prefix >> j) & 1) {
            for (std::size_t k = 0; k < stride; k++) {
                cur[k] ^= basis[(low + j) * stride + k];
            }
        }
    }
    auto visit = [&]() {
        out.visited++;
        if ((mask >> excluded_dim) == 0) {
            return;
        }
        std::size_t w = 0;
        for (auto x : cur) {
            w += static_cast<std::size_t>(std::popcount(x));
        }
        out.best = std::min(out.best, w);
    };
    if (prefix != 0) {
        visit();
    }
    std::uint64_t steps = std::uint64_t{1} << low;
    for (std::uint64_t i = 1; i < steps; i++) {
        auto bit = static_cast<std::size_t>(std::countr_zero(i));
        mask ^= std::uint64_t{1} << bit;
        const Word *row = basis.data() + bit * stride;
        for (std::size_t k = 0; k < stride; k++) {
            cur[k] ^= row[k];
        }
        visit();
    }
    return out;
}

OracleResult gray_search(const CosetProblem &p, const OracleOptions &options, std::size_t excluded_dim, std::size_t dim) {
    OracleResult out;
    out.dimension = dim;
    std::size_t stride = words_for_bits(p.n);

    // Basis layout: an echelon basis of the excluded space, then a complement.
    Incremental ech(p.n);
    std::vector<Word> basis;
    for (std::size_t r = 0; r < p.excluded.rows(); r++) {
        if (ech.insert(p.excluded.row(r))) {
            auto row = p.excluded.row(r);
            basis.insert(basis.end(), row.begin(), row.end());
        }
    }
    for (std::size_t r = 0; r < p.containing.rows() && ech.size() < dim; r++) {
        if (ech.insert(p.containing.row(r))) {
            auto row = p.containing.row(r);
            basis.insert(basis.end(), row.begin(), row.end());
        }
    }

    std::size_t threads = std::max<std::size_t>(1, options.threads);
    std::size_t prefix_bits = 0;
    while ((std::size_t{1} << (prefix_bits + 1)) <= threads && prefix_bits < dim) {
        prefix_bits++;
    }
    std::uint64_t prefixes = std::uint64_t{1} << prefix_bits;
    std::vector<WalkResult> partial(threads);
    auto work = [&](std::size_t worker) {
        for (std::uint64_t pre = worker; pre < prefixes; pre += threads) {
            auto r = gray_walk(basis, stride, dim, excluded_dim, prefix_bits, pre);
            partial[worker].best = std::min(partial[worker].best, r.best);
            partial[worker].visited += r.visited;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; t++) {
            pool.emplace_back(work, t);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (auto &r : partial) {
        best = std::min(best, r.best);
        out.visited += r.visited;
    }
    out.status = OracleResult::Status::Exact;
    out.weight = best;
    return out;
}

/// Returns nullopt when the budget runs out before a hit.
std::optional<std::size_t> weight_search(const CosetProblem &p, std::uint64_t budget, std::uint64_t &visited) {
    BitMatrix checks = kernel_basis(p.containing);
    // Column j of the parity checks, packed.
    BitMatrix cols = checks.transpose();
    std::size_t cstride = cols.stride();
    RowEchelon excluded(p.excluded);
    std::vector<Word> syn(cstride);
    for (std::size_t w = 1; w <= p.n; w++) {
        std::vector<std::size_t> idx(w);
        for (std::size_t i = 0; i < w; i++) {
            idx[i] = i;
        }
        while (true) {
            if (visited >= budget) {
                return std::nullopt;
            }
            visited++;
            std::fill(syn.begin(), syn.end(), 0);
            for (auto j : idx) {
                auto c = cols.row(j);
                for (std::size_t k = 0; k < cstride; k++) {
                    syn[k] ^= c[k];
                }
            }
            if (std::all_of(syn.begin(), syn.end(), [](Word x) { return x == 0; })) {
                BitVector v(p.n);
                for (auto j : idx) {
                    v.set(j, true);
                }
                if (!excluded.contains(v)) {
                    return w;
                }
            }
            std::size_t i = w;
            while (i > 0 && idx[i - 1] == p.n - w + i - 1) {
                i--;
            }
            if (i == 0) {
                break;
            }
            idx[i - 1]++;
            for (std::size_t j = i; j < w; j++) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

OracleResult coset_min_weight(const CosetProblem &p, const OracleOptions &options) {
    if (p.containing.cols() != p.n || p.excluded.cols() != p.n) {
        throw DimensionError("coset_min_weight: matrices do not have n columns");
    }
    std::size_t dim = rank(p.containing);
    std::size_t excluded_dim = rank(p.excluded);
    if (rank(vstack({p.containing, p.excluded})) != dim) {
        throw InconsistentSpacesError("coset_min_weight: excluded space is not inside the containing space");
    }
    OracleResult out;
    out.dimension = dim;
    if (dim == excluded_dim) {
        out.status = OracleResult::Status::Empty;
        out.reason = "containing and excluded spaces coincide";
        return out;
    }

    bool try_weight = options.strategy != OracleStrategy::GrayCode;
    if (try_weight) {
        std::uint64_t budget = options.weight_budget;
        if (options.strategy == OracleStrategy::Auto && dim < 63) {
            budget = std::min(budget, std::uint64_t{1} << dim);
        }
        auto w = weight_search(p, budget, out.visited);
        if (w) {
            out.status = OracleResult::Status::Exact;
            out.weight = w;
            return out;
        }
        if (options.strategy == OracleStrategy::WeightOrdered) {
            out.status = OracleResult::Status::Refused;
            out.reason = "weight-ordered search budget of " + std::to_string(budget) + " candidates exhausted";
            return out;
        }
    }
    if (dim > options.dim_cap) {
        out.status = OracleResult::Status::Refused;
        out.reason = "dimension " + std::to_string(dim) + " exceeds cap " + std::to_string(options.dim_cap);
        return out;
    }
    if (dim >= 63) {
        out.status = OracleResult::Status::Refused;
        out.reason = "dimension " + std::to_string(dim) + " is too large to enumerate";
        return out;
    }
    std::uint64_t spent = out.visited;
    out = gray_search(p, options, excluded_dim, dim);
    if (try_weight) {
        out.reason = "weight-ordered search examined " + std::to_string(spent) + " candidates first";
    }
    return out;
}

OracleDistances css_distances_bruteforce(const BitMatrix &hx, const BitMatrix &hz, const OracleOptions &options) {
    if (hx.cols() != hz.cols()) {
        throw DimensionError("css_distances_bruteforce: hx and hz have different column counts");
    }
    if (!mat_mul(hx, hz.transpose()).is_zero()) {
        throw std::invalid_argument("css_distances_bruteforce: hx · hzᵀ != 0");
    }
    std::size_t n = hx.cols();
    OracleDistances out;
    out.x = coset_min_weight(CosetProblem{n, kernel_basis(hz), hx}, options);
    out.z = coset_min_weight(CosetProblem{n, kernel_basis(hx), hz}, options);
    return out;
}

}  // namespace isc
