/*
   Copyright 2026 The maxarc Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef MAXARC_LOW_WEIGHT_HPP
#define MAXARC_LOW_WEIGHT_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "maxarc/bitmatrix.hpp"

namespace maxarc {

namespace detail {

// Columns of the row-reduced H, at most 64 rows: one word per column.
struct NarrowColumns {
    std::vector<std::uint64_t> cols;
    std::size_t size() const { return cols.size(); }
    std::uint64_t at(std::size_t i) const { return cols[i]; }
    static std::uint64_t zero() { return 0; }
    static std::uint64_t sum(std::uint64_t a, std::uint64_t b) { return a ^ b; }
};

struct WideKey {
    std::vector<std::uint64_t> words;
    friend bool operator==(const WideKey&, const WideKey&) = default;
};

struct WideKeyHash {
    std::size_t operator()(const WideKey& k) const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (auto w : k.words) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return static_cast<std::size_t>(h);
    }
};

struct WideColumns {
    std::vector<WideKey> cols;
    std::size_t width = 0;
    std::size_t size() const { return cols.size(); }
    const WideKey& at(std::size_t i) const { return cols[i]; }
    WideKey zero() const { return WideKey{std::vector<std::uint64_t>(width, 0)}; }
    static WideKey sum(const WideKey& a, const WideKey& b) {
        WideKey s = a;
        for (std::size_t i = 0; i < s.words.size(); ++i) s.words[i] ^= b.words[i];
        return s;
    }
};

// Set of column sums: a dense bitmap for narrow keys of small rank, hashing otherwise.
template <class Key, class Hash>
class SumSet {
public:
    explicit SumSet(std::size_t rank_bits) {
        if constexpr (std::is_same_v<Key, std::uint64_t>) {
            if (rank_bits <= 26) dense_.assign(std::size_t{1} << rank_bits, false);
        }
    }
    /// Inserts; returns false when the key was already present.
    bool insert(const Key& k) {
        if constexpr (std::is_same_v<Key, std::uint64_t>) {
            if (!dense_.empty()) {
                if (dense_[k]) return false;
                dense_[k] = true;
                return true;
            }
        }
        return hashed_.insert(k).second;
    }
    bool contains(const Key& k) const {
        if constexpr (std::is_same_v<Key, std::uint64_t>) {
            if (!dense_.empty()) return dense_[k];
        }
        return hashed_.count(k) != 0;
    }

private:
    std::vector<bool> dense_;
    std::unordered_set<Key, Hash> hashed_;
};

template <class Columns, class Key, class Hash>
std::optional<std::size_t> search_dependencies(const Columns& c, std::size_t rank_bits, std::size_t wmax) {
    const std::size_t n = c.size();

    // w = 1, 2: zero or repeated columns.
    {
        SumSet<Key, Hash> seen(rank_bits);
        bool repeated = false;
        for (std::size_t i = 0; i < n; ++i) {
            if (c.at(i) == c.zero()) return 1;
            repeated = repeated || !seen.insert(c.at(i));
        }
        if (repeated && wmax >= 2) return 2;
        if (wmax < 3) return std::nullopt;

        // w = 3: some pair sums to a third column. Columns are now distinct
        // and nonzero, so the third one is automatically a different index.
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (seen.contains(Hash::sum(c.at(i), c.at(j)))) return 3;
            }
        }
    }
    if (wmax < 4) return std::nullopt;

    // w = 4: two distinct pairs with equal sums. Sharing an index would force
    // two equal columns, already excluded.
    SumSet<Key, Hash> pairs(rank_bits);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!pairs.insert(Hash::sum(c.at(i), c.at(j)))) return 4;
        }
    }
    if (wmax < 5) return std::nullopt;

    // w = 5: a triple sum equal to a pair sum; any overlap would give a
    // dependency of weight <= 3.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ij = Hash::sum(c.at(i), c.at(j));
            for (std::size_t l = j + 1; l < n; ++l) {
                if (pairs.contains(Hash::sum(ij, c.at(l)))) return 5;
            }
        }
    }
    if (wmax < 6) return std::nullopt;

    // w = 6: two distinct triples with equal sums; overlaps would give
    // dependencies of weight 2 or 4.
    SumSet<Key, Hash> triples(rank_bits);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto ij = Hash::sum(c.at(i), c.at(j));
            for (std::size_t l = j + 1; l < n; ++l) {
                if (!triples.insert(Hash::sum(ij, c.at(l)))) return 6;
            }
        }
    }
    return std::nullopt;
}

struct NarrowHash {
    std::size_t operator()(std::uint64_t k) const { return std::hash<std::uint64_t>{}(k); }
    static std::uint64_t sum(std::uint64_t a, std::uint64_t b) { return a ^ b; }
};

struct WideHash : WideKeyHash {
    static WideKey sum(const WideKey& a, const WideKey& b) { return WideColumns::sum(a, b); }
};

}  // namespace detail

/// Smallest number w <= wmax of columns of H that sum to zero, i.e. the
/// minimum distance of the code with parity-check matrix H when it is at
/// most wmax. nullopt means no such dependency of weight <= wmax exists.
///
/// w <= 2 by a distinctness scan, w = 3, 4 through pair sums, w = 5, 6
/// through triple sums met against pair and triple sums.
inline std::optional<std::size_t> low_weight_search(const BitMatrix& h, std::size_t wmax) {
    if (wmax < 1 || wmax > 6) throw std::invalid_argument("low_weight_search supports 1 <= wmax <= 6");
    // Column dependencies are invariant under row operations, so work on the
    // rank-many nonzero rows of the RREF.
    const auto e = rref_rank(h);
    const std::size_t r = e.rank;
    const std::size_t n = h.cols();
    if (r <= 64) {
        detail::NarrowColumns cols;
        cols.cols.assign(n, 0);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (e.reduced.get(i, j)) cols.cols[j] |= std::uint64_t{1} << i;
            }
        }
        return detail::search_dependencies<detail::NarrowColumns, std::uint64_t, detail::NarrowHash>(cols, r, wmax);
    }
    detail::WideColumns cols;
    cols.width = BitMatrix::words_for(r);
    cols.cols.assign(n, detail::WideKey{std::vector<std::uint64_t>(cols.width, 0)});
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (e.reduced.get(i, j)) cols.cols[j].words[i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    return detail::search_dependencies<detail::WideColumns, detail::WideKey, detail::WideHash>(cols, r, wmax);
}

}  // namespace maxarc

#endif  // MAXARC_LOW_WEIGHT_HPP
