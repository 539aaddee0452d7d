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

#ifndef MAXARC_CODE_HPP
#define MAXARC_CODE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "maxarc/bigint.hpp"
#include "maxarc/bitmatrix.hpp"
#include "maxarc/gf2m.hpp"

namespace maxarc {

using FieldRow = std::vector<FieldElement>;
using FieldGrid = std::vector<FieldRow>;

/// Thrown when an exhaustive enumeration would exceed its message budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
    std::uint64_t budget = std::uint64_t{1} << 24;  // max number of messages
    unsigned threads = 1;
};

// ---------------------------------------------------------------------------
// Linear algebra over GF(2^m)

struct FieldEchelon {
    FieldGrid reduced;  // nonzero rows only
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return reduced.size(); }
};

inline FieldEchelon rref_q(const Field& f, FieldGrid rows, std::size_t ncols) {
    std::size_t rank = 0;
    FieldEchelon out;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const FieldElement scale = f.inv(rows[rank][col]);
        for (auto& x : rows[rank]) x = f.mul(x, scale);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            const FieldElement factor = rows[r][col];
            for (std::size_t c = 0; c < ncols; ++c) rows[r][c] = f.add(rows[r][c], f.mul(factor, rows[rank][c]));
        }
        out.pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    out.reduced = std::move(rows);
    return out;
}

inline FieldGrid kernel_q(const Field& f, const FieldGrid& rows, std::size_t ncols) {
    const auto e = rref_q(f, rows, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    FieldGrid out;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        FieldRow v(ncols, f.zero());
        v[free] = f.one();
        // characteristic 2: x_p = -r_{i,free} = r_{i,free}
        for (std::size_t i = 0; i < e.rank(); ++i) v[e.pivots[i]] = e.reduced[i][free];
        out.push_back(std::move(v));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Codes

/// A linear code over GF(2^m) given by a generator matrix with independent rows.
class LinearCodeQ {
public:
    LinearCodeQ(Field field, FieldGrid generator, std::size_t length)
        : field_(std::move(field)), gen_(std::move(generator)), n_(length) {
        for (const auto& r : gen_) {
            if (r.size() != n_) throw std::invalid_argument("generator row length differs from code length");
            for (auto x : r) {
                if (!field_.contains(x)) throw std::invalid_argument("generator entry outside the field");
            }
        }
        if (rref_q(field_, gen_, n_).rank() != gen_.size()) {
            throw std::invalid_argument("generator rows are linearly dependent");
        }
    }

    /// A code spanned by arbitrary rows (reduced to a basis).
    static LinearCodeQ spanned_by(const Field& field, const FieldGrid& rows, std::size_t length) {
        return LinearCodeQ(field, rref_q(field, rows, length).reduced, length);
    }

    const Field& field() const { return field_; }
    std::size_t length() const { return n_; }
    std::size_t dimension() const { return gen_.size(); }
    const FieldGrid& generator() const { return gen_; }

private:
    Field field_;
    FieldGrid gen_;
    std::size_t n_;
};

inline bool same_code(const LinearCodeQ& a, const LinearCodeQ& b) {
    if (!(a.field() == b.field()) || a.length() != b.length()) return false;
    return rref_q(a.field(), a.generator(), a.length()).reduced == rref_q(b.field(), b.generator(), b.length()).reduced;
}

/// A binary linear code; the generator is kept in reduced row-echelon form.
class BinaryCode {
public:
    BinaryCode() = default;
    explicit BinaryCode(const BitMatrix& spanning) : gen_(row_basis(spanning)) {}

    std::size_t length() const { return gen_.cols(); }
    std::size_t dimension() const { return gen_.rows(); }
    const BitMatrix& generator() const { return gen_; }

    friend bool operator==(const BinaryCode&, const BinaryCode&) = default;

private:
    BitMatrix gen_;
};

/// Exact counts A_0..A_n.
struct WeightDistribution {
    std::size_t n = 0;
    std::vector<BigInt> counts;

    WeightDistribution() = default;
    explicit WeightDistribution(std::size_t length) : n(length), counts(length + 1, 0) {}

    /// Smallest nonzero weight, or nullopt for the zero code.
    std::optional<std::size_t> min_distance() const {
        for (std::size_t i = 1; i <= n; ++i) {
            if (counts[i] != 0) return i;
        }
        return std::nullopt;
    }

    BigInt total() const {
        BigInt t = 0;
        for (const auto& c : counts) t += c;
        return t;
    }

    std::size_t nonzero_weights() const {
        std::size_t k = 0;
        for (std::size_t i = 1; i <= n; ++i) k += counts[i] != 0;
        return k;
    }

    bool all_even() const {
        for (std::size_t i = 1; i <= n; i += 2) {
            if (counts[i] != 0) return false;
        }
        return true;
    }

    /// "1 + 29667z^224 + 3100z^232"
    std::string polynomial() const {
        std::string s;
        for (std::size_t i = 0; i <= n; ++i) {
            if (counts[i] == 0) continue;
            if (!s.empty()) s += " + ";
            if (i == 0) {
                s += counts[i].str();
            } else {
                if (counts[i] != 1) s += counts[i].str();
                s += "z^" + std::to_string(i);
            }
        }
        return s;
    }

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

// ---------------------------------------------------------------------------
// Code operations

inline BinaryCode dual(const BinaryCode& c) { return BinaryCode(kernel_basis(c.generator())); }

inline LinearCodeQ dual(const LinearCodeQ& c) {
    return LinearCodeQ(c.field(), kernel_q(c.field(), c.generator(), c.length()), c.length());
}

/// Appends an overall parity coordinate.
inline BinaryCode extend(const BinaryCode& c) {
    const auto& g = c.generator();
    BitMatrix e(g.rows(), g.cols() + 1);
    for (std::size_t r = 0; r < g.rows(); ++r) {
        for (std::size_t col = 0; col < g.cols(); ++col) {
            if (g.get(r, col)) e.set(r, col);
        }
        if (g.row_weight(r) % 2 == 1) e.set(r, g.cols());
    }
    return BinaryCode(e);
}

struct AugmentResult {
    LinearCodeQ code;
    bool degenerate = false;  // the all-ones word was already a codeword
};

/// Adds the all-ones word to the generator.
inline AugmentResult augment(const LinearCodeQ& c) {
    FieldGrid rows = c.generator();
    rows.emplace_back(c.length(), c.field().one());
    if (rref_q(c.field(), rows, c.length()).rank() == c.dimension()) return {c, true};
    return {LinearCodeQ(c.field(), std::move(rows), c.length()), false};
}

/// Subfield code: every generator entry replaced by its coordinate column
/// with respect to `basis`, then row-reduced.
inline BinaryCode subfield_expand(const LinearCodeQ& c, const FieldBasis& basis) {
    const int m = c.field().degree();
    if (basis.size() != m) throw std::invalid_argument("basis size does not match the field degree");
    BitMatrix g(c.dimension() * static_cast<std::size_t>(m), c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        for (std::size_t col = 0; col < c.length(); ++col) {
            const std::uint32_t coords = basis.coordinates(c.generator()[i][col]);
            for (int j = 0; j < m; ++j) {
                if (coords >> j & 1u) g.set(i * m + static_cast<std::size_t>(j), col);
            }
        }
    }
    return BinaryCode(g);
}

/// Subfield code through the trace: rows Tr(w^j * g_i) for every generator
/// row g_i and every power w^j, 0 <= j < m.
inline BinaryCode trace_subfield(const LinearCodeQ& c) {
    const Field& f = c.field();
    const int m = f.degree();
    BitMatrix g(c.dimension() * static_cast<std::size_t>(m), c.length());
    for (std::size_t i = 0; i < c.dimension(); ++i) {
        for (int j = 0; j < m; ++j) {
            const FieldElement a{1u << j};
            for (std::size_t col = 0; col < c.length(); ++col) {
                if (f.trace(f.mul(a, c.generator()[i][col]))) g.set(i * m + static_cast<std::size_t>(j), col);
            }
        }
    }
    return BinaryCode(g);
}

namespace detail {

inline void check_budget(std::uint64_t field_size, std::size_t k, std::uint64_t budget) {
    // field_size^k <= budget, evaluated without overflow
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > budget / field_size) {
            throw BudgetExceeded("enumeration of " + std::to_string(field_size) + "^" + std::to_string(k) +
                                 " messages exceeds the budget of " + std::to_string(budget));
        }
        total *= field_size;
    }
}

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Runs fn(begin, end, counts) over [0, total) split across workers; each worker
// owns a count array and the arrays are summed afterwards.
template <class Fn>
std::vector<std::uint64_t> parallel_counts(std::uint64_t total, std::size_t n, unsigned threads, Fn fn) {
    const unsigned workers = static_cast<unsigned>(std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total)));
    std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
    if (workers == 1) {
        fn(std::uint64_t{0}, total, partial[0]);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (total + workers - 1) / workers;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(total, w * chunk);
            const std::uint64_t end = std::min(total, begin + chunk);
            pool.emplace_back([&, w, begin, end] { fn(begin, end, partial[w]); });
        }
        for (auto& t : pool) t.join();
    }
    for (unsigned w = 1; w < workers; ++w) {
        for (std::size_t i = 0; i <= n; ++i) partial[0][i] += partial[w][i];
    }
    return partial[0];
}

}  // namespace detail

/// Exact weight distribution by Gray-code enumeration of all 2^k codewords.
inline WeightDistribution weight_distribution(const BinaryCode& c, const EnumerationOptions& opts = {}) {
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    detail::check_budget(2, k, opts.budget);
    const BitMatrix& g = c.generator();
    const std::size_t stride = g.stride();
    const std::uint64_t total = std::uint64_t{1} << k;

    auto counts = detail::parallel_counts(total, n, opts.threads, [&](std::uint64_t begin, std::uint64_t end,
                                                                       std::vector<std::uint64_t>& out) {
        if (begin >= end) return;
        std::vector<BitMatrix::Word> word(stride, 0);
        auto weight = [&] {
            std::size_t w = 0;
            for (auto x : word) w += static_cast<std::size_t>(std::popcount(x));
            return w;
        };
        const std::uint64_t gray = begin ^ (begin >> 1);
        for (std::size_t r = 0; r < k; ++r) {
            if (gray >> r & 1u) {
                const auto row = g.row(r);
                for (std::size_t i = 0; i < stride; ++i) word[i] ^= row[i];
            }
        }
        ++out[weight()];
        for (std::uint64_t idx = begin + 1; idx < end; ++idx) {
            const auto row = g.row(static_cast<std::size_t>(std::countr_zero(idx)));
            for (std::size_t i = 0; i < stride; ++i) word[i] ^= row[i];
            ++out[weight()];
        }
    });

    WeightDistribution wd(n);
    for (std::size_t i = 0; i <= n; ++i) wd.counts[i] = counts[i];
    return wd;
}

/// Exact weight distribution of a q-ary code. Only messages whose first
/// nonzero symbol is 1 are visited; each stands for q-1 codewords of equal weight.
inline WeightDistribution weight_distribution(const LinearCodeQ& c, const EnumerationOptions& opts = {}) {
    const Field& f = c.field();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    const std::uint64_t q = f.size();
    detail::check_budget(q, k, opts.budget);
    const auto& g = c.generator();

    WeightDistribution wd(n);
    wd.counts[0] = 1;
    for (std::size_t lead = 0; lead < k; ++lead) {
        const std::size_t free = k - 1 - lead;
        if (free == 0) {
            std::size_t w = 0;
            for (auto x : g[lead]) w += !x.is_zero();
            wd.counts[w] += q - 1;
            continue;
        }
        // Rows lead+1 .. k-2 are enumerated as an integer in base q; row k-1
        // is the innermost loop.
        const std::size_t outer_digits = free - 1;
        const std::uint64_t outer_total = detail::ipow(q, outer_digits);
        const FieldRow& last = g[k - 1];
        auto counts = detail::parallel_counts(outer_total, n, opts.threads, [&](std::uint64_t begin, std::uint64_t end,
                                                                                 std::vector<std::uint64_t>& out) {
            FieldRow partial(n);
            for (std::uint64_t idx = begin; idx < end; ++idx) {
                partial = g[lead];
                std::uint64_t rest = idx;
                for (std::size_t d = 0; d < outer_digits; ++d) {
                    const FieldElement a{static_cast<std::uint32_t>(rest % q)};
                    rest /= q;
                    if (a.is_zero()) continue;
                    const FieldRow& row = g[lead + 1 + d];
                    for (std::size_t j = 0; j < n; ++j) partial[j] = f.add(partial[j], f.mul(a, row[j]));
                }
                for (std::uint32_t av = 0; av < q; ++av) {
                    const FieldElement a{av};
                    std::size_t w = 0;
                    for (std::size_t j = 0; j < n; ++j) w += partial[j] != f.mul(a, last[j]);
                    ++out[w];
                }
            }
        });
        for (std::size_t i = 0; i <= n; ++i) wd.counts[i] += BigInt(counts[i]) * (q - 1);
    }
    return wd;
}

/// Codewords of C with every coordinate in GF(2), found by enumerating all
/// q^k messages. Returned as a code over the same field with 0/1 entries.
inline LinearCodeQ subfield_subcode(const LinearCodeQ& c, const EnumerationOptions& opts = {}) {
    const Field& f = c.field();
    const std::size_t k = c.dimension();
    const std::size_t n = c.length();
    if (static_cast<std::size_t>(f.degree()) * k > 24) {
        throw BudgetExceeded("subfield subcode enumeration needs m*k <= 24");
    }
    detail::check_budget(f.size(), k, opts.budget);
    const std::uint64_t total = detail::ipow(f.size(), k);
    BitMatrix binary(0, n);
    std::vector<BitMatrix::Word> packed(BitMatrix::words_for(n));
    FieldRow word(n);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::fill(word.begin(), word.end(), f.zero());
        std::uint64_t rest = idx;
        for (std::size_t i = 0; i < k; ++i) {
            const FieldElement a{static_cast<std::uint32_t>(rest % f.size())};
            rest /= f.size();
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) word[j] = f.add(word[j], f.mul(a, c.generator()[i][j]));
        }
        if (!std::all_of(word.begin(), word.end(), [](FieldElement x) { return x.bits <= 1; })) continue;
        std::fill(packed.begin(), packed.end(), 0);
        for (std::size_t j = 0; j < n; ++j) {
            if (word[j].bits) packed[j / 64] |= BitMatrix::Word{1} << (j % 64);
        }
        binary.append_row(packed);
    }
    const BitMatrix basis = row_basis(binary);
    FieldGrid rows(basis.rows(), FieldRow(n, f.zero()));
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        for (std::size_t j = 0; j < n; ++j) rows[r][j] = FieldElement{basis.get(r, j) ? 1u : 0u};
    }
    return LinearCodeQ(f, std::move(rows), n);
}

// ---------------------------------------------------------------------------
// MacWilliams transform

namespace detail {

// Evaluates S_j = sum_i A_i K_j(i; n, q) for j = 0, 1, ... using the
// three-term Krawtchouk recurrence
//   (j+1) K_{j+1}(x) = ((n-j)(q-1) + j - qx) K_j(x) - (q-1)(n-j+1) K_{j-1}(x).
class KrawtchoukSweep {
public:
    KrawtchoukSweep(const WeightDistribution& w, std::uint64_t q) : n_(w.n), q_(q) {
        for (std::size_t i = 0; i <= w.n; ++i) {
            if (w.counts[i] != 0) {
                terms_.push_back({i, w.counts[i], BigInt(0), BigInt(1)});
            }
        }
    }

    /// Returns S_j for the next j, starting at j = 0.
    BigInt next() {
        BigInt s = 0;
        if (j_ == 0) {
            for (const auto& t : terms_) s += t.count;
        } else {
            const std::size_t jm = j_ - 1;  // advancing K_{jm} -> K_{j_}
            for (auto& t : terms_) {
                BigInt a = BigInt(n_ - jm) * (q_ - 1) + jm;
                a -= BigInt(q_) * t.x;
                BigInt next = a * t.cur;
                if (jm > 0) next -= BigInt(q_ - 1) * (n_ - jm + 1) * t.prev;
                next /= j_;
                t.prev = std::move(t.cur);
                t.cur = std::move(next);
                s += t.count * t.cur;
            }
        }
        ++j_;
        return s;
    }

    std::size_t position() const { return j_; }

private:
    struct Term {
        std::size_t x;
        BigInt count;
        BigInt prev;
        BigInt cur;
    };
    std::size_t n_;
    std::uint64_t q_;
    std::size_t j_ = 0;
    std::vector<Term> terms_;
};

inline BigInt normalize_dual_count(const BigInt& s, const BigInt& qk, std::size_t j) {
    if (s < 0 || s % qk != 0) {
        throw std::domain_error("MacWilliams transform produced a non-integral or negative count at weight " +
                                std::to_string(j) + "; the input is not a valid weight distribution");
    }
    return s / qk;
}

}  // namespace detail

/// A^perp_j = q^{-k} sum_i A_i K_j(i; n, q) for j = 0..jmax.
inline std::vector<BigInt> macwilliams_prefix(const WeightDistribution& w, std::uint64_t q, std::size_t k,
                                              std::size_t jmax) {
    jmax = std::min(jmax, w.n);
    const BigInt qk = big_pow(q, k);
    detail::KrawtchoukSweep sweep(w, q);
    std::vector<BigInt> out;
    for (std::size_t j = 0; j <= jmax; ++j) out.push_back(detail::normalize_dual_count(sweep.next(), qk, j));
    return out;
}

/// Weight distribution of the dual of an [n, k] code over GF(q) with distribution w.
inline WeightDistribution macwilliams_transform(const WeightDistribution& w, std::uint64_t q, std::size_t k) {
    WeightDistribution out(w.n);
    out.counts = macwilliams_prefix(w, q, k, w.n);
    return out;
}

/// Minimum distance of the dual code, evaluating dual counts only until the
/// first nonzero one. nullopt when the dual is the zero code.
inline std::optional<std::size_t> dual_min_distance(const WeightDistribution& w, std::uint64_t q, std::size_t k) {
    const BigInt qk = big_pow(q, k);
    detail::KrawtchoukSweep sweep(w, q);
    detail::normalize_dual_count(sweep.next(), qk, 0);
    for (std::size_t j = 1; j <= w.n; ++j) {
        if (detail::normalize_dual_count(sweep.next(), qk, j) != 0) return j;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sphere-packing bound

struct SpherePackingVerdict {
    bool holds_at_d = false;
    bool fails_at_d_plus_1 = false;
    bool distance_optimal = false;
    bool perfect = false;  // equality at d
};

/// Volume of the Hamming ball of radius floor((d-1)/2).
inline BigInt hamming_ball(std::size_t n, std::size_t d, std::uint64_t q) {
    BigInt sum = 0;
    const std::size_t t = (d - 1) / 2;
    for (std::size_t i = 0; i <= t && i <= n; ++i) sum += big_pow(q - 1, i) * binomial(n, i);
    return sum;
}

/// q^n >= q^k * ball(n, d) for an [n, k, d] code.
inline bool sphere_packing_holds(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q) {
    return big_pow(q, n - k) >= hamming_ball(n, d, q);
}

inline SpherePackingVerdict sphere_packing_verdict(std::size_t n, std::size_t k, std::size_t d, std::uint64_t q) {
    if (n == 0 || k == 0 || d == 0 || q < 2 || k > n) {
        throw std::invalid_argument("sphere_packing_verdict needs positive n, k, d, q >= 2 and k <= n");
    }
    SpherePackingVerdict v;
    v.holds_at_d = sphere_packing_holds(n, k, d, q);
    v.fails_at_d_plus_1 = !sphere_packing_holds(n, k, d + 1, q);
    v.distance_optimal = v.holds_at_d && v.fails_at_d_plus_1;
    v.perfect = big_pow(q, n - k) == hamming_ball(n, d, q);
    return v;
}

}  // namespace maxarc

#endif  // MAXARC_CODE_HPP
