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

#ifndef MAXARC_BITMATRIX_HPP
#define MAXARC_BITMATRIX_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace maxarc {

/// Dense matrix over GF(2), row-major, each row packed into 64-bit words.
/// Bit c of a row lives in word c / 64 at position c % 64; bits past `cols`
/// are always zero.
class BitMatrix {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t kWordBits = 64;

    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i);
        return m;
    }

    static std::size_t words_for(std::size_t cols) { return (cols + kWordBits - 1) / kWordBits; }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t stride() const { return stride_; }

    bool get(std::size_t r, std::size_t c) const { return (data_[r * stride_ + c / kWordBits] >> (c % kWordBits)) & 1u; }

    void set(std::size_t r, std::size_t c, bool value = true) {
        Word& w = data_[r * stride_ + c / kWordBits];
        const Word bit = Word{1} << (c % kWordBits);
        w = value ? (w | bit) : (w & ~bit);
    }

    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + c / kWordBits] ^= Word{1} << (c % kWordBits); }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

    void xor_row_into(std::size_t dst, std::size_t src) {
        Word* d = data_.data() + dst * stride_;
        const Word* s = data_.data() + src * stride_;
        for (std::size_t i = 0; i < stride_; ++i) d[i] ^= s[i];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * stride_),
                         data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * stride_),
                         data_.begin() + static_cast<std::ptrdiff_t>(b * stride_));
    }

    /// Appends a row given as packed words; the span must hold stride() words.
    void append_row(std::span<const Word> words) {
        if (words.size() != stride_) throw std::invalid_argument("row width mismatch");
        if (stride_ != 0 && cols_ % kWordBits != 0 && (words.back() >> (cols_ % kWordBits)) != 0) {
            throw std::invalid_argument("row has bits beyond the column count");
        }
        data_.insert(data_.end(), words.begin(), words.end());
        ++rows_;
    }

    void append_zero_row() {
        data_.resize(data_.size() + stride_, 0);
        ++rows_;
    }

    bool row_is_zero(std::size_t r) const {
        auto w = row(r);
        return std::all_of(w.begin(), w.end(), [](Word x) { return x == 0; });
    }

    std::size_t row_weight(std::size_t r) const {
        std::size_t n = 0;
        for (Word x : row(r)) n += static_cast<std::size_t>(std::popcount(x));
        return n;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) t.set(c, r);
            }
        }
        return t;
    }

    /// Keeps rows [0, n).
    void truncate_rows(std::size_t n) {
        rows_ = std::min(rows_, n);
        data_.resize(rows_ * stride_);
    }

    friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

    /// Text form: "rows cols" then one hex string per row. Hex digit j covers
    /// columns 4j..4j+3 with its least significant bit on column 4j.
    std::string to_text() const {
        static constexpr char kHex[] = "0123456789abcdef";
        std::string out = std::to_string(rows_) + " " + std::to_string(cols_) + "\n";
        const std::size_t digits = (cols_ + 3) / 4;
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t j = 0; j < digits; ++j) {
                unsigned nibble = 0;
                for (std::size_t b = 0; b < 4 && 4 * j + b < cols_; ++b) {
                    if (get(r, 4 * j + b)) nibble |= 1u << b;
                }
                out.push_back(kHex[nibble]);
            }
            out.push_back('\n');
        }
        return out;
    }

    static BitMatrix from_text(std::string_view text) {
        std::istringstream in{std::string(text)};
        long long rows = -1;
        long long cols = -1;
        if (!(in >> rows >> cols) || rows < 0 || cols < 0) {
            throw std::invalid_argument("matrix header must be \"rows cols\"");
        }
        BitMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
        const std::size_t digits = (m.cols_ + 3) / 4;
        for (std::size_t r = 0; r < m.rows_; ++r) {
            std::string line;
            if (digits != 0 && !(in >> line)) throw std::invalid_argument("missing row " + std::to_string(r));
            if (line.size() != digits) {
                throw std::invalid_argument("row " + std::to_string(r) + " has " + std::to_string(line.size()) +
                                            " hex digits, expected " + std::to_string(digits));
            }
            for (std::size_t j = 0; j < digits; ++j) {
                const char ch = line[j];
                unsigned nibble = 0;
                if (ch >= '0' && ch <= '9') {
                    nibble = static_cast<unsigned>(ch - '0');
                } else if (ch >= 'a' && ch <= 'f') {
                    nibble = static_cast<unsigned>(ch - 'a' + 10);
                } else if (ch >= 'A' && ch <= 'F') {
                    nibble = static_cast<unsigned>(ch - 'A' + 10);
                } else {
                    throw std::invalid_argument(std::string("invalid hex digit '") + ch + "'");
                }
                for (std::size_t b = 0; b < 4; ++b) {
                    if (!(nibble >> b & 1u)) continue;
                    if (4 * j + b >= m.cols_) throw std::invalid_argument("padding bits must be zero");
                    m.set(r, 4 * j + b);
                }
            }
        }
        return m;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t stride_ = 0;
    std::vector<Word> data_;
};

struct RowEchelon {
    BitMatrix reduced;                 // same shape as the input; zero rows at the bottom
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row, strictly increasing
};

/// Reduced row-echelon form by column-wise pivoting.
inline RowEchelon rref_rank(BitMatrix m) {
    RowEchelon out;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.rows() && !m.get(pivot, col)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(rank, pivot);
        const std::size_t word = col / BitMatrix::kWordBits;
        const BitMatrix::Word bit = BitMatrix::Word{1} << (col % BitMatrix::kWordBits);
        const auto prow = m.row(rank);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == rank) continue;
            auto target = m.row(r);
            if (!(target[word] & bit)) continue;
            // Columns left of `word` in the pivot row can be nonzero only in
            // non-pivot columns, so the whole row must be combined.
            for (std::size_t i = 0; i < target.size(); ++i) target[i] ^= prow[i];
        }
        out.pivots.push_back(col);
        ++rank;
    }
    out.rank = rank;
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const BitMatrix& m) { return rref_rank(m).rank; }

/// The nonzero rows of the RREF: a canonical basis of the row space.
inline BitMatrix row_basis(const BitMatrix& m) {
    auto e = rref_rank(m);
    e.reduced.truncate_rows(e.rank);
    return std::move(e.reduced);
}

/// Basis of {v : M v^T = 0}, one vector per free column.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    const auto e = rref_rank(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots) is_pivot[p] = true;
    BitMatrix k(0, m.cols());
    std::vector<BitMatrix::Word> v(BitMatrix::words_for(m.cols()));
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::fill(v.begin(), v.end(), 0);
        v[f / BitMatrix::kWordBits] |= BitMatrix::Word{1} << (f % BitMatrix::kWordBits);
        for (std::size_t i = 0; i < e.rank; ++i) {
            if (e.reduced.get(i, f)) {
                const auto p = e.pivots[i];
                v[p / BitMatrix::kWordBits] |= BitMatrix::Word{1} << (p % BitMatrix::kWordBits);
            }
        }
        k.append_row(v);
    }
    return k;
}

inline bool row_space_equal(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) {
        throw std::invalid_argument("row_space_equal: column counts differ (" + std::to_string(a.cols()) + " vs " +
                                    std::to_string(b.cols()) + ")");
    }
    return row_basis(a) == row_basis(b);
}

/// A * B^T: entry (i, j) is the inner product of row i of A and row j of B.
inline BitMatrix multiply_transpose(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.cols()) throw std::invalid_argument("multiply_transpose: column counts differ");
    BitMatrix out(a.rows(), b.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        const auto ra = a.row(i);
        for (std::size_t j = 0; j < b.rows(); ++j) {
            const auto rb = b.row(j);
            int parity = 0;
            for (std::size_t w = 0; w < ra.size(); ++w) parity ^= std::popcount(ra[w] & rb[w]) & 1;
            if (parity) out.set(i, j);
        }
    }
    return out;
}

inline bool is_zero(const BitMatrix& m) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!m.row_is_zero(r)) return false;
    }
    return true;
}

}  // namespace maxarc

#endif  // MAXARC_BITMATRIX_HPP
