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

#ifndef MAXARC_GF2M_HPP
#define MAXARC_GF2M_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxarc {

/// An element of GF(2^m) in the polynomial basis {1, w, ..., w^{m-1}}:
/// bit i of `bits` is the coefficient of w^i.
struct FieldElement {
    std::uint32_t bits = 0;

    constexpr FieldElement() = default;
    constexpr explicit FieldElement(std::uint32_t b) : bits(b) {}

    constexpr bool is_zero() const { return bits == 0; }

    friend constexpr bool operator==(FieldElement, FieldElement) = default;
    friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

enum class FieldOp { add, mul, inv, pow, sqrt };

namespace detail {

inline int poly_degree(std::uint32_t p) { return p == 0 ? -1 : 31 - std::countl_zero(p); }

// Remainder of a by b in GF(2)[x].
inline std::uint32_t poly_mod(std::uint32_t a, std::uint32_t b) {
    const int db = poly_degree(b);
    for (int da = poly_degree(a); da >= db; da = poly_degree(a)) {
        a ^= b << (da - db);
    }
    return a;
}

// Carry-less product reduced modulo a degree-m polynomial.
inline std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus, int m) {
    std::uint32_t r = 0;
    const std::uint32_t top = 1u << m;
    while (b != 0) {
        if (b & 1u) r ^= a;
        b >>= 1;
        a <<= 1;
        if (a & top) a ^= modulus;
    }
    return r;
}

inline bool poly_irreducible(std::uint32_t p) {
    const int d = poly_degree(p);
    if (d < 1) return false;
    for (int k = 1; 2 * k <= d; ++k) {
        for (std::uint32_t f = 1u << k; f < (2u << k); ++f) {
            if (poly_mod(p, f) == 0) return false;
        }
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace detail

/// GF(2^m) for 2 <= m <= 16 with an explicit irreducible modulus.
///
/// Multiplication goes through log/antilog tables built from a primitive
/// element discovered at construction. The object is immutable once built.
class Field {
public:
    static constexpr int kMinDegree = 2;
    static constexpr int kMaxDegree = 16;

    /// Builds GF(2^m). Without a modulus the numerically smallest irreducible
    /// polynomial of degree m is used.
    static Field build(int m, std::optional<std::uint32_t> modulus = std::nullopt) {
        if (m < kMinDegree || m > kMaxDegree) {
            throw std::invalid_argument("extension degree must lie in [2, 16], got " + std::to_string(m));
        }
        std::uint32_t mod = 0;
        if (modulus) {
            mod = *modulus;
            if (detail::poly_degree(mod) != m) {
                throw std::invalid_argument("modulus " + std::to_string(mod) + " does not have degree " +
                                            std::to_string(m));
            }
            if (!detail::poly_irreducible(mod)) {
                throw std::invalid_argument("modulus " + std::to_string(mod) + " is reducible over GF(2)");
            }
        } else {
            mod = smallest_irreducible(m);
        }
        return Field(m, mod);
    }

    static std::uint32_t smallest_irreducible(int m) {
        for (std::uint32_t p = 1u << m; p < (2u << m); ++p) {
            if (detail::poly_irreducible(p)) return p;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    int degree() const { return m_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t size() const { return size_; }
    FieldElement primitive_element() const { return primitive_; }

    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }

    bool contains(FieldElement x) const { return x.bits < size_; }

    /// Range-checked conversion from an integer encoding.
    FieldElement element(std::uint32_t bits) const {
        if (bits >= size_) {
            throw std::invalid_argument("value " + std::to_string(bits) + " is not an element of GF(2^" +
                                        std::to_string(m_) + ")");
        }
        return FieldElement{bits};
    }

    /// All elements in integer-encoding order.
    std::vector<FieldElement> elements() const {
        std::vector<FieldElement> out(size_);
        for (std::uint32_t i = 0; i < size_; ++i) out[i] = FieldElement{i};
        return out;
    }

    FieldElement add(FieldElement a, FieldElement b) const { return FieldElement{a.bits ^ b.bits}; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        if (a.bits == 0 || b.bits == 0) return zero();
        return FieldElement{exp_[log_[a.bits] + log_[b.bits]]};
    }

    FieldElement inv(FieldElement a) const {
        if (a.bits == 0) throw std::domain_error("inverse of zero");
        return FieldElement{exp_[(size_ - 1 - log_[a.bits]) % (size_ - 1)]};
    }

    FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }

    /// a^e with the convention 0^0 = 1.
    FieldElement pow(FieldElement a, std::uint64_t e) const {
        if (e == 0) return one();
        if (a.bits == 0) return zero();
        const std::uint64_t order = size_ - 1;
        return FieldElement{exp_[static_cast<std::uint32_t>((log_[a.bits] * (e % order)) % order)]};
    }

    FieldElement square(FieldElement a) const { return mul(a, a); }

    /// x^(2^k), the k-th Frobenius image.
    FieldElement frobenius(FieldElement a, int k) const {
        for (int i = 0; i < k; ++i) a = square(a);
        return a;
    }

    /// x^(2^(m-1)), the unique square root.
    FieldElement sqrt(FieldElement a) const { return frobenius(a, m_ - 1); }

    /// Discrete logarithm to the primitive element; a must be nonzero.
    std::uint32_t log(FieldElement a) const {
        if (a.bits == 0) throw std::domain_error("logarithm of zero");
        return log_[a.bits];
    }

    FieldElement exp(std::uint64_t i) const { return FieldElement{exp_[static_cast<std::uint32_t>(i % (size_ - 1))]}; }

    /// Absolute trace Tr_{2^m/2}, as 0 or 1.
    unsigned trace(FieldElement x) const { return std::popcount(x.bits & trace_mask_) & 1u; }

    /// Relative trace onto GF(2^e); e must divide m.
    FieldElement relative_trace(FieldElement x, int e) const {
        if (e <= 0 || m_ % e != 0) {
            throw std::invalid_argument(std::to_string(e) + " does not divide " + std::to_string(m_));
        }
        FieldElement acc = zero();
        FieldElement term = x;
        for (int i = 0; i < m_ / e; ++i) {
            acc = add(acc, term);
            term = frobenius(term, e);
        }
        return acc;
    }

    /// Checked dispatch for the binary and unary operations. Operands must be
    /// elements of this field; `exponent` is used by pow only.
    FieldElement arith(FieldOp op, FieldElement a, FieldElement b = FieldElement{}, std::uint64_t exponent = 0) const {
        if (!contains(a) || !contains(b)) {
            throw std::invalid_argument("operand does not belong to GF(2^" + std::to_string(m_) + ")");
        }
        switch (op) {
            case FieldOp::add: return add(a, b);
            case FieldOp::mul: return mul(a, b);
            case FieldOp::inv: return inv(a);
            case FieldOp::pow: return pow(a, exponent);
            case FieldOp::sqrt: return sqrt(a);
        }
        throw std::invalid_argument("unknown field operation");
    }

    friend bool operator==(const Field& x, const Field& y) { return x.m_ == y.m_ && x.modulus_ == y.modulus_; }

private:
    Field(int m, std::uint32_t modulus) : m_(m), modulus_(modulus), size_(1u << m) {
        primitive_ = find_primitive();
        const std::uint32_t order = size_ - 1;
        exp_.assign(2 * static_cast<std::size_t>(order), 0);
        log_.assign(size_, 0);
        std::uint32_t v = 1;
        for (std::uint32_t i = 0; i < order; ++i) {
            exp_[i] = v;
            exp_[i + order] = v;
            log_[v] = i;
            v = detail::poly_mulmod(v, primitive_.bits, modulus_, m_);
        }
        // Tr is GF(2)-linear, so it is determined by its values on w^i.
        for (int i = 0; i < m_; ++i) {
            std::uint32_t acc = 0;
            std::uint32_t term = 1u << i;
            for (int j = 0; j < m_; ++j) {
                acc ^= term;
                term = detail::poly_mulmod(term, term, modulus_, m_);
            }
            if (acc == 1u) trace_mask_ |= 1u << i;
        }
    }

    FieldElement find_primitive() const {
        const std::uint64_t order = size_ - 1;
        const auto factors = detail::prime_factors(order);
        auto power = [&](std::uint32_t g, std::uint64_t e) {
            std::uint32_t r = 1;
            while (e != 0) {
                if (e & 1u) r = detail::poly_mulmod(r, g, modulus_, m_);
                g = detail::poly_mulmod(g, g, modulus_, m_);
                e >>= 1;
            }
            return r;
        };
        for (std::uint32_t g = 2; g < size_; ++g) {
            bool ok = power(g, order) == 1u;
            for (auto p : factors) {
                if (!ok) break;
                ok = power(g, order / p) != 1u;
            }
            if (ok) return FieldElement{g};
        }
        throw std::logic_error("no primitive element");  // unreachable for irreducible moduli
    }

    int m_ = 0;
    std::uint32_t modulus_ = 0;
    std::uint32_t size_ = 0;
    FieldElement primitive_{};
    std::uint32_t trace_mask_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
};

/// True iff x^2 + beta*x + 1 has no root in the field (exhaustive search).
inline bool quadratic_irreducible(const Field& f, FieldElement beta) {
    for (std::uint32_t v = 0; v < f.size(); ++v) {
        const FieldElement x{v};
        if (f.add(f.add(f.square(x), f.mul(beta, x)), f.one()).is_zero()) return false;
    }
    return true;
}

/// Smallest beta by integer encoding with x^2 + beta*x + 1 irreducible.
inline FieldElement default_beta(const Field& f) {
    for (std::uint32_t v = 1; v < f.size(); ++v) {
        if (quadratic_irreducible(f, FieldElement{v})) return FieldElement{v};
    }
    throw std::logic_error("no admissible beta");  // unreachable for m >= 1
}

/// A GF(2)-basis of GF(2^m) together with the coordinate map for it.
class FieldBasis {
public:
    FieldBasis(const Field& f, std::vector<FieldElement> basis) : elements_(std::move(basis)) {
        const int m = f.degree();
        if (static_cast<int>(elements_.size()) != m) {
            throw std::invalid_argument("a basis of GF(2^" + std::to_string(m) + ") needs " + std::to_string(m) +
                                        " elements");
        }
        // Invert the m x m matrix whose rows are the basis vectors, tracking
        // the row operations in `inverse_`.
        std::vector<std::uint32_t> rows(m);
        inverse_.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            if (!f.contains(elements_[i])) throw std::invalid_argument("basis element outside the field");
            rows[i] = elements_[i].bits;
            inverse_[i] = 1u << i;
        }
        for (int col = 0; col < m; ++col) {
            int pivot = -1;
            for (int r = col; r < m; ++r) {
                if (rows[r] >> col & 1u) {
                    pivot = r;
                    break;
                }
            }
            if (pivot < 0) throw std::invalid_argument("basis elements are linearly dependent over GF(2)");
            std::swap(rows[col], rows[pivot]);
            std::swap(inverse_[col], inverse_[pivot]);
            for (int r = 0; r < m; ++r) {
                if (r != col && (rows[r] >> col & 1u)) {
                    rows[r] ^= rows[col];
                    inverse_[r] ^= inverse_[col];
                }
            }
        }
    }

    const std::vector<FieldElement>& elements() const { return elements_; }
    int size() const { return static_cast<int>(elements_.size()); }

    /// Bit j of the result is the coefficient of elements()[j] in x.
    std::uint32_t coordinates(FieldElement x) const {
        // x = c * B, so c = x * B^{-1}; row i of B^{-1} is inverse_[i].
        std::uint32_t c = 0;
        for (std::uint32_t bits = x.bits; bits != 0; bits &= bits - 1) {
            c ^= inverse_[std::countr_zero(bits)];
        }
        return c;
    }

private:
    std::vector<FieldElement> elements_;
    std::vector<std::uint32_t> inverse_;
};

/// {1, w, ..., w^{m-1}}.
inline FieldBasis polynomial_basis(const Field& f) {
    std::vector<FieldElement> b;
    for (int i = 0; i < f.degree(); ++i) b.emplace_back(1u << i);
    return FieldBasis(f, std::move(b));
}

/// {g, g^2, ..., g^{2^{m-1}}} for the smallest g whose conjugates are independent.
inline FieldBasis normal_basis(const Field& f) {
    for (std::uint32_t v = 1; v < f.size(); ++v) {
        std::vector<FieldElement> b;
        FieldElement g{v};
        for (int i = 0; i < f.degree(); ++i) {
            b.push_back(g);
            g = f.square(g);
        }
        try {
            return FieldBasis(f, std::move(b));
        } catch (const std::invalid_argument&) {
        }
    }
    throw std::logic_error("no normal basis");  // unreachable: normal bases always exist
}

}  // namespace maxarc

#endif  // MAXARC_GF2M_HPP
